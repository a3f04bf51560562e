#pragma once

#include <string>

#include <json.hpp>

#include "qde/chaos.hpp"
#include "qde/complex_matrix.hpp"
#include "qde/ensemble.hpp"
#include "qde/measure.hpp"

namespace qde::io {

using nlohmann::json;

/// Matrix schema: {"dim": d, "rows": [[[re, im] x d] x d]}.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);
ComplexMatrix load_matrix(const std::string& path);

/// POVM schema: {"dim": d, "vectors": [[[re, im] x d] x k]}. A file in the
/// matrix schema is accepted as a PVM (columns = basis).
json povm_to_json(const RankOnePOVM& povm);
RankOnePOVM povm_from_json(const json& j);
RankOnePOVM load_povm(const std::string& path);

json estimate_to_json(const McEstimate& e);
json verdict_to_json(const ChaosVerdict& v);

/// Round a double to 12 significant digits for reproducible output.
double round12(double x);
json number(double x);

}  // namespace qde::io
