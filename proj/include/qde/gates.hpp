#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qde/chaos.hpp"
#include "qde/complex_matrix.hpp"

namespace qde {

enum class PaperClaim { Chaotic, NotChaotic, None };

struct GateEntry {
    std::string name;
    int dim = 0;
    ComplexMatrix matrix{1};
    PaperClaim paper_claim = PaperClaim::None;
};

/// Standard gate matrices in the computational basis. Parametrized gates:
/// DEUTSCH takes theta, FOURIER takes the dimension.
GateEntry gate(const std::string& name, const std::vector<double>& params = {});

/// The 4x4 controlled-U for a 2x2 unitary (control on the first qubit).
GateEntry controlled_gate(const ComplexMatrix& u2);

/// Names accepted by gate() with no parameters, as listed in the catalogue.
std::vector<std::string> catalogue_names();

/// Classification of the whole named catalogue.
std::vector<std::pair<GateEntry, ChaosVerdict>> classify_catalogue();

/// Verdict for the controlled-U gate: chaotic exactly when u2's eigenphases
/// differ by pi (u2 is NOT up to phase and conjugation).
ChaosVerdict controlled_u_chaotic_test(const ComplexMatrix& u2);

std::string to_string(PaperClaim c);

}  // namespace qde
