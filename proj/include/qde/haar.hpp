#pragma once

#include "qde/complex_matrix.hpp"
#include "qde/rng.hpp"

namespace qde {

/// Haar-distributed unitary: Ginibre matrix of i.i.d. standard complex
/// Gaussians (one Box-Muller pair per entry, row-major), Householder QR,
/// then Q's columns rescaled by the phases of R's diagonal.
ComplexMatrix random_unitary(int dim, SplitMix64& rng);

}  // namespace qde
