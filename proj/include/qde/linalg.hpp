#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qde/complex_matrix.hpp"

namespace qde {

struct UnitaryCheck {
    double max_deviation = 0.0;  // largest modulus of (U*U - I) entries
    bool passed = false;
};

/// passed is true iff every entry of M*M - I has modulus <= tol.
UnitaryCheck is_unitary(const ComplexMatrix& m, double tol = kDefaultUnitaryTol);

/// Determinant by partially pivoted elimination (dim <= 16).
Complex det(const ComplexMatrix& m);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Throws std::domain_error when H deviates from Hermitian by more than tol.
EigResult hermitian_eig(const ComplexMatrix& h, double tol = kDefaultUnitaryTol);

/// exp(A) for anti-Hermitian A via the spectral decomposition of -iA.
/// The result is unitary up to the eigensolver tolerance.
ComplexMatrix expm_antihermitian(const ComplexMatrix& a, double tol = kDefaultUnitaryTol);

/// Raised when Durand-Kerner fails its residual bound after the iteration cap.
class RootFindingError : public std::runtime_error {
  public:
    RootFindingError(const std::string& what, std::vector<Complex> best)
        : std::runtime_error(what), best_roots(std::move(best)) {}
    std::vector<Complex> best_roots;
};

/// All roots of sum_i coeffs[i] * x^i by Durand-Kerner iteration.
/// coeffs is ordered constant-first; degree must be in [1, 8] with a nonzero
/// leading coefficient. Residuals satisfy |p(r)| <= 1e-10 * (1+|r|)^degree.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

}  // namespace qde
