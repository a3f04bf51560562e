#pragma once

#include <cstdint>

#include "qde/complex_matrix.hpp"

namespace qde {

/// Eigenphase separation of a 2x2 unitary: theta = min(|phi-psi|, 2pi-|phi-psi|)
/// in [0, pi], and c = sin^2(theta/2).
struct Dim2Spectrum {
    double theta = 0.0;
    double c = 0.0;
};

Dim2Spectrum dim2_spectrum(const ComplexMatrix& u);

/// Closed form for the PVM-dynamical entropy of a qubit unitary:
/// ln 2 for theta >= pi/2, eta(cos^2(theta/2)) + eta(sin^2(theta/2)) below.
double hdyn_closed_form_d2(const ComplexMatrix& u);

/// A maximizing orthonormal basis for a qubit unitary: columns
/// sqrt(r)|0> + e^{i tau} sqrt(1-r)|1> and its orthogonal complement in the
/// eigenbasis of U, with r = 1/2 below theta = pi/2 and
/// r = (1 + sqrt(1 - 1/(2 sin^2(theta/2))))/2 above (the + branch).
ComplexMatrix maximizing_basis_d2(const ComplexMatrix& u, double tau);

struct MaxEntOptions {
    int starts = 32;       // identity plus starts-1 Haar-random bases
    double tol = 1e-10;    // stop when the predicted improvement drops below
    uint64_t seed = 0;
    int max_iters = 2000;
};

struct MaxEntResult {
    double value = 0.0;          // best H(U, Pi) found, nats
    ComplexMatrix basis;         // columns of the maximizing basis
    bool certified_chaotic = false;  // value >= ln d - 1e-6
    int starts_used = 0;
    int converged_starts = 0;
};

/// Certification margin for declaring a unitary chaotic.
inline constexpr double kCertificationTol = 1e-6;

/// The objective f_U(V) = (1/d) sum_jl eta(|(V*UV)_jl|^2), i.e. the entropy
/// rate of U in the basis given by V's columns.
double basis_objective(const ComplexMatrix& u, const ComplexMatrix& v);

/// Multistart ascent over the unitary group realizing
/// H^dyn(U) = max_V f_U(V). Tangent steps are anti-Hermitian matrices with
/// central-difference gradients and a halving line search; the retraction is
/// V <- V exp(A). Deterministic given (seed, starts); start s draws its Haar
/// basis from a generator seeded seed + s.
MaxEntResult pvm_dynamical_entropy(const ComplexMatrix& u, const MaxEntOptions& opts = {});

}  // namespace qde
