#pragma once

#include <vector>

#include "qde/complex_matrix.hpp"
#include "qde/linalg.hpp"

namespace qde {

/// Normalized rank-1 POVM: k >= d unit vectors phi_j with effects
/// (d/k)|phi_j><phi_j| resolving the identity. k = d is the PVM case, where
/// the vectors form an orthonormal basis. Vectors are stored dephased (first
/// nonzero component real nonnegative); the effects only depend on the rays.
class RankOnePOVM {
  public:
    /// Validates unit norms and the resolution of identity
    /// sum_j |phi_j><phi_j| = (k/d) I (1e-8 entrywise), pairwise
    /// orthogonality when k = d.
    static RankOnePOVM validate(std::vector<std::vector<Complex>> vectors, int dim);

    /// PVM whose j-th vector is column j of a unitary V.
    static RankOnePOVM from_unitary(const ComplexMatrix& v);

    int dim() const { return dim_; }
    int outcome_count() const { return static_cast<int>(vectors_.size()); }
    double weight() const { return static_cast<double>(dim_) / outcome_count(); }
    bool is_pvm() const { return outcome_count() == dim_; }
    const std::vector<Complex>& vector(int j) const { return vectors_[static_cast<size_t>(j)]; }
    const std::vector<std::vector<Complex>>& vectors() const { return vectors_; }

  private:
    RankOnePOVM(std::vector<std::vector<Complex>> vectors, int dim)
        : dim_(dim), vectors_(std::move(vectors)) {}

    int dim_;
    std::vector<std::vector<Complex>> vectors_;
};

/// Density operator: Hermitian, unit trace, positive semi-definite
/// (all within 1e-9).
class State {
  public:
    static State validate(ComplexMatrix rho);
    static State maximally_mixed(int dim);
    static State pure(const std::vector<Complex>& psi);

    int dim() const { return rho_.dim(); }
    const ComplexMatrix& matrix() const { return rho_; }

  private:
    explicit State(ComplexMatrix rho) : rho_(std::move(rho)) {}
    ComplexMatrix rho_;
};

/// Row-stochastic k x k matrix p_jl = (d/k)|<phi_j|U|phi_l>|^2; doubly
/// stochastic when built from a PVM.
struct TransitionMatrix {
    int k = 0;
    std::vector<double> p;  // row-major

    double at(int j, int l) const { return p[static_cast<size_t>(j) * k + l]; }
    double& at(int j, int l) { return p[static_cast<size_t>(j) * k + l]; }
};

/// Measurement record, symbols 1-based in [1, k].
using OutcomeString = std::vector<int>;

/// Born rule: p_j = (d/k) <phi_j|rho|phi_j>.
std::vector<double> born_probabilities(const RankOnePOVM& povm, const State& rho);

TransitionMatrix transition_matrix(const ComplexMatrix& u, const RankOnePOVM& povm);

/// Generalized Wigner formula: P = p_{i1}(rho) * prod_m p_{i_m i_{m+1}}.
double wigner_string_probability(const ComplexMatrix& u, const RankOnePOVM& povm,
                                 const State& rho, const OutcomeString& s);

/// SIC-POVM for dim 2 (tetrahedral) or dim 3 (Weyl-Heisenberg orbit of the
/// fiducial (0, 1, -1)/sqrt(2)); k = d^2 vectors with pairwise squared
/// overlap 1/(d+1).
RankOnePOVM sic_povm(int dim);

}  // namespace qde
