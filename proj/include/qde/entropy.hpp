#pragma once

#include <cstdint>
#include <vector>

#include "qde/measure.hpp"

namespace qde {

/// Shannon function eta(x) = -x ln x, eta(0) = 0. All entropies are in nats.
/// Arguments below 1e-300 are treated as 0 to avoid log underflow.
double shannon_eta(double x);

/// Entropy rate H(U, Pi) = (1/k) sum_jl eta(p_jl) of the outcome Markov chain.
double entropy_rate(const ComplexMatrix& u, const RankOnePOVM& povm);

/// H_meas(Pi) = H(I, Pi); zero exactly for PVMs.
double measurement_entropy(const RankOnePOVM& povm);

struct EntropyReport {
    double rate = 0.0;
    double measurement = 0.0;
    double dynamical = 0.0;  // rate - measurement
};

EntropyReport dynamical_entropy(const ComplexMatrix& u, const RankOnePOVM& povm);

/// H(rho, Pi) = sum_j eta(p_j(rho, Pi2)).
double state_entropy(const State& rho, const RankOnePOVM& povm);

/// H(U, Pi) recomputed as (1/k) sum_j H(U phi_j, Pi), the mean state entropy
/// over the transported output states.
double entropy_rate_as_mean(const ComplexMatrix& u, const RankOnePOVM& povm);

struct BlockEntropySeries {
    std::vector<double> values;       // H_1 .. H_{n_max}
    std::vector<double> differences;  // H_{m+1} - H_m
};

/// H_n by exhaustive enumeration of all k^n outcome strings from the
/// stationary start rho* = I/d. Guarded by k^{n_max} <= 1e7.
BlockEntropySeries block_entropies(const ComplexMatrix& u, const RankOnePOVM& povm, int n_max);

/// Plug-in conditional entropy of a simulated outcome chain (first symbol
/// uniform, then the transition rows). Deterministic given the seed.
double empirical_entropy_rate(const ComplexMatrix& u, const RankOnePOVM& povm, long steps,
                              uint64_t seed);

}  // namespace qde
