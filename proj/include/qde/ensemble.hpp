#pragma once

#include <cstdint>
#include <functional>

#include "qde/complex_matrix.hpp"
#include "qde/haar.hpp"
#include "qde/maxent.hpp"

namespace qde {

/// Stream of Haar-distributed unitaries; identical (dim, seed) pairs produce
/// identical matrix sequences.
class HaarSampler {
  public:
    HaarSampler(int dim, uint64_t seed) : dim_(dim), rng_(seed) {}
    ComplexMatrix next() { return random_unitary(dim_, rng_); }
    int dim() const { return dim_; }

  private:
    int dim_;
    SplitMix64 rng_;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    long samples = 0;
    uint64_t seed = 0;
    int worker_count = 1;
};

/// (1/4pi) Int_0^{2pi} f(phi) |e^{i phi} - 1|^2 dphi by composite midpoint.
double weyl_average_d2(const std::function<double(double)>& f, int quad_points);

/// Same integrand restricted to [lo, hi]; pieces sum to the full average.
double weyl_average_d2_arc(const std::function<double(double)>& f, double lo, double hi,
                           int quad_points);

/// m(C_2) by quadrature over the chaotic arc [pi/2, 3pi/2].
double weyl_volume_d2(int quad_points = 2048);

/// <H^dyn>_U(2): the closed form integrated piecewise around its kinks.
double weyl_mean_hdyn_d2(int quad_points = 2048);

/// Pushforward density of Haar SU(3) under the trace map, w.r.t. Lebesgue
/// measure on the plane; zero outside T_3 (the radicand is clamped at 0).
double trace_density_d3(Complex tau);

struct PolarGrid {
    int r_points = 1024;
    int theta_points = 2048;
};

/// m(C_3): the trace density integrated over CT_3 on a polar midpoint grid,
/// membership tested through in_T3 on the unrotated lobes.
double m_c3_quadrature(const PolarGrid& grid = {});

/// Integral of the trace density over one CT_3 lobe (rot = +1 or -1 for the
/// e^{+-i pi/18} rotation).
double m_c3_lobe_quadrature(int rot, const PolarGrid& grid = {});

/// Integral of the trace density over all of T_3; should equal 1.
double t3_density_normalization(const PolarGrid& grid = {});

/// Fraction of Haar unitaries classified chaotic by the exact d=2 / d=3 tests.
McEstimate mc_chaotic_volume(int d, long samples, uint64_t seed, int workers = 1);

/// Average of the d=2 closed form over Haar samples (Catalan-constant mean).
McEstimate mc_mean_hdyn_d2(long samples, uint64_t seed, int workers = 1);

/// Average of H(U, computational PVM) over Haar samples (equals
/// sum_{k=2}^d 1/k in expectation).
McEstimate mc_mean_fixed_pvm(int d, long samples, uint64_t seed, int workers = 1);

/// Average of the optimizer value H^dyn(U) over Haar samples.
McEstimate mc_mean_maxent(int d, long samples, uint64_t seed, const MaxEntOptions& opts = {},
                          int workers = 1);

}  // namespace qde
