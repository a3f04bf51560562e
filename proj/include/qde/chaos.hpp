#pragma once

#include <string>
#include <vector>

#include "qde/complex_matrix.hpp"
#include "qde/maxent.hpp"

namespace qde {

/// Point of the d-hypocycloid bounding T_d: (d-1)e^{it} + e^{-i(d-1)t}.
Complex hypocycloid_point(int d, double t);

enum class RegionLocation { Inside, Boundary, Outside };

/// Membership of tau in T_3 = {tr U : U in SU(3)} via the roots of
/// p(x) = x^3 - tau x^2 + conj(tau) x - 1. With deviation
/// delta = max||root|-1| and g the smallest pairwise root distance:
/// Inside when delta <= tol < g, Boundary when delta <= tol and g <= tol,
/// Outside when delta > tol. Degenerate spectra (the boundary) produce root
/// clusters conditioned like eps^(1/3), so tol should be chosen accordingly
/// when probing near cusps.
RegionLocation in_T3(Complex tau, double tol);

/// Closed planar region: a d-hypocycloid scaled and rotated about 0.
struct TraceRegion {
    int d = 0;
    double scale = 1.0;
    Complex rotation{1.0, 0.0};
    std::vector<Complex> boundary;  // closed polyline, first == last

    static TraceRegion make(int d, double scale, Complex rotation, int samples);
};

/// Winding-number test of tau/(rotation*scale) against the unit-scale
/// polyline; Boundary when the distance to the polyline is <= tol.
RegionLocation in_trace_region(const TraceRegion& region, Complex tau, double tol);

struct AlphaFactor {
    std::string hadamard_id;  // "F3" | "F4_1" | "F5"
    std::vector<int> sigma;   // permutation of 0..d-1
    Complex value;            // principal d-th root, |value| = 1/sqrt(d)
};

/// alpha_{F,sigma} for every permutation: a d-th root of
/// (det F)^{-1} sgn(sigma) prod_j F_{j,sigma(j)} for the benchmark Hadamards
/// F3, F4_1(phi), F5.
std::vector<AlphaFactor> alpha_factors(const std::string& benchmark, double phi = 0.0);

/// The CT_d lobes: d=3 gives two regions (scale 1/sqrt(3), rotations
/// e^{+-i pi/18}); d=5 gives six (scale 1/sqrt(5), rotations
/// {1, -1, e^{+-i pi/25}, e^{+-2i pi/25}}).
std::vector<TraceRegion> ct_region(int d, int samples);

enum class ChaosStatus { Chaotic, NotChaotic, Undetermined };
enum class ChaosMethod { ExactD2, ExactD3, TraceNecessary, NecessaryD5, OptimizerCertificate };

struct ChaosVerdict {
    ChaosStatus status = ChaosStatus::Undetermined;
    ChaosMethod method = ChaosMethod::TraceNecessary;
    double detail = 0.0;     // |tr U| for trace-style methods, optimizer value otherwise
    bool on_boundary = false;
};

struct ClassifyOptions {
    double boundary_tol = 1e-9;      // trace tests
    double d3_tol = 1e-7;            // in_T3 root deviation; double roots on the
                                     // lobe boundary are conditioned like sqrt(eps)
    double polyline_tol = 1e-7;      // polyline distance (discretization-limited)
    int region_samples = 4096;
    MaxEntOptions maxent{};
};

/// Chaoticity classification:
///   d=2  exact trace test |tr U| <= sqrt(2);
///   d=3  exact CT_3 membership of tr U / cbrt(det U);
///   d=5  CT_5 membership as a necessary filter;
///   else the sqrt(d) trace bound, then the optimizer certificate.
ChaosVerdict classify(const ComplexMatrix& u, const ClassifyOptions& opts = {});

std::string to_string(ChaosStatus s);
std::string to_string(ChaosMethod m);

struct HadamardWitness {
    double defect = 0.0;     // max_jl | |<e_j|U|e_l>| - 1/sqrt(d) |
    double sum_slack = 0.0;  // d sqrt(d) - sum_jl |<e_j|U|e_l>|, nonnegative
};

/// How far a basis is from witnessing chaoticity of U; defect 0 means
/// sqrt(d) U is a complex Hadamard matrix in that basis.
HadamardWitness hadamard_defect(const ComplexMatrix& u, const ComplexMatrix& basis);

}  // namespace qde
