#include "qde/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qde/linalg.hpp"

namespace qde {

Complex hypocycloid_point(int d, double t) {
    if (d < 2) throw std::invalid_argument("hypocycloid needs d >= 2");
    const double k = static_cast<double>(d - 1);
    return Complex((d - 1) * std::cos(t) + std::cos(k * t), (d - 1) * std::sin(t) - std::sin(k * t));
}

RegionLocation in_T3(Complex tau, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const std::vector<Complex> coeffs = {Complex(-1.0), std::conj(tau), -tau, Complex(1.0)};
    const std::vector<Complex> roots = poly_roots(coeffs);
    double delta = 0.0;
    for (const Complex& r : roots) delta = std::max(delta, std::abs(std::abs(r) - 1.0));
    if (delta > tol) return RegionLocation::Outside;
    double gap = std::abs(roots[0] - roots[1]);
    gap = std::min(gap, std::abs(roots[0] - roots[2]));
    gap = std::min(gap, std::abs(roots[1] - roots[2]));
    return gap > tol ? RegionLocation::Inside : RegionLocation::Boundary;
}

TraceRegion TraceRegion::make(int d, double scale, Complex rotation, int samples) {
    if (samples < 64) throw std::invalid_argument("trace region needs at least 64 samples");
    TraceRegion r;
    r.d = d;
    r.scale = scale;
    r.rotation = rotation;
    r.boundary.reserve(static_cast<size_t>(samples) + 1);
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * M_PI * i / samples;
        r.boundary.push_back(rotation * scale * hypocycloid_point(d, t));
    }
    r.boundary.push_back(r.boundary.front());
    return r;
}

namespace {

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace

RegionLocation in_trace_region(const TraceRegion& region, Complex tau, double tol) {
    const Complex z = tau / (region.rotation * region.scale);
    const double inv = 1.0 / (region.scale);
    const Complex rot_conj = std::conj(region.rotation);

    double dist = 1e300;
    double angle_sum = 0.0;
    for (size_t i = 0; i + 1 < region.boundary.size(); ++i) {
        const Complex a = region.boundary[i] * rot_conj * inv;
        const Complex b = region.boundary[i + 1] * rot_conj * inv;
        dist = std::min(dist, point_segment_distance(z, a, b));
        angle_sum += std::arg((b - z) / (a - z));
    }
    if (dist <= tol) return RegionLocation::Boundary;
    const long winding = std::lround(angle_sum / (2.0 * M_PI));
    return winding != 0 ? RegionLocation::Inside : RegionLocation::Outside;
}

namespace {

ComplexMatrix benchmark_hadamard(const std::string& name, double phi) {
    if (name == "F3" || name == "F5") {
        const int d = name == "F3" ? 3 : 5;
        ComplexMatrix f(d);
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const double a = 2.0 * M_PI * ((j * l) % d) / d;
                f(j, l) = Complex(std::cos(a), std::sin(a));
            }
        return f;
    }
    if (name == "F4_1") {
        const Complex ie(std::cos(phi + M_PI / 2.0), std::sin(phi + M_PI / 2.0));  // i e^{i phi}
        ComplexMatrix f(4);
        const Complex one(1.0), mone(-1.0);
        const Complex row1[4] = {one, one, one, one};
        const Complex row2[4] = {one, ie, mone, -ie};
        const Complex row3[4] = {one, mone, one, mone};
        const Complex row4[4] = {one, -ie, mone, ie};
        const Complex* rows[4] = {row1, row2, row3, row4};
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) f(j, l) = rows[j][l];
        return f;
    }
    throw std::invalid_argument("unsupported benchmark Hadamard: " + name);
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

std::vector<AlphaFactor> alpha_factors(const std::string& benchmark, double phi) {
    const ComplexMatrix f = benchmark_hadamard(benchmark, phi);
    const int d = f.dim();
    const Complex detf = det(f);

    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<AlphaFactor> out;
    do {
        Complex prod = 1.0;
        for (int j = 0; j < d; ++j) prod *= f(j, perm[static_cast<size_t>(j)]);
        const Complex target = static_cast<double>(permutation_sign(perm)) * prod / detf;
        const Complex value = std::pow(std::abs(target), 1.0 / d) *
                              std::polar(1.0, std::arg(target) / d);
        out.push_back({benchmark, perm, value});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<TraceRegion> ct_region(int d, int samples) {
    if (d == 3) {
        const double s = 1.0 / std::sqrt(3.0);
        return {TraceRegion::make(3, s, std::polar(1.0, M_PI / 18.0), samples),
                TraceRegion::make(3, s, std::polar(1.0, -M_PI / 18.0), samples)};
    }
    if (d == 5) {
        const double s = 1.0 / std::sqrt(5.0);
        const Complex rots[6] = {Complex(1.0),
                                 Complex(-1.0),
                                 std::polar(1.0, M_PI / 25.0),
                                 std::polar(1.0, -M_PI / 25.0),
                                 std::polar(1.0, 2.0 * M_PI / 25.0),
                                 std::polar(1.0, -2.0 * M_PI / 25.0)};
        std::vector<TraceRegion> regions;
        for (const Complex& r : rots) regions.push_back(TraceRegion::make(5, s, r, samples));
        return regions;
    }
    throw std::invalid_argument("ct_region supports d = 3 and d = 5");
}

namespace {

Complex principal_root(Complex z, int n) {
    return std::pow(std::abs(z), 1.0 / n) * std::polar(1.0, std::arg(z) / n);
}

}  // namespace

ChaosVerdict classify(const ComplexMatrix& u, const ClassifyOptions& opts) {
    if (!is_unitary(u, kDefaultUnitaryTol).passed)
        throw std::invalid_argument("matrix is not unitary");
    const int d = u.dim();
    if (d > 8) throw std::invalid_argument("classify supports dim <= 8");

    const double abstr = std::abs(u.trace());
    if (d == 2) {
        const bool chaotic = abstr <= std::sqrt(2.0) + opts.boundary_tol;
        return {chaotic ? ChaosStatus::Chaotic : ChaosStatus::NotChaotic, ChaosMethod::ExactD2,
                abstr, std::abs(abstr - std::sqrt(2.0)) <= opts.boundary_tol};
    }
    if (d == 3) {
        const Complex beta = principal_root(det(u), 3);
        const Complex tau = u.trace() / beta;
        RegionLocation best = RegionLocation::Outside;
        for (const double rot : {-M_PI / 18.0, M_PI / 18.0}) {
            const Complex z = std::sqrt(3.0) * tau * std::polar(1.0, rot);
            const RegionLocation loc = in_T3(z, opts.d3_tol);
            if (loc == RegionLocation::Inside) best = RegionLocation::Inside;
            else if (loc == RegionLocation::Boundary && best == RegionLocation::Outside)
                best = RegionLocation::Boundary;
        }
        // Closed region: boundary counts as chaotic.
        const bool chaotic = best != RegionLocation::Outside;
        return {chaotic ? ChaosStatus::Chaotic : ChaosStatus::NotChaotic, ChaosMethod::ExactD3,
                abstr, best == RegionLocation::Boundary};
    }
    if (d == 5) {
        const Complex beta = principal_root(det(u), 5);
        const Complex tau = u.trace() / beta;
        RegionLocation best = RegionLocation::Outside;
        for (const TraceRegion& region : ct_region(5, opts.region_samples)) {
            const RegionLocation loc = in_trace_region(region, tau, opts.polyline_tol);
            if (loc == RegionLocation::Inside) best = RegionLocation::Inside;
            else if (loc == RegionLocation::Boundary && best == RegionLocation::Outside)
                best = RegionLocation::Boundary;
        }
        if (best == RegionLocation::Outside)
            return {ChaosStatus::NotChaotic, ChaosMethod::NecessaryD5, abstr, false};
        // Inside CT_5 is only necessary; fall through to the general path.
    }

    if (abstr > std::sqrt(static_cast<double>(d)) + opts.boundary_tol)
        return {ChaosStatus::NotChaotic, ChaosMethod::TraceNecessary, abstr, false};

    const MaxEntResult m = pvm_dynamical_entropy(u, opts.maxent);
    return {m.certified_chaotic ? ChaosStatus::Chaotic : ChaosStatus::Undetermined,
            ChaosMethod::OptimizerCertificate, m.value, false};
}

std::string to_string(ChaosStatus s) {
    switch (s) {
        case ChaosStatus::Chaotic: return "Chaotic";
        case ChaosStatus::NotChaotic: return "NotChaotic";
        default: return "Undetermined";
    }
}

std::string to_string(ChaosMethod m) {
    switch (m) {
        case ChaosMethod::ExactD2: return "ExactD2";
        case ChaosMethod::ExactD3: return "ExactD3";
        case ChaosMethod::TraceNecessary: return "TraceNecessary";
        case ChaosMethod::NecessaryD5: return "NecessaryD5";
        default: return "OptimizerCertificate";
    }
}

HadamardWitness hadamard_defect(const ComplexMatrix& u, const ComplexMatrix& basis) {
    if (u.dim() != basis.dim()) throw std::invalid_argument("dimension mismatch");
    if (!is_unitary(u, kDefaultUnitaryTol).passed || !is_unitary(basis, kDefaultUnitaryTol).passed)
        throw std::invalid_argument("both arguments must be unitary");
    const int d = u.dim();
    const ComplexMatrix w = basis.adjoint() * u * basis;
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    HadamardWitness out;
    double total = 0.0;
    for (const Complex& z : w.entries()) {
        const double m = std::abs(z);
        out.defect = std::max(out.defect, std::abs(m - target));
        total += m;
    }
    out.sum_slack = d * std::sqrt(static_cast<double>(d)) - total;
    return out;
}

}  // namespace qde
