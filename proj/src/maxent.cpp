#include "qde/maxent.hpp"

#include <cmath>
#include <stdexcept>

#include "qde/entropy.hpp"
#include "qde/haar.hpp"
#include "qde/linalg.hpp"

namespace qde {

namespace {

void require_unitary(const ComplexMatrix& u) {
    if (!is_unitary(u, kDefaultUnitaryTol).passed)
        throw std::invalid_argument("matrix is not unitary");
}

std::pair<Complex, Complex> eigenvalues_2x2(const ComplexMatrix& u) {
    const Complex tr = u.trace();
    const Complex dt = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const Complex disc = std::sqrt(tr * tr - 4.0 * dt);
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

}  // namespace

Dim2Spectrum dim2_spectrum(const ComplexMatrix& u) {
    if (u.dim() != 2) throw std::invalid_argument("dim2_spectrum needs a 2x2 matrix");
    require_unitary(u);
    const auto [l1, l2] = eigenvalues_2x2(u);
    Dim2Spectrum s;
    s.theta = std::abs(std::arg(l1 * std::conj(l2)));
    const double half = std::sin(0.5 * s.theta);
    s.c = half * half;
    return s;
}

double hdyn_closed_form_d2(const ComplexMatrix& u) {
    const Dim2Spectrum s = dim2_spectrum(u);
    if (s.theta >= M_PI / 2.0) return std::log(2.0);
    return shannon_eta(1.0 - s.c) + shannon_eta(s.c);
}

ComplexMatrix maximizing_basis_d2(const ComplexMatrix& u, double tau) {
    if (u.dim() != 2) throw std::invalid_argument("maximizing_basis_d2 needs a 2x2 matrix");
    require_unitary(u);
    const auto [l1, l2] = eigenvalues_2x2(u);

    // Eigenbasis of U. For a near-scalar U any basis is an eigenbasis.
    std::vector<Complex> v1 = {Complex(1.0), Complex(0.0)};
    if (std::abs(l1 - l2) > 1e-9) {
        const std::vector<Complex> cand1 = {u(0, 1), l1 - u(0, 0)};
        const std::vector<Complex> cand2 = {l1 - u(1, 1), u(1, 0)};
        v1 = norm2(cand1) >= norm2(cand2) ? cand1 : cand2;
        const double n = std::sqrt(norm2(v1));
        v1[0] /= n;
        v1[1] /= n;
    }
    const std::vector<Complex> v2 = {-std::conj(v1[1]), std::conj(v1[0])};

    const Dim2Spectrum s = dim2_spectrum(u);
    double r = 0.5;
    if (s.theta > M_PI / 2.0) {
        const double arg = std::max(0.0, 1.0 - 1.0 / (2.0 * s.c));
        r = 0.5 * (1.0 + std::sqrt(arg));
    }
    const Complex ph(std::cos(tau), std::sin(tau));
    const double sr = std::sqrt(r), sq = std::sqrt(1.0 - r);

    ComplexMatrix b(2);
    for (int row = 0; row < 2; ++row) {
        b(row, 0) = sr * v1[static_cast<size_t>(row)] + ph * sq * v2[static_cast<size_t>(row)];
        b(row, 1) = -sq * v1[static_cast<size_t>(row)] + ph * sr * v2[static_cast<size_t>(row)];
    }
    return b;
}

double basis_objective(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    const ComplexMatrix w = v.adjoint() * u * v;
    double f = 0.0;
    for (const Complex& z : w.entries()) f += shannon_eta(std::norm(z));
    return f / u.dim();
}

namespace {

// Tangent directions: d column-phase coordinates (exactly flat for the
// objective, since only moduli enter) plus the real/imaginary off-diagonal
// pairs of an anti-Hermitian matrix.
struct OffDiagDir {
    int j, l;
    Complex c;  // A_jl = c, A_lj = -conj(c), with |c| = 1
};

double eta_norm(const Complex& z) { return shannon_eta(std::norm(z)); }

// Change of sum_entries eta(|.|^2) between K and X* K X, where
// X = exp(h E_(j,l,c)) acts as [[cos, c sin], [-conj(c) sin, cos]] on the
// (j,l) plane. Only rows/cols j and l change.
double objective_delta(const ComplexMatrix& k, const OffDiagDir& dir, double h) {
    const int d = k.dim();
    const int j = dir.j, l = dir.l;
    const double co = std::cos(h), si = std::sin(h);
    const Complex c = dir.c;

    double delta = 0.0;
    for (int r = 0; r < d; ++r) {
        if (r == j || r == l) continue;
        const Complex krj = k(r, j), krl = k(r, l);
        delta += eta_norm(krj * co - krl * std::conj(c) * si) - eta_norm(krj);
        delta += eta_norm(krj * c * si + krl * co) - eta_norm(krl);
    }
    for (int col = 0; col < d; ++col) {
        if (col == j || col == l) continue;
        const Complex kjc = k(j, col), klc = k(l, col);
        delta += eta_norm(kjc * co - klc * c * si) - eta_norm(kjc);
        delta += eta_norm(kjc * std::conj(c) * si + klc * co) - eta_norm(klc);
    }
    // 2x2 block gets both row and column mixing.
    const Complex b00 = k(j, j), b01 = k(j, l), b10 = k(l, j), b11 = k(l, l);
    const Complex m00 = b00 * co - b10 * c * si, m01 = b01 * co - b11 * c * si;
    const Complex m10 = b00 * std::conj(c) * si + b10 * co, m11 = b01 * std::conj(c) * si + b11 * co;
    delta += eta_norm(m00 * co - m01 * std::conj(c) * si) - eta_norm(b00);
    delta += eta_norm(m00 * c * si + m01 * co) - eta_norm(b01);
    delta += eta_norm(m10 * co - m11 * std::conj(c) * si) - eta_norm(b10);
    delta += eta_norm(m10 * c * si + m11 * co) - eta_norm(b11);
    return delta / d;
}

struct AscentOutcome {
    double value = 0.0;
    ComplexMatrix basis;
    bool converged = false;
};

AscentOutcome ascend(const ComplexMatrix& u, ComplexMatrix v, double tol, int max_iters) {
    const int d = u.dim();
    std::vector<OffDiagDir> dirs;
    for (int j = 0; j < d; ++j)
        for (int l = j + 1; l < d; ++l) {
            dirs.push_back({j, l, Complex(1.0, 0.0)});
            dirs.push_back({j, l, Complex(0.0, 1.0)});
        }

    constexpr double kFdStep = 1e-5;
    double f = basis_objective(u, v);
    double step = 0.25;
    AscentOutcome out{f, v, false};

    for (int it = 0; it < max_iters; ++it) {
        const ComplexMatrix k = v.adjoint() * u * v;
        std::vector<double> g(dirs.size());
        double gn2 = 0.0;
        for (size_t m = 0; m < dirs.size(); ++m) {
            g[m] = (objective_delta(k, dirs[m], kFdStep) - objective_delta(k, dirs[m], -kFdStep)) /
                   (2.0 * kFdStep);
            gn2 += g[m] * g[m];
        }
        if (gn2 == 0.0) {
            out.converged = true;
            break;
        }

        ComplexMatrix a(d);
        for (size_t m = 0; m < dirs.size(); ++m) {
            a(dirs[m].j, dirs[m].l) += g[m] * dirs[m].c;
            a(dirs[m].l, dirs[m].j) -= g[m] * std::conj(dirs[m].c);
        }

        double t = std::min(2.0 * step, 4.0 / std::sqrt(gn2));
        bool accepted = false;
        ComplexMatrix vn(d);
        double fn = f;
        for (int half = 0; half < 40; ++half) {
            vn = v * expm_antihermitian(a * Complex(t), 1e-12);
            fn = basis_objective(u, vn);
            if (fn >= f + 0.5 * t * gn2) {  // Armijo sufficient increase
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            out.converged = true;
            break;
        }
        v = vn;
        f = fn;
        step = t;
        out.value = f;
        out.basis = v;
        if (t * gn2 < tol) {  // predicted first-order improvement
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace

MaxEntResult pvm_dynamical_entropy(const ComplexMatrix& u, const MaxEntOptions& opts) {
    require_unitary(u);
    const int d = u.dim();
    if (d > 8) throw std::invalid_argument("pvm_dynamical_entropy supports dim <= 8");
    if (opts.starts < 1) throw std::invalid_argument("need at least one start");

    const double lnd = std::log(static_cast<double>(d));
    MaxEntResult res{0.0, ComplexMatrix::identity(d), false, 0, 0};
    res.value = -1.0;
    for (int s = 0; s < opts.starts; ++s) {
        ComplexMatrix v0 = ComplexMatrix::identity(d);
        if (s > 0) {
            SplitMix64 rng(opts.seed + static_cast<uint64_t>(s));
            v0 = random_unitary(d, rng);
        }
        const AscentOutcome run = ascend(u, std::move(v0), opts.tol, opts.max_iters);
        ++res.starts_used;
        if (run.converged) ++res.converged_starts;
        if (run.value > res.value) {
            res.value = run.value;
            res.basis = run.basis;
        }
        if (lnd - res.value <= 0.1 * kCertificationTol) break;  // already certified
    }
    res.certified_chaotic = res.value >= lnd - kCertificationTol;
    return res;
}

}  // namespace qde
