#include "qde/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qde {

UnitaryCheck is_unitary(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (!m.all_finite()) throw std::invalid_argument("matrix has non-finite entries");
    const int d = m.dim();
    double dev = 0.0;
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            Complex s = r == c ? Complex(-1.0) : Complex(0.0);
            for (int k = 0; k < d; ++k) s += std::conj(m(k, r)) * m(k, c);
            dev = std::max(dev, std::abs(s));
        }
    }
    return UnitaryCheck{dev, dev <= tol};
}

Complex det(const ComplexMatrix& m) {
    const int d = m.dim();
    if (d > 16) throw std::invalid_argument("det supports dim <= 16");
    ComplexMatrix a = m;
    Complex result = 1.0;
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < d; ++c) std::swap(a(pivot, c), a(col, c));
            result = -result;
        }
        result *= a(col, col);
        for (int r = col + 1; r < d; ++r) {
            const Complex f = a(r, col) / a(col, col);
            for (int c = col; c < d; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return result;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h, double tol) {
    const int d = h.dim();
    if (!h.all_finite()) throw std::invalid_argument("matrix has non-finite entries");
    double herm_dev = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            herm_dev = std::max(herm_dev, std::abs(h(r, c) - std::conj(h(c, r))));
    if (herm_dev > tol) throw std::domain_error("matrix is not Hermitian within tolerance");

    // Work on the symmetrised copy so roundoff in the input cannot leak into
    // the rotations.
    ComplexMatrix a(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double scale = std::max(1.0, a.max_abs());
    const double target = 1e-14 * scale * d;
    for (int sweep = 0; sweep < 60 && off_diagonal_norm(a) > target; ++sweep) {
        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double mpq = std::abs(apq);
                if (mpq <= 1e-300) continue;
                const Complex u = apq / mpq;  // phase of the pivot
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mpq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J = diag(1, conj(u)) * [[c, s], [-s, c]] on the (p,q) plane
                // annihilates the pivot: J_pp = c, J_pq = s, J_qp = -conj(u)s,
                // J_qq = conj(u)c.
                for (int r = 0; r < d; ++r) {  // A <- A J
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = arp * c - arq * std::conj(u) * s;
                    a(r, q) = arp * s + arq * std::conj(u) * c;
                }
                for (int cc = 0; cc < d; ++cc) {  // A <- J* A
                    const Complex apc = a(p, cc), aqc = a(q, cc);
                    a(p, cc) = apc * c - aqc * u * s;
                    a(q, cc) = apc * s + aqc * u * c;
                }
                for (int r = 0; r < d; ++r) {  // V <- V J
                    const Complex vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp * c - vrq * std::conj(u) * s;
                    v(r, q) = vrp * s + vrq * std::conj(u) * c;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res{std::vector<double>(static_cast<size_t>(d)), ComplexMatrix(d)};
    for (int k = 0; k < d; ++k) {
        res.eigenvalues[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
        for (int r = 0; r < d; ++r) res.eigenvectors(r, k) = v(r, order[static_cast<size_t>(k)]);
    }
    return res;
}

ComplexMatrix expm_antihermitian(const ComplexMatrix& a, double tol) {
    const int d = a.dim();
    double dev = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) dev = std::max(dev, std::abs(a(r, c) + std::conj(a(c, r))));
    if (dev > tol) throw std::domain_error("matrix is not anti-Hermitian within tolerance");

    ComplexMatrix h(d);  // h = -i a is Hermitian
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) h(r, c) = Complex(0.0, -1.0) * a(r, c);
    EigResult eig = hermitian_eig(h, std::max(tol, 10.0 * dev + 1e-15));

    ComplexMatrix out(d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < d; ++k) {
                const double lam = eig.eigenvalues[static_cast<size_t>(k)];
                s += eig.eigenvectors(r, k) * Complex(std::cos(lam), std::sin(lam)) *
                     std::conj(eig.eigenvectors(c, k));
            }
            out(r, c) = s;
        }
    }
    return out;
}

namespace {

Complex eval_poly(const std::vector<Complex>& c, Complex x) {
    Complex r = 0.0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("polynomial degree must be at least 1");
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n > 8) throw std::invalid_argument("poly_roots supports degree <= 8");
    if (std::abs(coeffs.back()) == 0.0) throw std::invalid_argument("leading coefficient must be nonzero");

    std::vector<Complex> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] / coeffs.back();

    double cmax = 0.0;
    for (int i = 0; i < n; ++i) cmax = std::max(cmax, std::abs(c[static_cast<size_t>(i)]));
    const double radius = 1.0 + cmax;

    std::vector<Complex> z(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double ang = 2.0 * M_PI * j / n;
        z[static_cast<size_t>(j)] = radius * Complex(std::cos(ang), std::sin(ang));
    }

    constexpr int kMaxIters = 500;
    for (int it = 0; it < kMaxIters; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (std::abs(denom) == 0.0) {
                denom = 1e-30;  // coincident iterates; nudge
            }
            const Complex delta = eval_poly(c, z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= delta;
            max_step = std::max(max_step, std::abs(delta));
        }
        if (max_step < 1e-13) break;
    }

    for (int i = 0; i < n; ++i) {
        const double bound = 1e-10 * std::pow(1.0 + std::abs(z[static_cast<size_t>(i)]), n);
        if (std::abs(eval_poly(c, z[static_cast<size_t>(i)])) > bound)
            throw RootFindingError("Durand-Kerner failed its residual bound", z);
    }
    return z;
}

}  // namespace qde
