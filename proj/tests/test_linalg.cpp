#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qde/haar.hpp"
#include "qde/linalg.hpp"
#include "qde/rng.hpp"

using namespace qde;

namespace {

ComplexMatrix fourier3() {
    ComplexMatrix f(3);
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            const double a = 2.0 * M_PI * ((j * l) % 3) / 3.0;
            f(j, l) = Complex(std::cos(a), std::sin(a));
        }
    return f;
}

}  // namespace

TEST_CASE("is_unitary basics") {
    const UnitaryCheck id = is_unitary(ComplexMatrix::identity(3), 1e-12);
    CHECK(id.passed);
    CHECK(id.max_deviation == 0.0);

    const ComplexMatrix bad = ComplexMatrix::diagonal({Complex(1.0), Complex(2.0)});
    CHECK_FALSE(is_unitary(bad, 1e-12).passed);

    CHECK(is_unitary(fourier3() * Complex(1.0 / std::sqrt(3.0)), 1e-12).passed);
}

TEST_CASE("det on known matrices") {
    CHECK(std::abs(det(ComplexMatrix::identity(4)) - Complex(1.0)) < 1e-14);

    const Complex d3 = det(fourier3());
    CHECK(std::abs(d3 - Complex(0.0, -3.0 * std::sqrt(3.0))) < 1e-12);

    const ComplexMatrix diag =
        ComplexMatrix::diagonal({Complex(1.0), Complex(0.0, 1.0), Complex(0.0, -1.0)});
    CHECK(std::abs(det(diag) - Complex(1.0)) < 1e-14);
}

TEST_CASE("hermitian_eig small spectra") {
    const EigResult a = hermitian_eig(ComplexMatrix::diagonal({Complex(3.0), Complex(1.0)}), 1e-12);
    CHECK(a.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));

    ComplexMatrix pauli_x(2);
    pauli_x(0, 1) = 1.0;
    pauli_x(1, 0) = 1.0;
    const EigResult b = hermitian_eig(pauli_x, 1e-12);
    CHECK(b.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(b.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig recovers a planted spectrum") {
    SplitMix64 rng(42);
    const ComplexMatrix v = random_unitary(4, rng);
    const std::vector<double> lam = {-2.0, -0.5, 0.5, 3.0};
    ComplexMatrix h(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < 4; ++k) s += v(r, k) * lam[static_cast<size_t>(k)] * std::conj(v(c, k));
            h(r, c) = s;
        }
    const EigResult e = hermitian_eig(h, 1e-10);
    for (int k = 0; k < 4; ++k)
        CHECK(e.eigenvalues[static_cast<size_t>(k)] == doctest::Approx(lam[static_cast<size_t>(k)]).epsilon(1e-10));

    // Reconstruction and orthonormality stay within 10x the tolerance.
    ComplexMatrix rec(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += e.eigenvectors(r, k) * e.eigenvalues[static_cast<size_t>(k)] * std::conj(e.eigenvectors(c, k));
            rec(r, c) = s;
        }
    CHECK((rec - h).max_abs() < 1e-9);
    CHECK(is_unitary(e.eigenvectors, 1e-9).passed);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m, 1e-10), std::domain_error);
}

TEST_CASE("expm_antihermitian closed forms") {
    CHECK((expm_antihermitian(ComplexMatrix(3)) - ComplexMatrix::identity(3)).max_abs() < 1e-14);

    ComplexMatrix a(2);  // real antisymmetric, angle pi/2
    a(0, 1) = M_PI / 2.0;
    a(1, 0) = -M_PI / 2.0;
    // exp([[0, b], [-b, 0]]) = [[cos b, sin b], [-sin b, cos b]]
    const ComplexMatrix r = expm_antihermitian(a);
    CHECK(std::abs(r(0, 0)) < 1e-10);
    CHECK(std::abs(r(0, 1) - Complex(1.0)) < 1e-10);
    CHECK(std::abs(r(1, 0) - Complex(-1.0)) < 1e-10);
    CHECK(std::abs(r(1, 1)) < 1e-10);

    const double th = 0.7;
    const ComplexMatrix d = expm_antihermitian(ComplexMatrix::diagonal({Complex(0.0, th)}));
    CHECK(std::abs(d(0, 0) - std::polar(1.0, th)) < 1e-14);

    ComplexMatrix bad(2);
    bad(0, 1) = 1.0;
    bad(1, 0) = 1.0;
    CHECK_THROWS_AS(expm_antihermitian(bad), std::domain_error);
}

TEST_CASE("expm inverse property") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 5);
        ComplexMatrix a(d);
        for (int r = 0; r < d; ++r) {
            a(r, r) = Complex(0.0, 2.0 * rng.uniform01() - 1.0);
            for (int c = r + 1; c < d; ++c) {
                const Complex z(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
                a(r, c) = z;
                a(c, r) = -std::conj(z);
            }
        }
        ComplexMatrix na(d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) na(r, c) = -a(r, c);
        const ComplexMatrix prod = expm_antihermitian(a) * expm_antihermitian(na);
        CHECK((prod - ComplexMatrix::identity(d)).max_abs() < 1e-9);
    }
}

TEST_CASE("poly_roots simple polynomials") {
    const auto r1 = poly_roots({Complex(-1.0), Complex(0.0), Complex(1.0)});  // x^2 - 1
    REQUIRE(r1.size() == 2);
    double best1 = 1e9, best2 = 1e9;
    for (const Complex& z : r1) {
        best1 = std::min(best1, std::abs(z - Complex(1.0)));
        best2 = std::min(best2, std::abs(z - Complex(-1.0)));
    }
    CHECK(best1 < 1e-12);
    CHECK(best2 < 1e-12);

    const auto r2 = poly_roots({Complex(-1.0), Complex(0.0), Complex(0.0), Complex(1.0)});  // x^3-1
    for (const Complex& z : r2) {
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
        CHECK(std::abs(z * z * z - Complex(1.0)) < 1e-10);
    }
}

TEST_CASE("poly_roots unimodular cubic from a Fourier trace") {
    // tr(F3/sqrt3) = i; dividing by the principal cube root of det = -i puts
    // the trace at tau = e^{2 pi i/3}, and x^3 - tau x^2 + conj(tau) x - 1
    // then has all roots on the unit circle.
    const Complex tau = std::polar(1.0, 2.0 * M_PI / 3.0);
    const auto roots = poly_roots({Complex(-1.0), std::conj(tau), -tau, Complex(1.0)});
    for (const Complex& z : roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
}

TEST_CASE("poly_roots of random U(3) characteristic polynomials are unimodular") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix u = random_unitary(3, rng);
        const Complex tr = u.trace();
        const Complex dt = det(u);
        // char poly x^3 - tr x^2 + s2 x - det, with s2 = conj(tr) det for unitaries
        const Complex s2 = std::conj(tr) * dt;
        const auto roots = poly_roots({-dt, s2, -tr, Complex(1.0)});
        for (const Complex& z : roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);
    }
}

TEST_CASE("poly_roots input validation") {
    CHECK_THROWS_AS(poly_roots({Complex(1.0), Complex(0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(poly_roots({Complex(1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(poly_roots(std::vector<Complex>(11, Complex(1.0))), std::invalid_argument);
}

TEST_CASE("unitary determinants are unimodular") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 7);
        const ComplexMatrix u = random_unitary(d, rng);
        CHECK(is_unitary(u, 1e-10).passed);
        CHECK(std::abs(std::abs(det(u)) - 1.0) < 1e-9);
    }
}

TEST_CASE("haar sampler is deterministic per seed") {
    SplitMix64 a(123), b(123), c(124);
    const ComplexMatrix ua = random_unitary(3, a);
    const ComplexMatrix ub = random_unitary(3, b);
    const ComplexMatrix uc = random_unitary(3, c);
    CHECK((ua - ub).max_abs() == 0.0);
    CHECK((ua - uc).max_abs() > 1e-3);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(det(ComplexMatrix::identity(17)), std::invalid_argument);
    SplitMix64 rng(1);
    const ComplexMatrix u1 = random_unitary(1, rng);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-12);  // d=1 gives a phase
}

TEST_CASE("splitmix64 matches the published stream") {
    SplitMix64 g(0);
    CHECK(g.next() == 0x7c54ac3ac8bb0988ULL);
    CHECK(g.next() == 0x2faf197c9c43f3c5ULL);
    CHECK(g.next() == 0xfc5478a9efd7743dULL);
    SplitMix64 h(1234567);
    CHECK(h.next() == 0x0f7fde4717352c2bULL);
    // uniforms live in (0, 1]
    SplitMix64 u(99);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform01();
        CHECK(x > 0.0);
        CHECK(x <= 1.0);
    }
}

TEST_CASE("poly_roots at the degree cap") {
    std::vector<Complex> coeffs(9, Complex(0.0));  // x^8 - 1
    coeffs[0] = -1.0;
    coeffs[8] = 1.0;
    const auto roots = poly_roots(coeffs);
    REQUIRE(roots.size() == 8);
    for (const Complex& z : roots) {
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-10);
        Complex p8 = 1.0;
        for (int i = 0; i < 8; ++i) p8 *= z;
        CHECK(std::abs(p8 - Complex(1.0)) < 1e-9);
    }
}
