#include <doctest.h>

#include <cmath>

#include "qde/entropy.hpp"
#include "qde/haar.hpp"

using namespace qde;

namespace {

ComplexMatrix fourier_unitary(int d) {
    ComplexMatrix f(d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
            const double a = 2.0 * M_PI * ((j * l) % d) / d;
            f(j, l) = s * Complex(std::cos(a), std::sin(a));
        }
    return f;
}

RankOnePOVM computational_pvm(int d) { return RankOnePOVM::from_unitary(ComplexMatrix::identity(d)); }

}  // namespace

TEST_CASE("shannon_eta") {
    CHECK(shannon_eta(0.0) == 0.0);
    CHECK(shannon_eta(1.0) == 0.0);
    CHECK(shannon_eta(0.5) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(shannon_eta(-0.1), std::domain_error);
}

TEST_CASE("entropy_rate landmark values") {
    CHECK(entropy_rate(ComplexMatrix::identity(3), computational_pvm(3)) == doctest::Approx(0.0));
    CHECK(entropy_rate(fourier_unitary(2), computational_pvm(2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    // H(I, tetrahedral SIC) = ln 2 + (1/2) ln 3
    CHECK(entropy_rate(ComplexMatrix::identity(2), sic_povm(2)) ==
          doctest::Approx(std::log(2.0) + 0.5 * std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("entropy_rate equals its two-term form") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        const ComplexMatrix u = random_unitary(d, rng);
        const RankOnePOVM povm = sic_povm(d);
        const int k = povm.outcome_count();

        // ln(k/d) + (d/k^2) sum eta(|<phi_j|U|phi_l>|^2)
        double s = 0.0;
        for (int l = 0; l < k; ++l) {
            const auto uphil = u.apply(povm.vector(l));
            for (int j = 0; j < k; ++j) s += shannon_eta(std::norm(inner(povm.vector(j), uphil)));
        }
        const double alt = std::log(static_cast<double>(k) / d) + d * s / (static_cast<double>(k) * k);
        CHECK(entropy_rate(u, povm) == doctest::Approx(alt).epsilon(1e-9));
    }
}

TEST_CASE("measurement entropy") {
    SplitMix64 rng(37);
    CHECK(measurement_entropy(RankOnePOVM::from_unitary(random_unitary(4, rng))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(measurement_entropy(sic_povm(2)) == doctest::Approx(1.242453325).epsilon(1e-9));
    // (2/3) ln 4 + ln 3
    CHECK(measurement_entropy(sic_povm(3)) ==
          doctest::Approx(2.0 / 3.0 * std::log(4.0) + std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("dynamical entropy report") {
    const EntropyReport none = dynamical_entropy(ComplexMatrix::identity(2), sic_povm(2));
    CHECK(none.dynamical == doctest::Approx(0.0).epsilon(1e-12));

    const EntropyReport f2 = dynamical_entropy(fourier_unitary(2), computational_pvm(2));
    CHECK(f2.dynamical == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(f2.dynamical == f2.rate - f2.measurement);

    // SIC dynamical entropy lives in [-ln 2 + ln(d+1)/d, 0].
    SplitMix64 rng(41);
    for (int d : {2, 3}) {
        const RankOnePOVM sic = sic_povm(d);
        const double lo = -std::log(2.0) + std::log(d + 1.0) / d;
        for (int trial = 0; trial < 50; ++trial) {
            const EntropyReport r = dynamical_entropy(random_unitary(d, rng), sic);
            CHECK(r.dynamical >= lo - 1e-9);
            CHECK(r.dynamical <= 1e-9);
            CHECK(std::abs(r.dynamical) <= std::log(static_cast<double>(d)) + 1e-9);
        }
    }
}

TEST_CASE("state entropy") {
    CHECK(state_entropy(State::maximally_mixed(3), sic_povm(3)) ==
          doctest::Approx(std::log(9.0)).epsilon(1e-12));
    CHECK(state_entropy(State::pure({Complex(1.0), Complex(0.0)}), computational_pvm(2)) ==
          doctest::Approx(0.0));
    // the tetrahedral SIC attains ln((d+1)d/2) = ln 3 at |0><0|
    CHECK(state_entropy(State::pure({Complex(1.0), Complex(0.0)}), sic_povm(2)) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("entropy rate as mean output-state entropy") {
    CHECK(entropy_rate_as_mean(ComplexMatrix::identity(3), computational_pvm(3)) ==
          doctest::Approx(0.0));
    CHECK(entropy_rate_as_mean(fourier_unitary(2), computational_pvm(2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(entropy_rate_as_mean(ComplexMatrix::identity(3), sic_povm(3)) ==
          doctest::Approx(measurement_entropy(sic_povm(3))).epsilon(1e-12));

    SplitMix64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        const ComplexMatrix u = random_unitary(d, rng);
        const RankOnePOVM povm =
            trial % 2 == 0 ? RankOnePOVM::from_unitary(random_unitary(d, rng)) : sic_povm(d);
        CHECK(std::abs(entropy_rate_as_mean(u, povm) - entropy_rate(u, povm)) < 1e-10);
    }
}

TEST_CASE("entropy rate bounds ln(k/d) <= H <= ln k") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 2);
        const ComplexMatrix u = random_unitary(d, rng);
        const RankOnePOVM povm =
            trial % 2 == 0 ? RankOnePOVM::from_unitary(random_unitary(d, rng)) : sic_povm(d);
        const double h = entropy_rate(u, povm);
        const double k = povm.outcome_count();
        CHECK(h >= std::log(k / d) - 1e-9);
        CHECK(h <= std::log(k) + 1e-9);
    }
}

TEST_CASE("conjugation invariance at fixed data") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + static_cast<int>(rng.next() % 3);
        const ComplexMatrix u = random_unitary(d, rng);
        const ComplexMatrix v = random_unitary(d, rng);
        const ComplexMatrix b = random_unitary(d, rng);
        const double h1 = entropy_rate(u, RankOnePOVM::from_unitary(b));
        const double h2 =
            entropy_rate(v.adjoint() * u * v, RankOnePOVM::from_unitary(v.adjoint() * b));
        CHECK(std::abs(h1 - h2) < 1e-10);
    }
}

TEST_CASE("block entropies") {
    const BlockEntropySeries id3 =
        block_entropies(ComplexMatrix::identity(3), computational_pvm(3), 3);
    for (double h : id3.values) CHECK(h == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    for (double dh : id3.differences) CHECK(dh == doctest::Approx(0.0).epsilon(1e-12));

    const BlockEntropySeries f2 = block_entropies(fourier_unitary(2), computational_pvm(2), 3);
    for (size_t n = 0; n < f2.values.size(); ++n)
        CHECK(f2.values[n] == doctest::Approx((n + 1) * std::log(2.0)).epsilon(1e-12));

    SplitMix64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix u = random_unitary(2, rng);
        const RankOnePOVM povm = trial % 2 == 0 ? computational_pvm(2) : sic_povm(2);
        const BlockEntropySeries s = block_entropies(u, povm, 4);
        const double rate = entropy_rate(u, povm);
        for (double dh : s.differences) CHECK(dh == doctest::Approx(rate).epsilon(1e-8));
    }

    CHECK_THROWS_AS(block_entropies(fourier_unitary(2), sic_povm(2), 13), std::invalid_argument);
}

TEST_CASE("empirical entropy rate") {
    CHECK(empirical_entropy_rate(ComplexMatrix::identity(2), computational_pvm(2), 100000, 1) ==
          doctest::Approx(0.0).epsilon(1e-3));

    const double est = empirical_entropy_rate(fourier_unitary(2), computational_pvm(2), 1000000, 2);
    CHECK(std::abs(est - std::log(2.0)) < 5e-3);

    // diag(1, e^{i pi/3}) against the +- basis
    ComplexMatrix u = ComplexMatrix::diagonal({Complex(1.0), std::polar(1.0, M_PI / 3.0)});
    const RankOnePOVM pm = RankOnePOVM::from_unitary(fourier_unitary(2));
    const double emp = empirical_entropy_rate(u, pm, 1000000, 3);
    CHECK(std::abs(emp - entropy_rate(u, pm)) < 1e-2);

    CHECK_THROWS_AS(empirical_entropy_rate(u, pm, 100, 1), std::invalid_argument);

    // deterministic given the seed
    CHECK(empirical_entropy_rate(u, pm, 20000, 77) == empirical_entropy_rate(u, pm, 20000, 77));
}
