#include "qde/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "qde/rng.hpp"

namespace qde {

double shannon_eta(double x) {
    if (x < 0.0) throw std::domain_error("shannon_eta needs a nonnegative argument");
    if (x < 1e-300) return 0.0;
    return -x * std::log(x);
}

double entropy_rate(const ComplexMatrix& u, const RankOnePOVM& povm) {
    const TransitionMatrix t = transition_matrix(u, povm);
    double h = 0.0;
    for (double pij : t.p) h += shannon_eta(pij);
    return h / t.k;
}

double measurement_entropy(const RankOnePOVM& povm) {
    return entropy_rate(ComplexMatrix::identity(povm.dim()), povm);
}

EntropyReport dynamical_entropy(const ComplexMatrix& u, const RankOnePOVM& povm) {
    EntropyReport r;
    r.rate = entropy_rate(u, povm);
    r.measurement = measurement_entropy(povm);
    r.dynamical = r.rate - r.measurement;
    return r;
}

double state_entropy(const State& rho, const RankOnePOVM& povm) {
    double h = 0.0;
    for (double p : born_probabilities(povm, rho)) h += shannon_eta(p);
    return h;
}

double entropy_rate_as_mean(const ComplexMatrix& u, const RankOnePOVM& povm) {
    if (u.dim() != povm.dim()) throw std::invalid_argument("dimension mismatch");
    const int k = povm.outcome_count();
    double h = 0.0;
    for (int j = 0; j < k; ++j) {
        std::vector<Complex> out = u.apply(povm.vector(j));
        // Renormalize against roundoff before forming the pure state.
        const double n = std::sqrt(norm2(out));
        for (Complex& z : out) z /= n;
        h += state_entropy(State::pure(out), povm);
    }
    return h / k;
}

BlockEntropySeries block_entropies(const ComplexMatrix& u, const RankOnePOVM& povm, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    const int k = povm.outcome_count();
    double strings = 1.0;
    for (int n = 0; n < n_max; ++n) {
        strings *= k;
        if (strings > 1e7) throw std::invalid_argument("k^n_max exceeds the enumeration guard of 1e7");
    }
    const TransitionMatrix t = transition_matrix(u, povm);

    BlockEntropySeries series;
    // Probabilities of all strings of the current length, stationary start.
    std::vector<double> prob(static_cast<size_t>(k), 1.0 / k);
    std::vector<int> last(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) last[static_cast<size_t>(j)] = j;
    for (int n = 1; n <= n_max; ++n) {
        double h = 0.0;
        for (double p : prob) h += shannon_eta(p);
        series.values.push_back(h);
        if (n == n_max) break;
        std::vector<double> nprob(prob.size() * k);
        std::vector<int> nlast(prob.size() * k);
        for (size_t i = 0; i < prob.size(); ++i) {
            for (int l = 0; l < k; ++l) {
                nprob[i * k + l] = prob[i] * t.at(last[i], l);
                nlast[i * k + l] = l;
            }
        }
        prob = std::move(nprob);
        last = std::move(nlast);
    }
    for (size_t m = 0; m + 1 < series.values.size(); ++m)
        series.differences.push_back(series.values[m + 1] - series.values[m]);
    return series;
}

double empirical_entropy_rate(const ComplexMatrix& u, const RankOnePOVM& povm, long steps,
                              uint64_t seed) {
    if (steps < 10000) throw std::invalid_argument("empirical estimator needs at least 1e4 steps");
    const TransitionMatrix t = transition_matrix(u, povm);
    const int k = t.k;

    SplitMix64 rng(seed);
    auto draw = [&](const double* row) {
        const double x = rng.uniform01();
        double acc = 0.0;
        for (int l = 0; l < k; ++l) {
            acc += row[l];
            if (x <= acc) return l;
        }
        return k - 1;
    };

    std::vector<double> uniform(static_cast<size_t>(k), 1.0 / k);
    int cur = draw(uniform.data());
    std::vector<long> pair_counts(static_cast<size_t>(k) * k, 0);
    for (long n = 0; n < steps; ++n) {
        const int nxt = draw(&t.p[static_cast<size_t>(cur) * k]);
        ++pair_counts[static_cast<size_t>(cur) * k + nxt];
        cur = nxt;
    }

    // Plug-in conditional entropy H(pairs) - H(first marginal).
    std::vector<long> first(static_cast<size_t>(k), 0);
    for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) first[static_cast<size_t>(j)] += pair_counts[static_cast<size_t>(j) * k + l];
    double h_pair = 0.0, h_first = 0.0;
    for (long c : pair_counts) h_pair += shannon_eta(static_cast<double>(c) / steps);
    for (long c : first) h_first += shannon_eta(static_cast<double>(c) / steps);
    return h_pair - h_first;
}

}  // namespace qde
