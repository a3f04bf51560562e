#include "qde/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qde {

namespace {

void dephase(std::vector<Complex>& v) {
    for (Complex& z : v) {
        const double m = std::abs(z);
        if (m > 1e-14) {
            const Complex phase = std::conj(z) / m;
            for (Complex& w : v) w *= phase;
            return;
        }
    }
}

}  // namespace

RankOnePOVM RankOnePOVM::validate(std::vector<std::vector<Complex>> vectors, int dim) {
    const int k = static_cast<int>(vectors.size());
    if (dim < 1) throw std::invalid_argument("POVM dimension must be positive");
    if (k < dim) throw std::invalid_argument("rank-1 POVM needs at least d vectors");
    for (auto& v : vectors) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("POVM vector length differs from dim");
        for (const Complex& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("POVM vector has non-finite entries");
        if (std::abs(norm2(v) - 1.0) > 1e-9)
            throw std::invalid_argument("POVM vector is not normalized");
        dephase(v);
    }
    // sum_j |phi_j><phi_j| must equal (k/d) I entrywise.
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            Complex s = 0.0;
            for (const auto& v : vectors) s += v[static_cast<size_t>(r)] * std::conj(v[static_cast<size_t>(c)]);
            const Complex want = r == c ? Complex(static_cast<double>(k) / dim) : Complex(0.0);
            worst = std::max(worst, std::abs(s - want));
        }
    }
    if (worst > 1e-8)
        throw std::invalid_argument("POVM does not resolve the identity; worst entry deviation " +
                                    std::to_string(worst));
    if (k == dim) {
        for (int j = 0; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                if (std::abs(inner(vectors[static_cast<size_t>(j)], vectors[static_cast<size_t>(l)])) > 1e-9)
                    throw std::invalid_argument("PVM vectors are not pairwise orthogonal");
    }
    return RankOnePOVM(std::move(vectors), dim);
}

RankOnePOVM RankOnePOVM::from_unitary(const ComplexMatrix& v) {
    if (!is_unitary(v, kDefaultUnitaryTol).passed)
        throw std::invalid_argument("basis matrix is not unitary");
    std::vector<std::vector<Complex>> cols;
    cols.reserve(static_cast<size_t>(v.dim()));
    for (int c = 0; c < v.dim(); ++c) cols.push_back(v.column(c));
    return validate(std::move(cols), v.dim());
}

State State::validate(ComplexMatrix rho) {
    const int d = rho.dim();
    if (!rho.all_finite()) throw std::invalid_argument("state has non-finite entries");
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (std::abs(rho(r, c) - std::conj(rho(c, r))) > 1e-9)
                throw std::invalid_argument("state is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-9)
        throw std::invalid_argument("state trace differs from 1");
    EigResult eig = hermitian_eig(rho, 1e-9);
    if (eig.eigenvalues.front() < -1e-9)
        throw std::invalid_argument("state has a negative eigenvalue");
    return State(std::move(rho));
}

State State::maximally_mixed(int dim) {
    ComplexMatrix rho(dim);
    for (int i = 0; i < dim; ++i) rho(i, i) = 1.0 / dim;
    return State(std::move(rho));
}

State State::pure(const std::vector<Complex>& psi) {
    const int d = static_cast<int>(psi.size());
    const double n = norm2(psi);
    if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("pure state vector is not normalized");
    ComplexMatrix rho(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rho(r, c) = psi[static_cast<size_t>(r)] * std::conj(psi[static_cast<size_t>(c)]);
    return State(std::move(rho));
}

std::vector<double> born_probabilities(const RankOnePOVM& povm, const State& rho) {
    if (povm.dim() != rho.dim()) throw std::invalid_argument("dimension mismatch");
    const int k = povm.outcome_count();
    std::vector<double> p(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        const auto& phi = povm.vector(j);
        const Complex v = inner(phi, rho.matrix().apply(phi));
        p[static_cast<size_t>(j)] = povm.weight() * v.real();
    }
    return p;
}

TransitionMatrix transition_matrix(const ComplexMatrix& u, const RankOnePOVM& povm) {
    if (u.dim() != povm.dim()) throw std::invalid_argument("dimension mismatch");
    if (!is_unitary(u, kDefaultUnitaryTol).passed)
        throw std::invalid_argument("evolution matrix is not unitary");
    const int k = povm.outcome_count();
    TransitionMatrix t{k, std::vector<double>(static_cast<size_t>(k) * k)};
    for (int l = 0; l < k; ++l) {
        const std::vector<Complex> uphi = u.apply(povm.vector(l));
        for (int j = 0; j < k; ++j)
            t.at(j, l) = povm.weight() * std::norm(inner(povm.vector(j), uphi));
    }
    return t;
}

double wigner_string_probability(const ComplexMatrix& u, const RankOnePOVM& povm,
                                 const State& rho, const OutcomeString& s) {
    if (s.empty()) throw std::invalid_argument("outcome string is empty");
    const int k = povm.outcome_count();
    for (int sym : s)
        if (sym < 1 || sym > k) throw std::invalid_argument("outcome symbol out of range");
    const std::vector<double> first = born_probabilities(povm, rho);
    double prob = first[static_cast<size_t>(s.front() - 1)];
    if (s.size() > 1) {
        const TransitionMatrix t = transition_matrix(u, povm);
        for (size_t m = 0; m + 1 < s.size(); ++m) prob *= t.at(s[m] - 1, s[m + 1] - 1);
    }
    return prob;
}

RankOnePOVM sic_povm(int dim) {
    if (dim == 2) {
        // Tetrahedron with one vertex at |1>; the antipodal state |0> then
        // attains the ln 3 entropy minimum.
        std::vector<std::vector<Complex>> vecs;
        vecs.push_back({Complex(0.0), Complex(1.0)});
        for (int m = 0; m < 3; ++m) {
            const double ang = 2.0 * M_PI * m / 3.0;
            vecs.push_back({Complex(std::sqrt(2.0 / 3.0)),
                            Complex(std::cos(ang), std::sin(ang)) / std::sqrt(3.0)});
        }
        RankOnePOVM povm = RankOnePOVM::validate(std::move(vecs), 2);
        for (int j = 0; j < 4; ++j)
            for (int l = j + 1; l < 4; ++l)
                if (std::abs(std::norm(inner(povm.vector(j), povm.vector(l))) - 1.0 / 3.0) > 1e-12)
                    throw std::runtime_error("tetrahedral SIC overlap self-check failed");
        return povm;
    }
    if (dim == 3) {
        // Clock-and-shift orbit X^a Z^b of the fiducial (0, 1, -1)/sqrt(2).
        const Complex w(std::cos(2.0 * M_PI / 3.0), std::sin(2.0 * M_PI / 3.0));
        const std::vector<Complex> fid = {Complex(0.0), Complex(1.0 / std::sqrt(2.0)),
                                          Complex(-1.0 / std::sqrt(2.0))};
        std::vector<std::vector<Complex>> vecs;
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                std::vector<Complex> v(3);
                for (int r = 0; r < 3; ++r) {
                    // (X^a Z^b f)_r = w^{b (r - a)} f_{r - a}
                    const int src = ((r - a) % 3 + 3) % 3;
                    Complex ph = 1.0;
                    for (int t = 0; t < (b * src) % 3; ++t) ph *= w;
                    v[static_cast<size_t>(r)] = ph * fid[static_cast<size_t>(src)];
                }
                vecs.push_back(std::move(v));
            }
        }
        RankOnePOVM povm = RankOnePOVM::validate(std::move(vecs), 3);
        for (int j = 0; j < 9; ++j)
            for (int l = j + 1; l < 9; ++l)
                if (std::abs(std::norm(inner(povm.vector(j), povm.vector(l))) - 0.25) > 1e-12)
                    throw std::runtime_error("d=3 SIC overlap self-check failed");
        return povm;
    }
    throw std::invalid_argument("sic_povm supports dim 2 and 3");
}

}  // namespace qde
