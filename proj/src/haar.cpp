#include "qde/haar.hpp"

#include <cmath>

namespace qde {

ComplexMatrix random_unitary(int dim, SplitMix64& rng) {
    ComplexMatrix r(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const auto [x, y] = rng.gaussian_pair();
            r(i, j) = Complex(x, y);
        }
    }

    ComplexMatrix q = ComplexMatrix::identity(dim);
    std::vector<Complex> v(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        double sigma2 = 0.0;
        for (int i = k; i < dim; ++i) sigma2 += std::norm(r(i, k));
        const double sigma = std::sqrt(sigma2);
        if (sigma == 0.0) continue;
        const Complex rkk = r(k, k);
        const Complex alpha = (std::abs(rkk) == 0.0 ? Complex(-sigma) : -(rkk / std::abs(rkk)) * sigma);
        double vn2 = 0.0;
        for (int i = k; i < dim; ++i) {
            v[static_cast<size_t>(i)] = r(i, k) - (i == k ? alpha : Complex(0.0));
            vn2 += std::norm(v[static_cast<size_t>(i)]);
        }
        if (vn2 < 1e-300) continue;
        const double beta = 2.0 / vn2;
        for (int c = k; c < dim; ++c) {  // R <- H R
            Complex w = 0.0;
            for (int i = k; i < dim; ++i) w += std::conj(v[static_cast<size_t>(i)]) * r(i, c);
            w *= beta;
            for (int i = k; i < dim; ++i) r(i, c) -= w * v[static_cast<size_t>(i)];
        }
        for (int row = 0; row < dim; ++row) {  // Q <- Q H
            Complex w = 0.0;
            for (int c = k; c < dim; ++c) w += q(row, c) * v[static_cast<size_t>(c)];
            w *= beta;
            for (int c = k; c < dim; ++c) q(row, c) -= w * std::conj(v[static_cast<size_t>(c)]);
        }
    }

    for (int j = 0; j < dim; ++j) {
        const Complex rjj = r(j, j);
        const double m = std::abs(rjj);
        const Complex phase = m == 0.0 ? Complex(1.0) : rjj / m;
        for (int i = 0; i < dim; ++i) q(i, j) *= phase;
    }
    return q;
}

}  // namespace qde
