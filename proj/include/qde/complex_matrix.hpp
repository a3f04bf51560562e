#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace qde {

using Complex = std::complex<double>;

/// Default tolerance for unitarity checks wherever a caller does not override.
inline constexpr double kDefaultUnitaryTol = 1e-9;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
        if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& diag) {
        ComplexMatrix m(static_cast<int>(diag.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[static_cast<size_t>(i)];
        return m;
    }

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    const std::vector<Complex>& entries() const { return a_; }
    std::vector<Complex>& entries() { return a_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix operator*(const ComplexMatrix& o) const {
        require_same_dim(o);
        ComplexMatrix m(dim_);
        for (int r = 0; r < dim_; ++r) {
            for (int k = 0; k < dim_; ++k) {
                const Complex v = (*this)(r, k);
                if (v == Complex(0.0)) continue;
                for (int c = 0; c < dim_; ++c) m(r, c) += v * o(k, c);
            }
        }
        return m;
    }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        require_same_dim(o);
        ComplexMatrix m(dim_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }

    ComplexMatrix operator-(const ComplexMatrix& o) const {
        require_same_dim(o);
        ComplexMatrix m(dim_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }

    ComplexMatrix operator*(Complex s) const {
        ComplexMatrix m(dim_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
        return m;
    }

    /// Largest entry modulus.
    double max_abs() const {
        double m = 0.0;
        for (const Complex& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    /// Applies this matrix to a vector.
    std::vector<Complex> apply(const std::vector<Complex>& x) const {
        if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("vector length mismatch");
        std::vector<Complex> y(static_cast<size_t>(dim_));
        for (int r = 0; r < dim_; ++r) {
            Complex s = 0.0;
            for (int c = 0; c < dim_; ++c) s += (*this)(r, c) * x[static_cast<size_t>(c)];
            y[static_cast<size_t>(r)] = s;
        }
        return y;
    }

    std::vector<Complex> column(int c) const {
        std::vector<Complex> v(static_cast<size_t>(dim_));
        for (int r = 0; r < dim_; ++r) v[static_cast<size_t>(r)] = (*this)(r, c);
        return v;
    }

    static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix m(a.dim() * b.dim());
        for (int ra = 0; ra < a.dim(); ++ra)
            for (int ca = 0; ca < a.dim(); ++ca)
                for (int rb = 0; rb < b.dim(); ++rb)
                    for (int cb = 0; cb < b.dim(); ++cb)
                        m(ra * b.dim() + rb, ca * b.dim() + cb) = a(ra, ca) * b(rb, cb);
        return m;
    }

    /// True when every entry has finite real and imaginary part.
    bool all_finite() const {
        for (const Complex& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

  private:
    void require_same_dim(const ComplexMatrix& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    }

    int dim_;
    std::vector<Complex> a_;
};

inline Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm2(const std::vector<Complex>& a) {
    double s = 0.0;
    for (const Complex& z : a) s += std::norm(z);
    return s;
}

}  // namespace qde
