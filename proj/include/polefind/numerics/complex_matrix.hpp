// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NUMERICS_COMPLEX_MATRIX_HPP
#define POLEFIND_NUMERICS_COMPLEX_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "polefind/errors.hpp"

namespace polefind {

using Cplx = std::complex<double>;
using CVector = std::vector<Cplx>;
using Index = std::ptrdiff_t;

/// Dense complex matrix in column-major order (LAPACK layout).
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1)
            throw DimensionError("ComplexMatrix: dimensions must be >= 1");
        data_.assign(static_cast<std::size_t>(rows * cols), Cplx(0.0, 0.0));
    }

    static ComplexMatrix identity(Index n) {
        ComplexMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Cplx& operator()(Index i, Index j) { return data_[static_cast<std::size_t>(j * rows_ + i)]; }
    const Cplx& operator()(Index i, Index j) const {
        return data_[static_cast<std::size_t>(j * rows_ + i)];
    }

    Cplx* data() { return data_.data(); }
    const Cplx* data() const { return data_.data(); }

    bool all_finite() const {
        for (const Cplx& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Cplx& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    ComplexMatrix& operator*=(Cplx s) {
        for (Cplx& z : data_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
        ComplexMatrix c(a.rows(), b.cols());
        for (Index j = 0; j < b.cols(); ++j)
            for (Index k = 0; k < a.cols(); ++k) {
                const Cplx bkj = b(k, j);
                if (bkj == 0.0) continue;
                for (Index i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
            }
        return c;
    }

    CVector apply(const CVector& x) const {
        if (static_cast<Index>(x.size()) != cols_)
            throw DimensionError("apply: vector length does not match matrix columns");
        CVector y(static_cast<std::size_t>(rows_), Cplx(0.0));
        for (Index j = 0; j < cols_; ++j) {
            const Cplx xj = x[static_cast<std::size_t>(j)];
            if (xj == 0.0) continue;
            for (Index i = 0; i < rows_; ++i)
                y[static_cast<std::size_t>(i)] += (*this)(i, j) * xj;
        }
        return y;
    }

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError("matrix shapes differ");
    }

    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Cplx> data_;
};

/// Throws InvalidInputError if any entry is NaN or Inf.
inline void require_finite(const ComplexMatrix& m, const char* who) {
    if (!m.all_finite())
        throw InvalidInputError(std::string(who) + ": matrix has non-finite entries");
}

inline Cplx dot(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw DimensionError("dot: lengths differ");
    Cplx s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

inline double norm2(const CVector& v) {
    double s = 0.0;
    for (const Cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

inline void normalize(CVector& v) {
    const double n = norm2(v);
    if (n > 0.0)
        for (Cplx& z : v) z /= n;
}

}  // namespace polefind

#endif  // POLEFIND_NUMERICS_COMPLEX_MATRIX_HPP
