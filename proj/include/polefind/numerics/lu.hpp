// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NUMERICS_LU_HPP
#define POLEFIND_NUMERICS_LU_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/numerics/complex_matrix.hpp"
#include "polefind/numerics/lapack.hpp"

namespace polefind {

/// PA = LU with partial (row) pivoting. `factors` packs the unit lower
/// factor strictly below the diagonal and U on/above it; `perm[i]` is the
/// original row index that pivoting moved to position i; pivot magnitudes
/// are |U_ii| in elimination order. Exact zero pivots are permitted and
/// recorded, not errors.
struct LUFactorization {
    Index n = 0;
    ComplexMatrix factors;
    std::vector<Index> perm;
    std::vector<double> pivot_magnitudes;

    double max_pivot() const {
        double m = 0.0;
        for (double p : pivot_magnitudes) m = std::max(m, p);
        return m;
    }

    bool exactly_singular() const {
        for (double p : pivot_magnitudes)
            if (p == 0.0) return true;
        return false;
    }

    ComplexMatrix lower() const {
        ComplexMatrix l = ComplexMatrix::identity(n);
        for (Index j = 0; j < n; ++j)
            for (Index i = j + 1; i < n; ++i) l(i, j) = factors(i, j);
        return l;
    }

    ComplexMatrix upper() const {
        ComplexMatrix u(n, n);
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i <= j; ++i) u(i, j) = factors(i, j);
        return u;
    }
};

inline LUFactorization lu_factor(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionError("lu_factor: matrix must be square");
    require_finite(a, "lu_factor");

    LUFactorization f;
    f.n = a.rows();
    f.factors = a;
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(f.n));
    const lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, static_cast<lapack_int>(f.n),
                                           static_cast<lapack_int>(f.n), f.factors.data(),
                                           static_cast<lapack_int>(f.n), ipiv.data());
    if (info < 0) throw InvalidInputError("lu_factor: illegal argument to zgetrf");
    // info > 0 flags an exactly zero pivot; the factorization is still valid.

    f.perm.resize(static_cast<std::size_t>(f.n));
    std::iota(f.perm.begin(), f.perm.end(), Index{0});
    for (Index i = 0; i < f.n; ++i) {
        const Index j = static_cast<Index>(ipiv[static_cast<std::size_t>(i)]) - 1;
        if (j != i) std::swap(f.perm[static_cast<std::size_t>(i)], f.perm[static_cast<std::size_t>(j)]);
    }

    f.pivot_magnitudes.resize(static_cast<std::size_t>(f.n));
    for (Index i = 0; i < f.n; ++i)
        f.pivot_magnitudes[static_cast<std::size_t>(i)] = std::abs(f.factors(i, i));
    return f;
}

/// Solves F x = b through the stored factors. Throws SingularMatrixError on
/// an exactly zero pivot.
inline CVector lu_solve(const LUFactorization& f, const CVector& b) {
    if (static_cast<Index>(b.size()) != f.n)
        throw DimensionError("lu_solve: right-hand side length mismatch");
    if (f.exactly_singular())
        throw SingularMatrixError("lu_solve: factorization is exactly singular");

    CVector x(static_cast<std::size_t>(f.n));
    for (Index i = 0; i < f.n; ++i)
        x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
    // forward: L y = P b
    for (Index i = 1; i < f.n; ++i) {
        Cplx s = x[static_cast<std::size_t>(i)];
        for (Index j = 0; j < i; ++j) s -= f.factors(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s;
    }
    // backward: U x = y
    for (Index i = f.n - 1; i >= 0; --i) {
        Cplx s = x[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < f.n; ++j) s -= f.factors(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s / f.factors(i, i);
    }
    return x;
}

/// Null vectors of the factored matrix via the two-step elimination
/// procedure: pick the canonical basis direction for each near-zero pivot
/// column, then solve the reduced triangular system obtained by deleting all
/// near-zero-pivot rows/columns, with the negated deleted column (minus its
/// deleted-row entry) as right-hand side. Candidates whose residual exceeds
/// the pivot threshold are dropped; survivors are normalized to unit norm.
/// A pivot counts as near-zero when its magnitude is <= pivot_tol times the
/// largest pivot magnitude. No near-zero pivots -> empty list.
inline std::vector<CVector> nullspace_from_lu(const LUFactorization& f,
                                              double pivot_tol = 1e-10) {
    const Index n = f.n;
    const double pmax = f.max_pivot();
    const double thresh = pivot_tol * pmax;

    std::vector<Index> zero_idx, keep_idx;
    for (Index i = 0; i < n; ++i) {
        if (f.pivot_magnitudes[static_cast<std::size_t>(i)] <= thresh)
            zero_idx.push_back(i);
        else
            keep_idx.push_back(i);
    }
    if (zero_idx.empty()) return {};

    std::vector<CVector> out;
    const double resid_tol = 10.0 * pivot_tol * pmax;
    for (Index p : zero_idx) {
        CVector v(static_cast<std::size_t>(n), Cplx(0.0));
        v[static_cast<std::size_t>(p)] = 1.0;
        // back-substitute on the kept rows/columns of U
        for (auto it = keep_idx.rbegin(); it != keep_idx.rend(); ++it) {
            const Index i = *it;
            Cplx s = (i < p) ? -f.factors(i, p) : Cplx(0.0);
            for (Index j : keep_idx) {
                if (j <= i) continue;
                s -= f.factors(i, j) * v[static_cast<std::size_t>(j)];
            }
            v[static_cast<std::size_t>(i)] = s / f.factors(i, i);
        }
        // residual screen against U (null(U) = null(A) since L, P are invertible)
        double resid = 0.0;
        for (Index i = 0; i < n; ++i) {
            Cplx s = 0.0;
            for (Index j = i; j < n; ++j) s += f.factors(i, j) * v[static_cast<std::size_t>(j)];
            resid = std::max(resid, std::abs(s));
        }
        if (resid > resid_tol && !(pmax == 0.0 && resid == 0.0)) continue;
        normalize(v);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace polefind

#endif  // POLEFIND_NUMERICS_LU_HPP
