// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NUMERICS_EIG_HPP
#define POLEFIND_NUMERICS_EIG_HPP

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/numerics/complex_matrix.hpp"
#include "polefind/numerics/lapack.hpp"

namespace polefind {

/// Unit-norm w minimizing ||A w|| over ||w|| = 1 (right singular vector of
/// the smallest singular value) and the attained minimum. Requires
/// rows >= cols. The phase is normalized so the largest-magnitude component
/// of w is real and positive, which keeps results reproducible.
inline std::pair<CVector, double> min_singular_vector(const ComplexMatrix& a) {
    if (a.rows() < a.cols())
        throw DimensionError("min_singular_vector: need rows >= cols");
    require_finite(a, "min_singular_vector");

    const lapack_int m = static_cast<lapack_int>(a.rows());
    const lapack_int n = static_cast<lapack_int>(a.cols());
    ComplexMatrix work = a;
    std::vector<double> sigma(static_cast<std::size_t>(n));
    ComplexMatrix vt(n, n);
    std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(1, n - 1)));
    const lapack_int info =
        LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'A', m, n, work.data(), m, sigma.data(),
                       nullptr, 1, vt.data(), n, superb.data());
    if (info != 0) throw InvalidInputError("min_singular_vector: zgesvd failed");

    CVector w(static_cast<std::size_t>(n));
    for (lapack_int j = 0; j < n; ++j)
        w[static_cast<std::size_t>(j)] = std::conj(vt(n - 1, j));

    std::size_t imax = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (std::abs(w[i]) > std::abs(w[imax])) imax = i;
    if (std::abs(w[imax]) > 0.0) {
        const Cplx phase = std::abs(w[imax]) / w[imax];
        for (Cplx& z : w) z *= phase;
    }
    return {std::move(w), sigma[static_cast<std::size_t>(n - 1)]};
}

/// Singular values of A, descending.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    const lapack_int m = static_cast<lapack_int>(a.rows());
    const lapack_int n = static_cast<lapack_int>(a.cols());
    ComplexMatrix work = a;
    std::vector<double> sigma(static_cast<std::size_t>(std::min(m, n)));
    std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(1, std::min(m, n) - 1)));
    const lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n, work.data(), m,
                                           sigma.data(), nullptr, 1, nullptr, 1, superb.data());
    if (info != 0) throw InvalidInputError("singular_values: zgesvd failed");
    return sigma;
}

/// Thin SVD A = U diag(s) V^*; returns (U, s, V) with U m-by-k, V n-by-k.
struct ThinSvd {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;
};

inline ThinSvd thin_svd(const ComplexMatrix& a) {
    const lapack_int m = static_cast<lapack_int>(a.rows());
    const lapack_int n = static_cast<lapack_int>(a.cols());
    const lapack_int k = std::min(m, n);
    ComplexMatrix work = a;
    ThinSvd out;
    out.sigma.resize(static_cast<std::size_t>(k));
    out.u = ComplexMatrix(m, k);
    ComplexMatrix vt(k, n);
    std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(1, k - 1)));
    const lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', m, n, work.data(), m,
                                           out.sigma.data(), out.u.data(), m, vt.data(), k,
                                           superb.data());
    if (info != 0) throw InvalidInputError("thin_svd: zgesvd failed");
    out.v = ComplexMatrix(n, k);
    for (lapack_int i = 0; i < k; ++i)
        for (lapack_int j = 0; j < n; ++j) out.v(j, i) = std::conj(vt(i, j));
    return out;
}

/// Finite generalized eigenvalues of E v = lambda B v via the QZ routine.
/// An eigenvalue is declared infinite and discarded when |beta| <= 1e-14 *
/// |alpha| in the (alpha, beta) pair returned by the factorization.
inline std::vector<Cplx> generalized_eigenvalues(const ComplexMatrix& e,
                                                 const ComplexMatrix& b) {
    if (e.rows() != e.cols() || b.rows() != b.cols() || e.rows() != b.rows())
        throw DimensionError("generalized_eigenvalues: need square pencils of equal size");
    require_finite(e, "generalized_eigenvalues");
    require_finite(b, "generalized_eigenvalues");

    const lapack_int n = static_cast<lapack_int>(e.rows());
    ComplexMatrix ew = e, bw = b;
    CVector alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    const lapack_int info =
        LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, ew.data(), n, bw.data(), n,
                      alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0) throw InvalidInputError("generalized_eigenvalues: zggev did not converge");

    std::vector<Cplx> lambdas;
    lambdas.reserve(static_cast<std::size_t>(n));
    for (lapack_int i = 0; i < n; ++i) {
        const Cplx al = alpha[static_cast<std::size_t>(i)];
        const Cplx be = beta[static_cast<std::size_t>(i)];
        if (std::abs(be) <= 1e-14 * std::abs(al)) continue;  // infinite eigenvalue
        lambdas.push_back(al / be);
    }
    return lambdas;
}

/// Eigenvalues of a general dense complex matrix.
inline std::vector<Cplx> eigenvalues(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("eigenvalues: matrix must be square");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    ComplexMatrix work = a;
    CVector lam(static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n,
                                          lam.data(), nullptr, 1, nullptr, 1);
    if (info != 0) throw InvalidInputError("eigenvalues: zgeev did not converge");
    return {lam.begin(), lam.end()};
}

}  // namespace polefind

#endif  // POLEFIND_NUMERICS_EIG_HPP
