// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_PROBLEMS_POLYEIG_HPP
#define POLEFIND_PROBLEMS_POLYEIG_HPP

#include <vector>

#include "polefind/numerics/eig.hpp"
#include "polefind/problems/matrix_polynomial.hpp"

namespace polefind::problems {

/// Ground truth for matrix polynomials: all finite eigenvalues through the
/// companion linearization pencil
///   C0 = [ 0  I  ...      ]        C1 = blockdiag(I, ..., I, A_g).
///        [ ...      0   I ]
///        [ -A_0 ... -A_{g-1} ]
/// Infinite eigenvalues (singular leading coefficient) are filtered by the
/// generalized eigensolver's (alpha, beta) test.
inline std::vector<Cplx> polyeig_oracle(const MatrixPolynomial& p) {
    p.validate();
    if (p.degree() < 1) throw InvalidInputError("polyeig_oracle: degree must be >= 1");
    const Index d = p.dimension();
    const int g = p.degree();
    const Index n = d * g;

    ComplexMatrix c0(n, n), c1(n, n);
    for (int blk = 0; blk + 1 < g; ++blk)
        for (Index i = 0; i < d; ++i) c0(blk * d + i, (blk + 1) * d + i) = 1.0;
    for (int blk = 0; blk < g; ++blk) {
        const ComplexMatrix& a = p.coefficients[static_cast<std::size_t>(blk)];
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) c0((g - 1) * d + i, blk * d + j) = -a(i, j);
    }
    for (Index i = 0; i < (g - 1) * d; ++i) c1(i, i) = 1.0;
    const ComplexMatrix& lead = p.coefficients.back();
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) c1((g - 1) * d + i, (g - 1) * d + j) = lead(i, j);

    return generalized_eigenvalues(c0, c1);
}

}  // namespace polefind::problems

#endif  // POLEFIND_PROBLEMS_POLYEIG_HPP
