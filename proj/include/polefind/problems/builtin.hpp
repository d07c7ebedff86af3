// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_PROBLEMS_BUILTIN_HPP
#define POLEFIND_PROBLEMS_BUILTIN_HPP

#include <array>

#include "polefind/problems/matrix_polynomial.hpp"

namespace polefind::problems {

/// The 64x64 quartic "butterfly" benchmark: a T-even matrix polynomial whose
/// 256 eigenvalues form a butterfly-shaped set inside the square of side 4
/// centered at the origin. Coefficients are Kronecker combinations
///     A_i = c_{2i} kron(I, B_i) + c_{2i+1} kron(B_i, I)
/// where B_i is the symmetric tridiagonal (1,4,1)/6 for even i and the
/// skew tridiagonal (-1,0,1)/2 for odd i (both linear combinations of the
/// identity and nilpotent Jordan blocks), with the coefficient vector
///     c = (0.6, 1.3, 1.3, 0.1, 0.1, 1.2, 1.0, 1.0, 1.2, 1.0),
/// the default parameter vector documented in the README. A0, A2, A4 come
/// out symmetric and A1, A3 skew-symmetric, which makes the spectrum
/// symmetric under both k -> -k and k -> conj(k).
inline MatrixPolynomial butterfly() {
    constexpr int n = 8;
    constexpr std::array<double, 10> c = {0.6, 1.3, 1.3, 0.1, 0.1, 1.2, 1.0, 1.0, 1.2, 1.0};

    ComplexMatrix sym(n, n), skew(n, n);
    for (int i = 0; i < n; ++i) {
        sym(i, i) = 4.0 / 6.0;
        if (i + 1 < n) {
            sym(i, i + 1) = 1.0 / 6.0;
            sym(i + 1, i) = 1.0 / 6.0;
            skew(i, i + 1) = 0.5;
            skew(i + 1, i) = -0.5;
        }
    }

    const auto kron = [n](const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix out(n * n, n * n);
        for (int ia = 0; ia < n; ++ia)
            for (int ja = 0; ja < n; ++ja) {
                const Cplx f = a(ia, ja);
                if (f == 0.0) continue;
                for (int ib = 0; ib < n; ++ib)
                    for (int jb = 0; jb < n; ++jb)
                        out(ia * n + ib, ja * n + jb) = f * b(ib, jb);
            }
        return out;
    };
    const ComplexMatrix eye = ComplexMatrix::identity(n);

    MatrixPolynomial p;
    for (int i = 0; i <= 4; ++i) {
        const ComplexMatrix& block = (i % 2 == 0) ? sym : skew;
        ComplexMatrix a = kron(eye, block);
        a *= c[static_cast<std::size_t>(2 * i)];
        ComplexMatrix b = kron(block, eye);
        b *= c[static_cast<std::size_t>(2 * i + 1)];
        a += b;
        p.coefficients.push_back(std::move(a));
    }
    p.validate();
    return p;
}

}  // namespace polefind::problems

#endif  // POLEFIND_PROBLEMS_BUILTIN_HPP
