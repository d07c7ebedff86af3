// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_PROBLEMS_MATRIX_POLYNOMIAL_HPP
#define POLEFIND_PROBLEMS_MATRIX_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/nep/matrix_function.hpp"
#include "polefind/numerics/complex_matrix.hpp"

namespace polefind::problems {

/// P(k) = sum_{i=0}^{degree} k^i A_i with square coefficients of equal
/// dimension and a leading coefficient that is not identically zero.
struct MatrixPolynomial {
    std::vector<ComplexMatrix> coefficients;  // A_0 .. A_degree

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Index dimension() const { return coefficients.empty() ? 0 : coefficients.front().rows(); }

    void validate() const {
        if (coefficients.empty()) throw InvalidInputError("MatrixPolynomial: no coefficients");
        const Index d = coefficients.front().rows();
        for (const ComplexMatrix& a : coefficients) {
            if (a.rows() != a.cols() || a.rows() != d)
                throw DimensionError("MatrixPolynomial: coefficients must be square, equal size");
            require_finite(a, "MatrixPolynomial");
        }
        if (coefficients.back().max_abs() == 0.0)
            throw InvalidInputError("MatrixPolynomial: leading coefficient is identically zero");
    }

    /// Horner evaluation of P(k).
    ComplexMatrix operator()(Cplx k) const {
        ComplexMatrix acc = coefficients.back();
        for (std::size_t i = coefficients.size() - 1; i-- > 0;) {
            acc *= k;
            acc += coefficients[i];
        }
        return acc;
    }
};

inline nep::MatrixFunction as_matrix_function(MatrixPolynomial p) {
    p.validate();
    const Index d = p.dimension();
    return nep::MatrixFunction(
        d, [poly = std::move(p)](Cplx k) { return poly(k); }, "entire (polynomial)");
}

}  // namespace polefind::problems

#endif  // POLEFIND_PROBLEMS_MATRIX_POLYNOMIAL_HPP
