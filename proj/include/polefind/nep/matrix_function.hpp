// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_MATRIX_FUNCTION_HPP
#define POLEFIND_NEP_MATRIX_FUNCTION_HPP

#include <functional>
#include <string>
#include <utility>

#include "polefind/errors.hpp"
#include "polefind/numerics/complex_matrix.hpp"

namespace polefind::nep {

/// A nonlinear eigenvalue problem: a map k -> F(k) into square complex
/// matrices of fixed dimension. Eigenvalues are the k with F(k) w = 0 for
/// some nonzero w. The evaluator must be deterministic and safe to call
/// concurrently from several threads.
class MatrixFunction {
public:
    MatrixFunction() = default;
    MatrixFunction(Index dimension, std::function<ComplexMatrix(Cplx)> evaluator,
                   std::string analyticity_domain = {})
        : dim_(dimension),
          eval_(std::move(evaluator)),
          analyticity_(std::move(analyticity_domain)) {
        if (dim_ < 1) throw DimensionError("MatrixFunction: dimension must be >= 1");
    }

    Index dimension() const { return dim_; }
    const std::string& analyticity_domain() const { return analyticity_; }

    ComplexMatrix operator()(Cplx k) const {
        ComplexMatrix m = eval_(k);
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionError("MatrixFunction: evaluator returned wrong dimensions");
        return m;
    }

private:
    Index dim_ = 0;
    std::function<ComplexMatrix(Cplx)> eval_;
    std::string analyticity_;
};

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_MATRIX_FUNCTION_HPP
