// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NUMERICS_LAPACK_HPP
#define POLEFIND_NUMERICS_LAPACK_HPP

// LAPACKE glue. Included exactly once from the numerics headers so the
// complex-type configuration is consistent everywhere.

#include <complex>

#ifndef lapack_complex_float
#define lapack_complex_float std::complex<float>
#endif
#ifndef lapack_complex_double
#define lapack_complex_double std::complex<double>
#endif
#include <lapacke.h>

#endif  // POLEFIND_NUMERICS_LAPACK_HPP
