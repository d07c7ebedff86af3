// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_HELMHOLTZ_HELMHOLTZ_NEP_HPP
#define POLEFIND_HELMHOLTZ_HELMHOLTZ_NEP_HPP

#include <algorithm>
#include <cmath>

#include "polefind/helmholtz/closed_slp.hpp"
#include "polefind/helmholtz/geometry.hpp"
#include "polefind/helmholtz/open_slp.hpp"
#include "polefind/nep/matrix_function.hpp"

namespace polefind::helmholtz {

enum class ProblemKind { interior, exterior, open_arc };

/// Wraps the single-layer operator as a nonlinear eigenvalue problem: the
/// sought values k are the poles of its resolvent. The operator itself is
/// identical for interior and exterior problems; interior eigenvalues are
/// real poles, exterior and open-arc resonances lie in the lower half-plane.
inline nep::MatrixFunction make_nep(const ClosedCurve& curve, ProblemKind kind, int n) {
    if (kind == ProblemKind::open_arc)
        throw InvalidInputError("make_nep: closed curves take interior/exterior kinds");
    const char* domain = (kind == ProblemKind::interior)
                             ? "resolvent analytic for Im k > 0; real poles"
                             : "resolvent analytic for Im k > 0; poles in Im k < 0";
    return nep::MatrixFunction(
        n, [curve, n](Cplx k) { return closed_slp(curve, k, n).matrix; }, domain);
}

inline nep::MatrixFunction make_nep(const OpenArc& arc, int n) {
    return nep::MatrixFunction(
        n, [arc, n](Cplx k) { return open_slp(arc, k, n).matrix; },
        "resolvent analytic for Im k > 0; poles in Im k < 0");
}

/// Discretization size for a maximum wavenumber magnitude: at least
/// `points_per_wavelength` nodes per wavelength along the curve, even, and
/// at least min_n.
inline int suggested_n(double curve_length, double kmax, int min_n = 64,
                       double points_per_wavelength = 16.0) {
    const double waves = curve_length * kmax / (2.0 * kPi);
    int n = static_cast<int>(std::ceil(points_per_wavelength * waves));
    n = std::max(n, min_n);
    if (n % 2) ++n;
    return n;
}

}  // namespace polefind::helmholtz

#endif  // POLEFIND_HELMHOLTZ_HELMHOLTZ_NEP_HPP
