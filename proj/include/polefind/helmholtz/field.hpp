// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_HELMHOLTZ_FIELD_HPP
#define POLEFIND_HELMHOLTZ_FIELD_HPP

// Off-curve evaluation of the single-layer potential
//     u(x) = int_Gamma G_k(x, y) psi(y) ds_y
// with the same quadrature convention as the operator assembly (plain
// trapezoidal/midpoint sums; the integrand is smooth once x is off the
// curve). Points closer to the curve than roughly one node spacing are
// evaluated anyway but flagged low-accuracy.

#include <vector>

#include "polefind/helmholtz/closed_slp.hpp"
#include "polefind/helmholtz/geometry.hpp"
#include "polefind/helmholtz/open_slp.hpp"

namespace polefind::helmholtz {

struct FieldSample {
    Cplx value;
    bool low_accuracy = false;
};

inline std::vector<FieldSample> field_eval(const ClosedCurve& curve, Cplx k, const CVector& density,
                                           int n, const std::vector<Vec2>& grid) {
    if (static_cast<int>(density.size()) != n)
        throw DimensionError("field_eval: density length must equal n");
    std::vector<Vec2> pos(static_cast<std::size_t>(n));
    std::vector<double> speed(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        pos[static_cast<std::size_t>(j)] = curve.position(t);
        speed[static_cast<std::size_t>(j)] = curve.derivative(t).norm();
    }
    const double h = 2.0 * kPi / n;
    std::vector<FieldSample> out;
    out.reserve(grid.size());
    for (const Vec2& x : grid) {
        Cplx acc = 0.0;
        double min_ratio = 1e300;
        for (int j = 0; j < n; ++j) {
            const double r = (x - pos[static_cast<std::size_t>(j)]).norm();
            min_ratio = std::min(min_ratio, r / (h * speed[static_cast<std::size_t>(j)]));
            if (r == 0.0) continue;  // on-node: flagged below, skip the singular term
            const auto [j0, y0] = bessel::j0y0(k * r);
            acc += detail::kImagUnit * 0.25 * (j0 + detail::kImagUnit * y0) *
                   density[static_cast<std::size_t>(j)] * speed[static_cast<std::size_t>(j)] * h;
        }
        out.push_back({acc, min_ratio < 1.0});
    }
    return out;
}

inline std::vector<FieldSample> field_eval(const OpenArc& arc, Cplx k, const CVector& phi, int n,
                                           const std::vector<Vec2>& grid) {
    if (static_cast<int>(phi.size()) != n)
        throw DimensionError("field_eval: density length must equal n");
    std::vector<Vec2> pos(static_cast<std::size_t>(n));
    std::vector<double> speed(static_cast<std::size_t>(n));    // |r'(cos sigma_j)|
    std::vector<double> spacing(static_cast<std::size_t>(n));  // local physical node spacing
    const double h = kPi / n;
    for (int j = 0; j < n; ++j) {
        const double sigma = (2.0 * j + 1.0) * kPi / (2.0 * n);
        pos[static_cast<std::size_t>(j)] = arc.position(std::cos(sigma));
        speed[static_cast<std::size_t>(j)] = arc.derivative(std::cos(sigma)).norm();
        spacing[static_cast<std::size_t>(j)] =
            speed[static_cast<std::size_t>(j)] * std::sin(sigma) * h;
    }
    std::vector<FieldSample> out;
    out.reserve(grid.size());
    for (const Vec2& x : grid) {
        Cplx acc = 0.0;
        double min_ratio = 1e300;
        for (int j = 0; j < n; ++j) {
            const double r = (x - pos[static_cast<std::size_t>(j)]).norm();
            min_ratio =
                std::min(min_ratio, r / std::max(spacing[static_cast<std::size_t>(j)], 1e-12));
            if (r == 0.0) continue;
            const auto [j0, y0] = bessel::j0y0(k * r);
            acc += detail::kImagUnit * 0.25 * (j0 + detail::kImagUnit * y0) *
                   phi[static_cast<std::size_t>(j)] * speed[static_cast<std::size_t>(j)] * h;
        }
        out.push_back({acc, min_ratio < 1.0});
    }
    return out;
}

}  // namespace polefind::helmholtz

#endif  // POLEFIND_HELMHOLTZ_FIELD_HPP
