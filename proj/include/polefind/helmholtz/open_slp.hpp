// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_HELMHOLTZ_OPEN_SLP_HPP
#define POLEFIND_HELMHOLTZ_OPEN_SLP_HPP

// Nystrom discretization of the single-layer operator on a smooth open arc
// r(t), t in [-1, 1]. The density edge singularity is factored explicitly,
// psi(r(t)) = phi(r(t)) / sqrt(1 - t^2) with phi smooth, and the cosine
// substitution t = cos s, tau = cos sigma cancels the square root against
// the Jacobian:
//     (F_k psi)(r(cos s)) = int_0^pi G_k(s, sigma) phi(sigma) |r'(cos sigma)| dsigma.
// The kernel splits as
//     G_k = -(1/2pi) J0(k R) ln|cos s - cos sigma| + G_smooth(s, sigma),
//     ln|cos s - cos sigma| = ln 2 + ln|sin((s-sigma)/2)| + ln|sin((s+sigma)/2)|,
// with G_smooth even and 2pi-periodic in both variables and the diagonal
// limit G_smooth(s,s) = i/4 - gamma_E/(2pi) - (1/2pi) ln((k/2)|r'(cos s)|).
// Both log factors are integrated with the periodic product-quadrature
// weights on the doubled (even-extended) grid, the smooth remainder with the
// midpoint rule; unknowns are nodal values of phi at sigma_j = (2j+1)pi/(2n).

#include <string>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/helmholtz/closed_slp.hpp"
#include "polefind/helmholtz/geometry.hpp"
#include "polefind/numerics/bessel.hpp"

namespace polefind::helmholtz {

namespace detail {

/// Product-quadrature weights for the doubled grid (2n points, spacing
/// pi/n): R2(d) at angle difference d pi / n.
inline const std::vector<double>& open_log_weights(int n) { return log_weights(2 * n); }

inline double ln_abs_cos_diff(double s, double sigma) {
    return std::log(std::abs(std::cos(s) - std::cos(sigma)));
}

}  // namespace detail

inline DiscretizedOperator open_slp(const OpenArc& arc, Cplx k, int n) {
    if (n < 8) throw InvalidInputError("open_slp: n must be >= 8");
    if (k == Cplx(0.0)) throw InvalidInputError("open_slp: k must be nonzero");

    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<Vec2> pos(static_cast<std::size_t>(n));
    std::vector<double> speed(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        sigma[static_cast<std::size_t>(j)] = (2.0 * j + 1.0) * kPi / (2.0 * n);
        const double t = std::cos(sigma[static_cast<std::size_t>(j)]);
        pos[static_cast<std::size_t>(j)] = arc.position(t);
        speed[static_cast<std::size_t>(j)] = arc.derivative(t).norm();
        if (!(speed[static_cast<std::size_t>(j)] > 0.0))
            throw InvalidInputError("open_slp: arc is not regular at a node");
    }
    const std::vector<double>& lw = detail::open_log_weights(n);  // indexed mod 2n
    const double h = kPi / n;
    const double ln2_coef = std::log(2.0) / (2.0 * kPi);

    DiscretizedOperator op{arc.name(), n, k, ComplexMatrix(n, n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > i) break;  // fill (i, j <= i), mirror below
            const int dminus = i - j;                 // (sigma_i - sigma_j) / (pi/n)
            const int dplus = (i + j + 1) % (2 * n);  // (sigma_i + sigma_j) / (pi/n)
            const double wlog =
                0.5 * (lw[static_cast<std::size_t>(dminus)] + lw[static_cast<std::size_t>(dplus)]);
            Cplx c;
            if (i == j) {
                const double sp = speed[static_cast<std::size_t>(i)];
                const Cplx gs = detail::kImagUnit * 0.25 - bessel::kEulerGamma / (2.0 * kPi) -
                                std::log(0.5 * k * sp) / (2.0 * kPi);
                c = wlog * (-1.0 / (2.0 * kPi)) + h * (gs + ln2_coef);
            } else {
                const double r =
                    (pos[static_cast<std::size_t>(i)] - pos[static_cast<std::size_t>(j)]).norm();
                const auto [j0, y0] = bessel::j0y0(k * r);
                const Cplx h0 = j0 + detail::kImagUnit * y0;
                const double lg = detail::ln_abs_cos_diff(sigma[static_cast<std::size_t>(i)],
                                                          sigma[static_cast<std::size_t>(j)]);
                // G_smooth = (i/4) H0 + (1/2pi) J0 ln|cos s - cos sigma|
                const Cplx gs_part = detail::kImagUnit * 0.25 * h0 + j0 * lg / (2.0 * kPi);
                c = wlog * (-1.0 / (2.0 * kPi)) * j0 + h * (gs_part + ln2_coef * j0);
            }
            op.matrix(i, j) = c * speed[static_cast<std::size_t>(j)];
            if (i != j) op.matrix(j, i) = c * speed[static_cast<std::size_t>(i)];
        }
    }
    return op;
}

/// Off-grid application of the open-arc operator to nodal values of phi,
/// collocated at angles s in (0, pi) (points r(cos s) on the arc).
inline CVector open_slp_apply_at(const OpenArc& arc, Cplx k, int n, const CVector& phi,
                                 const std::vector<double>& s_eval) {
    if (static_cast<int>(phi.size()) != n)
        throw DimensionError("open_slp_apply_at: density length must equal n");
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<Vec2> pos(static_cast<std::size_t>(n));
    std::vector<double> speed(static_cast<std::size_t>(n));
    std::vector<double> nodes2(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        sigma[static_cast<std::size_t>(j)] = (2.0 * j + 1.0) * kPi / (2.0 * n);
        const double t = std::cos(sigma[static_cast<std::size_t>(j)]);
        pos[static_cast<std::size_t>(j)] = arc.position(t);
        speed[static_cast<std::size_t>(j)] = arc.derivative(t).norm();
    }
    for (int j = 0; j < 2 * n; ++j) nodes2[static_cast<std::size_t>(j)] = (2.0 * j + 1.0) * kPi / (2.0 * n);
    const double h = kPi / n;
    const double ln2_coef = std::log(2.0) / (2.0 * kPi);

    CVector out;
    out.reserve(s_eval.size());
    for (const double s : s_eval) {
        const std::vector<double> lw2 = detail::log_weights_at(2 * n, s, nodes2);
        const Vec2 x = arc.position(std::cos(s));
        Cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double wlog = 0.5 * (lw2[static_cast<std::size_t>(j)] +
                                       lw2[static_cast<std::size_t>(2 * n - 1 - j)]);
            const double r = (x - pos[static_cast<std::size_t>(j)]).norm();
            Cplx c;
            if (r < 1e-14) {
                const double sp = speed[static_cast<std::size_t>(j)];
                const Cplx gs = detail::kImagUnit * 0.25 - bessel::kEulerGamma / (2.0 * kPi) -
                                std::log(0.5 * k * sp) / (2.0 * kPi);
                c = wlog * (-1.0 / (2.0 * kPi)) + h * (gs + ln2_coef);
            } else {
                const auto [j0, y0] = bessel::j0y0(k * r);
                const Cplx h0 = j0 + detail::kImagUnit * y0;
                const double lg = detail::ln_abs_cos_diff(s, sigma[static_cast<std::size_t>(j)]);
                const Cplx gs_part = detail::kImagUnit * 0.25 * h0 + j0 * lg / (2.0 * kPi);
                c = wlog * (-1.0 / (2.0 * kPi)) * j0 + h * (gs_part + ln2_coef * j0);
            }
            acc += c * speed[static_cast<std::size_t>(j)] * phi[static_cast<std::size_t>(j)];
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace polefind::helmholtz

#endif  // POLEFIND_HELMHOLTZ_OPEN_SLP_HPP
