// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_HELMHOLTZ_CLOSED_SLP_HPP
#define POLEFIND_HELMHOLTZ_CLOSED_SLP_HPP

// Nystrom discretization of the single-layer operator
//     (F_k psi)(x(t)) = int_0^{2pi} (i/4) H1_0(k |x(t) - x(tau)|) psi(tau) |x'(tau)| dtau
// on a smooth closed curve, at n uniform nodes t_j = 2 pi j / n (n even).
// The kernel is split as M = M1(t,tau) ln(4 sin^2((t-tau)/2)) + M2(t,tau)
// with M1 = -(1/4pi) J0(k R) |x'(tau)| and the diagonal limit
// M2(t,t) = (i/4 - gamma_E/(2pi) - (1/2pi) ln((k/2)|x'(t)|)) |x'(t)|.
// The logarithmic factor is integrated with the classical product-quadrature
// weights
//     R_j(t) = -(2pi/n) sum_{m=1}^{n/2-1} cos(m (t - t_j))/m
//              -(2pi/n^2) cos((n/2)(t - t_j)),
// the smooth remainder with the trapezoidal rule; both are spectrally
// accurate for smooth curves.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/helmholtz/geometry.hpp"
#include "polefind/numerics/bessel.hpp"
#include "polefind/numerics/complex_matrix.hpp"

namespace polefind::helmholtz {

/// The Nystrom system matrix at one wavenumber. For closed curves the
/// unknowns are nodal density values psi(t_j); for open arcs they are nodal
/// values of the smooth density factor phi at the Chebyshev angles.
struct DiscretizedOperator {
    std::string geometry;
    int n = 0;
    Cplx k;
    ComplexMatrix matrix;
};

namespace detail {

/// Log-kernel quadrature weights as a function of the node difference;
/// cached per n (they depend on neither k nor the geometry).
inline const std::vector<double>& log_weights(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        const double theta = 2.0 * kPi * d / n;
        double acc = 0.0;
        for (int m = 1; m < n / 2; ++m) acc += std::cos(m * theta) / m;
        const double sign = (d % 2 == 0) ? 1.0 : -1.0;  // cos((n/2) theta_d) = (-1)^d
        w[static_cast<std::size_t>(d)] = -2.0 * kPi / n * acc - 2.0 * kPi / (n * n) * sign;
    }
    return cache.emplace(n, std::move(w)).first->second;
}

/// Same weights at an arbitrary collocation angle (off-grid evaluation).
inline std::vector<double> log_weights_at(int n, double t, const std::vector<double>& nodes) {
    std::vector<double> w(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double d = t - nodes[j];
        double acc = 0.0;
        for (int m = 1; m < n / 2; ++m) acc += std::cos(m * d) / m;
        w[j] = -2.0 * kPi / n * acc - 2.0 * kPi / (n * n) * std::cos(0.5 * n * d);
    }
    return w;
}

inline constexpr Cplx kImagUnit{0.0, 1.0};

}  // namespace detail

inline DiscretizedOperator closed_slp(const ClosedCurve& curve, Cplx k, int n) {
    if (n < 8 || n % 2 != 0) throw InvalidInputError("closed_slp: n must be even and >= 8");
    if (k == Cplx(0.0)) throw InvalidInputError("closed_slp: k must be nonzero");

    std::vector<Vec2> pos(static_cast<std::size_t>(n));
    std::vector<double> speed(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        pos[static_cast<std::size_t>(j)] = curve.position(t);
        speed[static_cast<std::size_t>(j)] = curve.derivative(t).norm();
        if (!(speed[static_cast<std::size_t>(j)] > 0.0))
            throw InvalidInputError("closed_slp: curve is not regular at a node");
    }
    const std::vector<double>& lw = detail::log_weights(n);
    const double h = 2.0 * kPi / n;

    DiscretizedOperator op{curve.name(), n, k, ComplexMatrix(n, n)};
    // c_ij = (R(|i-j|) - h L_ij) M1_ij / |x'(t_j)| + h (i/4) H0(k R_ij) is
    // symmetric; the matrix entry is c_ij |x'(t_j)|
    for (int i = 0; i < n; ++i) {
        // diagonal: log factor vanishes against the weight, analytic limit for M2
        const double sp = speed[static_cast<std::size_t>(i)];
        const Cplx m2 = (detail::kImagUnit * 0.25 - bessel::kEulerGamma / (2.0 * kPi) -
                         std::log(0.5 * k * sp) / (2.0 * kPi)) *
                        sp;
        op.matrix(i, i) = lw[0] * (-1.0 / (4.0 * kPi)) * sp + h * m2;
        for (int j = 0; j < i; ++j) {
            const double r =
                (pos[static_cast<std::size_t>(i)] - pos[static_cast<std::size_t>(j)]).norm();
            const auto [j0, y0] = bessel::j0y0(k * r);
            const Cplx h0 = j0 + detail::kImagUnit * y0;
            const double dt = 2.0 * kPi * (i - j) / n;
            const double lg = std::log(4.0 * std::sin(0.5 * dt) * std::sin(0.5 * dt));
            const Cplx c = (lw[static_cast<std::size_t>(i - j)] - h * lg) *
                               (-1.0 / (4.0 * kPi)) * j0 +
                           h * detail::kImagUnit * 0.25 * h0;
            op.matrix(i, j) = c * speed[static_cast<std::size_t>(j)];
            op.matrix(j, i) = c * speed[static_cast<std::size_t>(i)];
        }
    }
    return op;
}

/// Applies the operator to a nodal density at arbitrary collocation angles
/// (the same product quadrature, collocated off the grid). Used for boundary
/// traces of candidate eigenfunctions.
inline CVector closed_slp_apply_at(const ClosedCurve& curve, Cplx k, int n,
                                   const CVector& density, const std::vector<double>& t_eval) {
    if (static_cast<int>(density.size()) != n)
        throw DimensionError("closed_slp_apply_at: density length must equal n");
    std::vector<double> nodes(static_cast<std::size_t>(n));
    std::vector<Vec2> pos(static_cast<std::size_t>(n));
    std::vector<double> speed(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        nodes[static_cast<std::size_t>(j)] = 2.0 * kPi * j / n;
        pos[static_cast<std::size_t>(j)] = curve.position(nodes[static_cast<std::size_t>(j)]);
        speed[static_cast<std::size_t>(j)] = curve.derivative(nodes[static_cast<std::size_t>(j)]).norm();
    }
    const double h = 2.0 * kPi / n;
    CVector out;
    out.reserve(t_eval.size());
    for (const double t : t_eval) {
        const std::vector<double> lw = detail::log_weights_at(n, t, nodes);
        const Vec2 x = curve.position(t);
        Cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double r = (x - pos[static_cast<std::size_t>(j)]).norm();
            Cplx contrib;
            if (r < 1e-14) {
                const double sp = speed[static_cast<std::size_t>(j)];
                const Cplx m2 = (detail::kImagUnit * 0.25 - bessel::kEulerGamma / (2.0 * kPi) -
                                 std::log(0.5 * k * sp) / (2.0 * kPi)) *
                                sp;
                contrib = lw[static_cast<std::size_t>(j)] * (-1.0 / (4.0 * kPi)) * sp + h * m2;
            } else {
                const auto [j0, y0] = bessel::j0y0(k * r);
                const Cplx h0 = j0 + detail::kImagUnit * y0;
                const double s = 2.0 * std::sin(0.5 * (t - nodes[static_cast<std::size_t>(j)]));
                const double lg = std::log(s * s);
                contrib = ((lw[static_cast<std::size_t>(j)] - h * lg) * (-1.0 / (4.0 * kPi)) * j0 +
                           h * detail::kImagUnit * 0.25 * h0) *
                          speed[static_cast<std::size_t>(j)];
            }
            acc += contrib * density[static_cast<std::size_t>(j)];
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace polefind::helmholtz

#endif  // POLEFIND_HELMHOLTZ_CLOSED_SLP_HPP
