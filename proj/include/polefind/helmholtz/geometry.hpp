// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_HELMHOLTZ_GEOMETRY_HPP
#define POLEFIND_HELMHOLTZ_GEOMETRY_HPP

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polefind/errors.hpp"

namespace polefind::helmholtz {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Vec2 {
    double x = 0.0, y = 0.0;
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    double norm() const { return std::hypot(x, y); }
};

/// Smooth 2pi-periodic curve given by an exact parametrization and its exact
/// derivative; regular (|r'| > 0 everywhere).
class ClosedCurve {
public:
    ClosedCurve() = default;
    ClosedCurve(std::string name, std::function<Vec2(double)> pos,
                std::function<Vec2(double)> dpos)
        : name_(std::move(name)), pos_(std::move(pos)), dpos_(std::move(dpos)) {}

    const std::string& name() const { return name_; }
    Vec2 position(double t) const { return pos_(t); }
    Vec2 derivative(double t) const { return dpos_(t); }

    double length(int n = 2048) const {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += derivative(2.0 * kPi * j / n).norm();
        return s * 2.0 * kPi / n;
    }

private:
    std::string name_;
    std::function<Vec2(double)> pos_, dpos_;
};

/// Smooth open arc over t in [-1, 1] with distinct endpoints.
class OpenArc {
public:
    OpenArc() = default;
    OpenArc(std::string name, std::function<Vec2(double)> pos, std::function<Vec2(double)> dpos)
        : name_(std::move(name)), pos_(std::move(pos)), dpos_(std::move(dpos)) {}

    const std::string& name() const { return name_; }
    Vec2 position(double t) const { return pos_(t); }
    Vec2 derivative(double t) const { return dpos_(t); }

    double length(int n = 2048) const {
        // Chebyshev substitution t = cos(s) avoids endpoint issues
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double s = (2.0 * j + 1.0) * kPi / (2.0 * n);
            acc += derivative(std::cos(s)).norm() * std::sin(s);
        }
        return acc * kPi / n;
    }

private:
    std::string name_;
    std::function<Vec2(double)> pos_, dpos_;
};

inline ClosedCurve make_circle() {
    return ClosedCurve(
        "circle", [](double t) { return Vec2{std::cos(t), std::sin(t)}; },
        [](double t) {
            return Vec2{-std::sin(t), std::cos(t)};
        });
}

/// The standard kite: r(t) = (cos t + 0.65 cos 2t - 0.65, 1.5 sin t).
inline ClosedCurve make_kite() {
    return ClosedCurve(
        "kite",
        [](double t) {
            return Vec2{std::cos(t) + 0.65 * std::cos(2.0 * t) - 0.65, 1.5 * std::sin(t)};
        },
        [](double t) {
            return Vec2{-std::sin(t) - 1.3 * std::sin(2.0 * t), 1.5 * std::cos(t)};
        });
}

namespace detail {
// rocket profile: star-shaped truncated Fourier radius, elongated along y
inline constexpr double kRocketE1 = -0.28;
inline constexpr double kRocketE2 = 0.22;
inline constexpr double kRocketSx = 0.55;

inline double rocket_radius(double t) {
    return 1.0 + kRocketE1 * std::cos(t) + kRocketE2 * std::cos(2.0 * t);
}
inline double rocket_dradius(double t) {
    return -kRocketE1 * std::sin(t) - 2.0 * kRocketE2 * std::sin(2.0 * t);
}
inline Vec2 rocket_pos(double t) {
    const double r = rocket_radius(t);
    return {kRocketSx * r * std::sin(t), r * std::cos(t)};
}
inline Vec2 rocket_dpos(double t) {
    const double r = rocket_radius(t), dr = rocket_dradius(t);
    return {kRocketSx * (dr * std::sin(t) + r * std::cos(t)), dr * std::cos(t) - r * std::sin(t)};
}
}  // namespace detail

/// A rocket-shaped smooth cavity: radius 1 - 0.28 cos t + 0.22 cos 2t around
/// the origin, squeezed to 55% width. Star-shaped, hence simple; the long
/// pointed end sits at the bottom.
inline ClosedCurve make_rocket() {
    return ClosedCurve("rocket", detail::rocket_pos, detail::rocket_dpos);
}

/// Unit circle with an aperture of `aperture` radians removed, centered at
/// angle 0 (positive x-axis). The arc runs over the complement; the angular
/// position is alpha(t) = pi + (pi - aperture/2) t.
inline OpenArc make_open_circle(double aperture) {
    if (!(aperture > 0.0) || !(aperture < 2.0 * kPi))
        throw InvalidInputError("open circle: aperture must lie in (0, 2 pi)");
    const double half = kPi - 0.5 * aperture;
    return OpenArc(
        "open-circle",
        [half](double t) {
            const double a = kPi + half * t;
            return Vec2{std::cos(a), std::sin(a)};
        },
        [half](double t) {
            const double a = kPi + half * t;
            return Vec2{-half * std::sin(a), half * std::cos(a)};
        });
}

/// Rocket with an opening: `opening_fraction` of the parameter period is
/// removed, centered at the blunt end (t = 0).
inline OpenArc make_open_rocket(double opening_fraction) {
    if (!(opening_fraction > 0.0) || !(opening_fraction < 1.0))
        throw InvalidInputError("open rocket: opening fraction must lie in (0, 1)");
    const double half = kPi * (1.0 - opening_fraction);
    return OpenArc(
        "open-rocket",
        [half](double t) { return detail::rocket_pos(kPi + half * t); },
        [half](double t) {
            const Vec2 d = detail::rocket_dpos(kPi + half * t);
            return Vec2{half * d.x, half * d.y};
        });
}

inline std::vector<std::string> builtin_geometry_names() {
    return {"circle", "kite", "rocket", "open-circle", "open-rocket"};
}

}  // namespace polefind::helmholtz

#endif  // POLEFIND_HELMHOLTZ_GEOMETRY_HPP
