// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_REGION_HPP
#define POLEFIND_NEP_REGION_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/numerics/complex_matrix.hpp"

namespace polefind::nep {

enum class RegionKind { rectangle, interval };

/// Search region for the pole hunt: an axis-aligned rectangle in the complex
/// plane, or a real interval [a, b]. `samples` is the boundary budget: points
/// per side for rectangles (the spec of the adaptive scheme samples the
/// rectangle boundary), total points for intervals. Poles count as lying on
/// an interval when |Im k| is at most the slack, which defaults to
/// 1e-2 (b - a).
struct SearchRegion {
    RegionKind kind = RegionKind::interval;
    Cplx lo, hi;  // rectangle corners; intervals use the real parts
    int samples = 100;
    double interval_slack = -1.0;  // < 0: use the default

    static SearchRegion rectangle(Cplx corner_a, Cplx corner_b, int samples_per_side) {
        SearchRegion r;
        r.kind = RegionKind::rectangle;
        r.lo = Cplx(std::min(corner_a.real(), corner_b.real()),
                    std::min(corner_a.imag(), corner_b.imag()));
        r.hi = Cplx(std::max(corner_a.real(), corner_b.real()),
                    std::max(corner_a.imag(), corner_b.imag()));
        r.samples = samples_per_side;
        if (!(r.lo.real() < r.hi.real()) || !(r.lo.imag() < r.hi.imag()))
            throw InvalidInputError("SearchRegion: rectangle must have positive width and height");
        return r;
    }

    static SearchRegion interval(double a, double b, int total_samples) {
        if (!(a < b)) throw InvalidInputError("SearchRegion: interval must be nondegenerate");
        SearchRegion r;
        r.kind = RegionKind::interval;
        r.lo = Cplx(a, 0.0);
        r.hi = Cplx(b, 0.0);
        r.samples = total_samples;
        return r;
    }

    double width() const { return hi.real() - lo.real(); }
    double height() const { return kind == RegionKind::rectangle ? hi.imag() - lo.imag() : 0.0; }
    double diameter() const { return std::hypot(width(), height()); }

    double slack() const {
        if (kind != RegionKind::interval) return 0.0;
        return interval_slack >= 0.0 ? interval_slack : 1e-2 * width();
    }

    /// Closed containment with an optional absolute inflation margin.
    bool contains(Cplx k, double margin = 0.0) const {
        if (kind == RegionKind::rectangle)
            return k.real() >= lo.real() - margin && k.real() <= hi.real() + margin &&
                   k.imag() >= lo.imag() - margin && k.imag() <= hi.imag() + margin;
        return k.real() >= lo.real() - margin && k.real() <= hi.real() + margin &&
               std::abs(k.imag()) <= slack() + margin;
    }

    /// Equispaced sampling points: each rectangle side carries `samples`
    /// points (corners counted once), intervals carry `samples` points
    /// including both endpoints.
    std::vector<Cplx> boundary_points() const {
        std::vector<Cplx> pts;
        if (kind == RegionKind::interval) {
            const int n = std::max(2, samples);
            pts.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                const double t = static_cast<double>(j) / (n - 1);
                pts.emplace_back(lo.real() + t * (hi.real() - lo.real()), 0.0);
            }
            return pts;
        }
        const int n = std::max(2, samples);
        pts.reserve(static_cast<std::size_t>(4 * n));
        const Cplx c00 = lo, c10 = Cplx(hi.real(), lo.imag());
        const Cplx c11 = hi, c01 = Cplx(lo.real(), hi.imag());
        const auto side = [&](Cplx a, Cplx b) {
            for (int j = 0; j < n; ++j) {
                const double t = static_cast<double>(j) / n;
                pts.emplace_back(a + t * (b - a));
            }
        };
        side(c00, c10);
        side(c10, c11);
        side(c11, c01);
        side(c01, c00);
        return pts;
    }
};

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_REGION_HPP
