// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_REFINE_HPP
#define POLEFIND_NEP_REFINE_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "polefind/aaa/aaa.hpp"
#include "polefind/aaa/poles.hpp"
#include "polefind/nep/region.hpp"
#include "polefind/nep/resolvent.hpp"

namespace polefind::nep {

struct SecantResult {
    Cplx k;
    std::vector<double> steps;  // |dk| per iteration; the last one is the error estimate
    bool converged = false;
    bool diverged = false;
};

/// Secant iteration on g(k) = 1/S(k) from k0 and k0 (1 + 1e-7) + 1e-9 until
/// |dk| <= tol max(1, |k|) or max_iters. A sample that hits an exactly
/// singular F(k) means k is a pole to machine precision and terminates the
/// iteration. Divergence is declared after three consecutive growing steps
/// or on leaving the guard box (10x the originating region), and feeds the
/// screening stage.
inline SecantResult secant_refine(const ScalarizedResolvent& s, Cplx k0, int max_iters = 30,
                                  double tol = 1e-13, const SearchRegion* guard = nullptr) {
    SecantResult out;
    out.k = k0;

    Cplx guard_center;
    double guard_rx = 0.0, guard_ry = 0.0;
    if (guard) {
        guard_center = 0.5 * (guard->lo + guard->hi);
        guard_rx = 10.0 * std::max(0.5 * guard->width(), 1e-3);
        guard_ry = 10.0 * std::max(0.5 * (guard->kind == RegionKind::rectangle
                                              ? guard->height()
                                              : guard->slack()),
                                   1e-3);
    }
    const auto inside_guard = [&](Cplx k) {
        if (!guard) return true;
        return std::abs(k.real() - guard_center.real()) <= guard_rx &&
               std::abs(k.imag() - guard_center.imag()) <= guard_ry;
    };
    const auto g = [&](Cplx k, bool& exact_pole) -> Cplx {
        exact_pole = false;
        try {
            const Cplx sv = s(k);
            if (sv == Cplx(0.0)) return Cplx(1e300, 0.0);
            return 1.0 / sv;
        } catch (const SingularMatrixError&) {
            exact_pole = true;
            return Cplx(0.0);
        }
    };

    Cplx ka = k0;
    Cplx kb = k0 * (1.0 + 1e-7) + Cplx(1e-9, 0.0);
    bool pole_hit = false;
    Cplx ga = g(ka, pole_hit);
    if (pole_hit) {
        out.converged = true;
        out.steps.push_back(0.0);
        return out;
    }
    Cplx gb = g(kb, pole_hit);
    if (pole_hit) {
        out.k = kb;
        out.converged = true;
        out.steps.push_back(std::abs(kb - ka));
        return out;
    }

    int growth_streak = 0;
    for (int it = 0; it < max_iters; ++it) {
        const Cplx denom = gb - ga;
        if (denom == Cplx(0.0)) {  // stagnated; cannot take another step
            out.k = kb;
            out.converged = !out.steps.empty() &&
                            out.steps.back() <= tol * std::max(1.0, std::abs(kb));
            return out;
        }
        const Cplx kn = kb - gb * (kb - ka) / denom;
        const double step = std::abs(kn - kb);
        if (!out.steps.empty() && step > out.steps.back()) {
            if (++growth_streak >= 3) {
                out.k = kn;
                out.steps.push_back(step);
                out.diverged = true;
                return out;
            }
        } else {
            growth_streak = 0;
        }
        out.steps.push_back(step);
        out.k = kn;
        if (!inside_guard(kn)) {
            out.diverged = true;
            return out;
        }
        if (step <= tol * std::max(1.0, std::abs(kn))) {
            out.converged = true;
            return out;
        }
        const Cplx gn = g(kn, pole_hit);
        if (pole_hit) {
            out.converged = true;
            return out;
        }
        ka = kb;
        ga = gb;
        kb = kn;
        gb = gn;
    }
    return out;
}

/// Localized rational refinement: samples S at n_points equispaced points on
/// the circle of the given radius about k0, fits a degree-1 barycentric
/// rational, and returns its unique pole. Returns nothing when the fit has
/// no pole within 10x the radius of k0.
inline std::optional<Cplx> local_aaa_refine(const ScalarizedResolvent& s, Cplx k0,
                                            double radius = 1e-5, int n_points = 4) {
    if (!(radius > 0.0)) throw InvalidInputError("local_aaa_refine: radius must be positive");
    if (n_points < 3) throw InvalidInputError("local_aaa_refine: need at least 3 points");

    std::vector<Cplx> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j) {
        const double t = detail::kTwoPi * j / n_points;
        pts.push_back(k0 + std::polar(radius, t));
    }
    const SampleSet set = sample_resolvent(s, pts);
    if (set.samples.size() < 3) return std::nullopt;

    const aaa::BarycentricRational r = aaa::aaa_fit(set.samples, 1e-15, 1);
    const auto prs = aaa::poles_and_residues(r);
    const aaa::PoleResidue* best = nullptr;
    for (const auto& pr : prs)
        if (!best || std::abs(pr.pole - k0) < std::abs(best->pole - k0)) best = &pr;
    if (!best || std::abs(best->pole - k0) > 10.0 * radius) return std::nullopt;
    return best->pole;
}

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_REFINE_HPP
