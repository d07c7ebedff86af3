// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_SOLVER_HPP
#define POLEFIND_NEP_SOLVER_HPP

// The pole hunt. basic_search samples the scalarized resolvent along the
// region boundary (or interval), fits a rational approximant, and returns
// its filtered poles. adaptive_search bisects the region dyadically in each
// dimension and accepts a subregion once the pole count it finds agrees with
// the count its parent attributed to it; accepted poles then go through
// secant refinement and screening. The adaptive recursion returns the union
// over all subregions (the per-child returns of the recursive scheme are
// accumulated, which is the reading consistent with exhaustive searches).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polefind/aaa/aaa.hpp"
#include "polefind/aaa/poles.hpp"
#include "polefind/nep/records.hpp"
#include "polefind/nep/refine.hpp"
#include "polefind/nep/region.hpp"
#include "polefind/nep/resolvent.hpp"

namespace polefind::nep {

struct SolverOptions {
    double rel_tol = 1e-9;      // AAA termination, relative to max |S|
    int max_degree = 99;
    double residue_tol = 1e-13;  // first-pass residue screen, relative
    int max_depth = 12;
    int secant_max_iters = 30;
    double secant_tol = 1e-13;
    double screen_ratio = 1e-6;    // |1/S| acceptance vs. the sample median
    double screen_inflate = 0.05;  // inflation of the accepting subregion, x diameter
    double dedup_factor = 10.0;    // merge radius in units of the error estimate
    int threads = 1;
    bool compute_nullvectors = false;
    double nullvector_pivot_tol = 1e-10;
};

struct PoleEstimate {
    Cplx value;
    Cplx residue;
};

struct BasicSearchResult {
    std::vector<PoleEstimate> poles;  // inside the closed region, residue-screened
    bool aaa_converged = false;
    std::vector<aaa::SamplePoint> samples;
    std::vector<Cplx> skipped_points;
    std::vector<aaa::DiscardedPole> discarded;
};

struct LeafReport {
    SearchRegion region;
    std::vector<int> path;
    int accepted_count = 0;
    bool count_stable = true;
};

struct AdaptiveDiagnostics {
    std::vector<LeafReport> leaves;
    std::size_t total_samples = 0;
    std::size_t reused_samples = 0;
};

namespace detail {

inline BasicSearchResult search_from_samples(SampleSet set, const SearchRegion& region,
                                             const SolverOptions& opt) {
    BasicSearchResult out;
    out.samples = std::move(set.samples);
    out.skipped_points = std::move(set.skipped);
    if (out.samples.size() < 2) return out;

    aaa::AaaDiagnostics diag;
    const aaa::BarycentricRational r =
        aaa::aaa_fit(out.samples, opt.rel_tol, opt.max_degree, &diag);
    out.aaa_converged = diag.converged;

    const auto inside = [&region](Cplx z) { return region.contains(z); };
    auto filtered = aaa::filter_spurious_poles(aaa::poles_and_residues(r), inside, diag.f_scale,
                                               opt.residue_tol);
    out.discarded = std::move(filtered.discarded);
    for (const auto& pr : filtered.kept) out.poles.push_back({pr.pole, pr.residue});
    std::sort(out.poles.begin(), out.poles.end(), [](const PoleEstimate& a, const PoleEstimate& b) {
        return a.value.real() != b.value.real() ? a.value.real() < b.value.real()
                                                : a.value.imag() < b.value.imag();
    });
    return out;
}

/// Subregion of the root box with dyadic rational corners, kept as exact
/// integers so that geometrically coincident sample points of different
/// subdivision levels evaluate to bitwise-identical doubles (and hit the
/// sample cache).
struct LatticeBox {
    std::int64_t xa = 0, xb = 1, ya = 0, yb = 1;
    int depth = 0;
};

struct SampleCache {
    std::unordered_map<KeyBits, std::optional<Cplx>, KeyBitsHash> map;
    std::size_t hits = 0;
    std::size_t total = 0;
};

class AdaptiveDriver {
public:
    AdaptiveDriver(const ScalarizedResolvent& s, const SearchRegion& root,
                   const SolverOptions& opt)
        : s_(s), root_(root), opt_(opt) {}

    struct Accepted {
        PoleEstimate pole;
        std::vector<int> path;
        SearchRegion leaf;
        std::shared_ptr<BasicSearchResult> leaf_result;
        bool count_stable = true;
    };

    std::vector<Accepted> run(AdaptiveDiagnostics* diag) {
        const LatticeBox top;
        auto top_result = std::make_shared<BasicSearchResult>(search_box(top));
        std::vector<PoleEstimate> top_poles = top_result->poles;
        recurse(top, top_poles, {}, 0);
        if (diag) {
            diag->leaves = leaves_;
            diag->total_samples = cache_.total;
            diag->reused_samples = cache_.hits;
        }
        return std::move(accepted_);
    }

    SearchRegion region_of(const LatticeBox& b) const {
        const double den = std::ldexp(1.0, b.depth);
        const double x0 = frac(b.xa, den), x1 = frac(b.xb, den);
        if (root_.kind == RegionKind::interval) {
            SearchRegion r = SearchRegion::interval(lerp(root_.lo.real(), root_.hi.real(), x0),
                                                    lerp(root_.lo.real(), root_.hi.real(), x1),
                                                    root_.samples);
            r.interval_slack = root_.slack();  // keep the root's absolute slack
            return r;
        }
        const double y0 = frac(b.ya, den), y1 = frac(b.yb, den);
        return SearchRegion::rectangle(
            Cplx(lerp(root_.lo.real(), root_.hi.real(), x0),
                 lerp(root_.lo.imag(), root_.hi.imag(), y0)),
            Cplx(lerp(root_.lo.real(), root_.hi.real(), x1),
                 lerp(root_.lo.imag(), root_.hi.imag(), y1)),
            root_.samples);
    }

private:
    static double frac(std::int64_t num, double den) { return static_cast<double>(num) / den; }
    static double lerp(double a, double b, double t) { return a + t * (b - a); }

    Cplx lattice_point(std::int64_t num_x, std::int64_t num_y, std::int64_t den) const {
        const double tx = static_cast<double>(num_x) / static_cast<double>(den);
        const double re = lerp(root_.lo.real(), root_.hi.real(), tx);
        if (root_.kind == RegionKind::interval) return {re, 0.0};
        const double ty = static_cast<double>(num_y) / static_cast<double>(den);
        return {re, lerp(root_.lo.imag(), root_.hi.imag(), ty)};
    }

    std::vector<Cplx> boundary_points(const LatticeBox& b) const {
        std::vector<Cplx> pts;
        const std::int64_t scale = std::int64_t{1} << b.depth;
        if (root_.kind == RegionKind::interval) {
            const int n = std::max(2, root_.samples);
            const std::int64_t den = scale * (n - 1);
            for (int j = 0; j < n; ++j)
                pts.push_back(lattice_point(b.xa * (n - 1) + j * (b.xb - b.xa), 0, den));
            return pts;
        }
        const int n = std::max(2, root_.samples);
        const std::int64_t den = scale * n;
        const auto side = [&](std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
            for (int j = 0; j < n; ++j)
                pts.push_back(lattice_point(x0 * n + j * (x1 - x0), y0 * n + j * (y1 - y0), den));
        };
        side(b.xa, b.ya, b.xb, b.ya);
        side(b.xb, b.ya, b.xb, b.yb);
        side(b.xb, b.yb, b.xa, b.yb);
        side(b.xa, b.yb, b.xa, b.ya);
        return pts;
    }

    BasicSearchResult search_box(const LatticeBox& b) {
        const std::vector<Cplx> pts = boundary_points(b);
        SampleSet set;
        std::vector<Cplx> missing;
        std::vector<std::size_t> missing_at;
        std::vector<std::optional<Cplx>> values(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto it = cache_.map.find(key_of(pts[i]));
            if (it != cache_.map.end()) {
                values[i] = it->second;
                ++cache_.hits;
            } else {
                missing.push_back(pts[i]);
                missing_at.push_back(i);
            }
        }
        cache_.total += pts.size();
        if (!missing.empty()) {
            const SampleSet fresh = sample_resolvent(s_, missing, opt_.threads);
            std::size_t si = 0;
            for (std::size_t m = 0; m < missing.size(); ++m) {
                std::optional<Cplx> v;
                if (si < fresh.samples.size() &&
                    key_of(fresh.samples[si].z) == key_of(missing[m]))
                    v = fresh.samples[si++].f;
                cache_.map[key_of(missing[m])] = v;
                values[missing_at[m]] = v;
            }
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (values[i].has_value())
                set.samples.push_back({pts[i], *values[i]});
            else
                set.skipped.push_back(pts[i]);
        }
        return search_from_samples(std::move(set), region_of(b), opt_);
    }

    enum class Split { x_only, y_only, both };

    Split split_kind(const LatticeBox& b) const {
        if (root_.kind == RegionKind::interval) return Split::x_only;
        const SearchRegion r = region_of(b);
        const double w = r.width(), h = r.height();
        // thin regions are split along the long axis only
        if (w > 8.0 * h) return Split::x_only;
        if (h > 8.0 * w) return Split::y_only;
        return Split::both;
    }

    std::vector<LatticeBox> children_of(const LatticeBox& b, Split split) const {
        const std::int64_t xa = 2 * b.xa, xb = 2 * b.xb, xm = b.xa + b.xb;
        const std::int64_t ya = 2 * b.ya, yb = 2 * b.yb, ym = b.ya + b.yb;
        const int d = b.depth + 1;
        switch (split) {
            case Split::x_only:
                return {{xa, xm, ya, yb, d}, {xm, xb, ya, yb, d}};
            case Split::y_only:
                return {{xa, xb, ya, ym, d}, {xa, xb, ym, yb, d}};
            case Split::both:
                return {{xa, xm, ya, ym, d},
                        {xm, xb, ya, ym, d},
                        {xa, xm, ym, yb, d},
                        {xm, xb, ym, yb, d}};
        }
        return {};
    }

    /// Deterministic child attribution: strictly-less-than goes to the low
    /// child, at-or-above the midline to the high child.
    int attributed_child(Cplx k, const LatticeBox& parent, Split split) const {
        const double den = std::ldexp(1.0, parent.depth + 1);
        const double mx =
            lerp(root_.lo.real(), root_.hi.real(), frac(parent.xa + parent.xb, den));
        const int ix = (k.real() < mx) ? 0 : 1;
        if (split == Split::x_only) return ix;
        const double my =
            lerp(root_.lo.imag(), root_.hi.imag(), frac(parent.ya + parent.yb, den));
        const int iy = (k.imag() < my) ? 0 : 1;
        if (split == Split::y_only) return iy;
        return ix + 2 * iy;
    }

    void recurse(const LatticeBox& box, const std::vector<PoleEstimate>& parent_poles,
                 std::vector<int> path, int depth) {
        const Split split = split_kind(box);
        const std::vector<LatticeBox> kids = children_of(box, split);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const int child_idx = static_cast<int>(i);
            int n_parent = 0;
            for (const PoleEstimate& p : parent_poles)
                if (attributed_child(p.value, box, split) == child_idx) ++n_parent;

            auto child_result = std::make_shared<BasicSearchResult>(search_box(kids[i]));
            std::vector<PoleEstimate> own;
            for (const PoleEstimate& p : child_result->poles)
                if (attributed_child(p.value, box, split) == child_idx) own.push_back(p);

            std::vector<int> child_path = path;
            child_path.push_back(child_idx);

            const bool agree =
                (static_cast<int>(own.size()) == n_parent) && child_result->aaa_converged;
            if (agree) {
                for (const PoleEstimate& p : own)
                    accepted_.push_back(
                        {p, child_path, region_of(kids[i]), child_result, true});
                leaves_.push_back({region_of(kids[i]), child_path,
                                   static_cast<int>(own.size()), true});
            } else if (depth + 1 >= opt_.max_depth) {
                // depth cap: emit the best-known candidates, flagged unconverged
                std::vector<PoleEstimate> candidates = own;
                for (const PoleEstimate& p : parent_poles) {
                    if (attributed_child(p.value, box, split) != child_idx) continue;
                    bool dup = false;
                    for (const PoleEstimate& q : candidates)
                        if (std::abs(p.value - q.value) <=
                            1e-9 * std::max(1.0, region_of(kids[i]).diameter()))
                            dup = true;
                    if (!dup) candidates.push_back(p);
                }
                for (const PoleEstimate& p : candidates)
                    accepted_.push_back(
                        {p, child_path, region_of(kids[i]), child_result, false});
                leaves_.push_back({region_of(kids[i]), child_path,
                                   static_cast<int>(candidates.size()), false});
            } else {
                recurse(kids[i], own, child_path, depth + 1);
            }
        }
    }

    const ScalarizedResolvent& s_;
    SearchRegion root_;
    SolverOptions opt_;
    SampleCache cache_;
    std::vector<Accepted> accepted_;
    std::vector<LeafReport> leaves_;
};

inline double median_abs_inverse(const std::vector<aaa::SamplePoint>& samples) {
    std::vector<double> inv;
    inv.reserve(samples.size());
    for (const auto& sp : samples) {
        const double a = std::abs(sp.f);
        inv.push_back(a > 0.0 ? 1.0 / a : 1e300);
    }
    if (inv.empty()) return 0.0;
    const std::size_t mid = inv.size() / 2;
    std::nth_element(inv.begin(), inv.begin() + static_cast<std::ptrdiff_t>(mid), inv.end());
    return inv[mid];
}

}  // namespace detail

/// Algorithm 1: sample S on the region boundary (or interval), fit a
/// rational approximant, return its poles inside the closed region after
/// residue filtering. aaa_converged = false means the fit hit max_degree
/// before reaching rel_tol; downstream treats the pole list as best-effort.
inline BasicSearchResult basic_search(const ScalarizedResolvent& s, const SearchRegion& region,
                                      const SolverOptions& opt = {}) {
    if (region.samples < 8) throw InvalidInputError("basic_search: sampling budget must be >= 8");
    SampleSet set = sample_resolvent(s, region.boundary_points(), opt.threads);
    return detail::search_from_samples(std::move(set), region, opt);
}

/// Secant-refines and classifies records in place. A record is confirmed iff
/// the secant converged, the refined value lies in the (slightly inflated)
/// region, and |1/S| at the refined value is below screen_ratio times the
/// median of |1/S| over the region's samples. Values that land in the
/// inflation ring are confirmed with the out_of_region flag set.
inline void screen(std::vector<EigenvalueRecord>& records, const ScalarizedResolvent& s,
                   const SearchRegion& region, const std::vector<aaa::SamplePoint>& samples,
                   const SolverOptions& opt = {}) {
    const double med = detail::median_abs_inverse(samples);
    for (EigenvalueRecord& rec : records) {
        const SecantResult sr =
            secant_refine(s, rec.value, opt.secant_max_iters, opt.secant_tol, &region);
        rec.value = sr.k;
        rec.secant_steps = sr.steps;
        rec.error_estimate = sr.steps.empty() ? 0.0 : sr.steps.back();
        if (sr.diverged) {
            rec.status = RecordStatus::spurious;
            continue;
        }
        if (!sr.converged) {
            rec.status = RecordStatus::unconverged;
            continue;
        }
        const double margin = opt.screen_inflate * std::max(region.diameter(), 1e-12);
        if (!region.contains(sr.k, margin)) {
            rec.status = RecordStatus::spurious;
            continue;
        }
        rec.out_of_region = !region.contains(sr.k);
        double inv_s;
        try {
            const Cplx sv = s(sr.k);
            inv_s = (sv == Cplx(0.0)) ? 1e300 : 1.0 / std::abs(sv);
        } catch (const SingularMatrixError&) {
            inv_s = 0.0;  // exactly singular: k is a pole to machine precision
        }
        rec.status = (inv_s < opt.screen_ratio * med) ? RecordStatus::confirmed
                                                      : RecordStatus::spurious;
    }
}

/// Nullspace of F at a (refined) eigenvalue via the pivoted-elimination
/// procedure. An empty result at the stated tolerance usually means k needs
/// further refinement; `diagnostic` says so when provided.
inline std::vector<CVector> eigenvectors(const MatrixFunction& f, Cplx k,
                                         double pivot_tol = 1e-10,
                                         std::string* diagnostic = nullptr) {
    const LUFactorization lu = lu_factor(f(k));
    std::vector<CVector> ns = nullspace_from_lu(lu, pivot_tol);
    if (ns.empty() && diagnostic)
        *diagnostic = "no pivot fell below tolerance " + std::to_string(pivot_tol) +
                      "; refine k further or raise the tolerance";
    return ns;
}

/// Algorithm 2: adaptive dyadic subdivision driven by pole-count agreement,
/// followed by secant refinement, screening, and de-duplication. Records
/// from subregions that never reached count agreement within max_depth keep
/// unconverged status.
inline std::vector<EigenvalueRecord> adaptive_search(const ScalarizedResolvent& s,
                                                     const SearchRegion& region,
                                                     const SolverOptions& opt = {},
                                                     AdaptiveDiagnostics* diag = nullptr) {
    if (region.samples < 8)
        throw InvalidInputError("adaptive_search: sampling budget must be >= 8");
    detail::AdaptiveDriver driver(s, region, opt);
    std::vector<detail::AdaptiveDriver::Accepted> accepted = driver.run(diag);

    std::vector<EigenvalueRecord> records;
    records.reserve(accepted.size());
    for (const auto& a : accepted) {
        EigenvalueRecord rec;
        rec.value = a.pole.value;
        rec.residue = a.pole.residue;
        rec.region_path = a.path;
        rec.seed = s.seed();
        std::vector<EigenvalueRecord> one{std::move(rec)};
        screen(one, s, a.leaf, a.leaf_result->samples, opt);
        if (!a.count_stable) one.front().status = RecordStatus::unconverged;
        records.push_back(std::move(one.front()));
    }

    // de-duplicate: records merge when they agree within 10x the error estimate
    std::vector<EigenvalueRecord> unique;
    for (EigenvalueRecord& rec : records) {
        bool merged = false;
        for (EigenvalueRecord& u : unique) {
            const double tol = opt.dedup_factor * std::max(rec.error_estimate, u.error_estimate);
            if (std::abs(rec.value - u.value) <= tol) {
                const bool take_new =
                    (rec.status == RecordStatus::confirmed &&
                     u.status != RecordStatus::confirmed) ||
                    (rec.status == u.status && rec.error_estimate < u.error_estimate);
                if (take_new) u = rec;
                merged = true;
                break;
            }
        }
        if (!merged) unique.push_back(std::move(rec));
    }

    if (opt.compute_nullvectors) {
        for (EigenvalueRecord& rec : unique) {
            if (rec.status != RecordStatus::confirmed) continue;
            const auto lu = s.factorization_at(rec.value);
            rec.nullvectors = nullspace_from_lu(*lu, opt.nullvector_pivot_tol);
        }
    }
    std::sort(unique.begin(), unique.end(),
              [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
                  return a.value.real() != b.value.real() ? a.value.real() < b.value.real()
                                                          : a.value.imag() < b.value.imag();
              });
    return unique;
}

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_SOLVER_HPP
