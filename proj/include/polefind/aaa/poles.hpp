// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_AAA_POLES_HPP
#define POLEFIND_AAA_POLES_HPP

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "polefind/aaa/aaa.hpp"
#include "polefind/numerics/complex_matrix.hpp"
#include "polefind/numerics/eig.hpp"

namespace polefind::aaa {

struct PoleResidue {
    Cplx pole;
    Cplx residue;
};

/// Poles of the barycentric form as the finite generalized eigenvalues of
/// the (m+1)-by-(m+1) arrowhead pencil
///     [ 0   w^T ]        [ 0       ]
///     [ 1  diag(z_j) ] vs [   I_m  ] ,
/// residues as n(p)/d'(p) with the denominator derivative taken
/// analytically. A single support point (constant approximant) has none.
inline std::vector<PoleResidue> poles_and_residues(const BarycentricRational& r) {
    const std::size_t m = r.order();
    if (m < 2) return {};

    ComplexMatrix e(static_cast<Index>(m + 1), static_cast<Index>(m + 1));
    ComplexMatrix b(static_cast<Index>(m + 1), static_cast<Index>(m + 1));
    for (std::size_t j = 0; j < m; ++j) {
        e(0, static_cast<Index>(j + 1)) = r.weights[j];
        e(static_cast<Index>(j + 1), 0) = 1.0;
        e(static_cast<Index>(j + 1), static_cast<Index>(j + 1)) = r.support[j];
        b(static_cast<Index>(j + 1), static_cast<Index>(j + 1)) = 1.0;
    }

    std::vector<PoleResidue> out;
    for (const Cplx p : generalized_eigenvalues(e, b)) {
        Cplx num = 0.0, dden = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const Cplx d = p - r.support[j];
            num += r.weights[j] * r.values[j] / d;
            dden -= r.weights[j] / (d * d);
        }
        out.push_back({p, num / dden});
    }
    return out;
}

enum class DiscardReason { outside_region, small_residue };

struct DiscardedPole {
    Cplx pole;
    Cplx residue;
    DiscardReason reason;
};

struct PoleFilterResult {
    std::vector<PoleResidue> kept;
    std::vector<DiscardedPole> discarded;
};

/// Keeps poles inside the region whose residue magnitude exceeds
/// residue_tol * f_scale (f_scale = max |f| over the fitted samples);
/// everything else is reported in `discarded` with its reason. This screens
/// the near-cancelling pole/zero artifacts a rational fit can produce from
/// inadequate data; the secant stage is the authoritative screen.
inline PoleFilterResult filter_spurious_poles(const std::vector<PoleResidue>& pairs,
                                              const std::function<bool(Cplx)>& inside_region,
                                              double f_scale, double residue_tol = 1e-13) {
    PoleFilterResult out;
    for (const PoleResidue& pr : pairs) {
        if (!inside_region(pr.pole)) {
            out.discarded.push_back({pr.pole, pr.residue, DiscardReason::outside_region});
        } else if (std::abs(pr.residue) <= residue_tol * f_scale) {
            out.discarded.push_back({pr.pole, pr.residue, DiscardReason::small_residue});
        } else {
            out.kept.push_back(pr);
        }
    }
    return out;
}

}  // namespace polefind::aaa

#endif  // POLEFIND_AAA_POLES_HPP
