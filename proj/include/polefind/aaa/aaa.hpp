// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_AAA_AAA_HPP
#define POLEFIND_AAA_AAA_HPP

// Greedy construction of barycentric rational approximants from scattered
// samples. Following the classic greedy scheme: the first support point is
// the sample whose value lies farthest from the mean of all values; at each
// step the weights solve a unit-norm least-squares problem on the remaining
// samples through the smallest singular vector of the Loewner matrix, and
// the next support point is the remaining sample with the largest residual.
// Iteration stops once the maximum residual drops to rel_tol relative to
// max|f| over the sample set ("relative to the maximum of the sampled
// values" is read as max of |f(z)|; see README).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "polefind/errors.hpp"
#include "polefind/numerics/complex_matrix.hpp"
#include "polefind/numerics/eig.hpp"

namespace polefind::aaa {

using polefind::Cplx;

struct SamplePoint {
    Cplx z;
    Cplx f;
};

/// r(z) = sum_j w_j f_j / (z - z_j)  /  sum_j w_j / (z - z_j).
/// Support points are pairwise distinct and the weights have unit Euclidean
/// norm.
struct BarycentricRational {
    std::vector<Cplx> support;
    std::vector<Cplx> values;
    std::vector<Cplx> weights;

    std::size_t order() const { return support.size(); }
};

struct AaaDiagnostics {
    std::vector<double> max_error_history;  // per accepted support size m
    std::vector<double> weight_norm_history;
    double f_scale = 0.0;                   // max |f| over the samples
    bool converged = false;
};

/// Evaluates the barycentric form; when z lands on a support point (within
/// 1e-14 relative) the interpolated value f_j is returned exactly.
inline Cplx evaluate(const BarycentricRational& r, Cplx z) {
    Cplx num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < r.support.size(); ++j) {
        const Cplx d = z - r.support[j];
        if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(r.support[j]))) return r.values[j];
        const Cplx c = r.weights[j] / d;
        num += c * r.values[j];
        den += c;
    }
    return num / den;
}

inline BarycentricRational aaa_fit(const std::vector<SamplePoint>& samples, double rel_tol,
                                   int max_degree = 99, AaaDiagnostics* diag = nullptr) {
    const std::size_t n = samples.size();
    if (n < 2) throw InvalidInputError("aaa_fit: need at least 2 samples");
    if (!(rel_tol > 0.0)) throw InvalidInputError("aaa_fit: rel_tol must be positive");
    for (const SamplePoint& s : samples) {
        if (!std::isfinite(s.z.real()) || !std::isfinite(s.z.imag()) ||
            !std::isfinite(s.f.real()) || !std::isfinite(s.f.imag()))
            throw InvalidInputError("aaa_fit: non-finite sample");
    }
    {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const Cplx &za = samples[a].z, &zb = samples[b].z;
            return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
        });
        for (std::size_t i = 1; i < n; ++i)
            if (samples[idx[i]].z == samples[idx[i - 1]].z)
                throw InvalidInputError("aaa_fit: duplicate sample locations");
    }

    Cplx mean = 0.0;
    double fmax = 0.0;
    for (const SamplePoint& s : samples) {
        mean += s.f;
        fmax = std::max(fmax, std::abs(s.f));
    }
    mean /= static_cast<double>(n);
    if (diag) {
        *diag = AaaDiagnostics{};
        diag->f_scale = fmax;
    }

    std::vector<bool> is_support(n, false);
    std::vector<std::size_t> support_idx;
    std::size_t first = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(samples[i].f - mean) > std::abs(samples[first].f - mean)) first = i;
    support_idx.push_back(first);
    is_support[first] = true;

    BarycentricRational r;
    const std::size_t m_cap = std::min<std::size_t>(n, static_cast<std::size_t>(max_degree) + 1);
    bool converged = false;

    while (true) {
        const std::size_t m = support_idx.size();
        std::vector<std::size_t> rest;
        rest.reserve(n - m);
        for (std::size_t i = 0; i < n; ++i)
            if (!is_support[i]) rest.push_back(i);

        r.support.assign(m, 0.0);
        r.values.assign(m, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            r.support[j] = samples[support_idx[j]].z;
            r.values[j] = samples[support_idx[j]].f;
        }

        if (rest.empty()) {
            // interpolates every sample; weights keep the last solve (or the
            // trivial one for a single support point)
            if (r.weights.size() != m) r.weights.assign(m, 1.0 / std::sqrt(double(m)));
            converged = true;
            break;
        }

        // Loewner least-squares rows: f(z)/(z - z_j) - f_j/(z - z_j)
        ComplexMatrix loewner(static_cast<Index>(rest.size()), static_cast<Index>(m));
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const SamplePoint& s = samples[rest[i]];
            for (std::size_t j = 0; j < m; ++j)
                loewner(static_cast<Index>(i), static_cast<Index>(j)) =
                    (s.f - r.values[j]) / (s.z - r.support[j]);
        }
        auto [w, sigma] = min_singular_vector(loewner);
        (void)sigma;
        r.weights = std::move(w);

        double err_max = 0.0;
        std::size_t arg_max = rest[0];
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const SamplePoint& s = samples[rest[i]];
            const double e = std::abs(s.f - evaluate(r, s.z));
            if (e > err_max) {
                err_max = e;
                arg_max = rest[i];
            }
        }
        if (diag) {
            diag->max_error_history.push_back(err_max);
            diag->weight_norm_history.push_back(norm2(r.weights));
        }

        if (err_max <= rel_tol * fmax) {
            converged = true;
            break;
        }
        if (m >= m_cap) break;
        support_idx.push_back(arg_max);
        is_support[arg_max] = true;
    }

    if (diag) diag->converged = converged;
    return r;
}

}  // namespace polefind::aaa

#endif  // POLEFIND_AAA_AAA_HPP
