// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "polefind/aaa/aaa.hpp"
#include "polefind/aaa/poles.hpp"
#include "polefind/numerics/bessel.hpp"
#include "support/test_helpers.hpp"

using namespace polefind;
using aaa::BarycentricRational;
using aaa::SamplePoint;

namespace {

const Cplx I(0.0, 1.0);

std::vector<SamplePoint> unit_circle_samples(int n, const std::function<Cplx(Cplx)>& f,
                                             double radius = 1.0) {
    std::vector<SamplePoint> s;
    s.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * bessel::kPi * k / n;
        const Cplx z = std::polar(radius, t);
        s.push_back({z, f(z)});
    }
    return s;
}

bool always_inside(Cplx) { return true; }

}  // namespace

TEST_CASE("aaa_fit: constant data terminates at order one", "[aaa]") {
    std::vector<SamplePoint> s;
    for (int k = 0; k < 10; ++k) s.push_back({Cplx(0.1 * k, 0.0), Cplx(5.0, 0.0)});
    aaa::AaaDiagnostics diag;
    const BarycentricRational r = aaa::aaa_fit(s, 1e-12, 99, &diag);
    CHECK(r.order() == 1);
    CHECK(diag.converged);
    CHECK(aaa::evaluate(r, Cplx(17.0, 3.0)) == Cplx(5.0, 0.0));
    CHECK(aaa::poles_and_residues(r).empty());
}

TEST_CASE("aaa_fit: exact simple pole recovered", "[aaa]") {
    const auto f = [](Cplx z) { return 1.0 / (z - 0.3); };
    const auto s = unit_circle_samples(64, f);
    aaa::AaaDiagnostics diag;
    const BarycentricRational r = aaa::aaa_fit(s, 1e-12, 99, &diag);
    CHECK(diag.converged);
    double emax = 0.0;
    for (const auto& sp : s) emax = std::max(emax, std::abs(aaa::evaluate(r, sp.z) - sp.f));
    CHECK(emax <= 1e-12 * diag.f_scale);

    const auto prs = aaa::poles_and_residues(r);
    const auto filtered = aaa::filter_spurious_poles(prs, always_inside, diag.f_scale);
    REQUIRE(filtered.kept.size() == 1);
    CHECK(std::abs(filtered.kept[0].pole - 0.3) <= 1e-12);
    CHECK(std::abs(filtered.kept[0].residue - 1.0) <= 1e-11);

    // evaluation away from the data matches the target function
    CHECK(std::abs(aaa::evaluate(r, Cplx(2.0)) - 1.0 / 1.7) <= 1e-12);
}

TEST_CASE("aaa_fit: two poles from 128 unit-circle samples", "[aaa]") {
    const auto f = [](Cplx z) { return 1.0 / (z - 0.5) + 1.0 / (z + 0.5 * I); };
    const auto s = unit_circle_samples(128, f);
    aaa::AaaDiagnostics diag;
    const BarycentricRational r = aaa::aaa_fit(s, 1e-12, 99, &diag);
    const auto kept = aaa::filter_spurious_poles(aaa::poles_and_residues(r), always_inside,
                                                 diag.f_scale)
                          .kept;
    REQUIRE(kept.size() == 2);
    std::vector<Cplx> poles{kept[0].pole, kept[1].pole};
    CHECK(testing::set_match_distance(poles, {Cplx(0.5, 0.0), Cplx(0.0, -0.5)}) <= 1e-11);
}

TEST_CASE("aaa_fit: input validation", "[aaa]") {
    std::vector<SamplePoint> dup = {{Cplx(1.0), Cplx(2.0)}, {Cplx(1.0), Cplx(3.0)},
                                    {Cplx(2.0), Cplx(4.0)}};
    CHECK_THROWS_AS(aaa::aaa_fit(dup, 1e-10), InvalidInputError);
    std::vector<SamplePoint> single = {{Cplx(1.0), Cplx(2.0)}};
    CHECK_THROWS_AS(aaa::aaa_fit(single, 1e-10), InvalidInputError);
    std::vector<SamplePoint> ok = {{Cplx(1.0), Cplx(2.0)}, {Cplx(2.0), Cplx(3.0)}};
    CHECK_THROWS_AS(aaa::aaa_fit(ok, -1.0), InvalidInputError);
}

TEST_CASE("evaluate: interpolation property at support points", "[aaa]") {
    const auto f = [](Cplx z) { return std::exp(z) / (z - Cplx(0.2, 0.7)); };
    const auto s = unit_circle_samples(40, f);
    const BarycentricRational r = aaa::aaa_fit(s, 1e-13);
    for (std::size_t j = 0; j < r.order(); ++j)
        CHECK(aaa::evaluate(r, r.support[j]) == r.values[j]);
}

TEST_CASE("poles_and_residues: polynomial-plus-pole datum", "[aaa]") {
    // (z^2 - 1)/(z - 2) = z + 2 + 3/(z - 2)
    const auto f = [](Cplx z) { return (z * z - 1.0) / (z - 2.0); };
    const auto s = unit_circle_samples(41, f, 3.0);
    const BarycentricRational r = aaa::aaa_fit(s, 1e-13);
    const auto prs = aaa::poles_and_residues(r);
    const aaa::PoleResidue* main = nullptr;
    for (const auto& pr : prs)
        if (std::abs(pr.residue) > 1e-8 &&
            (!main || std::abs(pr.residue) > std::abs(main->residue)))
            main = &pr;
    REQUIRE(main != nullptr);
    CHECK(std::abs(main->pole - 2.0) <= 1e-10);
    CHECK(std::abs(main->residue - 3.0) <= 1e-9);
}

TEST_CASE("filter_spurious_poles: region and residue screening", "[aaa]") {
    std::vector<aaa::PoleResidue> pairs = {
        {Cplx(0.3, 0.0), Cplx(1.0, 0.0)},    // genuine
        {Cplx(0.9, 0.1), Cplx(1e-14, 0.0)},  // synthetic near-cancelling pair
        {Cplx(3.0, 0.0), Cplx(2.0, 0.0)},    // outside region
    };
    const auto inside = [](Cplx z) { return std::abs(z) < 1.5; };
    const auto res = aaa::filter_spurious_poles(pairs, inside, 1.0, 1e-13);
    REQUIRE(res.kept.size() == 1);
    CHECK(res.kept[0].pole == Cplx(0.3, 0.0));
    REQUIRE(res.discarded.size() == 2);
    for (const auto& d : res.discarded) {
        if (d.pole == Cplx(3.0, 0.0)) CHECK(d.reason == aaa::DiscardReason::outside_region);
        if (d.pole == Cplx(0.9, 0.1)) CHECK(d.reason == aaa::DiscardReason::small_residue);
    }
}

TEST_CASE("aaa invariants: greedy error monotonicity and weight norms", "[aaa]") {
    const std::vector<std::function<Cplx(Cplx)>> corpus = {
        [](Cplx z) { return std::exp(z); },
        [](Cplx z) { return 1.0 / (z - 1.2) + 0.5 / (z + 1.1 * I); },
        [](Cplx z) { return std::cos(2.0 * z) / (z - Cplx(0.4, 0.8)); },
    };
    for (const auto& f : corpus) {
        aaa::AaaDiagnostics diag;
        aaa::aaa_fit(unit_circle_samples(96, f), 1e-13, 99, &diag);
        for (std::size_t i = 1; i < diag.max_error_history.size(); ++i)
            CHECK(diag.max_error_history[i] <=
                  diag.max_error_history[i - 1] + 1e-13 * diag.f_scale);
        for (double wn : diag.weight_norm_history) CHECK(std::abs(wn - 1.0) <= 1e-12);
    }
}

TEST_CASE("aaa invariants: exact recovery of random rational functions", "[aaa]") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int trial = 0; trial < 5; ++trial) {
        // type (q+1, q) rational: linear polynomial plus q simple fractions
        const int q = 3;
        std::vector<Cplx> poles, res;
        for (int i = 0; i < q; ++i) {
            poles.push_back(Cplx(u(rng), u(rng)));
            res.push_back(Cplx(u(rng) + 1.0, u(rng)));
        }
        const Cplx a(u(rng), u(rng)), b(u(rng), u(rng));
        const auto f = [&](Cplx z) {
            Cplx v = a * z + b;
            for (int i = 0; i < q; ++i)
                v += res[static_cast<std::size_t>(i)] / (z - poles[static_cast<std::size_t>(i)]);
            return v;
        };
        const int nsamp = 2 * (q + 2) + 8;  // >= 2 (max(p, q) + 1)
        const auto s = unit_circle_samples(nsamp, f, 2.0);
        aaa::AaaDiagnostics diag;
        const BarycentricRational r = aaa::aaa_fit(s, 1e-13, 99, &diag);
        std::vector<Cplx> found;
        for (const auto& pr :
             aaa::filter_spurious_poles(aaa::poles_and_residues(r),
                                        [](Cplx z) { return std::abs(z) < 1.9; }, diag.f_scale,
                                        1e-10)
                 .kept)
            found.push_back(pr.pole);
        REQUIRE(testing::set_match_distance(found, poles) <= 1e-10);
    }
}
