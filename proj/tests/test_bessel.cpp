// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "polefind/numerics/bessel.hpp"

using namespace polefind;
using Cplx = std::complex<double>;

namespace {

struct BesselRef {
    double re, im;
    Cplx j0, y0, j1, y1;
};
struct BesselRefN {
    int n;
    double x;
    Cplx jn, yn;
};
#include "support/bessel_reference.inc"
#include "support/bessel_reference_n.inc"

}  // namespace

TEST_CASE("bessel: trivial values at the origin", "[bessel]") {
    CHECK(bessel::j0(Cplx(0.0)) == Cplx(1.0));
    CHECK(bessel::j1(Cplx(0.0)) == Cplx(0.0));
    CHECK(bessel::jn(4, Cplx(0.0)) == Cplx(0.0));
    CHECK_THROWS_AS(bessel::y0(Cplx(0.0)), SingularArgumentError);
    CHECK_THROWS_AS(bessel::y1(Cplx(0.0)), SingularArgumentError);
    CHECK_THROWS_AS(bessel::yn(3, Cplx(0.0)), SingularArgumentError);
}

TEST_CASE("bessel: frozen reference table, orders 0 and 1", "[bessel]") {
    for (const BesselRef& r : kBesselRefs) {
        const Cplx z(r.re, r.im);
        // references are exact to ~1e-25; the scale factor keeps the bound
        // absolute on the real axis and relative for large complex values
        const double scale = std::max(1.0, std::abs(r.y0));
        INFO("z = " << r.re << " + " << r.im << "i");
        CHECK(std::abs(bessel::j0(z) - r.j0) <= 1e-13 * scale);
        CHECK(std::abs(bessel::y0(z) - r.y0) <= 1e-13 * scale);
        CHECK(std::abs(bessel::j1(z) - r.j1) <= 1e-13 * scale);
        CHECK(std::abs(bessel::y1(z) - r.y1) <= 1e-13 * scale);
    }
}

TEST_CASE("bessel: frozen reference table, higher orders", "[bessel]") {
    for (const BesselRefN& r : kBesselRefN) {
        const Cplx z(r.x, 0.0);
        INFO("n = " << r.n << " x = " << r.x);
        const double yscale = std::max(1.0, std::abs(r.yn));
        CHECK(std::abs(bessel::jn(r.n, z) - r.jn) <= 1e-13);
        CHECK(std::abs(bessel::yn(r.n, z) - r.yn) <= 1e-12 * yscale);
        const Cplx h = bessel::hankel1(r.n, z);
        CHECK(std::abs(h - (r.jn + Cplx(0, 1) * r.yn)) <= 2e-12 * yscale);
    }
}

TEST_CASE("bessel: first J0 zero to 1e-12", "[bessel]") {
    // 2.404825557695773 was confirmed by bisecting the power series on [2,3]
    const double j0zero = 2.404825557695773;
    CHECK(std::abs(bessel::j0(Cplx(j0zero)).real()) < 1e-12);
}

TEST_CASE("bessel: Y0 log-singularity structure near zero", "[bessel]") {
    // Y0(x) - (2/pi) ln(x/2) J0(x) stays bounded as x -> 0+
    double prev = 0.0;
    for (double x : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const Cplx z(x, 0.0);
        const double v =
            std::abs(bessel::y0(z) - (2.0 / bessel::kPi) * std::log(x / 2.0) * bessel::j0(z));
        CHECK(v < 1.0);
        if (prev != 0.0) CHECK(std::abs(v - prev) < 0.5);
        prev = v;
    }
}

TEST_CASE("bessel: derivative identity J0' = -J1 by centered differences", "[bessel]") {
    const double h = 1e-6;
    for (double x : {0.7, 3.3, 7.9, 12.4, 19.6, 44.0, 151.0}) {
        const double fd =
            (bessel::j0(Cplx(x + h)).real() - bessel::j0(Cplx(x - h)).real()) / (2.0 * h);
        CHECK(std::abs(fd + bessel::j1(Cplx(x)).real()) < 1e-8);
    }
}

TEST_CASE("bessel: Wronskian J0 Y0' - J0' Y0 = 2/(pi x)", "[bessel]") {
    for (double x : {0.4, 1.7, 5.0, 8.4, 11.2, 16.5, 21.0, 83.0, 197.0}) {
        const Cplx z(x, 0.0);
        // J0' = -J1, Y0' = -Y1
        const Cplx w = bessel::j0(z) * (-bessel::y1(z)) - (-bessel::j1(z)) * bessel::y0(z);
        CHECK(std::abs(w - 2.0 / (bessel::kPi * x)) < 1e-10);
    }
}

TEST_CASE("bessel: recurrence consistency for Jn across regimes", "[bessel]") {
    // J_{n-1}(z) + J_{n+1}(z) = (2n/z) J_n(z)
    for (const Cplx z : {Cplx(3.0, 0.5), Cplx(12.0, -2.0), Cplx(25.0, 1.0)}) {
        for (int n : {1, 3, 7}) {
            const Cplx lhs = bessel::jn(n - 1, z) + bessel::jn(n + 1, z);
            const Cplx rhs = 2.0 * static_cast<double>(n) / z * bessel::jn(n, z);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("bessel: enum dispatch entry point", "[bessel]") {
    const Cplx z(1.5, 0.0);
    CHECK(bessel::eval(bessel::Kind::J0, z) == bessel::j0(z));
    CHECK(bessel::eval(bessel::Kind::Y0, z) == bessel::y0(z));
    CHECK(bessel::eval(bessel::Kind::J1, z) == bessel::j1(z));
    CHECK(bessel::eval(bessel::Kind::Y1, z) == bessel::y1(z));
    CHECK(bessel::eval(bessel::Kind::Jn, z, 5) == bessel::jn(5, z));
}
