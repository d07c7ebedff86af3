// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "polefind/numerics/complex_matrix.hpp"
#include "polefind/numerics/eig.hpp"
#include "polefind/numerics/lu.hpp"
#include "support/test_helpers.hpp"

using namespace polefind;
using polefind::testing::permute_rows;
using polefind::testing::random_matrix;
using polefind::testing::random_vector;

namespace {
const Cplx I(0.0, 1.0);
}

TEST_CASE("lu_factor: scalar and permutation cases", "[numerics]") {
    ComplexMatrix a(1, 1);
    a(0, 0) = 2.0;
    const LUFactorization f = lu_factor(a);
    CHECK(f.lower()(0, 0) == Cplx(1.0));
    CHECK(f.upper()(0, 0) == Cplx(2.0));
    CHECK(f.perm == std::vector<Index>{0});

    ComplexMatrix b(2, 2);
    b(0, 1) = 1.0;
    b(1, 0) = 1.0;
    const LUFactorization g = lu_factor(b);
    CHECK(g.perm == std::vector<Index>{1, 0});
    CHECK(std::abs(g.upper()(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(g.upper()(1, 1) - 1.0) < 1e-15);
    CHECK(g.pivot_magnitudes == std::vector<double>{1.0, 1.0});
}

TEST_CASE("lu_factor: PA = LU for a random 3x3", "[numerics]") {
    std::mt19937_64 rng(31);
    const ComplexMatrix a = random_matrix(3, 3, rng);
    const LUFactorization f = lu_factor(a);
    const ComplexMatrix resid = permute_rows(f.perm, a) - f.lower() * f.upper();
    CHECK(resid.max_abs() < 1e-14);
}

TEST_CASE("lu_factor: input validation", "[numerics]") {
    std::mt19937_64 rng(5);
    CHECK_THROWS_AS(lu_factor(random_matrix(3, 4, rng)), DimensionError);
    ComplexMatrix bad(2, 2);
    bad(1, 1) = Cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(lu_factor(bad), InvalidInputError);
    ComplexMatrix inf(2, 2);
    inf(0, 0) = Cplx(1e308, 0.0);
    inf(0, 0) *= 10.0;
    CHECK_THROWS_AS(lu_factor(inf), InvalidInputError);
}

TEST_CASE("lu_factor: PA = LU reconstruction over random matrices", "[numerics]") {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> dim(1, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const Index d = dim(rng);
        const ComplexMatrix a = random_matrix(d, d, rng);
        const LUFactorization f = lu_factor(a);
        const ComplexMatrix resid = permute_rows(f.perm, a) - f.lower() * f.upper();
        REQUIRE(resid.max_abs() < 1e-12 * a.max_abs());
        // permutation is a bijection
        std::vector<Index> p = f.perm;
        std::sort(p.begin(), p.end());
        for (Index i = 0; i < d; ++i) REQUIRE(p[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("lu_solve: identity and diagonal systems", "[numerics]") {
    const LUFactorization f = lu_factor(ComplexMatrix::identity(3));
    const CVector b = {Cplx(1, 2), Cplx(-3, 0), Cplx(0, 5)};
    CHECK(lu_solve(f, b) == b);

    ComplexMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0 * I;
    const CVector rhs = {Cplx(2.0), 4.0 * I};
    const CVector x = lu_solve(lu_factor(d), rhs);
    CHECK(std::abs(x[0] - 1.0) < 1e-15);
    CHECK(std::abs(x[1] - 1.0) < 1e-15);
}

TEST_CASE("lu_solve: recovers a constructed solution", "[numerics]") {
    std::mt19937_64 rng(77);
    const ComplexMatrix a = random_matrix(5, 5, rng);
    const CVector x0 = random_vector(5, rng);
    const CVector b = a.apply(x0);
    const CVector x = lu_solve(lu_factor(a), b);
    double err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, std::abs(x[i] - x0[i]));
    CHECK(err < 1e-12);
}

TEST_CASE("lu_solve: exactly singular factorization throws", "[numerics]") {
    ComplexMatrix s(2, 2);
    s(0, 0) = 1.0;  // second row/column zero
    const LUFactorization f = lu_factor(s);
    CHECK(f.exactly_singular());
    CHECK_THROWS_AS(lu_solve(f, CVector{Cplx(1.0), Cplx(1.0)}), SingularMatrixError);
}

TEST_CASE("nullspace_from_lu: diagonal and rank-1 cases", "[numerics]") {
    ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    const auto ns = nullspace_from_lu(lu_factor(d));
    REQUIRE(ns.size() == 1);
    CHECK(std::abs(ns[0][0]) < 1e-15);
    CHECK(std::abs(std::abs(ns[0][1]) - 1.0) < 1e-15);

    ComplexMatrix r(2, 2);
    r(0, 0) = 1.0;
    r(0, 1) = 2.0;
    r(1, 0) = 2.0;
    r(1, 1) = 4.0;
    const auto ns2 = nullspace_from_lu(lu_factor(r));
    REQUIRE(ns2.size() == 1);
    // null vector proportional to (-2, 1)
    const Cplx ratio = ns2[0][0] / ns2[0][1];
    CHECK(std::abs(ratio - Cplx(-2.0)) < 1e-12);

    // full-rank input: no near-zero pivots, empty result
    std::mt19937_64 rng(11);
    CHECK(nullspace_from_lu(lu_factor(random_matrix(4, 4, rng))).empty());
}

TEST_CASE("nullspace_from_lu: constructed 2-dimensional nullspace", "[numerics]") {
    // A = B * P with P projecting out coordinates 1 and 3
    std::mt19937_64 rng(13);
    const ComplexMatrix b = random_matrix(4, 4, rng);
    ComplexMatrix p(4, 4);
    p(0, 0) = 1.0;
    p(2, 2) = 1.0;
    const ComplexMatrix a = b * p;
    const auto ns = nullspace_from_lu(lu_factor(a), 1e-10);
    REQUIRE(ns.size() == 2);
    const double anorm = a.max_abs();
    for (const CVector& v : ns) {
        const CVector av = a.apply(v);
        CHECK(norm2(av) <= 1e-11 * anorm);
        CHECK(std::abs(norm2(v) - 1.0) < 1e-14);
    }
    // linear independence: Gram matrix of the two vectors is nonsingular
    const Cplx g01 = dot(ns[0], ns[1]);
    CHECK(std::abs(g01) < 1.0 - 1e-8);
}

TEST_CASE("nullspace_from_lu: residual screen drops non-null candidates", "[numerics]") {
    // U = [[0,1],[0,0]] has two zero pivots but a one-dimensional nullspace.
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;
    const auto ns = nullspace_from_lu(lu_factor(a));
    REQUIRE(ns.size() == 1);
    CHECK(std::abs(std::abs(ns[0][0]) - 1.0) < 1e-15);
}

TEST_CASE("min_singular_vector: diagonal, degenerate, and random optimality", "[numerics]") {
    ComplexMatrix d(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    const auto [w, s] = min_singular_vector(d);
    CHECK(std::abs(s - 1.0) < 1e-14);
    CHECK(std::abs(w[0]) < 1e-14);
    CHECK(std::abs(w[1] - 1.0) < 1e-14);

    const auto [wz, sz] = min_singular_vector(ComplexMatrix(3, 2));
    CHECK(sz == 0.0);
    CHECK(std::abs(norm2(wz) - 1.0) < 1e-14);

    std::mt19937_64 rng(99);
    const ComplexMatrix a = random_matrix(8, 3, rng);
    const auto [wa, sa] = min_singular_vector(a);
    const double awn = norm2(a.apply(wa));
    CHECK(std::abs(awn - sa) < 1e-12);
    for (int t = 0; t < 1000; ++t) {
        CVector v = random_vector(3, rng);
        normalize(v);
        REQUIRE(awn * awn <= norm2(a.apply(v)) * norm2(a.apply(v)) + 1e-12);
    }

    CHECK_THROWS_AS(min_singular_vector(random_matrix(2, 5, rng)), DimensionError);
}

TEST_CASE("generalized_eigenvalues: pencils with finite and infinite parts", "[numerics]") {
    ComplexMatrix e(2, 2), b(2, 2);
    e(0, 0) = 2.0;
    e(1, 1) = 6.0;
    b(0, 0) = 1.0;
    b(1, 1) = 1.0;
    auto lam = generalized_eigenvalues(e, b);
    std::sort(lam.begin(), lam.end(), [](Cplx x, Cplx y) { return x.real() < y.real(); });
    REQUIRE(lam.size() == 2);
    CHECK(std::abs(lam[0] - 2.0) < 1e-13);
    CHECK(std::abs(lam[1] - 6.0) < 1e-13);

    ComplexMatrix e2 = ComplexMatrix::identity(2);
    ComplexMatrix b2(2, 2);
    b2(0, 0) = 1.0;  // second eigenvalue infinite
    const auto lam2 = generalized_eigenvalues(e2, b2);
    REQUIRE(lam2.size() == 1);
    CHECK(std::abs(lam2[0] - 1.0) < 1e-13);

    // companion pencil of p(lambda) = lambda^2 - 3 lambda + 2
    ComplexMatrix c(2, 2);
    c(0, 1) = 1.0;
    c(1, 0) = -2.0;
    c(1, 1) = 3.0;
    auto roots = generalized_eigenvalues(c, ComplexMatrix::identity(2));
    std::sort(roots.begin(), roots.end(), [](Cplx x, Cplx y) { return x.real() < y.real(); });
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - 1.0) < 1e-12);
    CHECK(std::abs(roots[1] - 2.0) < 1e-12);

    CHECK_THROWS_AS(generalized_eigenvalues(ComplexMatrix(2, 2), ComplexMatrix(3, 3)),
                    DimensionError);
}

TEST_CASE("ComplexMatrix: construction guards and arithmetic", "[numerics]") {
    CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
    const ComplexMatrix id = ComplexMatrix::identity(3);
    const ComplexMatrix two = 2.0 * id;
    CHECK((two - id).max_abs() == 1.0);
    CHECK_THROWS_AS(id * ComplexMatrix(2, 2), DimensionError);
}
