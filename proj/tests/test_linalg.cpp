#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "liebialg/linalg.hpp"
#include "liebialg/rational.hpp"

using namespace liebialg;

TEST_CASE("rational parsing is canonical") {
    Rational q = parse_rational("2/4");
    CHECK(q == Rational(1, 2));
    CHECK(numerator(q) == 1);
    CHECK(denominator(q) == 2);
    q = parse_rational("-6/-4");
    CHECK(q == Rational(3, 2));
    CHECK(denominator(q) > 0);
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK_THROWS_AS(parse_rational("x"), bad_params);
    CHECK_THROWS_AS(parse_rational("1/0"), bad_params);
}

TEST_CASE("rref produces canonical reduced form") {
    RatMat m(3, 4);
    m(0, 0) = 2; m(0, 1) = 4; m(0, 2) = 6; m(0, 3) = 2;
    m(1, 0) = 1; m(1, 1) = 2; m(1, 2) = 3; m(1, 3) = 1;
    m(2, 0) = 0; m(2, 1) = 0; m(2, 2) = 1; m(2, 3) = 5;
    auto pivots = rref_in_place(m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 2);
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 2) == 0);
    CHECK(m(1, 2) == 1);
    CHECK(m(2, 0) == 0);
}

TEST_CASE("nullspace vectors solve the system, with the right count") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = rng.range(1, 5), cols = rng.range(1, 6);
        RatMat a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = rng.rational();
        RatMat ns = nullspace(a);
        CHECK(ns.rows() == cols - rank(a));
        for (int r = 0; r < ns.rows(); ++r) CHECK(is_zero(a.apply(ns.row(r))));
    }
}

TEST_CASE("solve_linear finds exact solutions and detects inconsistency") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = rng.range(1, 5), cols = rng.range(1, 5);
        RatMat a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = rng.rational();
        RatVec x = rng.vec(cols);
        RatVec b = a.apply(x);
        LinearSolution sol = solve_linear(a, b);
        REQUIRE(sol.consistent);
        CHECK(a.apply(sol.particular) == b);
    }
    // x + y = 0 and x + y = 1 cannot hold together
    RatMat a(2, 2);
    a(0, 0) = 1; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = 1;
    RatVec b{Rational(0), Rational(1)};
    CHECK_FALSE(solve_linear(a, b).consistent);
}

TEST_CASE("determinant and inverse") {
    RatMat m(2, 2);
    m(0, 0) = Rational(1, 2); m(0, 1) = 1;
    m(1, 0) = 3;             m(1, 1) = 4;
    CHECK(determinant(m) == Rational(-1));
    RatMat inv = inverse(m);
    CHECK(inv * m == RatMat::identity(2));

    RatMat sing(2, 2);
    sing(0, 0) = 1; sing(0, 1) = 2;
    sing(1, 0) = 2; sing(1, 1) = 4;
    CHECK(determinant(sing) == 0);
    CHECK_THROWS_AS(inverse(sing), degenerate_pairing);

    testutil::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        RatMat a(3, 3), b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a(i, j) = rng.rational();
                b(i, j) = rng.rational();
            }
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}
