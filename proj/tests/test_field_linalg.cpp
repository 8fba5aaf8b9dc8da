#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpq/field.hpp"
#include "fpq/linalg.hpp"
#include "fpq/matrix.hpp"
#include "util.hpp"

using namespace fpq;
using fpqtest::random_matrix;

TEST_CASE("prime field arithmetic is exact") {
    for (long long p : {2, 3, 5, 7, 101}) {
        PrimeField f{p};
        for (long long a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.add(a, f.neg(a)) == 0);
        }
        if (p != 2) CHECK(f.from_rat(Rat(1, 2)) == f.div(f.one(), f.from_int(2)));
        CHECK(f.from_int(-1) == p - 1);
    }
    PrimeField f2{2};
    CHECK_THROWS_AS(f2.from_rat(Rat(1, 2)), std::domain_error);
}

TEST_CASE("rational field round trips") {
    RationalField f;
    Rat a(3, 7), b(-2, 5);
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, b) == Rat(1, 35));
    CHECK(f.from_rat(a) == a);
}

TEST_CASE("rref yields a canonical form and correct rank") {
    PrimeField f{5};
    auto id = Mat<PrimeField>::identity(f, 4);
    CHECK(rank(id) == 4);
    CHECK(rref(id) == id);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
        auto m = random_matrix(f, r, c, rng);
        auto m2 = rref(m);
        CHECK(rref(m2) == m2);  // idempotent
        CHECK(rank(m) == rank(m2));
        auto ker = kernel_basis(m);
        CHECK(ker.cols == c - rank(m));  // rank-nullity
        if (ker.cols > 0) CHECK((m * ker).is_zero());
    }
}

TEST_CASE("solve returns a genuine solution or detects inconsistency") {
    PrimeField f{7};
    std::mt19937 rng(11);
    int solved = 0, inconsistent = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        auto a = random_matrix(f, r, c, rng);
        auto b = random_matrix(f, r, 1, rng);
        auto x = solve(a, b);
        if (x) {
            CHECK(a * *x == b);
            ++solved;
        } else {
            // b must lie outside the column space
            CHECK(rank(a.hcat(b)) == rank(a) + 1);
            ++inconsistent;
        }
    }
    CHECK(solved > 0);
    CHECK(inconsistent > 0);
}

TEST_CASE("rank behaves over the rationals with fractional entries") {
    RationalField f;
    Mat<RationalField> m(f, 2, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(0, 2) = Rat(1);
    m.at(1, 0) = Rat(3, 2);
    m.at(1, 1) = Rat(1);
    m.at(1, 2) = Rat(3);
    CHECK(rank(m) == 1);  // second row is 3x the first
    auto ker = kernel_basis(m);
    CHECK(ker.cols == 2);
    CHECK((m * ker).is_zero());
}

TEST_CASE("empty shapes are legal everywhere") {
    PrimeField f{3};
    Mat<PrimeField> e(f, 0, 3), e2(f, 3, 0);
    CHECK(rank(e) == 0);
    CHECK(rank(e2) == 0);
    CHECK(kernel_basis(e).cols == 3);
    CHECK(kernel_basis(e2).cols == 0);
    CHECK((e2 * e).rows == 3);
}
