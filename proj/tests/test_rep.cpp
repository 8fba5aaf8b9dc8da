#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpq/builders.hpp"
#include "fpq/rep.hpp"
#include "util.hpp"

using namespace fpq;
using fpqtest::random_twist;

namespace {

// The indecomposable [1 1] module over the arrow 1 -> 0: identity on the arrow.
Rep<PrimeField> a2_interval(const BoundQuiver& bq, PrimeField f) {
    Rep<PrimeField> m = Rep<PrimeField>::zero_shape(bq, f, {1, 1});
    m.arr[0].at(0, 0) = f.one();
    return m;
}

}  // namespace

TEST_CASE("hom dimensions on the two-vertex line") {
    auto bq = dynkin(DynkinType::A, 2);
    PrimeField f{5};
    auto s0 = Rep<PrimeField>::simple(bq, f, 0);
    auto s1 = Rep<PrimeField>::simple(bq, f, 1);
    auto p = a2_interval(bq, f);

    CHECK(hom_dim(s0, s0) == 1);
    CHECK(hom_dim(s0, s1) == 0);
    CHECK(hom_dim(s1, s0) == 0);
    CHECK(hom_dim(p, p) == 1);
    CHECK(hom_dim(p, s1) == 1);   // projection onto the top
    CHECK(hom_dim(p, s0) == 0);   // the socle is not a quotient
    CHECK(hom_dim(s0, p) == 1);   // socle inclusion
    CHECK(hom_dim(s1, p) == 0);

    CHECK(is_brick(s0));
    CHECK(is_brick(s1));
    CHECK(is_brick(p));
    CHECK_FALSE(is_brick(direct_sum(s0, s0)));
}

TEST_CASE("hom spaces return genuine module maps") {
    auto bq = dynkin(DynkinType::A, 3);
    PrimeField f{7};
    std::mt19937 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<int> dm{1 + (int)(rng() % 2), 1 + (int)(rng() % 2), (int)(rng() % 2)};
        std::vector<int> dn{(int)(rng() % 3), 1 + (int)(rng() % 2), (int)(rng() % 2)};
        auto m = Rep<PrimeField>::zero_shape(bq, f, dm);
        auto n = Rep<PrimeField>::zero_shape(bq, f, dn);
        for (const Arrow& a : bq.q.arrows) {
            m.arr[a.id] = fpqtest::random_matrix(f, m.dim[a.dst], m.dim[a.src], rng);
            n.arr[a.id] = fpqtest::random_matrix(f, n.dim[a.dst], n.dim[a.src], rng);
        }
        auto hs = hom_space(m, n);
        CHECK(hs.dim == hom_dim(m, n));
        for (const auto& maps : hs.basis)
            for (const Arrow& a : bq.q.arrows)
                CHECK(maps[a.dst] * m.arr[a.id] == n.arr[a.id] * maps[a.src]);
    }
}

TEST_CASE("hom is additive in each argument") {
    auto bq = dynkin(DynkinType::A, 2);
    PrimeField f{3};
    auto s0 = Rep<PrimeField>::simple(bq, f, 0);
    auto s1 = Rep<PrimeField>::simple(bq, f, 1);
    auto p = a2_interval(bq, f);
    for (const auto* x : {&s0, &s1, &p}) {
        CHECK(hom_dim(direct_sum(s0, s1), *x) ==
              hom_dim(s0, *x) + hom_dim(s1, *x));
        CHECK(hom_dim(*x, direct_sum(p, s0)) ==
              hom_dim(*x, p) + hom_dim(*x, s0));
    }
}

TEST_CASE("relation checking catches violations") {
    auto t22 = cyclic_tube(2, 2);
    PrimeField f{5};
    auto s = Rep<PrimeField>::simple(t22, f, 0);
    CHECK(check_representation(s, t22).ok);

    // Put identity on both arrows of the 2-cycle: the length-2 relation fails.
    auto bad = Rep<PrimeField>::zero_shape(t22, f, {1, 1});
    bad.arr[0].at(0, 0) = f.one();
    bad.arr[1].at(0, 0) = f.one();
    auto rc = check_representation(bad, t22);
    CHECK_FALSE(rc.ok);
    CHECK(rc.shape_ok);
    CHECK(rc.violated_relation >= 0);

    // Kill one arrow and the relations hold again.
    bad.arr[1].at(0, 0) = f.zero();
    CHECK(check_representation(bad, t22).ok);
}

TEST_CASE("isomorphism detection is basis independent") {
    auto bq = dynkin(DynkinType::A, 2);
    PrimeField f{5};
    auto p = a2_interval(bq, f);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto tw = random_twist(p, rng);
        CHECK(are_isomorphic(p, tw));
    }
    auto s0 = Rep<PrimeField>::simple(bq, f, 0);
    auto s1 = Rep<PrimeField>::simple(bq, f, 1);
    // Same dimension vector, different module.
    CHECK_FALSE(are_isomorphic(p, direct_sum(s0, s1)));
    CHECK_FALSE(are_isomorphic(s0, s1));
    CHECK(are_isomorphic(direct_sum(s0, s1), direct_sum(s1, s0)));
}

TEST_CASE("isomorphism with larger endomorphism algebras") {
    auto bq = dynkin(DynkinType::A, 2);
    PrimeField f{3};
    auto s0 = Rep<PrimeField>::simple(bq, f, 0);
    auto m = direct_sum(direct_sum(s0, s0), s0);  // End has dimension 9
    std::mt19937 rng(13);
    auto tw = random_twist(m, rng);
    CHECK(are_isomorphic(m, tw));
    auto s1 = Rep<PrimeField>::simple(bq, f, 1);
    CHECK_FALSE(are_isomorphic(m, direct_sum(direct_sum(s0, s0), s1)));
}
