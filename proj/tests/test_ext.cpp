#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpq/builders.hpp"
#include "fpq/ext.hpp"
#include "fpq/loops.hpp"
#include "fpq/path_algebra.hpp"
#include "fpq/rep.hpp"
#include "util.hpp"

using namespace fpq;

namespace {

const PrimeField F5{5};

struct Setup {
    BoundQuiver bq;
    PathAlgebra pa;
    ExtContext<PrimeField> ctx;

    explicit Setup(BoundQuiver b)
        : bq(std::move(b)), pa(PathAlgebra::build(bq)), ctx(pa, F5) {}
};

/// Random iterated direct sum of simples and projectives, twisted by a
/// random change of basis; always a genuine module over the bound quiver.
Rep<PrimeField> random_module(const Setup& s, std::mt19937& rng) {
    int nv = s.bq.q.num_vertices;
    Rep<PrimeField> m = Rep<PrimeField>::zero_shape(
        s.bq, F5, std::vector<int>(nv, 0));
    int pieces = 1 + rng() % 3;
    for (int i = 0; i < pieces; ++i) {
        int v = rng() % nv;
        m = direct_sum(m, rng() % 2 ? Rep<PrimeField>::simple(s.bq, F5, v)
                                    : s.ctx.projective(v));
    }
    return fpqtest::random_twist(m, rng);
}

}  // namespace

TEST_CASE("projectives are modules and corepresent vertex dimensions") {
    std::mt19937 rng(21);
    for (auto bq : {dynkin(DynkinType::A, 3), dynkin(DynkinType::D, 4),
                    cyclic_tube(2, 2), cyclic_tube(3, 3),
                    canonical(CanonicalType::D, 4)}) {
        Setup s(std::move(bq));
        for (int v = 0; v < s.bq.q.num_vertices; ++v) {
            const auto& p = s.ctx.projective(v);
            CHECK(check_representation(p, s.bq).ok);
            CHECK(p.total_dim() == (int)s.pa.basis_from(v).size());
        }
        for (int trial = 0; trial < 4; ++trial) {
            auto m = random_module(s, rng);
            for (int v = 0; v < s.bq.q.num_vertices; ++v) {
                CHECK(hom_dim(s.ctx.projective(v), m) == m.dim[v]);
                CHECK(s.ctx.ext1_dim(s.ctx.projective(v), m) == 0);
            }
        }
    }
}

TEST_CASE("syzygy presentations are exact") {
    std::mt19937 rng(22);
    for (auto bq : {dynkin(DynkinType::A, 3), cyclic_tube(2, 2),
                    canonical(CanonicalType::D, 4)}) {
        Setup s(std::move(bq));
        for (int trial = 0; trial < 5; ++trial) {
            auto m = random_module(s, rng);
            auto pres = s.ctx.presentation(m);
            CHECK(check_representation(pres.p0, s.bq).ok);
            CHECK(check_representation(pres.omega, s.bq).ok);
            for (int v = 0; v < s.bq.q.num_vertices; ++v) {
                // surjectivity of pi and exactness at P0
                CHECK(rank(pres.pi[v]) == m.dim[v]);
                CHECK(pres.omega.dim[v] == pres.p0.dim[v] - m.dim[v]);
                CHECK((pres.pi[v] * pres.incl[v]).is_zero());
            }
            // pi and incl are module maps
            for (const Arrow& a : s.bq.q.arrows) {
                CHECK(pres.pi[a.dst] * pres.p0.arr[a.id] ==
                      m.arr[a.id] * pres.pi[a.src]);
                CHECK(pres.p0.arr[a.id] * pres.incl[a.src] ==
                      pres.incl[a.dst] * pres.omega.arr[a.id]);
            }
        }
    }
}

TEST_CASE("first extensions on the two-vertex line") {
    Setup s(dynkin(DynkinType::A, 2));
    auto s0 = Rep<PrimeField>::simple(s.bq, F5, 0);
    auto s1 = Rep<PrimeField>::simple(s.bq, F5, 1);
    // The arrow 1 -> 0 gives the unique nonsplit extension of S_1 by S_0.
    CHECK(s.ctx.ext1_dim(s1, s0) == 1);
    CHECK(s.ctx.ext1_dim(s0, s1) == 0);
    CHECK(s.ctx.ext1_dim(s0, s0) == 0);
    CHECK(s.ctx.ext1_dim(s1, s1) == 0);
    CHECK(ext1_cocycle_dim(s1, s0) == 1);
    CHECK(ext1_cocycle_dim(s0, s1) == 0);
}

TEST_CASE("self-extensions of the simple at a loop vertex count the loops") {
    // k[g]/(g^2): one loop of truncation order two.
    BoundQuiver one;
    one.q.num_vertices = 1;
    one.q.vertex_names = {"1"};
    one.q.arrows = {{0, 0, 0}};
    one.q.arrow_names = {"g"};
    Relation r;
    r.terms.push_back({1, Path::of(one.q, {0, 0})});
    one.relations.push_back(r);
    Setup s1(std::move(one));
    auto simple1 = Rep<PrimeField>::simple(s1.bq, F5, 0);
    CHECK(s1.ctx.ext1_dim(simple1, simple1) == 1);
    CHECK(ext1_cocycle_dim(simple1, simple1) == 1);

    // Two commuting loops at one vertex: a two-dimensional self-extension.
    auto base = dynkin(DynkinType::A, 2);
    auto ext = loop_extend(base, {{0, 2}}, 2);
    Setup s2(std::move(ext));
    auto sv = Rep<PrimeField>::simple(s2.bq, F5, 0);
    CHECK(s2.ctx.ext1_dim(sv, sv) == 2);
    CHECK(ext1_cocycle_dim(sv, sv) == 2);
    auto sw = Rep<PrimeField>::simple(s2.bq, F5, 1);
    CHECK(s2.ctx.ext1_dim(sw, sw) == 0);
    CHECK(s2.ctx.ext1_dim(sw, sv) == 1);  // still the arrow extension
}

TEST_CASE("extensions between neighbouring tube simples") {
    Setup s(cyclic_tube(2, 2));
    auto s1 = Rep<PrimeField>::simple(s.bq, F5, 0);
    auto s2 = Rep<PrimeField>::simple(s.bq, F5, 1);
    CHECK(s.ctx.ext1_dim(s1, s2) == 1);
    CHECK(s.ctx.ext1_dim(s2, s1) == 1);
    CHECK(s.ctx.ext1_dim(s1, s1) == 0);
    CHECK(s.ctx.ext1_dim(s2, s2) == 0);
}

TEST_CASE("the syzygy and cocycle computations agree") {
    std::mt19937 rng(31);
    for (auto bq : {dynkin(DynkinType::A, 3), dynkin(DynkinType::D, 4),
                    cyclic_tube(2, 2), cyclic_tube(3, 2),
                    canonical(CanonicalType::D, 4)}) {
        Setup s(std::move(bq));
        for (int trial = 0; trial < 6; ++trial) {
            auto m = random_module(s, rng);
            auto n = random_module(s, rng);
            CHECK(s.ctx.ext1_dim(m, n) == ext1_cocycle_dim(m, n));
        }
    }
}

TEST_CASE("hom minus ext matches the bilinear form on hereditary algebras") {
    std::mt19937 rng(41);
    for (auto bq : {dynkin(DynkinType::A, 3), dynkin(DynkinType::D, 4),
                    dynkin(DynkinType::A, 4, "><>")}) {
        Setup s(std::move(bq));
        for (int trial = 0; trial < 6; ++trial) {
            auto m = random_module(s, rng);
            auto n = random_module(s, rng);
            long long lhs = hom_dim(m, n) - s.ctx.ext1_dim(m, n);
            CHECK(lhs == euler_form(s.bq.q, m.dim, n.dim));
        }
    }
}
