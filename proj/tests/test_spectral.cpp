#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fpq/spectral.hpp"

using namespace fpq;

namespace {

NonnegIntMatrix cyclic_permutation(int n) {
    NonnegIntMatrix c(n);
    for (int i = 0; i < n; ++i) c.at(i, (i + 1) % n) = 1;
    return c;
}

FactoredPoly poly(std::vector<std::pair<double, int>> f) {
    FactoredPoly p;
    p.factors = std::move(f);
    return p;
}

}  // namespace

TEST_CASE("spectral radius on reference matrices") {
    auto swap2 = NonnegIntMatrix(std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    auto r = spectral_radius(swap2);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.method == "iterative");

    auto m = NonnegIntMatrix(std::vector<std::vector<long long>>{{2, 1}, {1, 0}});
    CHECK(spectral_radius(m).value ==
          doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-9));

    auto tri = NonnegIntMatrix(
        std::vector<std::vector<long long>>{{3, 5, 7}, {0, 1, 2}, {0, 0, 0}});
    auto rt = spectral_radius(tri);
    CHECK(rt.value == 3.0);
    CHECK(rt.method == "exact");

    for (int n = 2; n <= 6; ++n)
        CHECK(spectral_radius(cyclic_permutation(n)).value ==
              doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("iterative result matches the characteristic polynomial bisection") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + trial % 8;
        NonnegIntMatrix c(n);
        for (auto& x : c.a) x = rng() % 6;
        double tol = 1e-9;
        double v = spectral_radius(c, tol).value;
        double w = spectral_radius_charpoly(c, tol);
        CHECK(std::abs(v - w) <= 2 * tol);
        // bracketing by row sums and the diagonal
        long long lo = 1LL << 62, hi = 0, diag = 0;
        for (int i = 0; i < n; ++i) {
            long long rs = 0;
            for (int j = 0; j < n; ++j) rs += c.at(i, j);
            lo = std::min(lo, rs);
            hi = std::max(hi, rs);
            diag = std::max(diag, c.at(i, i));
        }
        CHECK(v >= (double)lo - 1e-7);
        CHECK(v <= (double)hi + 1e-7);
        CHECK(v >= (double)diag - 1e-7);
    }
}

TEST_CASE("factored-polynomial root isolation") {
    CHECK(lemma61_root(poly({{0, 1}, {2, 1}})) ==
          doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-10));
    CHECK(lemma61_root(poly({{0, 1}})) == doctest::Approx(1.0).epsilon(1e-10));
    double x = lemma61_root(poly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(x > 2.0);
    CHECK(x <= 3.0);
    CHECK_THROWS(lemma61_root(poly({{0, 1}, {0.5, 1}})));  // gap violated
}

TEST_CASE("root orderings for reference polynomial families") {
    double base = lemma61_root(poly({{0, 1}, {2, 1}}));          // x(x-2)
    double finer = lemma61_root(poly({{0, 1}, {1, 1}, {2, 1}})); // x(x-1)(x-2)
    double heavier = lemma61_root(poly({{0, 1}, {2, 2}}));       // x(x-2)^2
    CHECK(finer < base);
    CHECK(base < heavier);

    // adding (x-1) to x(x-2)^2 lowers the root but keeps it above the base
    double mixed = lemma61_root(poly({{0, 1}, {1, 1}, {2, 2}}));
    CHECK(mixed > base);

    double three = lemma61_root(poly({{0, 1}, {3, 1}}));
    double mixed3 = lemma61_root(poly({{0, 1}, {1, 2}, {3, 2}}));
    CHECK(mixed3 < three);
}

TEST_CASE("adding factors moves the root as predicted") {
    std::mt19937 rng(23);
    int checked2 = 0, checked3 = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // random valid factored polynomial with distinct integer roots
        int s = 1 + rng() % 3;
        std::vector<int> roots;
        int r = rng() % 2;
        for (int i = 0; i < s; ++i) {
            roots.push_back(r);
            r += 1 + rng() % 2;
        }
        FactoredPoly f;
        for (int root : roots) f.factors.push_back({(double)root, 1 + (int)(rng() % 3)});
        double x0 = lemma61_root(f);
        int ns = roots.back();

        // a new factor strictly below n_s lowers the root
        int m = rng() % (ns + 1);
        if (m <= ns - 1) {
            FactoredPoly g;
            bool merged = false;
            for (auto [root, mult] : f.factors) {
                if ((int)root == m) {
                    g.factors.push_back({root, mult + 1});
                    merged = true;
                } else {
                    g.factors.push_back({root, mult});
                }
            }
            if (!merged) {
                g.factors.push_back({(double)m, 1});
                std::sort(g.factors.begin(), g.factors.end());
            }
            CHECK(lemma61_root(g) < x0);
            ++checked2;
        }

        // raising the top multiplicity raises the root unless f is a pure power
        FactoredPoly h = f;
        h.factors.back().second += 1;
        double xh = lemma61_root(h);
        if (f.factors.size() == 1)
            CHECK(xh == doctest::Approx(x0).epsilon(1e-9));
        else
            CHECK(xh > x0);
        ++checked3;
    }
    CHECK(checked2 > 50);
    CHECK(checked3 == 200);
}

TEST_CASE("closed forms for the two-parameter family") {
    CHECK(thm63_case2(2) == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(thm63_case2(4) == doctest::Approx(2 + std::sqrt(5.0)).epsilon(1e-12));
    for (long long n = 1; n <= 6; ++n) {
        CHECK(thm63_case3(n, 1) == doctest::Approx(thm63_case2(n)).epsilon(1e-10));
        double prev = 0;
        for (int s = 1; s <= 4; ++s) {
            double v = thm63_case3(n, s);
            CHECK(v >= (double)n);
            CHECK(v < (double)n + 1);
            if (s > 1) CHECK(v > prev);
            prev = v;
        }
        CHECK(thm63_case2(n) >= (double)n);
        CHECK(thm63_case2(n) < (double)n + 1);
    }
    CHECK(thm63_case3(2, 2) > thm63_case2(2));
}

TEST_CASE("extension counts for commuting scalar tuples") {
    RationalField q;
    using V = std::vector<Rat>;
    CHECK(poly_ext1(q, V{0, 0}, V{0, 0}) == 2);
    CHECK(poly_ext1(q, V{1, 2}, V{1, 3}) == 0);
    CHECK(poly_ext1(q, V{Rat(1, 2), 5, -3}, V{Rat(1, 2), 5, -3}) == 3);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        int r = 1 + trial % 3;
        V lam, mu, t;
        for (int i = 0; i < r; ++i) {
            lam.push_back(Rat((long)(rng() % 7) - 3, (long)(1 + rng() % 3)));
            mu.push_back(rng() % 2 ? lam[i] : lam[i] + Rat((long)(1 + rng() % 3)));
            t.push_back(Rat((long)(rng() % 9) - 4));
        }
        int e = poly_ext1(q, lam, mu);
        CHECK((e == 0 || e == r));
        CHECK(e == (lam == mu ? r : 0));
        CHECK(e == poly_ext1(q, mu, lam));  // symmetry
        V lam_t = lam, mu_t = mu;
        for (int i = 0; i < r; ++i) {
            lam_t[i] += t[i];
            mu_t[i] += t[i];
        }
        CHECK(e == poly_ext1(q, lam_t, mu_t));  // translation invariance
    }
}

TEST_CASE("joint commutant detects bricks exactly on lines") {
    PrimeField f{2};
    auto m = [&](std::initializer_list<long long> e, int n) {
        Mat<PrimeField> x(f, n, n);
        int i = 0;
        for (long long v : e) x.a[i++] = v;
        return x;
    };
    CHECK(poly_brick_check<PrimeField>({m({1}, 1), m({0}, 1)}));
    CHECK_FALSE(poly_brick_check<PrimeField>({m({0, 0, 0, 0}, 2), m({0, 0, 0, 0}, 2)}));
    CHECK_FALSE(poly_brick_check<PrimeField>({m({0, 1, 0, 0}, 2), m({0, 0, 0, 0}, 2)}));
    CHECK_THROWS(poly_brick_check<PrimeField>(
        {m({0, 1, 0, 0}, 2), m({0, 0, 1, 0}, 2)}));  // do not commute

    // exhaustive over commuting pairs on dimensions one and two
    for (long long a = 0; a < 2; ++a)
        for (long long b = 0; b < 2; ++b)
            CHECK(poly_brick_check<PrimeField>({m({a}, 1), m({b}, 1)}));
    int pairs = 0;
    for (int ca = 0; ca < 16; ++ca)
        for (int cb = 0; cb < 16; ++cb) {
            auto A = m({ca & 1, (ca >> 1) & 1, (ca >> 2) & 1, (ca >> 3) & 1}, 2);
            auto B = m({cb & 1, (cb >> 1) & 1, (cb >> 2) & 1, (cb >> 3) & 1}, 2);
            if (!(A * B == B * A)) continue;
            ++pairs;
            CHECK_FALSE(poly_brick_check<PrimeField>({A, B}));
        }
    CHECK(pairs > 0);
}
