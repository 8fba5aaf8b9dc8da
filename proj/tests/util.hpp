#pragma once

#include <random>
#include <vector>

#include "fpq/linalg.hpp"
#include "fpq/rep.hpp"

namespace fpqtest {

using namespace fpq;

inline Mat<PrimeField> random_matrix(const PrimeField& f, int r, int c,
                                     std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(0, f.p - 1);
    Mat<PrimeField> m(f, r, c);
    for (auto& x : m.a) x = d(rng);
    return m;
}

inline Mat<PrimeField> random_invertible(const PrimeField& f, int n,
                                         std::mt19937& rng) {
    while (true) {
        Mat<PrimeField> m = random_matrix(f, n, n, rng);
        Mat<PrimeField> c = m;
        if (rank_destructive(c) == n) return m;
    }
}

/// Conjugate M by a random per-vertex change of basis; the result is
/// isomorphic to M and still satisfies every relation.
inline Rep<PrimeField> random_twist(const Rep<PrimeField>& m, std::mt19937& rng) {
    const Quiver& q = m.bq->q;
    std::vector<Mat<PrimeField>> g, ginv;
    for (int v = 0; v < q.num_vertices; ++v) {
        Mat<PrimeField> gv = random_invertible(m.f, m.dim[v], rng);
        g.push_back(gv);
        // invert by solving gv * X = I
        ginv.push_back(solve_or_throw(gv, Mat<PrimeField>::identity(m.f, m.dim[v])));
    }
    Rep<PrimeField> out = m;
    for (const Arrow& a : q.arrows)
        out.arr[a.id] = g[a.dst] * m.arr[a.id] * ginv[a.src];
    return out;
}

}  // namespace fpqtest
