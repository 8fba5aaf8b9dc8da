#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "fpq/linalg.hpp"
#include "fpq/matrix.hpp"
#include "fpq/quiver.hpp"

namespace fpq {

/// A point of rep(Q, I): one exact matrix per arrow, shaped
/// dim[dst] x dim[src]. Immutable after construction by convention.
template <class F>
struct Rep {
    const BoundQuiver* bq = nullptr;
    F f{};
    std::vector<int> dim;
    std::vector<Mat<F>> arr;

    static Rep zero_shape(const BoundQuiver& bq, F f, std::vector<int> d) {
        Rep m;
        m.bq = &bq;
        m.f = f;
        m.dim = std::move(d);
        if ((int)m.dim.size() != bq.q.num_vertices)
            throw std::invalid_argument("Rep: dimension vector size mismatch");
        for (const Arrow& a : bq.q.arrows)
            m.arr.push_back(Mat<F>(f, m.dim[a.dst], m.dim[a.src]));
        return m;
    }

    static Rep simple(const BoundQuiver& bq, F f, int v) {
        std::vector<int> d(bq.q.num_vertices, 0);
        d.at(v) = 1;
        return zero_shape(bq, f, std::move(d));
    }

    int total_dim() const { return std::accumulate(dim.begin(), dim.end(), 0); }

    /// M_p for a path p: product of arrow matrices in application order.
    Mat<F> path_matrix(const Path& p) const {
        if (p.seq.empty()) return Mat<F>::identity(f, dim[p.vertex]);
        Mat<F> m = arr[p.seq[0]];
        for (size_t i = 1; i < p.seq.size(); ++i) m = arr[p.seq[i]] * m;
        return m;
    }

    Mat<F> relation_matrix(const Relation& r) const {
        Mat<F> acc(f, dim[r.target(bq->q)], dim[r.source(bq->q)]);
        for (const RelTerm& t : r.terms) {
            if (t.coeff == 0) continue;
            acc = acc + path_matrix(t.path).scaled(f.from_int(t.coeff));
        }
        return acc;
    }

    /// Deterministic total encoding, used for canonical ordering and dedup.
    std::vector<long long> encoding() const {
        std::vector<long long> e;
        for (int d : dim) e.push_back(d);
        for (const auto& m : arr)
            for (const auto& x : m.a) e.push_back(encode_elem(x));
        return e;
    }

private:
    static long long encode_elem(long long x) { return x; }
    static long long encode_elem(const Rat& x) {
        // Only used for ordering; collisions are resolved by full compare
        // upstream where it matters.
        return (long long)(x.get_num().get_si() * 1000003 + x.get_den().get_si());
    }
};

struct RepCheck {
    bool ok = false;
    bool shape_ok = true;
    int violated_relation = -1;  // index into bq.relations
    std::string message;
};

template <class F>
RepCheck check_representation(const Rep<F>& m, const BoundQuiver& bq) {
    RepCheck out;
    if (m.bq != &bq && !(*m.bq == bq)) {
        out.shape_ok = false;
        out.message = "representation built over a different bound quiver";
        return out;
    }
    if ((int)m.dim.size() != bq.q.num_vertices ||
        m.arr.size() != bq.q.arrows.size()) {
        out.shape_ok = false;
        out.message = "shape mismatch";
        return out;
    }
    for (const Arrow& a : bq.q.arrows) {
        const auto& mat = m.arr[a.id];
        if (mat.rows != m.dim[a.dst] || mat.cols != m.dim[a.src]) {
            out.shape_ok = false;
            out.message = "arrow matrix shape mismatch";
            return out;
        }
    }
    for (size_t i = 0; i < bq.relations.size(); ++i) {
        if (!m.relation_matrix(bq.relations[i]).is_zero()) {
            out.violated_relation = (int)i;
            out.message = "relation does not vanish";
            return out;
        }
    }
    out.ok = true;
    return out;
}

template <class F>
struct HomSpace {
    int dim = 0;
    /// Each basis element is one vertex-map tuple (f_v)_v.
    std::vector<std::vector<Mat<F>>> basis;
};

namespace detail {

/// Coefficient matrix of the intertwiner system f_b M_alpha = N_alpha f_a,
/// unknowns flattened per vertex: f_v entry (i,j) at off[v] + i*dimM[v] + j.
template <class F>
Mat<F> hom_system(const Rep<F>& M, const Rep<F>& N) {
    const F& f = M.f;
    const Quiver& q = M.bq->q;
    std::vector<int> off(q.num_vertices + 1, 0);
    for (int v = 0; v < q.num_vertices; ++v)
        off[v + 1] = off[v] + N.dim[v] * M.dim[v];
    int unknowns = off[q.num_vertices];
    int rows = 0;
    for (const Arrow& a : q.arrows) rows += N.dim[a.dst] * M.dim[a.src];
    Mat<F> sys(f, rows, unknowns);
    int r0 = 0;
    for (const Arrow& a : q.arrows) {
        const Mat<F>& Ma = M.arr[a.id];
        const Mat<F>& Na = N.arr[a.id];
        int db = N.dim[a.dst], ca = M.dim[a.src];
        // equation (i, j): sum_k f_b(i,k) Ma(k,j) - sum_k Na(i,k) f_a(k,j) = 0
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < ca; ++j) {
                int row = r0 + i * ca + j;
                for (int k = 0; k < M.dim[a.dst]; ++k)
                    sys.at(row, off[a.dst] + i * M.dim[a.dst] + k) =
                        f.add(sys.at(row, off[a.dst] + i * M.dim[a.dst] + k),
                              Ma.at(k, j));
                for (int k = 0; k < N.dim[a.src]; ++k)
                    sys.at(row, off[a.src] + k * M.dim[a.src] + j) =
                        f.sub(sys.at(row, off[a.src] + k * M.dim[a.src] + j),
                              Na.at(i, k));
            }
        r0 += db * ca;
    }
    return sys;
}

}  // namespace detail

template <class F>
void require_compatible(const Rep<F>& M, const Rep<F>& N) {
    if (!(M.f == N.f)) throw std::invalid_argument("reps over different fields");
    if (M.bq != N.bq && !(*M.bq == *N.bq))
        throw std::invalid_argument("reps over different bound quivers");
}

template <class F>
int hom_dim(const Rep<F>& M, const Rep<F>& N) {
    require_compatible(M, N);
    auto sys = detail::hom_system(M, N);
    int unknowns = sys.cols;
    return unknowns - rank_destructive(sys);
}

template <class F>
HomSpace<F> hom_space(const Rep<F>& M, const Rep<F>& N) {
    require_compatible(M, N);
    const F& f = M.f;
    const Quiver& q = M.bq->q;
    auto sys = detail::hom_system(M, N);
    Mat<F> ker = kernel_basis(sys);
    HomSpace<F> hs;
    hs.dim = ker.cols;
    std::vector<int> off(q.num_vertices + 1, 0);
    for (int v = 0; v < q.num_vertices; ++v)
        off[v + 1] = off[v] + N.dim[v] * M.dim[v];
    for (int c = 0; c < ker.cols; ++c) {
        std::vector<Mat<F>> maps;
        for (int v = 0; v < q.num_vertices; ++v) {
            Mat<F> fv(f, N.dim[v], M.dim[v]);
            for (int i = 0; i < N.dim[v]; ++i)
                for (int j = 0; j < M.dim[v]; ++j)
                    fv.at(i, j) = ker.at(off[v] + i * M.dim[v] + j, c);
            maps.push_back(std::move(fv));
        }
        hs.basis.push_back(std::move(maps));
    }
    return hs;
}

template <class F>
bool is_brick(const Rep<F>& M) {
    return hom_dim(M, M) == 1;
}

template <class F>
Rep<F> direct_sum(const Rep<F>& M, const Rep<F>& N) {
    require_compatible(M, N);
    Rep<F> s;
    s.bq = M.bq;
    s.f = M.f;
    for (size_t v = 0; v < M.dim.size(); ++v) s.dim.push_back(M.dim[v] + N.dim[v]);
    for (size_t a = 0; a < M.arr.size(); ++a) s.arr.push_back(M.arr[a].dsum(N.arr[a]));
    return s;
}

struct IsoOptions {
    unsigned seed = 0;
    int exhaustive_hom_dim = 6;       // exhaustive search while p^h stays small
    long long exhaustive_ceiling = 1 << 20;
    int random_samples = 256;
};

namespace detail {

template <class F>
bool invertible_everywhere(const std::vector<Mat<F>>& maps) {
    for (const auto& m : maps) {
        if (m.rows != m.cols) return false;
        Mat<F> c = m;
        if (rank_destructive(c) != m.rows) return false;
    }
    return true;
}

template <class F>
std::vector<Mat<F>> combine(const HomSpace<F>& hs,
                            const std::vector<typename F::Elem>& coef, const F& f) {
    std::vector<Mat<F>> maps;
    for (size_t v = 0; v < hs.basis[0].size(); ++v) {
        Mat<F> m = hs.basis[0][v].scaled(coef[0]);
        for (size_t k = 1; k < hs.basis.size(); ++k)
            m = m + hs.basis[k][v].scaled(coef[k]);
        maps.push_back(std::move(m));
    }
    return maps;
}

}  // namespace detail

/// Decides isomorphism. Cheap invariants first, then a search for an
/// invertible element in the Hom-space span: exhaustive over F_p while the
/// space is small, seeded random sampling with an exhaustive fallback
/// otherwise. Raises when the search space exceeds the configured ceiling,
/// never returns "undecided".
inline long long ipow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

template <class F>
bool are_isomorphic(const Rep<F>& M, const Rep<F>& N, IsoOptions opt = {});

template <>
inline bool are_isomorphic<PrimeField>(const Rep<PrimeField>& M,
                                       const Rep<PrimeField>& N, IsoOptions opt) {
    require_compatible(M, N);
    if (M.dim != N.dim) return false;
    int hmn = hom_dim(M, N);
    if (hmn != hom_dim(N, M)) return false;
    if (hom_dim(M, M) != hom_dim(N, N)) return false;
    if (hmn == 0) return M.total_dim() == 0;
    const PrimeField f = M.f;
    auto hs = hom_space(M, N);
    long long space = ipow_ll(f.p, hs.dim);
    auto try_coef = [&](const std::vector<long long>& coef) {
        return detail::invertible_everywhere(detail::combine(hs, coef, f));
    };
    if (hs.dim <= opt.exhaustive_hom_dim || space <= opt.exhaustive_ceiling) {
        std::vector<long long> coef(hs.dim, 0);
        for (long long code = 1; code < space; ++code) {
            long long c = code;
            for (int k = 0; k < hs.dim; ++k) {
                coef[k] = c % f.p;
                c /= f.p;
            }
            if (try_coef(coef)) return true;
        }
        return false;
    }
    // Random phase: each sample misses an isomorphism with probability at
    // most 1 - 1/|GL| over the span; the exhaustive fallback keeps the
    // decision exact when the ceiling allows.
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<long long> d(0, f.p - 1);
    std::vector<long long> coef(hs.dim);
    for (int s = 0; s < opt.random_samples; ++s) {
        for (auto& c : coef) c = d(rng);
        if (try_coef(coef)) return true;
    }
    if (space <= 4 * opt.exhaustive_ceiling) {
        std::vector<long long> cf(hs.dim, 0);
        for (long long code = 1; code < space; ++code) {
            long long c = code;
            for (int k = 0; k < hs.dim; ++k) {
                cf[k] = c % f.p;
                c /= f.p;
            }
            if (try_coef(cf)) return true;
        }
        return false;
    }
    throw std::runtime_error("are_isomorphic: search space exceeds configured ceiling");
}

}  // namespace fpq
