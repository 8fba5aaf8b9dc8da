#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "fpq/linalg.hpp"
#include "fpq/path_algebra.hpp"
#include "fpq/rep.hpp"

namespace fpq {

/// Projective presentation P0 ->> M with syzygy Omega = ker(P0 -> M).
template <class F>
struct Presentation {
    Rep<F> p0;
    std::vector<Mat<F>> pi;    // per vertex, dim M_v x dim P0_v, surjective
    Rep<F> omega;
    std::vector<Mat<F>> incl;  // per vertex, dim P0_v x dim Omega_v, injective
};

/// Shared machinery for Ext computations over a fixed quotient algebra:
/// caches the indecomposable projectives P(v) as representations over F.
template <class F>
class ExtContext {
public:
    ExtContext(const PathAlgebra& pa, F f) : pa_(&pa), f_(f) {
        const BoundQuiver& bq = pa.bq();
        const Quiver& q = bq.q;
        int nv = q.num_vertices;
        for (int v = 0; v < nv; ++v) {
            std::vector<int> idx = pa.basis_from(v);
            // Local coordinates: basis paths from v grouped by target vertex.
            std::vector<std::vector<int>> by_tgt(nv);
            std::map<int, std::pair<int, int>> local;  // global -> (tgt, pos)
            for (int g : idx) {
                int w = pa.basis()[g].target(q);
                local[g] = {w, (int)by_tgt[w].size()};
                by_tgt[w].push_back(g);
            }
            std::vector<int> d(nv);
            for (int w = 0; w < nv; ++w) d[w] = (int)by_tgt[w].size();
            Rep<F> p = Rep<F>::zero_shape(bq, f, d);
            for (const Arrow& a : q.arrows) {
                Mat<F>& mat = p.arr[a.id];
                for (int j = 0; j < (int)by_tgt[a.src].size(); ++j) {
                    Path ext = pa.basis()[by_tgt[a.src][j]];
                    ext.seq.push_back(a.id);
                    for (auto& [g, coef] : pa.normal_form(ext)) {
                        auto [w, pos] = local.at(g);
                        if (w != a.dst)
                            throw std::logic_error("projective: target drift");
                        mat.at(pos, j) = f.add(mat.at(pos, j), f.from_rat(coef));
                    }
                }
            }
            proj_.push_back(std::move(p));
            gen_coord_.push_back(local.at(pa.basis_index(Path::trivial(v))).second);
        }
    }

    const PathAlgebra& algebra() const { return *pa_; }
    const F& field() const { return f_; }
    const Rep<F>& projective(int v) const { return proj_.at(v); }
    /// Coordinate of the trivial path e_v inside P(v)_v.
    int generator_coordinate(int v) const { return gen_coord_.at(v); }

    /// Dimension vector of top(M) = M / rad(M), with rad M = sum of arrow
    /// images, together with chosen coordinate lifts of a top basis.
    struct Top {
        std::vector<int> dim;
        /// One generator per top basis element: (vertex, vector in M_vertex).
        std::vector<std::pair<int, std::vector<typename F::Elem>>> generators;
    };

    Top top(const Rep<F>& m) const {
        const Quiver& q = m.bq->q;
        Top t;
        t.dim.assign(q.num_vertices, 0);
        for (int v = 0; v < q.num_vertices; ++v) {
            // Span of the radical at v, then coordinate vectors completing it.
            std::vector<Mat<F>> cols;
            for (const Arrow& a : q.arrows)
                if (a.dst == v && m.arr[a.id].cols > 0) cols.push_back(m.arr[a.id]);
            Mat<F> span(f_, m.dim[v], 0);
            for (auto& c : cols) span = span.hcat(c);
            int base_rank = rank(span);
            for (int j = 0; j < m.dim[v]; ++j) {
                Mat<F> e(f_, m.dim[v], 1);
                e.at(j, 0) = f_.one();
                Mat<F> trial = span.hcat(e);
                if (rank(trial) > base_rank) {
                    span = std::move(trial);
                    ++base_rank;
                    std::vector<typename F::Elem> vec(m.dim[v], f_.zero());
                    vec[j] = f_.one();
                    t.generators.push_back({v, std::move(vec)});
                    ++t.dim[v];
                }
            }
        }
        return t;
    }

    /// Projective cover presentation: P0 = direct sum of P(v) over the top
    /// generators, pi sends the class of a basis path p in the (v, m)
    /// summand to M_p * m, Omega its kernel with the induced action.
    Presentation<F> presentation(const Rep<F>& m) const {
        const BoundQuiver& bq = pa_->bq();
        const Quiver& q = bq.q;
        Top t = top(m);

        Rep<F> p0 = Rep<F>::zero_shape(bq, f_, std::vector<int>(q.num_vertices, 0));
        bool first = true;
        for (auto& [v, vec] : t.generators) {
            (void)vec;
            p0 = first ? proj_[v] : direct_sum(p0, proj_[v]);
            first = false;
        }
        if (t.generators.empty())
            p0 = Rep<F>::zero_shape(bq, f_, std::vector<int>(q.num_vertices, 0));

        // pi, built summand by summand in the same order as the direct sum.
        std::vector<Mat<F>> pi;
        for (int w = 0; w < q.num_vertices; ++w)
            pi.push_back(Mat<F>(f_, m.dim[w], p0.dim[w]));
        std::vector<int> col_off(q.num_vertices, 0);
        for (auto& [v, vec] : t.generators) {
            const Rep<F>& pv = proj_[v];
            // Column layout of P(v)_w mirrors basis_from(v) filtered by target.
            std::vector<int> pos(q.num_vertices, 0);
            for (int g : pa_->basis_from(v)) {
                const Path& p = pa_->basis()[g];
                int w = p.target(q);
                // image M_p * vec
                Mat<F> col(f_, m.dim[v], 1);
                for (int i = 0; i < m.dim[v]; ++i) col.at(i, 0) = vec[i];
                Mat<F> img = m.path_matrix(p) * col;
                for (int i = 0; i < m.dim[w]; ++i)
                    pi[w].at(i, col_off[w] + pos[w]) = img.at(i, 0);
                ++pos[w];
            }
            for (int w = 0; w < q.num_vertices; ++w) col_off[w] += pv.dim[w];
        }

        // Omega = ker(pi), vertex-wise, with the action transported along the
        // inclusions: incl_b * X_alpha = P0_alpha * incl_a.
        std::vector<Mat<F>> incl;
        std::vector<int> odim(q.num_vertices);
        for (int w = 0; w < q.num_vertices; ++w) {
            incl.push_back(kernel_basis(pi[w]));
            odim[w] = incl[w].cols;
        }
        Rep<F> omega = Rep<F>::zero_shape(bq, f_, odim);
        for (const Arrow& a : q.arrows)
            omega.arr[a.id] = solve_or_throw(incl[a.dst], p0.arr[a.id] * incl[a.src]);

        return Presentation<F>{std::move(p0), std::move(pi), std::move(omega),
                               std::move(incl)};
    }

    /// dim Ext^1(M, N) from the presentation: Hom(Omega, N) modulo maps that
    /// extend to P0, i.e. dim Hom(Omega, N) - rank(Hom(P0, N) -> Hom(Omega, N)).
    int ext1_dim(const Rep<F>& m, const Rep<F>& n) const {
        require_compatible(m, n);
        Presentation<F> pres = presentation(m);
        int homON = hom_dim(pres.omega, n);
        if (homON == 0) return 0;
        HomSpace<F> hp = hom_space(pres.p0, n);
        if (hp.dim == 0) return homON;
        const Quiver& q = m.bq->q;
        // Flatten each restriction f|Omega = (f_v * incl_v)_v into one column.
        int flat = 0;
        for (int v = 0; v < q.num_vertices; ++v)
            flat += n.dim[v] * pres.omega.dim[v];
        Mat<F> restr(f_, flat, hp.dim);
        for (int c = 0; c < hp.dim; ++c) {
            int off = 0;
            for (int v = 0; v < q.num_vertices; ++v) {
                Mat<F> g = hp.basis[c][v] * pres.incl[v];
                for (int i = 0; i < g.rows; ++i)
                    for (int j = 0; j < g.cols; ++j)
                        restr.at(off + i * g.cols + j, c) = g.at(i, j);
                off += g.rows * g.cols;
            }
        }
        return homON - rank_destructive(restr);
    }

private:
    const PathAlgebra* pa_;
    F f_;
    std::vector<Rep<F>> proj_;
    std::vector<int> gen_coord_;
};

/// Independent Ext^1 oracle via cocycles: an extension of M by N is a tuple
/// (X_alpha) with X_alpha : M_src -> N_dst such that every relation vanishes
/// on the middle term [[N_alpha, X_alpha], [0, M_alpha]]; coboundaries are
/// X_alpha = h_dst M_alpha - N_alpha h_src. Computes dim Z - dim B directly.
template <class F>
int ext1_cocycle_dim(const Rep<F>& m, const Rep<F>& n) {
    require_compatible(m, n);
    const F& f = m.f;
    const BoundQuiver& bq = *m.bq;
    const Quiver& q = bq.q;

    // Unknowns: X_alpha flattened, alpha by alpha.
    std::vector<int> xoff(q.arrows.size() + 1, 0);
    for (const Arrow& a : q.arrows)
        xoff[a.id + 1] = xoff[a.id] + n.dim[a.dst] * m.dim[a.src];
    int unknowns = xoff[q.arrows.size()];

    // Cocycle conditions: for each relation r = sum_t c_t p_t, the top-right
    // block of the middle-term matrix of r must vanish:
    //   sum_t c_t sum_k N_{p_t, >k} X_{alpha_k} M_{p_t, <k} = 0.
    int eqrows = 0;
    for (const Relation& r : bq.relations)
        eqrows += n.dim[r.target(q)] * m.dim[r.source(q)];
    Mat<F> sys(f, eqrows, unknowns);
    int r0 = 0;
    for (const Relation& r : bq.relations) {
        int nr = n.dim[r.target(q)], mc = m.dim[r.source(q)];
        for (const RelTerm& t : r.terms) {
            if (t.coeff == 0) continue;
            typename F::Elem c = f.from_int(t.coeff);
            const auto& seq = t.path.seq;
            for (size_t k = 0; k < seq.size(); ++k) {
                const Arrow& ak = q.arrows[seq[k]];
                // Pre = M over the prefix applied before alpha_k,
                // Post = N over the suffix applied after it.
                Mat<F> pre = Mat<F>::identity(f, m.dim[ak.src]);
                for (size_t j = 0; j < k; ++j)
                    pre = (j == 0) ? m.arr[seq[0]] : m.arr[seq[j]] * pre;
                Mat<F> post = Mat<F>::identity(f, n.dim[ak.dst]);
                for (size_t j = k + 1; j < seq.size(); ++j) post = n.arr[seq[j]] * post;
                // Contribution c * post * X_{alpha_k} * pre to the equations.
                for (int i = 0; i < nr; ++i)
                    for (int jj = 0; jj < mc; ++jj) {
                        int row = r0 + i * mc + jj;
                        for (int u = 0; u < n.dim[ak.dst]; ++u)
                            for (int v = 0; v < m.dim[ak.src]; ++v) {
                                auto coef = f.mul(c, f.mul(post.at(i, u), pre.at(v, jj)));
                                if (f.is_zero(coef)) continue;
                                int col = xoff[ak.id] + u * m.dim[ak.src] + v;
                                sys.at(row, col) = f.add(sys.at(row, col), coef);
                            }
                    }
            }
        }
        r0 += nr * mc;
    }
    int z = unknowns - rank_destructive(sys);

    // Coboundary map d : (h_v)_v -> (h_dst M_alpha - N_alpha h_src)_alpha.
    std::vector<int> hoff(q.num_vertices + 1, 0);
    for (int v = 0; v < q.num_vertices; ++v)
        hoff[v + 1] = hoff[v] + n.dim[v] * m.dim[v];
    Mat<F> d(f, unknowns, hoff[q.num_vertices]);
    for (const Arrow& a : q.arrows) {
        for (int i = 0; i < n.dim[a.dst]; ++i)
            for (int j = 0; j < m.dim[a.src]; ++j) {
                int row = xoff[a.id] + i * m.dim[a.src] + j;
                for (int k = 0; k < m.dim[a.dst]; ++k) {
                    int col = hoff[a.dst] + i * m.dim[a.dst] + k;
                    d.at(row, col) = f.add(d.at(row, col), m.arr[a.id].at(k, j));
                }
                for (int k = 0; k < n.dim[a.src]; ++k) {
                    int col = hoff[a.src] + k * m.dim[a.src] + j;
                    d.at(row, col) = f.sub(d.at(row, col), n.arr[a.id].at(i, k));
                }
            }
    }
    // dim B = rank d restricted to cocycles; every coboundary is a cocycle,
    // so rank(d) itself is the dimension of B inside Z.
    return z - rank_destructive(d);
}

/// Euler form <d, e> = sum_v d_v e_v - sum_alpha d_src(alpha) e_dst(alpha) of
/// the underlying quiver; equals hom - ext^1 when the algebra is hereditary.
inline long long euler_form(const Quiver& q, const std::vector<int>& d,
                            const std::vector<int>& e) {
    if ((int)d.size() != q.num_vertices || (int)e.size() != q.num_vertices)
        throw std::invalid_argument("euler_form: dimension vector size mismatch");
    long long s = 0;
    for (int v = 0; v < q.num_vertices; ++v) s += (long long)d[v] * e[v];
    for (const Arrow& a : q.arrows) s -= (long long)d[a.src] * e[a.dst];
    return s;
}

}  // namespace fpq
