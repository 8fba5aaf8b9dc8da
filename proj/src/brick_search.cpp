#include "fpq/brick.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fpq/loops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fpq {
namespace {

using RepP = Rep<PrimeField>;

/// All nonzero dimension vectors <= cap pointwise, lexicographic order.
std::vector<std::vector<int>> dimvecs_under(const std::vector<int>& cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(cap.size(), 0);
    while (true) {
        int i = (int)cap.size() - 1;
        while (i >= 0 && d[i] == cap[i]) d[i--] = 0;
        if (i < 0) break;
        ++d[i];
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int matrix_entries(const BoundQuiver& bq, const std::vector<int>& d, int arrow) {
    const Arrow& a = bq.q.arrows[arrow];
    return d[a.dst] * d[a.src];
}

/// log2 of the total tuple count for one dimension vector.
double log2_work(const BoundQuiver& bq, const std::vector<int>& d, long long p) {
    double total = 0;
    for (size_t a = 0; a < bq.q.arrows.size(); ++a)
        total += matrix_entries(bq, d, (int)a) * std::log2((double)p);
    return total;
}

void fill_matrix(Mat<PrimeField>& m, long long code, long long p) {
    for (auto& x : m.a) {
        x = code % p;
        code /= p;
    }
}

/// ready[k] = relations whose every arrow has id < k (checkable once the
/// first k arrows are assigned), listed at the smallest such k.
std::vector<std::vector<int>> relation_schedule(const BoundQuiver& bq) {
    std::vector<std::vector<int>> ready(bq.q.arrows.size() + 1);
    for (size_t r = 0; r < bq.relations.size(); ++r) {
        int maxid = -1;
        for (const RelTerm& t : bq.relations[r].terms)
            for (int a : t.path.seq) maxid = std::max(maxid, a);
        ready[maxid + 1].push_back((int)r);
    }
    return ready;
}

bool relations_hold(const RepP& work, const std::vector<int>& rel_ids) {
    for (int r : rel_ids)
        if (!work.relation_matrix(work.bq->relations[r]).is_zero()) return false;
    return true;
}

template <class Leaf>
void dfs(RepP& work, int depth, const std::vector<long long>& codes,
         const std::vector<std::vector<int>>& ready, long long p, Leaf&& leaf) {
    if (depth == (int)codes.size()) {
        leaf(work);
        return;
    }
    for (long long code = 0; code < codes[depth]; ++code) {
        fill_matrix(work.arr[depth], code, p);
        if (!relations_hold(work, ready[depth + 1])) continue;
        dfs(work, depth + 1, codes, ready, p, leaf);
    }
}

/// Enumerates every matrix tuple for one dimension vector, calling keep()
/// at each tuple that satisfies all relations. Parallelizes over the code
/// space of the first arrow; results are concatenated in code order, so the
/// output is identical to the serial run.
void enumerate_dimvec(const BoundQuiver& bq, PrimeField f,
                      const std::vector<int>& d, const EnumOptions& opt,
                      const std::function<bool(const RepP&)>& keep,
                      std::vector<RepP>& out) {
    const long long p = f.p;
    int na = (int)bq.q.arrows.size();
    std::vector<long long> codes(na);
    for (int a = 0; a < na; ++a) {
        long long c = 1;
        for (int e = 0; e < matrix_entries(bq, d, a); ++e) c *= p;
        codes[a] = c;
    }
    auto ready = relation_schedule(bq);
    RepP proto = RepP::zero_shape(bq, f, d);
    auto leaf = [&](std::vector<RepP>& sink) {
        return [&keep, &sink](const RepP& w) {
            if (keep(w)) sink.push_back(w);
        };
    };
    bool parallel = opt.parallel && na > 0 && codes[0] > 1;
#ifdef _OPENMP
    if (parallel) {
        long long c0 = codes[0];
        std::vector<std::vector<RepP>> parts((size_t)c0);
        int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
        for (long long code = 0; code < c0; ++code) {
            RepP work = proto;
            fill_matrix(work.arr[0], code, p);
            if (!relations_hold(work, ready[1])) continue;
            dfs(work, 1, codes, ready, p, leaf(parts[(size_t)code]));
        }
        for (auto& part : parts)
            for (auto& r : part) out.push_back(std::move(r));
        return;
    }
#else
    (void)parallel;
#endif
    RepP work = proto;
    dfs(work, 0, codes, ready, p, leaf(out));
}

/// Sorts by canonical encoding (dimension vector first), then removes
/// isomorphic duplicates using cheap fingerprints before the full iso test.
std::vector<RepP> dedup_modules(std::vector<RepP> cands, const BoundQuiver& bq,
                                PrimeField f, const IsoOptions& iso) {
    std::sort(cands.begin(), cands.end(), [](const RepP& a, const RepP& b) {
        return a.encoding() < b.encoding();
    });
    std::vector<RepP> simples;
    for (int v = 0; v < bq.q.num_vertices; ++v)
        simples.push_back(RepP::simple(bq, f, v));
    std::vector<RepP> kept;
    std::map<std::vector<long long>, std::vector<int>> groups;
    for (auto& c : cands) {
        std::vector<long long> fp;
        for (int d : c.dim) fp.push_back(d);
        fp.push_back(hom_dim(c, c));
        for (const auto& s : simples) {
            fp.push_back(hom_dim(c, s));
            fp.push_back(hom_dim(s, c));
        }
        auto& bucket = groups[fp];
        bool dup = false;
        for (int idx : bucket) {
            if (are_isomorphic(kept[idx], c, iso)) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            bucket.push_back((int)kept.size());
            kept.push_back(std::move(c));
        }
    }
    return kept;
}

std::vector<RepP> enumerate_impl(const BoundQuiver& bq,
                                 const std::vector<int>& cap, PrimeField f,
                                 const EnumOptions& opt, bool bricks_only,
                                 bool* exhaustive) {
    bq.validate();
    if ((int)cap.size() != bq.q.num_vertices)
        throw std::invalid_argument("enumerate: cap size mismatch");
    bool complete = true;
    std::vector<RepP> cands;
    const double log_budget = std::log2((double)opt.budget);
    auto keep = [&](const RepP& w) { return !bricks_only || is_brick(w); };
    for (const auto& d : dimvecs_under(cap)) {
        if (log2_work(bq, d, f.p) > log_budget) {
            complete = false;
            continue;
        }
        enumerate_dimvec(bq, f, d, opt, keep, cands);
    }
    if (exhaustive) *exhaustive = complete;
    return dedup_modules(std::move(cands), bq, f, opt.iso);
}

}  // namespace

std::vector<RepP> enumerate_modules(const BoundQuiver& bq,
                                    const std::vector<int>& cap, PrimeField f,
                                    const EnumOptions& opt, bool* exhaustive) {
    return enumerate_impl(bq, cap, f, opt, /*bricks_only=*/false, exhaustive);
}

BrickList enumerate_bricks(const BoundQuiver& bq, const std::vector<int>& cap,
                           PrimeField f, const EnumOptions& opt) {
    BrickList out;
    out.bq = &bq;
    out.cap = cap;
    out.field = f;
    out.bricks = enumerate_impl(bq, cap, f, opt, /*bricks_only=*/true,
                                &out.exhaustive);
    return out;
}

BrickList enumerate_bricks_serial(const BoundQuiver& bq,
                                  const std::vector<int>& cap, PrimeField f,
                                  const EnumOptions& opt) {
    EnumOptions serial = opt;
    serial.parallel = false;
    return enumerate_bricks(bq, cap, f, serial);
}

void enumerate_brick_sets(const BrickList& bricks, int max_size,
                          ExtContext<PrimeField>& ctx,
                          const std::function<bool(const BrickSet&)>& visit) {
    int n = (int)bricks.bricks.size();
    // Pairwise Hom dimensions once; diagonal is 1 for bricks by definition.
    std::vector<std::vector<int>> hom(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            hom[i][j] = i == j ? 1 : hom_dim(bricks.bricks[i], bricks.bricks[j]);
    std::map<std::pair<int, int>, long long> ext_cache;
    auto ext = [&](int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = ext_cache.find(key);
        if (it != ext_cache.end()) return it->second;
        long long v = ctx.ext1_dim(bricks.bricks[i], bricks.bricks[j]);
        ext_cache[key] = v;
        return v;
    };
    std::vector<int> cur;
    bool stop = false;
    std::function<void(int)> grow = [&](int start) {
        if (stop) return;
        if (!cur.empty()) {
            BrickSet s;
            s.members = cur;
            int k = (int)cur.size();
            s.adjacency.assign(k, std::vector<long long>(k, 0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) s.adjacency[i][j] = ext(cur[i], cur[j]);
            if (!visit(s)) {
                stop = true;
                return;
            }
        }
        if ((int)cur.size() == max_size) return;
        for (int j = start; j < n && !stop; ++j) {
            bool ok = true;
            for (int i : cur)
                if (hom[i][j] != 0 || hom[j][i] != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(j);
            grow(j + 1);
            cur.pop_back();
        }
    };
    grow(0);
}

FpEstimate fpdim_search(const BoundQuiver& bq, const std::vector<int>& cap,
                        int max_size, PrimeField field, double tol,
                        const EnumOptions& opt) {
    FpEstimate est;
    est.max_size = max_size;
    est.tol = tol;
    est.bricks = enumerate_bricks(bq, cap, field, opt);
    PathAlgebra pa = PathAlgebra::build(bq);
    ExtContext<PrimeField> ctx(pa, field);
    est.best = 0.0;
    est.method = "exact";
    enumerate_brick_sets(est.bricks, max_size, ctx, [&](const BrickSet& s) {
        NonnegIntMatrix c(s.adjacency);
        SpectralResult r = spectral_radius(c, tol);
        if (r.value > est.best) {
            est.best = r.value;
            est.method = r.method;
            est.witness = s;
        }
        return true;
    });
    if (bq.loop_extended && bq.base_origin == QuiverOrigin::dynkin) {
        int mx = 0;
        for (int v = 0; v < bq.q.num_vertices; ++v)
            mx = std::max(mx, bq.q.loops_at(v));
        est.predicted = (double)mx;
        est.predicted_from = "loop-extended directed algebra: max loop count over vertices";
    } else if (bq.origin == QuiverOrigin::dynkin && !bq.q.has_loops()) {
        est.predicted = 0.0;
        est.predicted_from = "directed algebra without loops";
    } else if (bq.origin == QuiverOrigin::cyclic_tube && bq.tube_rank >= 2) {
        est.predicted = 1.0;
        est.predicted_from = "nilpotent cyclic quiver (tube)";
    }
    return est;
}

Rep<PrimeField> tube_witness(const BoundQuiver& tube, int s1_vertex,
                             int s2_vertex, PrimeField field,
                             const EnumOptions& opt) {
    if (s1_vertex == s2_vertex)
        throw std::invalid_argument("tube_witness: simples must be distinct");
    PathAlgebra pa = PathAlgebra::build(tube);
    ExtContext<PrimeField> ctx(pa, field);
    RepP s1 = RepP::simple(tube, field, s1_vertex);
    RepP s2 = RepP::simple(tube, field, s2_vertex);
    if (ctx.ext1_dim(s1, s2) != 0)
        throw std::invalid_argument("tube_witness: Ext^1(S1, S2) must vanish");
    std::vector<int> cap(tube.q.num_vertices, 2);
    auto mods = enumerate_modules(tube, cap, field, opt);
    std::stable_sort(mods.begin(), mods.end(), [](const RepP& a, const RepP& b) {
        return a.total_dim() < b.total_dim();
    });
    for (const RepP& m : mods) {
        if (!is_brick(m)) continue;
        if (hom_dim(s1, m) != 0 || hom_dim(m, s1) != 0) continue;
        if (hom_dim(s2, m) != 0 || hom_dim(m, s2) != 0) continue;
        if (ctx.ext1_dim(s1, m) == 1 && ctx.ext1_dim(m, s2) == 1) return m;
    }
    throw std::runtime_error(
        "tube_witness: not found within the nilpotency bound (raise it)");
}

Rep<PrimeField> extend_by_zero(const BoundQuiver& a, const Rep<PrimeField>& m_b) {
    RepP out = RepP::zero_shape(a, m_b.f, m_b.dim);
    size_t k = 0;
    for (const Arrow& ar : a.q.arrows) {
        if (ar.is_loop()) continue;
        if (k >= m_b.arr.size())
            throw std::invalid_argument("extend_by_zero: arrow count mismatch");
        out.arr[ar.id] = m_b.arr[k++];
    }
    if (k != m_b.arr.size())
        throw std::invalid_argument("extend_by_zero: arrow count mismatch");
    return out;
}

namespace {

/// Inverse of extend_by_zero on modules with zero loop action.
RepP forget_loops(const BoundQuiver& b, const RepP& m_a) {
    RepP out = RepP::zero_shape(b, m_a.f, m_a.dim);
    size_t k = 0;
    for (const Arrow& ar : m_a.bq->q.arrows) {
        if (ar.is_loop()) continue;
        out.arr[k++] = m_a.arr[ar.id];
    }
    return out;
}

}  // namespace

LoopExtensionReport loop_extension_report(const BoundQuiver& a,
                                          const std::vector<int>& cap,
                                          PrimeField field,
                                          const EnumOptions& opt) {
    LoopExtensionReport rep;
    PathAlgebra pa_a = PathAlgebra::build(a);
    auto comm = check_loop_commutativity(pa_a);
    if (!comm.ok)
        throw std::invalid_argument(
            "loop_extension_report: commutativity condition of loops fails (" +
            comm.violations.front() + ")");
    BoundQuiver b = loop_reduce(a, pa_a);
    PathAlgebra pa_b = PathAlgebra::build(b);
    ExtContext<PrimeField> ctx_a(pa_a, field), ctx_b(pa_b, field);

    BrickList ba = enumerate_bricks(a, cap, field, opt);
    BrickList bb = enumerate_bricks(b, cap, field, opt);
    rep.exhaustive = ba.exhaustive && bb.exhaustive;
    rep.bricks_extended = (int)ba.bricks.size();
    rep.bricks_reduced = (int)bb.bricks.size();

    auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

    // Bricks of the extended algebra act by zero on every loop.
    for (size_t i = 0; i < ba.bricks.size(); ++i)
        for (const Arrow& ar : a.q.arrows)
            if (ar.is_loop() && !ba.bricks[i].arr[ar.id].is_zero())
                fail("brick " + std::to_string(i) + " has nonzero loop action");

    // Bijection with bricks of the reduced algebra, up to isomorphism.
    if (ba.bricks.size() != bb.bricks.size())
        fail("brick counts differ between extended and reduced algebras");
    std::vector<int> match(ba.bricks.size(), -1);
    std::vector<int> used(bb.bricks.size(), 0);
    for (size_t i = 0; i < ba.bricks.size(); ++i) {
        RepP down = forget_loops(b, ba.bricks[i]);
        for (size_t j = 0; j < bb.bricks.size(); ++j) {
            if (used[j]) continue;
            if (are_isomorphic(down, bb.bricks[j], opt.iso)) {
                match[i] = (int)j;
                used[j] = 1;
                break;
            }
        }
        if (match[i] < 0)
            fail("brick " + std::to_string(i) + " has no counterpart after loop removal");
    }

    // Hom dimensions agree on brick pairs.
    for (size_t i = 0; i < ba.bricks.size(); ++i)
        for (size_t j = 0; j < ba.bricks.size(); ++j) {
            if (match[i] < 0 || match[j] < 0) continue;
            int ha = hom_dim(ba.bricks[i], ba.bricks[j]);
            int hb = hom_dim(bb.bricks[match[i]], bb.bricks[match[j]]);
            if (ha != hb)
                fail("Hom mismatch on brick pair (" + std::to_string(i) + "," +
                     std::to_string(j) + "): " + std::to_string(ha) + " vs " +
                     std::to_string(hb));
        }

    // Ext^1 agrees on module pairs with vanishing Hom over the reduced
    // algebra, and on self-extensions of non-simple bricks.
    auto mods_b = enumerate_modules(b, cap, field, opt);
    for (size_t i = 0; i < mods_b.size(); ++i)
        for (size_t j = 0; j < mods_b.size(); ++j) {
            if (hom_dim(mods_b[i], mods_b[j]) != 0) continue;
            int eb = ctx_b.ext1_dim(mods_b[i], mods_b[j]);
            int ea = ctx_a.ext1_dim(extend_by_zero(a, mods_b[i]),
                                    extend_by_zero(a, mods_b[j]));
            ++rep.pairs_checked;
            if (ea != eb)
                fail("Ext mismatch on Hom-vanishing module pair (" +
                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (const RepP& m : bb.bricks) {
        if (m.total_dim() == 1) continue;
        int eb = ctx_b.ext1_dim(m, m);
        int ea = ctx_a.ext1_dim(extend_by_zero(a, m), extend_by_zero(a, m));
        ++rep.pairs_checked;
        if (ea != eb) fail("self-Ext mismatch on a non-simple brick");
    }

    // Self-extensions of simples count the loops at their vertex.
    for (int v = 0; v < a.q.num_vertices; ++v) {
        RepP s = RepP::simple(a, field, v);
        int e = ctx_a.ext1_dim(s, s);
        rep.self_ext_table.push_back({a.q.loops_at(v), e});
        if (e != a.q.loops_at(v))
            fail("self-Ext of the simple at vertex " + std::to_string(v) +
                 " is " + std::to_string(e) + ", expected the loop count " +
                 std::to_string(a.q.loops_at(v)));
    }

    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace fpq
