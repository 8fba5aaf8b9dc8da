#include "fpq/path_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpq {
namespace {

// All paths of length <= max_len, graded. Throws on budget overflow.
std::vector<std::vector<Path>> paths_by_length(const Quiver& q, int max_len,
                                               size_t budget) {
    std::vector<std::vector<Path>> levels(max_len + 1);
    for (int v = 0; v < q.num_vertices; ++v)
        levels[0].push_back(Path::trivial(v));
    size_t total = levels[0].size();
    for (int len = 1; len <= max_len; ++len) {
        for (const Path& p : levels[len - 1]) {
            int t = p.target(q);
            for (const Arrow& a : q.arrows) {
                if (a.src != t) continue;
                Path np = p;
                np.seq.push_back(a.id);
                if (np.seq.size() == 1) np.vertex = a.src;
                levels[len].push_back(std::move(np));
                if (++total > budget)
                    throw std::runtime_error("path budget exceeded");
            }
        }
        std::sort(levels[len].begin(), levels[len].end());
    }
    return levels;
}

struct SpanTerm {
    Path path;
    Rat coeff;
};

// One ideal generator u*r*w (w applied first), with terms longer than
// max_keep dropped when project_long is set.
struct ClosureRow {
    int src, tgt;
    std::vector<SpanTerm> terms;
};

// Products path_after * relation * path_before, keeping rows whose terms
// all fit under len_cap (strict ideal elements) or, in projection mode,
// dropping individual terms of length >= len_cap.
std::vector<ClosureRow> closure_rows(const BoundQuiver& bq,
                                     const std::vector<std::vector<Path>>& levels,
                                     int len_cap, bool project_long) {
    const Quiver& q = bq.q;
    std::vector<ClosureRow> out;
    std::vector<const Path*> flat;
    for (const auto& lv : levels)
        for (const auto& p : lv)
            if (p.length() < len_cap) flat.push_back(&p);

    for (const Relation& r : bq.relations) {
        int rs = r.source(q), rt = r.target(q);
        int rmin = r.min_len(), rmax = r.max_len();
        for (const Path* w : flat) {
            if (w->target(q) != rs) continue;
            if (w->length() + rmin > len_cap) continue;
            for (const Path* u : flat) {
                if (u->source(q) != rt) continue;
                int base = w->length() + u->length();
                if (base + rmin > len_cap) continue;
                if (!project_long && base + rmax > len_cap) continue;
                ClosureRow row;
                row.src = w->source(q);
                row.tgt = u->target(q);
                bool any = false;
                for (const RelTerm& t : r.terms) {
                    int tl = base + t.path.length();
                    if (tl > len_cap) continue;  // reduces to zero anyway
                    Path p;
                    p.seq = w->seq;
                    p.seq.insert(p.seq.end(), t.path.seq.begin(), t.path.seq.end());
                    p.seq.insert(p.seq.end(), u->seq.begin(), u->seq.end());
                    p.vertex = row.src;
                    row.terms.push_back({std::move(p), Rat((long)t.coeff)});
                    any = true;
                }
                if (any) out.push_back(std::move(row));
            }
        }
    }
    return out;
}

struct BlockSpan {
    std::vector<Path> cols;                // sorted
    std::map<Path, int> pos;
    std::vector<std::vector<Rat>> rows;    // rref form
    std::vector<int> pivot_col;

    void add_columns(const std::vector<std::vector<Path>>& levels, int max_keep,
                     int src, int tgt, const Quiver& q) {
        for (const auto& lv : levels)
            for (const auto& p : lv) {
                if (p.length() > max_keep) continue;
                if (p.source(q) != src || p.target(q) != tgt) continue;
                pos.emplace(p, (int)cols.size());
                cols.push_back(p);
            }
    }

    // Reduce v by the current rref rows in place.
    void reduce(std::vector<Rat>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            Rat c = v[pivot_col[r]];
            if (c == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
        }
    }

    void insert(std::vector<Rat> v) {
        reduce(v);
        int lead = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { lead = (int)j; break; }
        if (lead < 0) return;
        Rat inv = Rat(1) / v[lead];
        for (auto& x : v) x *= inv;
        // keep rref: clear this column from existing rows
        for (size_t r = 0; r < rows.size(); ++r) {
            Rat c = rows[r][lead];
            if (c == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= c * v[j];
        }
        // insert sorted by pivot column
        size_t at = 0;
        while (at < rows.size() && pivot_col[at] < lead) ++at;
        rows.insert(rows.begin() + at, std::move(v));
        pivot_col.insert(pivot_col.begin() + at, lead);
    }

    bool in_span(const Path& p) const {
        auto it = pos.find(p);
        if (it == pos.end()) return false;
        std::vector<Rat> v(cols.size(), Rat(0));
        v[it->second] = 1;
        reduce(v);
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
};

std::map<std::pair<int, int>, BlockSpan> build_spans(
    const BoundQuiver& bq, const std::vector<std::vector<Path>>& levels,
    int len_cap, bool project_long) {
    const Quiver& q = bq.q;
    std::map<std::pair<int, int>, BlockSpan> spans;
    int keep = project_long ? len_cap - 1 : len_cap;
    for (int s = 0; s < q.num_vertices; ++s)
        for (int t = 0; t < q.num_vertices; ++t)
            spans[{s, t}].add_columns(levels, keep, s, t, q);
    for (const ClosureRow& row : closure_rows(bq, levels, project_long ? len_cap - 1 : len_cap,
                                              project_long)) {
        BlockSpan& b = spans[{row.src, row.tgt}];
        std::vector<Rat> v(b.cols.size(), Rat(0));
        bool nonzero = false;
        for (const SpanTerm& t : row.terms) {
            auto it = b.pos.find(t.path);
            if (it == b.pos.end()) continue;  // projected away
            v[it->second] += t.coeff;
            nonzero = true;
        }
        if (nonzero) b.insert(std::move(v));
    }
    return spans;
}

struct Analysis {
    bool admissible = false;
    int L = 0;
    std::optional<Path> witness;
    std::string message;
};

Analysis analyze(const BoundQuiver& bq, int max_len, size_t budget) {
    Analysis out;
    for (const Relation& r : bq.relations)
        for (const RelTerm& t : r.terms)
            if (t.path.length() < 2) {
                out.witness = t.path;
                out.message = "relation contains a path of length < 2";
                return out;
            }
    std::vector<std::vector<Path>> levels;
    try {
        levels = paths_by_length(bq.q, max_len, budget);
    } catch (const std::exception& e) {
        out.message = e.what();
        return out;
    }
    for (int L = 2; L <= max_len; ++L) {
        auto spans = build_spans(bq, levels, L, /*project_long=*/false);
        bool all_dead = true;
        Path bad;
        for (const Path& p : levels[L]) {
            const BlockSpan& b = spans.at({p.source(bq.q), p.target(bq.q)});
            if (!b.in_span(p)) {
                all_dead = false;
                bad = p;
                break;
            }
        }
        if (all_dead) {
            out.admissible = true;
            out.L = L;
            return out;
        }
        out.witness = bad;
    }
    if (!out.witness && max_len >= 0 && !levels[max_len].empty())
        out.witness = levels[max_len].front();
    out.message = "no nilpotency bound found within max_len";
    return out;
}

}  // namespace

AdmissibilityReport check_admissible(const BoundQuiver& bq, int max_len,
                                     size_t path_budget) {
    if (max_len < 2) throw std::invalid_argument("check_admissible: max_len < 2");
    bq.validate();
    AdmissibilityReport rep;
    Analysis an = analyze(bq, max_len, path_budget);
    if (!an.admissible) {
        rep.admissible = false;
        rep.witness = an.witness;
        rep.message = an.message;
        return rep;
    }
    rep.admissible = true;
    rep.nilpotency_bound = an.L;
    PathAlgebra pa = PathAlgebra::build(bq, max_len, path_budget);
    rep.algebra_dim = pa.dim();
    return rep;
}

PathAlgebra PathAlgebra::build(const BoundQuiver& bq, int max_len,
                               size_t path_budget) {
    bq.validate();
    Analysis an = analyze(bq, max_len, path_budget);
    if (!an.admissible)
        throw std::runtime_error("PathAlgebra: ideal not admissible within max_len (" +
                                 an.message + ")");
    PathAlgebra pa;
    pa.bq_ = &bq;
    pa.L_ = an.L;

    auto levels = paths_by_length(bq.q, an.L, path_budget);
    // After L is known, every path of length >= L is zero; the quotient is
    // span(paths < L) modulo the projected ideal closure.
    auto spans = build_spans(bq, levels, an.L, /*project_long=*/true);

    for (int len = 0; len < an.L; ++len)
        for (const Path& p : levels[len]) {
            pa.path_id_.emplace(p, (int)pa.all_paths_.size());
            pa.all_paths_.push_back(p);
        }

    for (auto& [key, span] : spans) {
        Block blk;
        blk.src = key.first;
        blk.tgt = key.second;
        for (const Path& p : span.cols) {
            blk.col_pos.emplace(pa.path_id_.at(p), (int)blk.cols.size());
            blk.cols.push_back(pa.path_id_.at(p));
        }
        blk.rows = span.rows;
        blk.pivot_col = span.pivot_col;
        blk.col_pivot_row.assign(blk.cols.size(), -1);
        for (size_t r = 0; r < blk.pivot_col.size(); ++r)
            blk.col_pivot_row[blk.pivot_col[r]] = (int)r;
        blk.basis_of_col.assign(blk.cols.size(), -1);
        for (size_t c = 0; c < blk.cols.size(); ++c) {
            if (blk.col_pivot_row[c] >= 0) continue;
            const Path& p = pa.all_paths_[blk.cols[c]];
            blk.basis_of_col[c] = (int)pa.basis_.size();
            pa.basis_id_.emplace(p, (int)pa.basis_.size());
            pa.basis_.push_back(p);
        }
        pa.blocks_.emplace(key, std::move(blk));
    }
    return pa;
}

std::vector<int> PathAlgebra::basis_from(int v) const {
    std::vector<int> out;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].source(bq_->q) == v) out.push_back((int)i);
    return out;
}

int PathAlgebra::basis_index(const Path& p) const {
    auto it = basis_id_.find(p);
    return it == basis_id_.end() ? -1 : it->second;
}

std::vector<std::pair<int, Rat>> PathAlgebra::normal_form(const Path& p) const {
    return normal_form(std::vector<std::pair<Rat, Path>>{{Rat(1), p}});
}

std::vector<std::pair<int, Rat>> PathAlgebra::normal_form(
    const std::vector<std::pair<Rat, Path>>& combo) const {
    if (combo.empty()) return {};
    const Quiver& q = bq_->q;
    int s = combo.front().second.source(q);
    int t = combo.front().second.target(q);
    const Block& blk = blocks_.at({s, t});
    std::vector<Rat> v(blk.cols.size(), Rat(0));
    for (const auto& [c, p] : combo) {
        if (p.source(q) != s || p.target(q) != t)
            throw std::invalid_argument("normal_form: paths not parallel");
        if (p.length() >= L_) continue;
        v[blk.col_pos.at(path_id_.at(p))] += c;
    }
    for (size_t r = 0; r < blk.rows.size(); ++r) {
        Rat c = v[blk.pivot_col[r]];
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * blk.rows[r][j];
    }
    std::vector<std::pair<int, Rat>> out;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.emplace_back(blk.basis_of_col[j], v[j]);
    return out;
}

std::vector<std::pair<int, Rat>> PathAlgebra::multiply(int i, int j) const {
    const Quiver& q = bq_->q;
    const Path& pi = basis_[i];
    const Path& pj = basis_[j];
    if (pj.target(q) != pi.source(q)) return {};
    Path prod;
    prod.vertex = pj.source(q);
    prod.seq = pj.seq;
    prod.seq.insert(prod.seq.end(), pi.seq.begin(), pi.seq.end());
    if (prod.length() >= L_) return {};
    return normal_form(prod);
}

}  // namespace fpq
