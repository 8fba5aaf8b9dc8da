#include "fpq/loops.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpq {
namespace {

std::string written_product(const Quiver& q, const Path& p) {
    // Written order is the reverse of application order.
    std::string s;
    for (auto it = p.seq.rbegin(); it != p.seq.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrow_names[*it];
    }
    return s;
}

}  // namespace

LoopCommutativityReport check_loop_commutativity(const PathAlgebra& pa) {
    const BoundQuiver& bq = pa.bq();
    const Quiver& q = bq.q;
    LoopCommutativityReport rep;
    auto dead = [&](const std::vector<std::pair<Rat, Path>>& combo) {
        return pa.normal_form(combo).empty();
    };
    for (const Arrow& g : q.arrows) {
        if (!g.is_loop()) continue;
        for (const Arrow& a : q.arrows) {
            if (a.is_loop()) continue;
            // gamma*alpha: alpha ends at the loop vertex, gamma applied second
            if (a.dst == g.src) {
                Path p = Path::of(q, {a.id, g.id});
                if (!dead({{Rat(1), p}}))
                    rep.violations.push_back(written_product(q, p));
            }
            // beta*gamma: beta starts at the loop vertex, gamma applied first
            if (a.src == g.src) {
                Path p = Path::of(q, {g.id, a.id});
                if (!dead({{Rat(1), p}}))
                    rep.violations.push_back(written_product(q, p));
            }
        }
        for (const Arrow& h : q.arrows) {
            if (!h.is_loop() || h.id <= g.id || h.src != g.src) continue;
            Path gh = Path::of(q, {h.id, g.id});  // g*h written, h applied first
            Path hg = Path::of(q, {g.id, h.id});
            if (!dead({{Rat(1), gh}, {Rat(-1), hg}}))
                rep.violations.push_back(written_product(q, gh) + " - " +
                                         written_product(q, hg));
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

BoundQuiver loop_extend(const BoundQuiver& bq, const std::map<int, int>& counts,
                        int nilpotency_order) {
    if (bq.q.has_loops())
        throw std::invalid_argument("loop_extend: input already has loops");
    if (nilpotency_order < 2)
        throw std::invalid_argument("loop_extend: nilpotency order must be >= 2");
    for (const auto& [v, n] : counts) {
        if (v < 0 || v >= bq.q.num_vertices)
            throw std::invalid_argument("loop_extend: unknown vertex");
        if (n < 0) throw std::invalid_argument("loop_extend: negative loop count");
    }

    BoundQuiver out = bq;
    out.loop_extended = true;
    out.base_origin = bq.origin;
    out.origin = bq.origin;
    out.loop_counts.assign(bq.q.num_vertices, 0);

    std::vector<std::vector<int>> loops_at(bq.q.num_vertices);
    for (int v = 0; v < bq.q.num_vertices; ++v) {
        auto it = counts.find(v);
        int n = it == counts.end() ? 0 : it->second;
        out.loop_counts[v] = n;
        for (int k = 0; k < n; ++k) {
            int id = (int)out.q.arrows.size();
            out.q.arrows.push_back({id, v, v});
            out.q.arrow_names.push_back("g" + out.q.vertex_names[v] + "_" +
                                        std::to_string(k + 1));
            loops_at[v].push_back(id);
        }
    }

    auto mono = [&](std::vector<int> seq) {
        Relation r;
        r.terms.push_back({1, Path::of(out.q, std::move(seq))});
        return r;
    };

    for (int v = 0; v < out.q.num_vertices; ++v) {
        for (int g : loops_at[v]) {
            for (const Arrow& a : bq.q.arrows) {
                if (a.dst == v) out.relations.push_back(mono({a.id, g}));
                if (a.src == v) out.relations.push_back(mono({g, a.id}));
            }
            std::vector<int> pow(nilpotency_order, g);
            out.relations.push_back(mono(std::move(pow)));
        }
        for (size_t i = 0; i < loops_at[v].size(); ++i)
            for (size_t j = i + 1; j < loops_at[v].size(); ++j) {
                int g = loops_at[v][i], h = loops_at[v][j];
                Relation r;
                r.terms.push_back({1, Path::of(out.q, {h, g})});
                r.terms.push_back({-1, Path::of(out.q, {g, h})});
                out.relations.push_back(r);
            }
    }
    out.validate();
    return out;
}

BoundQuiver loop_reduce(const BoundQuiver& bq, const PathAlgebra& pa) {
    if (&pa.bq() != &bq && !(pa.bq() == bq))
        throw std::invalid_argument("loop_reduce: path algebra does not match quiver");
    auto comm = check_loop_commutativity(pa);
    if (!comm.ok)
        throw std::runtime_error("loop_reduce: commutativity condition of loops fails (" +
                                 comm.violations.front() + ")");

    BoundQuiver out;
    out.q.num_vertices = bq.q.num_vertices;
    out.q.vertex_names = bq.q.vertex_names;
    std::vector<int> newid(bq.q.arrows.size(), -1);
    for (const Arrow& a : bq.q.arrows) {
        if (a.is_loop()) continue;
        newid[a.id] = (int)out.q.arrows.size();
        out.q.arrows.push_back({newid[a.id], a.src, a.dst});
        out.q.arrow_names.push_back(bq.q.arrow_names[a.id]);
    }
    for (const Relation& r : bq.relations) {
        Relation nr;
        for (const RelTerm& t : r.terms) {
            bool has_loop = false;
            for (int aid : t.path.seq)
                if (bq.q.arrows[aid].is_loop()) { has_loop = true; break; }
            if (has_loop) continue;
            RelTerm nt = t;
            for (int& aid : nt.path.seq) aid = newid[aid];
            nr.terms.push_back(std::move(nt));
        }
        if (!nr.terms.empty()) out.relations.push_back(std::move(nr));
    }
    out.origin = bq.loop_extended ? bq.base_origin : bq.origin;
    out.tube_rank = bq.tube_rank;
    out.tube_nilpotency = bq.tube_nilpotency;
    out.validate();
    return out;
}

}  // namespace fpq
