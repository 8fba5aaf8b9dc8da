#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpq {

struct Arrow {
    int id;
    int src;
    int dst;
    bool is_loop() const { return src == dst; }
};

/// Finite quiver. Vertices are 0..num_vertices-1; the name tables keep the
/// user-facing labels from the DSL or a builder.
struct Quiver {
    int num_vertices = 0;
    std::vector<Arrow> arrows;
    std::vector<std::string> vertex_names;
    std::vector<std::string> arrow_names;

    void validate() const {
        if ((int)vertex_names.size() != num_vertices)
            throw std::invalid_argument("Quiver: vertex name table size mismatch");
        if (arrow_names.size() != arrows.size())
            throw std::invalid_argument("Quiver: arrow name table size mismatch");
        for (size_t i = 0; i < arrows.size(); ++i) {
            const Arrow& a = arrows[i];
            if (a.id != (int)i)
                throw std::invalid_argument("Quiver: arrow ids must be 0..n-1 in order");
            if (a.src < 0 || a.src >= num_vertices || a.dst < 0 || a.dst >= num_vertices)
                throw std::invalid_argument("Quiver: arrow endpoint out of range");
        }
    }

    bool has_loops() const {
        for (const auto& a : arrows)
            if (a.is_loop()) return true;
        return false;
    }

    int loops_at(int v) const {
        int n = 0;
        for (const auto& a : arrows)
            if (a.is_loop() && a.src == v) ++n;
        return n;
    }

    /// Connected as an undirected graph. Checked, never assumed.
    bool is_connected() const {
        if (num_vertices == 0) return true;
        std::vector<int> seen(num_vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& a : arrows) {
                for (int w : {a.src == v ? a.dst : -1, a.dst == v ? a.src : -1}) {
                    if (w >= 0 && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
        }
        for (int s : seen)
            if (!s) return false;
        return true;
    }

    bool operator==(const Quiver& o) const {
        if (num_vertices != o.num_vertices) return false;
        if (arrows.size() != o.arrows.size()) return false;
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].src != o.arrows[i].src || arrows[i].dst != o.arrows[i].dst)
                return false;
        return true;
    }
};

/// A path of composable arrows. `seq` is in application order: seq[0] acts
/// first. The written product "p*q" in the DSL means apply q first, then p,
/// so printed order is the reverse of `seq`. Trivial paths (length 0) carry
/// just their vertex.
struct Path {
    int vertex = -1;            // source vertex for trivial paths
    std::vector<int> seq;       // arrow ids, application order

    static Path trivial(int v) {
        Path p;
        p.vertex = v;
        return p;
    }
    static Path of(const Quiver& q, std::vector<int> arrow_ids) {
        Path p;
        p.seq = std::move(arrow_ids);
        if (p.seq.empty()) throw std::invalid_argument("Path: empty arrow list");
        for (size_t i = 0; i + 1 < p.seq.size(); ++i)
            if (q.arrows[p.seq[i]].dst != q.arrows[p.seq[i + 1]].src)
                throw std::invalid_argument("Path: arrows do not compose");
        p.vertex = q.arrows[p.seq[0]].src;
        return p;
    }

    int length() const { return (int)seq.size(); }
    int source(const Quiver& q) const {
        return seq.empty() ? vertex : q.arrows[seq.front()].src;
    }
    int target(const Quiver& q) const {
        return seq.empty() ? vertex : q.arrows[seq.back()].dst;
    }

    bool operator==(const Path& o) const {
        return seq.empty() == o.seq.empty() &&
               (seq.empty() ? vertex == o.vertex : seq == o.seq);
    }
    bool operator<(const Path& o) const {
        if (seq.size() != o.seq.size()) return seq.size() < o.seq.size();
        if (seq.empty()) return vertex < o.vertex;
        return seq < o.seq;
    }
};

struct RelTerm {
    long long coeff = 1;
    Path path;
    bool operator==(const RelTerm&) const = default;
};

/// Linear combination of parallel paths (all sharing source and target).
struct Relation {
    std::vector<RelTerm> terms;

    int source(const Quiver& q) const { return terms.at(0).path.source(q); }
    int target(const Quiver& q) const { return terms.at(0).path.target(q); }
    int min_len() const {
        int m = terms.at(0).path.length();
        for (const auto& t : terms) m = std::min(m, t.path.length());
        return m;
    }
    int max_len() const {
        int m = 0;
        for (const auto& t : terms) m = std::max(m, t.path.length());
        return m;
    }
    void validate(const Quiver& q) const {
        if (terms.empty()) throw std::invalid_argument("Relation: no terms");
        bool all_zero = true;
        for (const auto& t : terms) {
            if (t.coeff != 0) all_zero = false;
            if (t.path.source(q) != source(q) || t.path.target(q) != target(q))
                throw std::invalid_argument("Relation: paths not parallel");
        }
        if (all_zero) throw std::invalid_argument("Relation: all coefficients zero");
    }
    bool operator==(const Relation&) const = default;
};

/// Where a bound quiver came from. Carried along so that downstream
/// searches can attach the closed-form value predicted for that family.
enum class QuiverOrigin { none, dynkin, canonical, cyclic_tube };

struct BoundQuiver {
    Quiver q;
    std::vector<Relation> relations;

    QuiverOrigin origin = QuiverOrigin::none;
    // Set by loop_extend: the loop counts added per vertex and the origin of
    // the loop-free base.
    bool loop_extended = false;
    std::vector<int> loop_counts;
    QuiverOrigin base_origin = QuiverOrigin::none;
    // cyclic_tube parameters
    int tube_rank = 0;
    int tube_nilpotency = 0;

    void validate() const {
        q.validate();
        for (const auto& r : relations) r.validate(q);
    }

    /// Structural equality (quiver shape + relations); metadata is ignored.
    bool operator==(const BoundQuiver& o) const {
        return q == o.q && relations == o.relations;
    }
};

}  // namespace fpq
