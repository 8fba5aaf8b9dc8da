#include "fpq/builders.hpp"

#include <stdexcept>

namespace fpq {
namespace {

int add_vertex(Quiver& q, const std::string& name) {
    q.vertex_names.push_back(name);
    return q.num_vertices++;
}

int add_arrow(Quiver& q, const std::string& name, int src, int dst) {
    int id = (int)q.arrows.size();
    q.arrows.push_back({id, src, dst});
    q.arrow_names.push_back(name);
    return id;
}

Relation monomial(const Quiver& q, std::vector<int> seq_in_application_order) {
    Relation r;
    r.terms.push_back({1, Path::of(q, std::move(seq_in_application_order))});
    return r;
}

// Tree quiver: branch vertex 0 plus arms; arm k has arm_len[k] vertices,
// arrows oriented toward the branch.
BoundQuiver star_tree(const std::vector<int>& arm_len,
                      const std::vector<std::string>& arm_prefix) {
    BoundQuiver bq;
    int b = add_vertex(bq.q, "0");
    for (size_t k = 0; k < arm_len.size(); ++k) {
        int prev = b;
        for (int j = 1; j <= arm_len[k]; ++j) {
            int v = add_vertex(bq.q, arm_prefix[k] + std::to_string(j));
            add_arrow(bq.q, arm_prefix[k] + "a" + std::to_string(j), v, prev);
            prev = v;
        }
    }
    bq.origin = QuiverOrigin::dynkin;
    bq.validate();
    return bq;
}

}  // namespace

BoundQuiver dynkin(DynkinType t, int n, const std::string& orientation) {
    if (t == DynkinType::A) {
        if (n < 1) throw std::invalid_argument("dynkin A: n >= 1");
        std::string ori = orientation.empty() ? std::string(n > 0 ? n - 1 : 0, '<')
                                              : orientation;
        if ((int)ori.size() != n - 1)
            throw std::invalid_argument("dynkin A: orientation must have n-1 characters");
        BoundQuiver bq;
        for (int i = 1; i <= n; ++i) add_vertex(bq.q, std::to_string(i));
        for (int i = 0; i < n - 1; ++i) {
            if (ori[i] == '<')
                add_arrow(bq.q, "a" + std::to_string(i + 1), i + 1, i);
            else if (ori[i] == '>')
                add_arrow(bq.q, "a" + std::to_string(i + 1), i, i + 1);
            else
                throw std::invalid_argument("dynkin A: orientation characters are < or >");
        }
        bq.origin = QuiverOrigin::dynkin;
        bq.validate();
        return bq;
    }
    if (!orientation.empty() && orientation != "subspace")
        throw std::invalid_argument("dynkin D/E: only the subspace-style orientation is built in");
    switch (t) {
        case DynkinType::D:
            if (n < 4) throw std::invalid_argument("dynkin D: n >= 4");
            return star_tree({n - 3, 1, 1}, {"c", "d", "e"});
        case DynkinType::E6:
            return star_tree({2, 2, 1}, {"c", "d", "e"});
        case DynkinType::E7:
            return star_tree({3, 2, 1}, {"c", "d", "e"});
        case DynkinType::E8:
            return star_tree({4, 2, 1}, {"c", "d", "e"});
        default:
            throw std::invalid_argument("dynkin: unknown type");
    }
}

BoundQuiver canonical(CanonicalType t, int n, int m) {
    BoundQuiver bq;
    int sink = add_vertex(bq.q, "0");
    int source = add_vertex(bq.q, "0'");

    // One arm of `len` arrows from the source pole down to the sink pole.
    // Returns the arrow ids in application order (source-side arrow first).
    auto arm = [&](int len, int arm_no, const std::string& prefix) {
        std::vector<int> ids;
        int prev = sink;
        std::vector<int> arrow_of(len + 1, -1);
        for (int j = 1; j <= len - 1; ++j) {
            int v = add_vertex(bq.q, "(" + std::to_string(arm_no) + "," +
                                         std::to_string(j) + ")");
            arrow_of[j] = add_arrow(bq.q, prefix + std::to_string(j), v, prev);
            prev = v;
        }
        arrow_of[len] = add_arrow(bq.q, prefix + std::to_string(len), source, prev);
        for (int j = len; j >= 1; --j) ids.push_back(arrow_of[j]);
        return ids;  // application order: a_len, ..., a_1
    };

    switch (t) {
        case CanonicalType::A: {
            if (n < 1 || m < 1) throw std::invalid_argument("canonical A: n,m >= 1");
            arm(n, 1, "a");
            arm(m, 2, "b");
            break;
        }
        case CanonicalType::D: {
            if (n < 4) throw std::invalid_argument("canonical D: n >= 4");
            auto a = arm(n - 2, 1, "a");
            auto b = arm(2, 2, "b");
            auto c = arm(2, 3, "c");
            Relation r;
            r.terms.push_back({1, Path::of(bq.q, a)});
            r.terms.push_back({1, Path::of(bq.q, b)});
            r.terms.push_back({1, Path::of(bq.q, c)});
            bq.relations.push_back(r);
            break;
        }
        case CanonicalType::E: {
            if (n != 6 && n != 7 && n != 8)
                throw std::invalid_argument("canonical E: n in {6,7,8}");
            auto a = arm(n - 3, 1, "a");
            auto b = arm(2, 2, "b");
            auto c = arm(3, 3, "c");
            Relation r;
            r.terms.push_back({1, Path::of(bq.q, a)});
            r.terms.push_back({1, Path::of(bq.q, b)});
            r.terms.push_back({1, Path::of(bq.q, c)});
            bq.relations.push_back(r);
            break;
        }
    }
    bq.origin = QuiverOrigin::canonical;
    bq.validate();
    return bq;
}

BoundQuiver cyclic_tube(int rank, int nilpotency) {
    if (rank < 1) throw std::invalid_argument("cyclic_tube: rank >= 1");
    if (nilpotency < 2) throw std::invalid_argument("cyclic_tube: nilpotency >= 2");
    BoundQuiver bq;
    for (int i = 1; i <= rank; ++i) add_vertex(bq.q, std::to_string(i));
    for (int i = 0; i < rank; ++i)
        add_arrow(bq.q, "t" + std::to_string(i + 1), i, (i + 1) % rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<int> seq;
        for (int k = 0; k < nilpotency; ++k) seq.push_back((i + k) % rank);
        bq.relations.push_back(monomial(bq.q, seq));
    }
    bq.origin = QuiverOrigin::cyclic_tube;
    bq.tube_rank = rank;
    bq.tube_nilpotency = nilpotency;
    bq.validate();
    return bq;
}

}  // namespace fpq
