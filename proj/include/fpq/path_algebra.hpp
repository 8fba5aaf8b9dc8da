#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpq/field.hpp"
#include "fpq/quiver.hpp"

namespace fpq {

struct AdmissibilityReport {
    bool admissible = false;
    std::optional<int> nilpotency_bound;  // smallest L with R^L inside the ideal
    std::optional<int> algebra_dim;
    std::optional<Path> witness;          // a path that fails to reduce to zero
    std::string message;
};

/// Verifies the ideal is admissible within paths of length <= max_len:
/// all relation paths have length >= 2, and some L <= max_len kills every
/// length-L path modulo the linear closure of the relations.
AdmissibilityReport check_admissible(const BoundQuiver& bq, int max_len,
                                     size_t path_budget = 200000);

/// The finite-dimensional quotient algebra, organized as residue-class
/// representatives per (source, target) vertex pair. Structure constants
/// are exact rationals; representation modules convert them into their
/// working field.
///
/// Basis order: blocks sorted by (source, target), paths inside a block
/// graded by length then lexicographic on arrow ids.
class PathAlgebra {
public:
    /// Throws std::runtime_error when the ideal is not admissible within
    /// max_len.
    static PathAlgebra build(const BoundQuiver& bq, int max_len = 8,
                             size_t path_budget = 200000);

    const BoundQuiver& bq() const { return *bq_; }
    int nilpotency_bound() const { return L_; }
    int dim() const { return (int)basis_.size(); }

    const std::vector<Path>& basis() const { return basis_; }
    /// Indices into basis() of elements with the given source vertex.
    std::vector<int> basis_from(int v) const;
    /// Index of a basis path, or -1.
    int basis_index(const Path& p) const;

    /// Residue class of an arbitrary path as a sparse combination of basis
    /// elements. Paths of length >= L reduce to zero.
    std::vector<std::pair<int, Rat>> normal_form(const Path& p) const;
    /// Normal form of a linear combination of parallel paths.
    std::vector<std::pair<int, Rat>> normal_form(
        const std::vector<std::pair<Rat, Path>>& combo) const;

    /// Product basis[i] * basis[j], applying j first. Empty result when the
    /// paths do not compose or the product reduces to zero.
    std::vector<std::pair<int, Rat>> multiply(int i, int j) const;

private:
    struct Block {
        int src = 0, tgt = 0;
        std::vector<int> cols;                 // global path ids
        std::map<int, int> col_pos;            // path id -> column index
        std::vector<std::vector<Rat>> rows;    // rref rows over cols
        std::vector<int> pivot_col;            // per row
        std::vector<int> col_pivot_row;        // per column, -1 = basis
        std::vector<int> basis_of_col;         // per column, global basis idx or -1
    };

    const BoundQuiver* bq_ = nullptr;
    int L_ = 0;
    std::vector<Path> all_paths_;              // length < L, global order
    std::map<Path, int> path_id_;
    std::map<std::pair<int, int>, Block> blocks_;
    std::vector<Path> basis_;
    std::map<Path, int> basis_id_;

    friend AdmissibilityReport check_admissible(const BoundQuiver&, int, size_t);
};

}  // namespace fpq
