#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpq/ext.hpp"
#include "fpq/path_algebra.hpp"
#include "fpq/rep.hpp"
#include "fpq/spectral.hpp"

namespace fpq {

struct EnumOptions {
    /// Upper bound on the number of matrix tuples per dimension vector; a
    /// dimension vector whose full tuple count exceeds this is skipped
    /// entirely (never half-enumerated), which keeps partial results
    /// deterministic.
    long long budget = 1LL << 26;
    bool parallel = true;
    int threads = 0;  // 0 = library default
    IsoOptions iso{};
};

struct BrickList {
    const BoundQuiver* bq = nullptr;
    std::vector<int> cap;
    PrimeField field;
    std::vector<Rep<PrimeField>> bricks;
    /// True when every dimension vector under the cap was fully enumerated.
    bool exhaustive = true;
};

/// A pairwise Hom-orthogonal subset of a BrickList together with its Ext
/// adjacency matrix a_ij = dim Ext^1(X_i, X_j).
struct BrickSet {
    std::vector<int> members;  // indices into the owning BrickList, increasing
    std::vector<std::vector<long long>> adjacency;
};

struct FpEstimate {
    double best = 0.0;
    std::string method;  // spectral method tag of the winning set
    BrickSet witness;
    BrickList bricks;
    int max_size = 0;
    double tol = 1e-9;
    /// Closed-form value attached when the input is recognized as a family
    /// with a known answer; `best` is always a certified lower bound.
    std::optional<double> predicted;
    std::string predicted_from;
};

/// All modules (every dimension vector <= cap pointwise, every matrix tuple,
/// relations enforced), deduplicated up to isomorphism, ordered by dimension
/// vector then canonical encoding. `exhaustive` reports budget completeness.
std::vector<Rep<PrimeField>> enumerate_modules(const BoundQuiver& bq,
                                               const std::vector<int>& cap,
                                               PrimeField field,
                                               const EnumOptions& opt = {},
                                               bool* exhaustive = nullptr);

/// As enumerate_modules but keeps only bricks. The parallel kernel and the
/// serial reference produce identical lists.
BrickList enumerate_bricks(const BoundQuiver& bq, const std::vector<int>& cap,
                           PrimeField field, const EnumOptions& opt = {});
BrickList enumerate_bricks_serial(const BoundQuiver& bq,
                                  const std::vector<int>& cap, PrimeField field,
                                  const EnumOptions& opt = {});

/// Streams every pairwise Hom-orthogonal subset of size 1..max_size in
/// deterministic (lexicographic) order, with the Ext adjacency matrix filled
/// in. Return false from the visitor to stop early.
void enumerate_brick_sets(const BrickList& bricks, int max_size,
                          ExtContext<PrimeField>& ctx,
                          const std::function<bool(const BrickSet&)>& visit);

/// Maximizes the spectral radius of the adjacency matrix over all brick sets
/// found under the cap; attaches the closed-form prediction when the input
/// carries recognizable origin metadata.
FpEstimate fpdim_search(const BoundQuiver& bq, const std::vector<int>& cap,
                        int max_size, PrimeField field, double tol = 1e-9,
                        const EnumOptions& opt = {});

/// For a nilpotent cyclic-quiver algebra and two distinct simples S1, S2
/// with Ext^1(S1, S2) = 0: the smallest brick M (ordered by total dimension,
/// then encoding) with Ext^1(S1, M) = 1, Ext^1(M, S2) = 1 and {S1, S2, M} a
/// brick set. In small-rank tubes M can itself be a simple; throws when the
/// nilpotency bound is too small to contain any witness.
Rep<PrimeField> tube_witness(const BoundQuiver& tube, int s1_vertex,
                             int s2_vertex, PrimeField field,
                             const EnumOptions& opt = {});

/// View a module over the loop-free algebra B as a module over the
/// loop-extended algebra A (zero action on every loop).
Rep<PrimeField> extend_by_zero(const BoundQuiver& a, const Rep<PrimeField>& m_b);

struct LoopExtensionReport {
    bool ok = false;
    bool exhaustive = true;
    std::vector<std::string> failures;
    int bricks_extended = 0;
    int bricks_reduced = 0;
    int pairs_checked = 0;
    /// Per vertex: (loop count, dim Ext^1(S_v, S_v) over the extended algebra).
    std::vector<std::pair<int, int>> self_ext_table;
};

/// Cross-checks the loop-extension structure: bricks of the extended algebra
/// all have zero loop action and biject with bricks of the reduced algebra;
/// Hom dimensions agree on brick pairs; Ext^1 agrees on module pairs with
/// vanishing Hom and on self-extensions of non-simple bricks; the simple at
/// each vertex has exactly one self-extension per loop.
LoopExtensionReport loop_extension_report(const BoundQuiver& a,
                                          const std::vector<int>& cap,
                                          PrimeField field,
                                          const EnumOptions& opt = {});

}  // namespace fpq
