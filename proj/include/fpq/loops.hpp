#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpq/path_algebra.hpp"
#include "fpq/quiver.hpp"

namespace fpq {

struct LoopCommutativityReport {
    bool ok = false;
    /// Offending products, printed in written order (leftmost applied last).
    std::vector<std::string> violations;
};

/// True iff every loop*arrow and arrow*loop product reduces to zero and
/// loops at a common vertex commute, all checked inside the quotient
/// algebra.
LoopCommutativityReport check_loop_commutativity(const PathAlgebra& pa);

/// Adds `counts[v]` loops at each vertex, together with the relations that
/// keep the ideal admissible and the loop products dead: loop*arrow and
/// arrow*loop products, commutators of loops at one vertex, and loop^d for
/// a configurable truncation order d >= 2.
BoundQuiver loop_extend(const BoundQuiver& bq, const std::map<int, int>& counts,
                        int nilpotency_order = 2);

/// Removes all loops, deleting every relation term that mentions one.
/// Requires the commutativity condition; checked via `pa`.
BoundQuiver loop_reduce(const BoundQuiver& bq, const PathAlgebra& pa);

}  // namespace fpq
