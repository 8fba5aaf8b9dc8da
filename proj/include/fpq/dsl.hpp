#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "fpq/quiver.hpp"

namespace fpq {

/// Parse failure with a 1-based source location.
struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + what_),
          line(line_),
          col(col_) {}
};

struct FieldSpec {
    bool rational = false;  // true for "field Q"
    long long p = 0;        // prime when rational == false
    bool operator==(const FieldSpec&) const = default;
};

/// A parsed quiver description. `base` holds the vertices, arrows (explicit
/// loops included) and relations exactly as written; `loop_counts` holds the
/// `loops` sugar lines, expanded only by elaborate().
///
/// Grammar (line-oriented, '#' starts a comment):
///   vertices NAME...
///   arrow NAME SRC DST        # SRC == DST declares a loop
///   loops VERTEX COUNT        # sugar, expanded via loop_extend
///   rel [INT '*']? PATH (('+'|'-') [INT '*']? PATH)*
///   field p INTEGER | field Q
///   nilpotency INTEGER
/// PATH = NAME ('*' NAME)*, the rightmost arrow applies first.
struct QuiverFile {
    BoundQuiver base;
    std::map<int, int> loop_counts;
    std::optional<FieldSpec> field;
    std::optional<int> nilpotency;

    /// The bound quiver to compute with: `base` with the `loops` lines
    /// expanded (loop truncation order = declared nilpotency, default 2).
    BoundQuiver elaborate() const;

    bool operator==(const QuiverFile& o) const {
        return base == o.base && loop_counts == o.loop_counts &&
               field == o.field && nilpotency == o.nilpotency;
    }
};

QuiverFile parse_quiver(const std::string& text);

/// Canonical text form; parse_quiver(print_quiver(f)) == f.
std::string print_quiver(const QuiverFile& f);

}  // namespace fpq
