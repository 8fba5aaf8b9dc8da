// Acceptance gate: one pass/fail line per criterion. Exit 0 only when every
// criterion passes.

#include <cstdio>
#include <string>
#include <vector>

#include "fpq/verify.hpp"

using fpq::SuiteResult;

namespace {

struct Line {
    int number;
    std::string title;
    std::vector<SuiteResult> results;
};

bool report(const Line& line) {
    bool pass = true;
    double seconds = 0;
    for (const SuiteResult& r : line.results) {
        pass = pass && r.pass;
        seconds += r.seconds;
    }
    std::printf("criterion %2d: %s  (%.1f s)  %s\n", line.number,
                pass ? "PASS" : "FAIL", seconds, line.title.c_str());
    if (!pass)
        for (const SuiteResult& r : line.results)
            for (const std::string& f : r.failures)
                std::printf("    [%s] %s\n", r.suite.c_str(), f.c_str());
    return pass;
}

}  // namespace

int main() {
    std::vector<Line> lines;
    lines.push_back({1,
                     "loop-extended tree algebras: best radius equals the "
                     "maximum loop count",
                     {fpq::verify_loop_maximum()}});
    lines.push_back({2,
                     "diamond with a dead route: non-triangular pair "
                     "[[2,1],[1,0]] and radius 1+sqrt(2)",
                     {fpq::verify_cycle_example()}});
    lines.push_back({3,
                     "nilpotent cyclic algebras: best radius 1, single-cycle "
                     "adjacency blocks",
                     {fpq::verify_tube_dimension()}});
    lines.push_back({4,
                     "witness bricks between extension-orthogonal simples on "
                     "the rank-3 cyclic algebra",
                     {fpq::verify_tube_witnesses()}});
    lines.push_back({5,
                     "root isolation references, orderings, and 200 "
                     "randomized monotonicity instances",
                     {fpq::verify_root_isolation(), fpq::verify_root_refinement(),
                      fpq::verify_root_mixed_cases()}});
    lines.push_back({6,
                     "closed forms: interval membership, s = 1 consistency, "
                     "strict growth in s",
                     {fpq::verify_interval_formulas()}});
    lines.push_back({7,
                     "loop-extension cross-checks: brick bijection, Hom/Ext "
                     "equalities, self-extension table",
                     {fpq::verify_loop_reduction()}});
    lines.push_back({8,
                     "syzygy and cocycle extension computations agree on the "
                     "full corpus (>= 500 pairs)",
                     {fpq::verify_oracle_agreement()}});
    lines.push_back({9,
                     "hereditary Euler identity on random representation pairs",
                     {fpq::verify_euler_identity()}});
    lines.push_back({10,
                     "scalar-tuple family: extension closed form, commutant "
                     "brick test, dimension estimate r",
                     {fpq::verify_scalar_family()}});

    int failed = 0;
    for (const Line& line : lines)
        if (!report(line)) ++failed;
    if (failed == 0) {
        std::printf("all %zu criteria passed\n", lines.size());
        return 0;
    }
    std::printf("%d criteria FAILED\n", failed);
    return 1;
}
