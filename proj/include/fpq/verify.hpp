#pragma once

#include <string>
#include <vector>

namespace fpq {

struct SuiteResult {
    std::string suite;  // CLI token
    bool pass = true;
    double seconds = 0.0;
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (ok) {
            notes.push_back(what);
        } else {
            pass = false;
            failures.push_back(what);
        }
    }
};

/// Loop-extended path algebras of small tree quivers: the best spectral
/// radius over brick sets equals the maximum loop count over vertices,
/// as an exact integer. (CLI token: thm4.1)
SuiteResult verify_loop_maximum();

/// The four-vertex diamond with one zero relation and loops at the middle
/// vertex: the search finds a two-element brick set with adjacency
/// [[N,1],[1,0]] and best radius (N+sqrt(N^2+4))/2; with a heavier loop
/// vertex added the plain maximum wins. (CLI token: ex4.3)
SuiteResult verify_cycle_example();

/// Nilpotent cyclic-quiver algebras: best radius over brick sets is exactly
/// 1, attained by the all-simples set, and every irreducible adjacency block
/// is a single-cycle permutation matrix. (CLI token: cor5.2)
SuiteResult verify_tube_dimension();

/// For every ordered pair of simples with vanishing first extensions on the
/// rank-3 nilpotency-4 cyclic algebra, a witness brick with the prescribed
/// extension pattern exists and passes recheck. (CLI token: lemma5.3)
SuiteResult verify_tube_witnesses();

/// Root isolation for factored polynomials: reference values plus 200
/// randomized monotonicity instances. (CLI token: lemma6.1)
SuiteResult verify_root_isolation();

/// Refining a factored polynomial by an extra small factor lowers the
/// isolated root; the reference chain is strict. (CLI token: ex6.2)
SuiteResult verify_root_refinement();

/// Mixed cases where the isolated root is not determined by the largest
/// factor alone. (CLI token: ex6.4)
SuiteResult verify_root_mixed_cases();

/// Closed forms for the two-parameter family: interval membership,
/// consistency at s = 1, strict growth in s. (acceptance only)
SuiteResult verify_interval_formulas();

/// Loop-extension cross-checks on line and star quivers: brick bijection,
/// Hom equality, Ext equality on the prescribed pairs, and the per-vertex
/// self-extension table. (CLI token: thm3.3)
SuiteResult verify_loop_reduction();

/// The syzygy-based and cocycle-based first-extension computations agree on
/// every pair of enumerated modules across the corpus (>= 500 pairs).
/// (acceptance only)
SuiteResult verify_oracle_agreement();

/// Hereditary Euler identity dim Hom - dim Ext^1 = <dM, dN> on random
/// representation pairs of relation-free tree quivers. (acceptance only)
SuiteResult verify_euler_identity();

/// One-dimensional commuting-scalar family: extension counts match the
/// closed form, the joint-commutant brick test is exact on dimensions <= 2,
/// and the resulting dimension estimate equals the number of scalars.
/// (CLI token: lemma7.x)
SuiteResult verify_scalar_family();

/// Tokens accepted by the CLI `verify` subcommand.
std::vector<std::string> suite_tokens();

/// Runs the suite for a CLI token; throws std::invalid_argument on an
/// unknown token.
SuiteResult run_suite(const std::string& token);

}  // namespace fpq
