#pragma once

#include <string>
#include <vector>

#include "fpq/field.hpp"
#include "fpq/linalg.hpp"
#include "fpq/matrix.hpp"

namespace fpq {

/// Square matrix of nonnegative integers (Ext adjacency matrices).
struct NonnegIntMatrix {
    int n = 0;
    std::vector<long long> a;

    NonnegIntMatrix() = default;
    explicit NonnegIntMatrix(int n_) : n(n_), a((size_t)n_ * n_, 0) {}
    explicit NonnegIntMatrix(const std::vector<std::vector<long long>>& rows);

    long long& at(int i, int j) { return a[(size_t)i * n + j]; }
    long long at(int i, int j) const { return a[(size_t)i * n + j]; }

    void validate() const;  // throws on negative entries
};

/// Strongly connected components in reverse topological order (every edge of
/// the condensation goes from a later component to an earlier one).
std::vector<std::vector<int>> strongly_connected_components(const NonnegIntMatrix& c);

struct SpectralResult {
    double value = 0.0;
    std::string method;  // "exact" (triangularizable case) or "iterative"
};

/// Largest eigenvalue modulus of a nonnegative integer matrix.
/// When every strongly connected component is a single vertex the matrix is
/// permutation-similar to a triangular one and the answer is the exact max
/// diagonal entry. Otherwise each nontrivial component is handled by power
/// iteration on (block + I) with Collatz-Wielandt bracketing, which converges
/// for imprimitive blocks too and locates the Perron root shifted by one.
SpectralResult spectral_radius(const NonnegIntMatrix& c, double tol = 1e-9);

/// Independent cross-check: per irreducible block, bisection on the exact
/// characteristic polynomial (rational arithmetic) around its largest real
/// root. Intended for small matrices (n <= 8); throws above that.
double spectral_radius_charpoly(const NonnegIntMatrix& c, double tol = 1e-9);

/// f(x) = prod (x - n_i)^{r_i} with 0 <= n_1 < ... < n_{s-1} <= n_s - 1.
struct FactoredPoly {
    std::vector<std::pair<double, int>> factors;  // (root, multiplicity)

    void validate() const;
    double eval(double x) const;
    double largest_root() const { return factors.back().first; }
};

/// The unique real root x0 of f(x) = 1 in (n_s, n_s + 1], located by
/// bisection to interval width 1e-12. Equals the largest eigenvalue bound
/// associated with f(x) - 1.
double lemma61_root(const FactoredPoly& f);

/// Closed form (n + sqrt(4 + n^2)) / 2, the root of x(x - n) = 1.
double thm63_case2(long long n_max);
/// Root of x (x - n_max)^s = 1 in (n_max, n_max + 1].
double thm63_case3(long long n_max, int s);

/// Extension count for the one-dimensional commuting-tuple family: pairs
/// (lambda, mu) of r scalars extend nontrivially iff lambda = mu, in which
/// case the space has dimension exactly r.
template <class F>
int poly_ext1(const F& f, const std::vector<typename F::Elem>& lambda,
              const std::vector<typename F::Elem>& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("poly_ext1: length mismatch");
    int r = (int)lambda.size();
    if (r < 1) throw std::invalid_argument("poly_ext1: r >= 1");
    // Cocycles: a_j (mu_i - lambda_i) = a_i (mu_j - lambda_j) for i < j.
    Mat<F> sys(f, r * (r - 1) / 2, r);
    int row = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j, ++row) {
            sys.at(row, j) = f.add(sys.at(row, j), f.sub(mu[i], lambda[i]));
            sys.at(row, i) = f.sub(sys.at(row, i), f.sub(mu[j], lambda[j]));
        }
    int z = r - rank_destructive(sys);
    bool equal = true;
    for (int i = 0; i < r; ++i)
        if (!f.is_zero(f.sub(lambda[i], mu[i]))) equal = false;
    // Coboundaries: the one-parameter family a_i = c (lambda_i - mu_i),
    // zero exactly when lambda = mu.
    return z - (equal ? 0 : 1);
}

/// Joint commutant test for a commuting matrix tuple: End is one-dimensional
/// iff the underlying space is a line. Throws when the input does not commute.
template <class F>
bool poly_brick_check(const std::vector<Mat<F>>& c) {
    if (c.empty()) throw std::invalid_argument("poly_brick_check: empty tuple");
    const F& f = c[0].f;
    int n = c[0].rows;
    for (const auto& m : c) {
        if (m.rows != n || m.cols != n)
            throw std::invalid_argument("poly_brick_check: shapes differ");
    }
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (!(c[i] * c[j] == c[j] * c[i]))
                throw std::invalid_argument("poly_brick_check: matrices do not commute");
    // Solve D C_i = C_i D for all i: unknown D flattened row-major.
    Mat<F> sys(f, (int)c.size() * n * n, n * n);
    int r0 = 0;
    for (const auto& m : c) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int row = r0 + i * n + j;
                // (D m)_{ij} - (m D)_{ij} = sum_k D_{ik} m_{kj} - m_{ik} D_{kj}
                for (int k = 0; k < n; ++k) {
                    sys.at(row, i * n + k) =
                        f.add(sys.at(row, i * n + k), m.at(k, j));
                    sys.at(row, k * n + j) =
                        f.sub(sys.at(row, k * n + j), m.at(i, k));
                }
            }
        r0 += n * n;
    }
    int commutant = n * n - rank_destructive(sys);
    return commutant == 1;
}

}  // namespace fpq
