#include "fpq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace fpq {

NonnegIntMatrix::NonnegIntMatrix(const std::vector<std::vector<long long>>& rows) {
    n = (int)rows.size();
    a.assign((size_t)n * n, 0);
    for (int i = 0; i < n; ++i) {
        if ((int)rows[i].size() != n)
            throw std::invalid_argument("NonnegIntMatrix: not square");
        for (int j = 0; j < n; ++j) at(i, j) = rows[i][j];
    }
    validate();
}

void NonnegIntMatrix::validate() const {
    for (long long x : a)
        if (x < 0) throw std::invalid_argument("NonnegIntMatrix: negative entry");
}

std::vector<std::vector<int>> strongly_connected_components(const NonnegIntMatrix& c) {
    int n = c.n;
    std::vector<int> index(n, -1), low(n, 0), on(n, 0), stk;
    std::vector<std::vector<int>> comps;
    int counter = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = counter++;
        stk.push_back(v);
        on[v] = 1;
        for (int w = 0; w < n; ++w) {
            if (c.at(v, w) == 0) continue;
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            while (true) {
                int w = stk.back();
                stk.pop_back();
                on[w] = 0;
                comp.push_back(w);
                if (w == v) break;
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) dfs(v);
    return comps;
}

namespace {

NonnegIntMatrix submatrix(const NonnegIntMatrix& c, const std::vector<int>& idx) {
    NonnegIntMatrix b((int)idx.size());
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) b.at(i, j) = c.at(idx[i], idx[j]);
    return b;
}

/// Perron root of an irreducible nonnegative block of size >= 2 via power
/// iteration on B + I with Collatz-Wielandt brackets. The +I shift makes the
/// matrix primitive, so the brackets close in on the (shifted) Perron root.
double perron_iterative(const NonnegIntMatrix& b, double tol) {
    int n = b.n;
    std::vector<double> x(n, 1.0), y(n);
    double lo = 0, hi = 0;
    for (int iter = 0; iter < 200000; ++iter) {
        for (int i = 0; i < n; ++i) {
            double s = x[i];  // the +I shift
            for (int j = 0; j < n; ++j) s += (double)b.at(i, j) * x[j];
            y[i] = s;
        }
        lo = 1e300;
        hi = 0;
        for (int i = 0; i < n; ++i) {
            double q = y[i] / x[i];
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        double norm = 0;
        for (double v : y) norm = std::max(norm, v);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (hi - lo < tol) break;
    }
    return (lo + hi) / 2 - 1.0;
}

/// Exact integer characteristic polynomial coefficients (monic, degree n)
/// via the Faddeev-LeVerrier recurrence over rationals.
std::vector<Rat> charpoly(const NonnegIntMatrix& b) {
    int n = b.n;
    RationalField f;
    Mat<RationalField> A(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.at(i, j) = Rat((long)b.at(i, j));
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    Mat<RationalField> M = Mat<RationalField>::identity(f, n);
    for (int k = 1; k <= n; ++k) {
        Mat<RationalField> AM = A * M;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += AM.at(i, i);
        Rat ck = -tr / k;
        c[n - k] = ck;
        M = AM;
        for (int i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return c;  // p(x) = sum c[k] x^k
}

long double poly_eval(const std::vector<Rat>& c, long double x) {
    long double v = 0;
    for (int k = (int)c.size() - 1; k >= 0; --k) v = v * x + (long double)c[k].get_d();
    return v;
}

}  // namespace

SpectralResult spectral_radius(const NonnegIntMatrix& c, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol > 0 required");
    c.validate();
    if (c.n == 0) return {0.0, "exact"};
    auto comps = strongly_connected_components(c);
    bool all_singletons = true;
    for (const auto& comp : comps)
        if (comp.size() > 1) all_singletons = false;
    if (all_singletons) {
        // Permutation-similar to a triangular matrix: eigenvalues are the
        // diagonal entries.
        long long best = 0;
        for (int i = 0; i < c.n; ++i) best = std::max(best, c.at(i, i));
        return {(double)best, "exact"};
    }
    double best = 0;
    for (const auto& comp : comps) {
        if (comp.size() == 1) {
            best = std::max(best, (double)c.at(comp[0], comp[0]));
        } else {
            best = std::max(best, perron_iterative(submatrix(c, comp), tol / 4));
        }
    }
    return {best, "iterative"};
}

double spectral_radius_charpoly(const NonnegIntMatrix& c, double tol) {
    c.validate();
    if (c.n > 8)
        throw std::invalid_argument("spectral_radius_charpoly: n <= 8 only");
    if (c.n == 0) return 0.0;
    double best = 0;
    for (const auto& comp : strongly_connected_components(c)) {
        if (comp.size() == 1) {
            best = std::max(best, (double)c.at(comp[0], comp[0]));
            continue;
        }
        NonnegIntMatrix b = submatrix(c, comp);
        auto p = charpoly(b);
        // The Perron root of an irreducible block is simple and is the
        // largest real root, so p > 0 above it (monic) and the first sign
        // change scanning downward brackets it.
        long double hi = 1;
        for (int i = 0; i < b.n; ++i) {
            long double rs = 0;
            for (int j = 0; j < b.n; ++j) rs += (long double)b.at(i, j);
            hi = std::max(hi, rs + 1);
        }
        long double lo = hi;
        while (lo > -1 && poly_eval(p, lo) > 0) lo -= 0.25L;
        if (poly_eval(p, lo) > 0)
            throw std::runtime_error("spectral_radius_charpoly: no sign change found");
        long double a = lo, bnd = lo + 0.25L;
        for (int it = 0; it < 200 && bnd - a > (long double)tol / 8; ++it) {
            long double mid = (a + bnd) / 2;
            if (poly_eval(p, mid) < 0)
                a = mid;
            else
                bnd = mid;
        }
        best = std::max(best, (double)((a + bnd) / 2));
    }
    return best;
}

void FactoredPoly::validate() const {
    if (factors.empty()) throw std::invalid_argument("FactoredPoly: no factors");
    for (const auto& [root, mult] : factors) {
        if (root < 0) throw std::invalid_argument("FactoredPoly: negative root");
        if (mult < 1) throw std::invalid_argument("FactoredPoly: multiplicity >= 1");
    }
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        if (!(factors[i].first < factors[i + 1].first))
            throw std::invalid_argument("FactoredPoly: roots must increase strictly");
    if (factors.size() >= 2) {
        double second_last = factors[factors.size() - 2].first;
        double last = factors.back().first;
        if (!(second_last <= last - 1))
            throw std::invalid_argument(
                "FactoredPoly: second largest root must be <= largest - 1");
    }
}

double FactoredPoly::eval(double x) const {
    double v = 1;
    for (const auto& [root, mult] : factors)
        for (int k = 0; k < mult; ++k) v *= (x - root);
    return v;
}

double lemma61_root(const FactoredPoly& f) {
    f.validate();
    double ns = f.largest_root();
    // g(x) = f(x) - 1 has g(ns) = -1 and g(ns + 1) >= 0 under the root-gap
    // invariant, with exactly one root in between.
    double lo = ns, hi = ns + 1;
    while (hi - lo > 1e-12) {
        double mid = (lo + hi) / 2;
        if (f.eval(mid) - 1 < 0)
            lo = mid;
        else
            hi = mid;
    }
    double x0 = (lo + hi) / 2;
    if (std::abs(f.eval(x0) - 1) > 1e-9)
        throw std::runtime_error("lemma61_root: residual check failed");
    return x0;
}

double thm63_case2(long long n_max) {
    if (n_max < 1) throw std::invalid_argument("thm63_case2: n >= 1");
    return ((double)n_max + std::sqrt(4.0 + (double)n_max * (double)n_max)) / 2;
}

double thm63_case3(long long n_max, int s) {
    if (n_max < 1 || s < 1) throw std::invalid_argument("thm63_case3: n >= 1, s >= 1");
    FactoredPoly f;
    f.factors = {{0.0, 1}, {(double)n_max, s}};
    return lemma61_root(f);
}

}  // namespace fpq
