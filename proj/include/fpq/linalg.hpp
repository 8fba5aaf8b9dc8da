#pragma once

#include <optional>
#include <vector>

#include "fpq/matrix.hpp"

namespace fpq {

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row, in order. The RREF of a matrix is unique, so this doubles
/// as a canonical form.
template <class F>
std::vector<int> rref_inplace(Mat<F>& m) {
    const F& f = m.f;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        auto piv_inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            auto factor = m.at(i, c);
            if (f.is_zero(factor)) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
Mat<F> rref(Mat<F> m) {
    rref_inplace(m);
    return m;
}

template <class F>
int rank(Mat<F> m) {
    return (int)rref_inplace(m).size();
}

/// Rank without the back-substitution work; used on hot paths.
template <class F>
int rank_destructive(Mat<F>& m) {
    const F& f = m.f;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        for (int i = sel + 1; i < m.rows; ++i) {
            auto factor = f.div(m.at(i, c), m.at(r, c));
            if (f.is_zero(factor)) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

/// Columns span ker(A); there are exactly cols - rank of them (rank-nullity).
template <class F>
Mat<F> kernel_basis(Mat<F> a) {
    const F f = a.f;
    const int n = a.cols;
    auto pivots = rref_inplace(a);
    std::vector<int> pivot_row_of_col(n, -1);
    for (int r = 0; r < (int)pivots.size(); ++r) pivot_row_of_col[pivots[r]] = r;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (pivot_row_of_col[c] < 0) free_cols.push_back(c);
    Mat<F> k(f, n, (int)free_cols.size());
    for (int j = 0; j < (int)free_cols.size(); ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = f.one();
        for (int c = 0; c < n; ++c) {
            int pr = pivot_row_of_col[c];
            if (pr >= 0) k.at(c, j) = f.neg(a.at(pr, fc));
        }
    }
    return k;
}

/// Solves A x = b. Returns nullopt when inconsistent; otherwise one
/// particular solution (free variables set to zero).
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve: dim mismatch");
    const F f = a.f;
    Mat<F> aug = a.hcat(b);
    auto pivots = rref_inplace(aug);
    for (int c : pivots)
        if (c >= a.cols) return std::nullopt;  // pivot in the rhs block
    Mat<F> x(f, a.cols, b.cols);
    for (int r = 0; r < (int)pivots.size(); ++r)
        for (int j = 0; j < b.cols; ++j) x.at(pivots[r], j) = aug.at(r, a.cols + j);
    return x;
}

/// Solves for all columns at once; throws if inconsistent.
template <class F>
Mat<F> solve_or_throw(const Mat<F>& a, const Mat<F>& b) {
    auto x = solve(a, b);
    if (!x) throw std::runtime_error("solve: inconsistent system");
    return *x;
}

}  // namespace fpq
