#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpq/field.hpp"

namespace fpq {

/// Dense row-major matrix over an exact field F. Empty shapes (0 rows or
/// 0 cols) are legal and show up constantly as zero-dimensional vertex
/// spaces.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    F f{};
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(F field, int r, int c)
        : f(field), rows(r), cols(c), a((size_t)r * c, field.zero()) {}

    static Mat zero(F field, int r, int c) { return Mat(field, r, c); }
    static Mat identity(F field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    Elem& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Elem& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool same_field(const Mat& o) const { return f == o.f; }

    Mat operator*(const Mat& o) const {
        require_field(o);
        if (cols != o.rows) throw std::invalid_argument("Mat: dim mismatch in mul");
        Mat r(f, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Elem& aik = at(i, k);
                if (f.is_zero(aik)) continue;
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) = f.add(r.at(i, j), f.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        require_field(o);
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("Mat: dim mismatch in add");
        Mat r(f, rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.add(a[i], o.a[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_field(o);
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("Mat: dim mismatch in sub");
        Mat r(f, rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.sub(a[i], o.a[i]);
        return r;
    }

    Mat scaled(const Elem& c) const {
        Mat r(f, rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.mul(a[i], c);
        return r;
    }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols || !(f == o.f)) return false;
        for (size_t i = 0; i < a.size(); ++i) {
            if (f.is_zero(f.sub(a[i], o.a[i])) == false) return false;
        }
        return true;
    }

    /// Stacks o to the right of *this.
    Mat hcat(const Mat& o) const {
        require_field(o);
        if (rows != o.rows) throw std::invalid_argument("Mat: hcat row mismatch");
        Mat r(f, rows, cols + o.cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
        }
        return r;
    }

    /// Block-diagonal sum.
    Mat dsum(const Mat& o) const {
        require_field(o);
        Mat r(f, rows + o.rows, cols + o.cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows; ++i)
            for (int j = 0; j < o.cols; ++j) r.at(rows + i, cols + j) = o.at(i, j);
        return r;
    }

    void require_field(const Mat& o) const {
        if (!(f == o.f)) throw std::invalid_argument("Mat: field mismatch");
    }
};

}  // namespace fpq
