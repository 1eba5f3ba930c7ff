/*
   Copyright 2026 The tmon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TMON_MATRIX_HPP
#define TMON_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace tmon {

using Vector = std::vector<Rational>;

/// Row-major dense matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "row length differs from column count");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const { return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)); }
    Vector col(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
        Vector r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator*(const Rational& s, Matrix a) {
        for (auto& x : a.a_) x *= s;
        return a;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix reduced;                    // same shape as the input, zero rows last
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination in exact arithmetic.
inline RrefResult rref_with_pivots(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline Matrix rref(const Matrix& m) { return rref_with_pivots(m).reduced; }
inline std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivots.size(); }

/// Basis of {v : m v = 0} as the rows of a matrix, one row per free column.
inline Matrix nullspace_rows(const Matrix& m) {
    auto [red, pivots] = rref_with_pivots(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix out(m.cols() - pivots.size(), m.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(k, free) = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) out(k, pivots[i]) = -red(i, free);
        ++k;
    }
    return out;
}

inline Rational det(Matrix m) {
    if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    Rational d(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            m.swap_rows(p, c);
            d = -d;
        }
        d *= m(c, c);
        const Rational inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

/// Unique solution of a x = b; nullopt when a is singular.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) fail(ErrorCode::DimensionMismatch, "solve expects a square system");
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto [red, pivots] = rref_with_pivots(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = red(i, n);
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rational(1);
    }
    auto [red, pivots] = rref_with_pivots(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

/// Characteristic polynomial det(X*I - m): Hessenberg reduction followed by
/// the standard three-term recurrence on leading principal minors.
inline Poly charpoly(Matrix h) {
    const std::size_t n = h.rows();
    if (h.cols() != n) fail(ErrorCode::DimensionMismatch, "charpoly of a non-square matrix");
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m + 1;
        while (i < n && h(i, m - 1).is_zero()) ++i;
        if (h(m, m - 1).is_zero()) {
            if (i == n) continue;
            h.swap_rows(i, m);
            h.swap_cols(i, m);
        }
        const Rational t = h(m, m - 1);
        for (std::size_t k = m + 1; k < n; ++k) {
            if (h(k, m - 1).is_zero()) continue;
            const Rational u = h(k, m - 1) / t;
            for (std::size_t j = 0; j < n; ++j) h(k, j) -= u * h(m, j);
            for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, k);
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = Poly::constant(Rational(1));
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = Poly::linear(h(m - 1, m - 1)) * p[m - 1];
        Rational prod(1);
        for (std::size_t i = m - 1; i-- > 0;) {
            prod *= h(i + 1, i);
            if (prod.is_zero()) break;
            p[m] -= (h(i, m - 1) * prod) * p[i];
        }
    }
    return p[n];
}

}  // namespace tmon

#endif  // TMON_MATRIX_HPP
