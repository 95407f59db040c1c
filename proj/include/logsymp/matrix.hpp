/*
 * Copyright 2026 The logsymp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "logsymp/error.hpp"
#include "logsymp/rational.hpp"

namespace logsymp {

/// Dense row-major matrix over a commutative ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
        }
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<T>& entries() const noexcept { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Submatrix on the given (ordered) row and column index lists.
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
        Matrix s(row_idx.size(), col_idx.size());
        for (std::size_t a = 0; a < row_idx.size(); ++a)
            for (std::size_t b = 0; b < col_idx.size(); ++b) s(a, b) = (*this)(row_idx[a], col_idx[b]);
        return s;
    }

    Matrix principal(std::span<const std::size_t> idx) const { return submatrix(idx, idx); }

    bool is_skew() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!is_zero((*this)(i, i))) return false;
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
        return true;
    }

    bool is_zero_matrix() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero(x); });
    }

    /// Simultaneous relabeling: result(perm[i], perm[j]) = this(i, j), i.e. P·M·Pᵀ.
    Matrix permuted(std::span<const std::size_t> perm) const {
        Matrix p(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) p(perm[i], perm[j]) = (*this)(i, j);
        return p;
    }

    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator*(Matrix m, const T& s) { return m *= s; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

inline QVector operator*(const QMatrix& m, const QVector& v) {
    if (m.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
    QVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

namespace detail {

inline BigInt lcm_of_denominators(std::span<const Rational> row) {
    BigInt l = 1;
    for (const auto& x : row) {
        BigInt d = x.denominator();
        if (d != 1) l = boost::multiprecision::lcm(l, d);
    }
    return l;
}

/// Fraction-free (Bareiss) forward elimination on an integer matrix.
/// Pivot: first row holding a nonzero entry in the first unprocessed column.
struct BareissResult {
    std::vector<std::vector<BigInt>> echelon;
    std::vector<std::size_t> pivot_cols;
    int swap_sign = 1;
};

inline BareissResult bareiss(std::vector<std::vector<BigInt>> a, std::size_t cols) {
    BareissResult out;
    const std::size_t rows = a.size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            out.swap_sign = -out.swap_sign;
        }
        const BigInt& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt f = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (piv * a[i][j] - f * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.echelon = std::move(a);
    return out;
}

inline std::vector<std::vector<BigInt>> integer_rows(const QMatrix& m, std::vector<BigInt>* scales = nullptr) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = lcm_of_denominators(m.row(i));
        if (scales) scales->push_back(l);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            a[i][j] = x.numerator() * (l / x.denominator());
        }
    }
    return a;
}

/// Reduced row echelon form: fraction-free forward pass, rational back substitution.
struct Rref {
    QMatrix reduced;  // rank rows
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(const QMatrix& m) {
    auto forward = bareiss(integer_rows(m), m.cols());
    const std::size_t rank = forward.pivot_cols.size();
    QMatrix red(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i) {
        const BigInt& piv = forward.echelon[i][forward.pivot_cols[i]];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (forward.echelon[i][j] != 0) red(i, j) = Rational(forward.echelon[i][j], piv);
        }
    }
    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t pc = forward.pivot_cols[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = red(k, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) {
                if (!red(i, j).is_zero()) red(k, j) -= f * red(i, j);
            }
        }
    }
    return {std::move(red), std::move(forward.pivot_cols)};
}

}  // namespace detail

/// Row rank over the rationals.
inline std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::bareiss(detail::integer_rows(m), m.cols()).pivot_cols.size();
}

/// Determinant of a square matrix (fraction-free elimination).
inline Rational determinant(const QMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<BigInt> scales;
    auto forward = detail::bareiss(detail::integer_rows(m, &scales), n);
    if (forward.pivot_cols.size() < n) return Rational(0);
    BigInt scale = 1;
    for (const auto& s : scales) scale *= s;
    return Rational(forward.echelon[n - 1][n - 1] * forward.swap_sign, scale);
}

/// Basis of the right null space, one vector per free column (free entry 1).
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
    std::vector<QVector> basis;
    if (m.cols() == 0) return basis;
    if (m.rows() == 0) {
        for (std::size_t f = 0; f < m.cols(); ++f) {
            QVector v(m.cols(), Rational(0));
            v[f] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto [red, pivots] = detail::rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Whether v is a rational combination of the columns of m.
inline bool in_column_space(const QMatrix& m, const QVector& v) {
    if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from row count");
    if (m.rows() == 0) return true;
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = v[i];
    }
    return rank(aug) == rank(m);
}

inline QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [red, pivots] = detail::rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    }
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

}  // namespace logsymp
