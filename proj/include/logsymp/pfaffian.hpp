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

#include <cstddef>
#include <vector>

#include "logsymp/error.hpp"
#include "logsymp/matrix.hpp"
#include "logsymp/polynomial.hpp"

namespace logsymp {

struct PfaffianOptions {
    /// Sizes up to this use expansion along the first row.
    std::size_t expansion_limit = 8;
    /// Larger inputs are rejected.
    std::size_t max_size = 40;
};

namespace detail {

template <typename T>
void check_pfaffian_input(const Matrix<T>& m, std::size_t max_size) {
    if (!m.is_square()) throw Error(ErrorCode::NotSkew, "Pfaffian of a non-square matrix");
    if (!m.is_skew()) throw Error(ErrorCode::NotSkew, "Pfaffian of a non-skew matrix");
    if (m.rows() % 2 != 0) throw Error(ErrorCode::OddSize, "Pfaffian of an odd-size matrix");
    if (m.rows() > max_size) throw Error(ErrorCode::SizeGuard, "matrix exceeds the Pfaffian size cap");
}

// Pf(A) = Σ_j (-1)^(j+1) a_{0j} Pf(A with rows/cols 0, j removed), over the live index list.
template <typename T>
T pfaffian_expand(const Matrix<T>& m, std::vector<std::size_t>& live) {
    if (live.empty()) return T(1);
    const std::size_t first = live.front();
    T total(0);
    for (std::size_t pos = 1; pos < live.size(); ++pos) {
        const T& a = m(first, live[pos]);
        if (is_zero(a)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(live.size() - 2);
        for (std::size_t q = 1; q < live.size(); ++q)
            if (q != pos) rest.push_back(live[q]);
        T minor = pfaffian_expand(m, rest);
        if (is_zero(minor)) continue;
        T term = a * minor;
        if (pos % 2 == 1) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

// Skew Gaussian elimination with congruence updates; Pf is the product of 2x2 pivots.
inline Rational pfaffian_eliminate(QMatrix a) {
    const std::size_t n = a.rows();
    Rational pf(1);
    auto swap_index = [&](std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    };
    // row_i -= f * row_src; col_i -= f * col_src.
    auto add_multiple = [&](std::size_t i, std::size_t src, const Rational& f) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(src, j);
        for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, src);
    };
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        while (piv < n && a(k, piv).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k + 1) {
            swap_index(piv, k + 1);
            pf = -pf;
        }
        const Rational head = a(k, k + 1);
        pf *= head;
        for (std::size_t i = k + 2; i < n; ++i) {
            if (!a(k, i).is_zero()) add_multiple(i, k + 1, a(k, i) / head);
            if (!a(k + 1, i).is_zero()) add_multiple(i, k, a(k + 1, i) / a(k + 1, k));
        }
    }
    return pf;
}

}  // namespace detail

/// Pfaffian of an even skew-symmetric rational matrix; Pf(m)^2 = det(m).
inline Rational pfaffian(const QMatrix& m, const PfaffianOptions& options = {}) {
    detail::check_pfaffian_input(m, options.max_size);
    if (m.rows() <= options.expansion_limit) {
        std::vector<std::size_t> live(m.rows());
        for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
        return detail::pfaffian_expand(m, live);
    }
    return detail::pfaffian_eliminate(m);
}

/// Pfaffian of a skew matrix of polynomials, by deterministic first-row expansion.
inline QPoly pfaffian_symbolic(const Matrix<QPoly>& m, const PfaffianOptions& options = {}) {
    detail::check_pfaffian_input(m, options.max_size);
    std::vector<std::size_t> live(m.rows());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    return detail::pfaffian_expand(m, live);
}

}  // namespace logsymp
