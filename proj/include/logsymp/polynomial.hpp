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
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "logsymp/error.hpp"
#include "logsymp/rational.hpp"

namespace logsymp {

using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order: total degree first, then lexicographic on exponents.
struct GrLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const auto da = std::accumulate(a.begin(), a.end(), 0U);
        const auto db = std::accumulate(b.begin(), b.end(), 0U);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Exponent vectors always have length `variables()`; combining polynomials
/// with different variable counts pads the shorter one with zeros.
class QPoly {
public:
    using Terms = std::map<Exponents, Rational, GrLexLess>;

    QPoly() = default;
    QPoly(long long c) : QPoly(0, Rational(c)) {}  // NOLINT(google-explicit-constructor)
    QPoly(std::size_t variables, const Rational& c) : variables_(variables) {
        if (!c.is_zero()) terms_.emplace(Exponents(variables, 0), c);
    }

    static QPoly variable(std::size_t variables, std::size_t index) {
        if (index >= variables) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
        QPoly p;
        p.variables_ = variables;
        Exponents e(variables, 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    /// Σ coeffs[i]·x_i.
    static QPoly linear(std::span<const Rational> coeffs) {
        QPoly p;
        p.variables_ = coeffs.size();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.terms_.emplace(std::move(e), coeffs[i]);
        }
        return p;
    }

    std::size_t variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    unsigned total_degree() const {
        if (terms_.empty()) return 0;
        const auto& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), 0U);
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() < variables_) throw Error(ErrorCode::DimensionMismatch, "evaluation point too short");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
            sum += term;
        }
        return sum;
    }

    /// Substitutes x_index = value; the variable count is kept.
    QPoly substitute(std::size_t index, const Rational& value) const {
        QPoly out;
        out.variables_ = variables_;
        for (const auto& [e, c] : terms_) {
            Rational coeff = c;
            if (index < e.size())
                for (unsigned k = 0; k < e[index]; ++k) coeff *= value;
            if (coeff.is_zero()) continue;
            Exponents f = e;
            if (index < f.size()) f[index] = 0;
            auto [it, inserted] = out.terms_.try_emplace(std::move(f), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        return out;
    }

    QPoly operator-() const {
        QPoly p = *this;
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    QPoly& operator+=(const QPoly& o) { return accumulate(o, Rational(1)); }
    QPoly& operator-=(const QPoly& o) { return accumulate(o, Rational(-1)); }

    QPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    QPoly& operator*=(const QPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly out;
        out.variables_ = std::max(a.variables_, b.variables_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(out.variables_, 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                auto [it, inserted] = out.terms_.try_emplace(std::move(e), ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        }
        return out;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) {
        if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
        return (a - b).is_zero();
    }

    /// Terms in descending graded-lex order, variables named x0, x1, ...
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool constant = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
            Rational mag = abs(c);
            if (s.empty()) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (constant) {
                s += mag.to_string();
            } else if (mag == Rational(1)) {
                s += mono;
            } else {
                s += mag.to_string() + "*" + mono;
            }
        }
        return s;
    }

private:
    QPoly& accumulate(const QPoly& o, const Rational& sign) {
        if (o.variables_ > variables_) pad(o.variables_);
        for (const auto& [eo, co] : o.terms_) {
            Exponents e = eo;
            e.resize(variables_, 0);
            auto [it, inserted] = terms_.try_emplace(std::move(e), co * sign);
            if (!inserted) {
                it->second += co * sign;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    void pad(std::size_t variables) {
        Terms padded;
        for (auto& [e, c] : terms_) {
            Exponents p = e;
            p.resize(variables, 0);
            padded.emplace(std::move(p), c);
        }
        terms_ = std::move(padded);
        variables_ = variables;
    }

    std::size_t variables_ = 0;
    Terms terms_;
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }

}  // namespace logsymp
