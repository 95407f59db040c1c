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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "logsymp/error.hpp"

namespace logsymp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) throw Error(ErrorCode::InconsistentInput, "zero denominator");
        // boost::rational rejects negative cpp_int denominators; fix the sign first.
        value_ = denominator < 0 ? Backend(BigInt(-numerator), BigInt(-denominator)) : Backend(numerator, denominator);
    }

    /// Parses "p", "-p" or "p/q" (whitespace not allowed).
    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view s) -> BigInt {
            if (s.empty()) throw Error(ErrorCode::Parse, "empty integer in rational '" + std::string(text) + "'");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw Error(ErrorCode::Parse, "bad rational '" + std::string(text) + "'");
            for (std::size_t i = start; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::Parse, "bad rational '" + std::string(text) + "'");
            }
            BigInt v(std::string(s.substr(start)));
            return s[0] == '-' ? BigInt(-v) : v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// True for 0, 1, 2, ...
    bool is_nonnegative_integer() const { return is_integer() && sign() >= 0; }
    /// True for -1, -2, ...
    bool is_negative_integer() const { return is_integer() && sign() < 0; }

    std::string to_string() const {
        BigInt d = denominator();
        if (d == 1) return numerator().str();
        return numerator().str() + "/" + d.str();
    }

    Rational operator-() const { return Rational(Backend(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}
    Backend value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace logsymp
