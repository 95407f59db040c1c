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
#include <vector>

#include "logsymp/complex_model.hpp"
#include "logsymp/error.hpp"
#include "logsymp/leaf_analysis.hpp"
#include "logsymp/matrix.hpp"
#include "logsymp/pfaffian.hpp"

namespace logsymp {

/// Torus-invariant germ: indices [0, n_divisor) are divisor directions, the rest symplectic.
struct GermClass {
    std::size_t n_divisor = 0;
    QMatrix full_matrix;

    GermClass() = default;
    GermClass(std::size_t n, QMatrix m) : n_divisor(n), full_matrix(std::move(m)) {
        if (!full_matrix.is_skew()) throw Error(ErrorCode::NotSkew, "germ matrix is not skew-symmetric");
        if (full_matrix.rows() < n_divisor) throw Error(ErrorCode::DimensionMismatch, "germ matrix smaller than divisor count");
    }

    /// The divisor block as a class on the affine simplex.
    LogClass divisor_class() const {
        std::vector<std::size_t> idx(n_divisor);
        for (std::size_t i = 0; i < n_divisor; ++i) idx[i] = i;
        return LogClass(affine_germ_complex(n_divisor), full_matrix.principal(idx));
    }
};

/// Coefficients from degree 0 upward, no trailing zeros.
using PoincarePolynomial = std::vector<unsigned long long>;

inline bool germ_is_nondegenerate(const GermClass& g) {
    if (g.full_matrix.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "germ dimension is odd");
    return !pfaffian(g.full_matrix).is_zero();
}

/// Odd divisor subsets Δ with (1,...,1) in the image of B_Δ.
inline std::vector<Simplex> germ_holonomicity_violators(const GermClass& g) {
    std::vector<Simplex> out;
    const std::size_t n = g.n_divisor;
    for (const auto& f : affine_germ_complex(n)->faces()) {
        if (f.size() % 2 == 0) continue;
        QMatrix b = g.full_matrix.principal(f);
        if (in_column_space(b, QVector(f.size(), Rational(1)))) out.push_back(f);
    }
    return out;
}

/// Exponent data of the cocycle attached to a divisor subset.
struct CocycleData {
    Simplex simplex;
    std::map<std::size_t, Rational> t;      // k outside Δ
    std::map<std::size_t, Rational> alpha;  // i in Δ
};

inline CocycleData cocycle_data(const GermClass& g, const Simplex& simplex) {
    Simplex s = simplex;
    std::sort(s.begin(), s.end());
    for (auto v : s)
        if (v >= g.n_divisor) throw Error(ErrorCode::BadVertex, "simplex index is not a divisor direction");
    CocycleData out{s, {}, {}};
    const QMatrix b = g.full_matrix.principal(s);
    QMatrix inv;
    try {
        inv = inverse(b);
    } catch (const Error&) {
        throw Error(ErrorCode::DegenerateSimplex, "biresidue of the simplex is not invertible");
    }
    const std::size_t m = s.size();
    for (std::size_t a = 0; a < m; ++a) {
        Rational alpha(0);
        for (std::size_t c = 0; c < m; ++c) alpha += inv(c, a);
        out.alpha.emplace(s[a], alpha);
    }
    for (std::size_t k = 0; k < g.n_divisor; ++k) {
        if (std::binary_search(s.begin(), s.end(), k)) continue;
        Rational t(0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t c = 0; c < m; ++c) t -= inv(a, c) * g.full_matrix(s[c], k);
        out.t.emplace(k, t);
    }
    return out;
}

/// Divisor subsets contributing to the Poisson cohomology, with their data.
inline std::vector<CocycleData> contributing_simplices(const GermClass& g) {
    std::vector<CocycleData> out;
    for (const auto& f : affine_germ_complex(g.n_divisor)->faces()) {
        if (f.size() % 2 != 0) continue;
        if (rank(g.full_matrix.principal(f)) < f.size()) continue;
        auto data = cocycle_data(g, f);
        bool valid = true;
        for (const auto& [k, t] : data.t) valid = valid && t.is_nonnegative_integer();
        if (valid) out.push_back(std::move(data));
    }
    return out;
}

namespace detail {

inline void require_cohomology_preconditions(const GermClass& g) {
    // Holonomicity first: its violator list is the more informative diagnostic.
    auto violators = germ_holonomicity_violators(g);
    if (!violators.empty()) throw NotHolonomicError(std::move(violators), "germ form is not holonomic");
    if (!germ_is_nondegenerate(g)) throw Error(ErrorCode::Degenerate, "germ form is degenerate");
}

}  // namespace detail

/// P(t) = Σ_Δ t^{|Δ|} (1+t)^{n - |Δ|} over contributing divisor subsets Δ.
inline PoincarePolynomial poisson_poincare(const GermClass& g) {
    detail::require_cohomology_preconditions(g);
    const std::size_t n = g.n_divisor;
    PoincarePolynomial p(n + 1, 0);
    for (const auto& c : contributing_simplices(g)) {
        const std::size_t k = c.simplex.size();
        // t^k (1+t)^{n-k}
        unsigned long long binom = 1;
        for (std::size_t j = 0; j <= n - k; ++j) {
            p[k + j] += binom;
            binom = binom * (n - k - j) / (j + 1);
        }
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// dim HP^2 = b_2 of the open torus + number of smoothable edges.
inline std::size_t hp2_dimension(const LogClass& cls) {
    std::size_t free = 0;
    switch (cls.complex().kind()) {
        case ComplexKind::ProjectiveSpace: free = cls.num_vertices() - 1; break;
        case ComplexKind::AffineGerm: free = cls.num_vertices(); break;
        case ComplexKind::Custom: throw Error(ErrorCode::UnsupportedComplex, "no b2 model for custom complexes");
    }
    return free * (free - 1) / 2 + smoothing_diagram_of(cls).size();
}

inline std::size_t hp2_dimension(const GermClass& g) { return hp2_dimension(g.divisor_class()); }

struct CohomologyReport {
    PoincarePolynomial poincare;
    std::vector<CocycleData> contributing;
    std::size_t hp2 = 0;
};

inline CohomologyReport cohomology_report(const GermClass& g) {
    CohomologyReport r;
    r.poincare = poisson_poincare(g);
    r.contributing = contributing_simplices(g);
    r.hp2 = hp2_dimension(g);
    return r;
}

}  // namespace logsymp
