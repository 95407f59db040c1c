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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logsymp/complex_model.hpp"
#include "logsymp/diagram.hpp"
#include "logsymp/error.hpp"
#include "logsymp/leaf_analysis.hpp"
#include "logsymp/matrix.hpp"
#include "logsymp/pfaffian.hpp"
#include "logsymp/polynomial.hpp"

namespace logsymp {

/// Basis of the space of admissible full biresidue matrices.
///
/// Projective space: zero-row-sum skew matrices, basis chart_to_full(E_ab - E_ba)
/// for chart indices a < b, so coordinates are chart entries. Affine germ: all
/// skew matrices, basis E_ij - E_ji for i < j.
inline std::vector<QMatrix> ambient_space(const DualComplex& complex) {
    std::vector<QMatrix> basis;
    switch (complex.kind()) {
        case ComplexKind::ProjectiveSpace: {
            const std::size_t m = complex.num_vertices() - 1;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) {
                    QMatrix chart(m, m);
                    chart(a, b) = 1;
                    chart(b, a) = -1;
                    basis.push_back(chart_to_full(chart).matrix());
                }
            return basis;
        }
        case ComplexKind::AffineGerm: {
            const std::size_t d = complex.num_vertices();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    QMatrix e(d, d);
                    e(i, j) = 1;
                    e(j, i) = -1;
                    basis.push_back(std::move(e));
                }
            return basis;
        }
        case ComplexKind::Custom: break;
    }
    throw Error(ErrorCode::UnsupportedComplex, "no ambient cohomology model for custom complexes");
}

namespace detail {

// Coefficients of the entry (i, j) as a linear form in the coordinates of `basis`.
inline QVector entry_form(const std::vector<QMatrix>& basis, std::size_t i, std::size_t j) {
    QVector f(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) f[t] = basis[t](i, j);
    return f;
}

// B_jk + B_ki, the numerator of the order of edge e at k.
inline QVector order_numerator_form(const std::vector<QMatrix>& basis, const Edge& e, std::size_t k) {
    QVector f(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) f[t] = basis[t](e.j, k) + basis[t](k, e.i);
    return f;
}

inline bool is_zero_form(const QVector& f) {
    for (const auto& x : f)
        if (!x.is_zero()) return false;
    return true;
}

inline QMatrix combine(const std::vector<QMatrix>& basis, std::span<const Rational> coeffs, std::size_t size) {
    QMatrix m(size, size);
    for (std::size_t t = 0; t < basis.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                if (!basis[t](i, j).is_zero()) m(i, j) += coeffs[t] * basis[t](i, j);
    }
    return m;
}

// If g = c·f with f != 0, returns c.
inline std::optional<Rational> proportionality(const QVector& g, const QVector& f) {
    std::optional<Rational> c;
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (f[t].is_zero()) {
            if (!g[t].is_zero()) return std::nullopt;
            continue;
        }
        Rational r = g[t] / f[t];
        if (c && *c != r) return std::nullopt;
        c = r;
    }
    return c;
}

}  // namespace detail

/// Rows L_k - m_k·B_e over the ambient coordinates, one per (edge of Γ, opposite vertex).
inline QMatrix constraint_matrix(const SmoothingDiagram& d, const DualComplex& complex) {
    const auto basis = ambient_space(complex);
    if (d.num_vertices() != complex.num_vertices()) {
        throw Error(ErrorCode::DimensionMismatch, "diagram and complex have different vertex counts");
    }
    std::vector<QVector> rows;
    for (const auto& [e, orders] : d.decorated_edges()) {
        if (!complex.is_face(e)) throw Error(ErrorCode::NotAFace, "diagram edge is not a face");
        const QVector b = detail::entry_form(basis, e.i, e.j);
        for (auto k : complex.opposite_vertices(e)) {
            QVector row = detail::order_numerator_form(basis, e, k);
            auto it = orders.find(k);
            if (it != orders.end()) {
                const Rational m(static_cast<long long>(it->second));
                for (std::size_t t = 0; t < row.size(); ++t) row[t] -= m * b[t];
            }
            rows.push_back(std::move(row));
        }
    }
    QMatrix c(rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t t = 0; t < basis.size(); ++t) c(r, t) = rows[r][t];
    return c;
}

/// The subspace W of classes satisfying the diagram's order equations.
struct StratumSpace {
    std::vector<QMatrix> basis;   // full matrices spanning W
    std::size_t dimension = 0;
};

inline StratumSpace solve_stratum(const SmoothingDiagram& d, const DualComplex& complex) {
    const auto ambient = ambient_space(complex);
    const QMatrix c = constraint_matrix(d, complex);
    std::vector<QVector> kernel;
    if (c.rows() == 0) {
        for (std::size_t t = 0; t < ambient.size(); ++t) {
            QVector v(ambient.size(), Rational(0));
            v[t] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = kernel_basis(c);
    }
    StratumSpace s;
    for (const auto& v : kernel) s.basis.push_back(detail::combine(ambient, v, complex.num_vertices()));
    s.dimension = s.basis.size();
    return s;
}

enum class Verdict { Realizable, EmptyOrDegenerate, EdgeForcedZero, ExtraSmoothableEdge, NotAStratum };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return "Realizable";
        case Verdict::EmptyOrDegenerate: return "EmptyOrDegenerate";
        case Verdict::EdgeForcedZero: return "EdgeForcedZero";
        case Verdict::ExtraSmoothableEdge: return "ExtraSmoothableEdge";
        case Verdict::NotAStratum: return "NotAStratum";
    }
    return "Unknown";
}

struct Stratum {
    SmoothingDiagram diagram;
    std::vector<QMatrix> subspace_basis;
    std::size_t dimension = 0;
    std::optional<LogClass> witness;
    Verdict verdict = Verdict::NotAStratum;
    std::optional<Edge> offending_edge;  // EdgeForcedZero / ExtraSmoothableEdge
    OrderMap extra_decoration;           // ExtraSmoothableEdge: generic orders of the extra edge
    std::string reason;
};

struct WitnessOptions {
    std::uint64_t max_radius = std::uint64_t{1} << 16;
};

/// Integer coefficient vector c, found by a box search of doubling radius, with every
/// avoid polynomial nonzero at c and `accept(c)` true. The zero vector is skipped
/// unless the space has dimension zero. Returns nullopt when the cap is reached.
inline std::optional<QVector> search_integer_point(std::size_t dim, const std::vector<QPoly>& avoid,
                                                   const std::function<bool(const QVector&)>& accept,
                                                   const WitnessOptions& options = {}) {
    auto good = [&](const QVector& c) {
        for (const auto& p : avoid)
            if (p.evaluate(c).is_zero()) return false;
        return !accept || accept(c);
    };
    if (dim == 0) {
        QVector empty;
        if (good(empty)) return empty;
        return std::nullopt;
    }
    // Values ordered 0, 1, -1, 2, -2, ...
    auto value = [](std::uint64_t idx) -> long long {
        const auto h = static_cast<long long>((idx + 1) / 2);
        return idx % 2 == 1 ? h : -h;
    };

    // Coordinate-by-coordinate pass: fix c_0, c_1, ... to the first value that keeps
    // every avoid polynomial nonzero after substitution. A polynomial of degree δ in
    // x_i loses its last nonzero coefficient at no more than δ values of x_i, so small
    // coordinates always exist; the box is only scanned when this point is rejected.
    for (std::uint64_t r = 1; r <= options.max_radius; r *= 2) {
        std::vector<QPoly> partial = avoid;
        QVector c(dim, Rational(0));
        bool complete = true;
        for (std::size_t i = 0; i < dim && complete; ++i) {
            bool placed = false;
            for (std::uint64_t idx = 0; idx <= 2 * r && !placed; ++idx) {
                const Rational v(value(idx));
                std::vector<QPoly> next;
                next.reserve(partial.size());
                bool alive = true;
                for (const auto& p : partial) {
                    next.push_back(p.substitute(i, v));
                    if (next.back().is_zero()) {
                        alive = false;
                        break;
                    }
                }
                if (alive) {
                    c[i] = v;
                    partial = std::move(next);
                    placed = true;
                }
            }
            complete = placed;
        }
        if (complete) {
            const bool nonzero = std::any_of(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
            if (nonzero && good(c)) return c;
            break;
        }
    }

    std::uint64_t prev = 0;
    for (std::uint64_t r = 1; r <= options.max_radius; r *= 2) {
        const std::uint64_t width = 2 * r + 1;
        std::vector<std::uint64_t> idx(dim, 0);
        QVector c(dim, Rational(0));
        while (true) {
            // Only points outside the previously searched box are new.
            bool fresh = false;
            for (auto i : idx)
                if (i > 2 * prev) fresh = true;
            if (fresh && good(c)) return c;
            std::size_t pos = 0;
            while (pos < dim && idx[pos] + 1 == width) {
                idx[pos] = 0;
                c[pos] = 0;
                ++pos;
            }
            if (pos == dim) break;
            ++idx[pos];
            c[pos] = Rational(value(idx[pos]));
        }
        prev = r;
    }
    return std::nullopt;
}

/// A point of span(basis) avoiding every polynomial in `avoid` (given in basis coordinates).
inline LogClass find_witness(const ComplexPtr& complex, const std::vector<QMatrix>& basis,
                             const std::vector<QPoly>& avoid,
                             const std::function<bool(const LogClass&)>& accept = {},
                             const WitnessOptions& options = {}) {
    const std::size_t n = complex->num_vertices();
    for (const auto& p : avoid) {
        if (p.is_zero()) throw Error(ErrorCode::InconsistentInput, "an avoid polynomial vanishes on the span");
    }
    std::function<bool(const QVector&)> pred;
    if (accept) pred = [&](const QVector& c) { return accept(LogClass(complex, detail::combine(basis, c, n))); };
    auto c = search_integer_point(basis.size(), avoid, pred, options);
    if (!c) throw Error(ErrorCode::InconsistentInput, "witness search exhausted");
    return LogClass(complex, detail::combine(basis, *c, n));
}

namespace detail {

// Restrictions to W (in W-basis coordinates) of the forms used by the verdict.
struct RestrictedForms {
    const std::vector<QMatrix>& basis;

    QVector entry(std::size_t i, std::size_t j) const { return entry_form(basis, i, j); }
    QVector numerator(const Edge& e, std::size_t k) const { return order_numerator_form(basis, e, k); }

    QPoly pfaffian(const DualComplex& complex) const {
        const std::size_t n = complex.num_vertices();
        Matrix<QPoly> sym(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) sym(i, j) = QPoly::linear(entry(i, j));
        return pfaffian_symbolic(nondegeneracy_matrix(complex, sym, 0));
    }
};

struct ExtraEdge {
    Edge edge;
    OrderMap orders;
};

// Generic orders of a non-Γ edge on W, when they are all constant and smoothable.
inline std::optional<OrderMap> generic_smoothable_orders(const RestrictedForms& forms, const DualComplex& complex,
                                                         const Edge& e) {
    const QVector b = forms.entry(e.i, e.j);
    OrderMap orders;
    Rational sum(0);
    for (auto k : complex.opposite_vertices(e)) {
        auto c = proportionality(forms.numerator(e, k), b);
        if (!c || !c->is_nonnegative_integer()) return std::nullopt;
        sum += *c;
        if (!c->is_zero()) orders.emplace(k, static_cast<unsigned>(c->numerator()));
    }
    if (complex.chern_mode() == ChernMode::SumEqualsTwo && sum != Rational(2)) return std::nullopt;
    return orders;
}

// Sum-two decorations of an edge: 2 at one opposite vertex, or 1 at two.
inline std::vector<OrderMap> sum_two_decorations(const std::vector<std::size_t>& opposite) {
    std::vector<OrderMap> out;
    for (auto k : opposite) out.push_back({{k, 2U}});
    for (std::size_t a = 0; a < opposite.size(); ++a)
        for (std::size_t b = a + 1; b < opposite.size(); ++b) out.push_back({{opposite[a], 1U}, {opposite[b], 1U}});
    return out;
}

}  // namespace detail

struct RealizabilityOptions {
    bool compute_witness = true;
    WitnessOptions witness;
};

/// Decides whether some log symplectic class has exactly this smoothing diagram.
inline Stratum is_realizable(const SmoothingDiagram& d, const ComplexPtr& complex,
                             const RealizabilityOptions& options = {}) {
    detail::require_smoothability_data(*complex);
    Stratum s;
    s.diagram = d;
    auto space = solve_stratum(d, *complex);
    s.subspace_basis = std::move(space.basis);
    s.dimension = space.dimension;
    const detail::RestrictedForms forms{s.subspace_basis};

    const QPoly pf = forms.pfaffian(*complex);
    if (pf.is_zero()) {
        s.verdict = Verdict::EmptyOrDegenerate;
        s.reason = "nondegeneracy fails identically on the stratum";
        return s;
    }

    std::vector<QPoly> avoid{pf};
    for (const auto& e : d.edges()) {
        QVector b = forms.entry(e.i, e.j);
        if (detail::is_zero_form(b)) {
            s.verdict = Verdict::EdgeForcedZero;
            s.offending_edge = e;
            s.reason = "edge biresidue vanishes on the stratum";
            return s;
        }
        avoid.push_back(QPoly::linear(b));
    }

    for (const auto& e : complex->edges()) {
        if (d.contains(e)) continue;
        QVector b = forms.entry(e.i, e.j);
        if (detail::is_zero_form(b)) continue;
        if (auto orders = detail::generic_smoothable_orders(forms, *complex, e)) {
            s.verdict = Verdict::ExtraSmoothableEdge;
            s.offending_edge = e;
            s.extra_decoration = std::move(*orders);
            s.reason = "a further edge is smoothable at the generic point";
            return s;
        }
        if (complex->chern_mode() != ChernMode::SumEqualsTwo) continue;
        // Each decoration cuts out a proper subspace; keep one nonzero equation of it.
        for (const auto& dec : detail::sum_two_decorations(complex->opposite_vertices(e))) {
            for (auto k : complex->opposite_vertices(e)) {
                QVector eq = forms.numerator(e, k);
                auto it = dec.find(k);
                const Rational m(it == dec.end() ? 0LL : static_cast<long long>(it->second));
                for (std::size_t t = 0; t < eq.size(); ++t) eq[t] -= m * b[t];
                if (!detail::is_zero_form(eq)) {
                    avoid.push_back(QPoly::linear(eq));
                    break;
                }
            }
        }
    }

    s.verdict = Verdict::Realizable;
    if (!options.compute_witness) return s;
    auto accept = [&](const LogClass& w) { return is_log_symplectic(w) && smoothing_diagram_of(w) == d; };
    try {
        s.witness = find_witness(complex, s.subspace_basis, avoid, accept, options.witness);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::InconsistentInput) throw;
        s.verdict = Verdict::NotAStratum;
        s.reason = "witness search exhausted";
    }
    return s;
}

/// Monotone necessary test for a partially assigned diagram: adding edges only
/// shrinks W, so a degenerate stratum or a forced-zero edge persists.
inline bool partial_stratum_viable(const SmoothingDiagram& d, const DualComplex& complex) {
    auto space = solve_stratum(d, complex);
    const detail::RestrictedForms forms{space.basis};
    for (const auto& e : d.edges())
        if (detail::is_zero_form(forms.entry(e.i, e.j))) return false;
    return !forms.pfaffian(complex).is_zero();
}

}  // namespace logsymp
