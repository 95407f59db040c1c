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
#include <optional>
#include <utility>
#include <vector>

#include "logsymp/complex_model.hpp"
#include "logsymp/diagram.hpp"
#include "logsymp/error.hpp"
#include "logsymp/matrix.hpp"

namespace logsymp {

/// Orders m(Δ, Δ') of one edge at each opposite vertex of an incident triangle.
struct EdgeOrderReport {
    Edge edge;
    std::map<std::size_t, Rational> orders;
    Rational biresidue;
};

/// Characteristic leaves live on X°_Δ iff (1,...,1) lies in the image of B_Δ.
inline bool is_characteristic(const LogClass& cls, std::span<const std::size_t> simplex) {
    QMatrix b = biresidue(cls, simplex);
    if (b.rows() == 0) return true;
    return in_column_space(b, QVector(b.rows(), Rational(1)));
}

struct HolonomicityReport {
    bool holonomic = true;
    std::vector<Simplex> violators;
};

/// Holonomic iff no odd-cardinality face carries a characteristic leaf.
inline HolonomicityReport is_holonomic(const LogClass& cls) {
    HolonomicityReport r;
    for (const auto& f : cls.complex().faces()) {
        if (f.size() % 2 == 1 && is_characteristic(cls, f)) r.violators.push_back(f);
    }
    r.holonomic = r.violators.empty();
    return r;
}

/// (B_jk + B_ki) / B_ij; unchanged when i and j swap.
inline Rational edge_order(const LogClass& cls, std::size_t i, std::size_t j, std::size_t k) {
    if (i == j || k == i || k == j) throw Error(ErrorCode::BadVertex, "edge order needs three distinct vertices");
    if (!cls.complex().is_order_vertex(Edge(i, j), k)) throw Error(ErrorCode::NotAFace, "{i,j,k} is not a face");
    const QMatrix& b = cls.matrix();
    if (b(i, j).is_zero()) throw Error(ErrorCode::ZeroBiresidue, "edge biresidue vanishes");
    return (b(j, k) + b(k, i)) / b(i, j);
}

inline Rational edge_order(const LogClass& cls, const Edge& e, std::size_t k) { return edge_order(cls, e.i, e.j, k); }

inline EdgeOrderReport edge_orders(const LogClass& cls, const Edge& e) {
    if (!cls.complex().is_face(e)) throw Error(ErrorCode::NotAFace, "edge is not a face");
    EdgeOrderReport r{e, {}, cls.biresidue(e)};
    if (r.biresidue.is_zero()) throw Error(ErrorCode::ZeroBiresidue, "edge biresidue vanishes");
    for (auto k : cls.complex().opposite_vertices(e)) r.orders.emplace(k, edge_order(cls, e, k));
    return r;
}

struct ResidueVector {
    QVector residues;       // B_Δ^{-1} A
    Rational determinant;   // (1,...,1) · B_Δ^{-1} A
};

/// Residue of the normal-bundle connection of X_Δ along the component k.
inline ResidueVector residue_vector(const LogClass& cls, std::span<const std::size_t> simplex, std::size_t k) {
    Simplex s(simplex.begin(), simplex.end());
    std::sort(s.begin(), s.end());
    if (std::find(s.begin(), s.end(), k) != s.end()) throw Error(ErrorCode::BadVertex, "k lies in the simplex");
    Simplex with_k = s;
    with_k.push_back(k);
    std::sort(with_k.begin(), with_k.end());
    if (!cls.complex().is_face(with_k)) throw Error(ErrorCode::NotAFace, "simplex plus k is not a face");
    const QMatrix b = cls.matrix().principal(s);
    QMatrix inv;
    try {
        inv = inverse(b);
    } catch (const Error&) {
        throw Error(ErrorCode::DegenerateStratum, "biresidue of the stratum is degenerate");
    }
    QVector a(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) a[t] = cls.matrix()(s[t], k);
    ResidueVector out{inv * a, Rational(0)};
    for (const auto& x : out.residues) out.determinant += x;
    return out;
}

/// Resonant: some incident triangle has negative integer order (positive integer residue).
inline bool is_edge_resonant(const LogClass& cls, const Edge& e) {
    auto r = edge_orders(cls, e);
    return std::any_of(r.orders.begin(), r.orders.end(), [](const auto& kv) { return kv.second.is_negative_integer(); });
}

namespace detail {

inline void require_smoothability_data(const DualComplex& c) {
    if (!c.simply_connected_strata()) {
        throw Error(ErrorCode::UnsupportedComplex, "monodromy data unavailable: strata not flagged simply connected");
    }
    if (c.chern_mode() == ChernMode::Unsupported) {
        throw Error(ErrorCode::UnsupportedComplex, "Chern class identity unavailable for this complex");
    }
}

inline bool orders_smoothable(const DualComplex& c, const std::map<std::size_t, Rational>& orders) {
    Rational sum(0);
    for (const auto& [k, m] : orders) {
        if (!m.is_nonnegative_integer()) return false;
        sum += m;
    }
    return c.chern_mode() != ChernMode::SumEqualsTwo || sum == Rational(2);
}

}  // namespace detail

/// Nonzero biresidue, all incident orders in Z>=0, and (sum-two mode) orders summing to 2.
inline bool is_edge_smoothable(const LogClass& cls, const Edge& e) {
    detail::require_smoothability_data(cls.complex());
    if (!cls.complex().is_face(e)) throw Error(ErrorCode::NotAFace, "edge is not a face");
    if (cls.biresidue(e).is_zero()) return false;
    return detail::orders_smoothable(cls.complex(), edge_orders(cls, e).orders);
}

/// Smoothable edges with their (nonzero) orders. Edges with zero biresidue are skipped.
inline SmoothingDiagram smoothing_diagram_of(const LogClass& cls) {
    detail::require_smoothability_data(cls.complex());
    SmoothingDiagram d(cls.num_vertices());
    for (const auto& e : cls.complex().edges()) {
        if (cls.biresidue(e).is_zero()) continue;
        auto r = edge_orders(cls, e);
        if (!detail::orders_smoothable(cls.complex(), r.orders)) continue;
        OrderMap orders;
        for (const auto& [k, m] : r.orders)
            if (!m.is_zero()) orders.emplace(k, static_cast<unsigned>(m.numerator()));
        d.add_edge(e, std::move(orders));
    }
    return d;
}

/// Faces carrying characteristic leaves, sorted by (size, lexicographic).
inline std::vector<Simplex> characteristic_census(const LogClass& cls) {
    std::vector<Simplex> out;
    for (const auto& f : cls.complex().faces())
        if (is_characteristic(cls, f)) out.push_back(f);
    return out;
}

/// Per-edge summary used by the analyze report.
struct EdgeAnalysis {
    Edge edge;
    Rational biresidue;
    std::map<std::size_t, Rational> orders;  // empty when the biresidue is zero
    bool resonant = false;
    bool smoothable = false;
};

struct AnalysisReport {
    bool nondegenerate = false;
    bool holonomic = false;
    std::vector<Simplex> violating_simplices;
    std::vector<Simplex> characteristic;
    std::vector<EdgeAnalysis> edges;
    SmoothingDiagram diagram;
};

inline AnalysisReport analyze(const LogClass& cls, std::size_t chart_vertex = 0) {
    detail::require_smoothability_data(cls.complex());
    AnalysisReport r;
    r.nondegenerate = is_log_symplectic(cls, chart_vertex);
    auto hol = is_holonomic(cls);
    r.holonomic = hol.holonomic;
    r.violating_simplices = std::move(hol.violators);
    r.characteristic = characteristic_census(cls);
    for (const auto& e : cls.complex().edges()) {
        EdgeAnalysis ea{e, cls.biresidue(e), {}, false, false};
        if (!ea.biresidue.is_zero()) {
            ea.orders = edge_orders(cls, e).orders;
            ea.resonant = is_edge_resonant(cls, e);
            ea.smoothable = is_edge_smoothable(cls, e);
        }
        r.edges.push_back(std::move(ea));
    }
    r.diagram = smoothing_diagram_of(cls);
    return r;
}

}  // namespace logsymp
