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
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "logsymp/arrangement.hpp"
#include "logsymp/classifier.hpp"
#include "logsymp/complex_model.hpp"
#include "logsymp/diagram.hpp"
#include "logsymp/germ_cohomology.hpp"
#include "logsymp/leaf_analysis.hpp"

namespace logsymp::io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

inline const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field '") + key + "'");
    return obj.at(key);
}

inline std::size_t to_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) parse_error(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
}

}  // namespace detail

inline json to_json(const Rational& r) {
    return r.to_string();
}

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    detail::parse_error("rational must be a \"p/q\" string or an integer");
}

inline json to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) detail::parse_error("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols) detail::parse_error("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
    }
    return m;
}

inline json simplex_to_json(const Simplex& s) { return json(s); }

inline json simplices_to_json(const std::vector<Simplex>& list) {
    json out = json::array();
    for (const auto& s : list) out.push_back(simplex_to_json(s));
    return out;
}

inline std::string to_string(ChernMode m) {
    switch (m) {
        case ChernMode::SumEqualsTwo: return "sum2";
        case ChernMode::Vacuous: return "vacuous";
        case ChernMode::Unsupported: return "unsupported";
    }
    return "unsupported";
}

inline json to_json(const DualComplex& c) {
    json j;
    switch (c.kind()) {
        case ComplexKind::ProjectiveSpace:
            j["kind"] = "P2n";
            j["n"] = c.half_dimension();
            break;
        case ComplexKind::AffineGerm: j["kind"] = "germ"; break;
        case ComplexKind::Custom: j["kind"] = "custom"; break;
    }
    j["vertices"] = c.num_vertices();
    j["facets"] = simplices_to_json(c.facets());
    j["simply_connected_strata"] = c.simply_connected_strata();
    j["chern_mode"] = to_string(c.chern_mode());
    return j;
}

inline ComplexPtr complex_from_json(const json& j) {
    return detail::guarded([&]() -> ComplexPtr {
        const std::string kind = detail::field(j, "kind").get<std::string>();
        if (kind == "P2n") return projective_space_complex(detail::to_index(detail::field(j, "n"), "n"));
        if (kind == "germ") return affine_germ_complex(detail::to_index(detail::field(j, "vertices"), "vertices"));
        if (kind != "custom") detail::parse_error("unknown complex kind '" + kind + "'");
        const std::size_t n = detail::to_index(detail::field(j, "vertices"), "vertices");
        std::vector<Simplex> facets;
        for (const auto& f : detail::field(j, "facets")) {
            Simplex s;
            for (const auto& v : f) s.push_back(detail::to_index(v, "facet vertex"));
            facets.push_back(std::move(s));
        }
        const bool sc = j.value("simply_connected_strata", false);
        const std::string mode = j.value("chern_mode", std::string("unsupported"));
        ChernMode cm = ChernMode::Unsupported;
        if (mode == "sum2") cm = ChernMode::SumEqualsTwo;
        else if (mode == "vacuous") cm = ChernMode::Vacuous;
        else if (mode != "unsupported") detail::parse_error("unknown chern_mode '" + mode + "'");
        return std::make_shared<const DualComplex>(DualComplex::from_facets(n, facets, ComplexKind::Custom, sc, cm));
    });
}

inline json to_json(const LogClass& c) {
    return json{{"complex", to_json(c.complex())}, {"matrix", to_json(c.matrix())}};
}

/// {"complex": ..., "matrix": full} or, on P2n, {"complex": ..., "chart": 2n x 2n}.
inline LogClass class_from_json(const json& j) {
    return detail::guarded([&]() -> LogClass {
        ComplexPtr complex = complex_from_json(detail::field(j, "complex"));
        if (j.contains("chart") && !j.contains("matrix")) {
            LogClass lifted = chart_to_full(matrix_from_json(j.at("chart")));
            return LogClass(complex, lifted.matrix());
        }
        return LogClass(complex, matrix_from_json(detail::field(j, "matrix")));
    });
}

inline json to_json(const SmoothingDiagram& d) {
    json edges = json::array();
    for (const auto& [e, orders] : d.decorated_edges()) {
        json o = json::object();
        for (const auto& [k, m] : orders) o[std::to_string(k)] = m;
        edges.push_back(json{{"e", {e.i, e.j}}, {"orders", std::move(o)}});
    }
    return json{{"vertices", d.num_vertices()}, {"edges", std::move(edges)}};
}

inline SmoothingDiagram diagram_from_json(const json& j) {
    return detail::guarded([&]() -> SmoothingDiagram {
        SmoothingDiagram d(detail::to_index(detail::field(j, "vertices"), "vertices"));
        for (const auto& item : detail::field(j, "edges")) {
            const json& e = detail::field(item, "e");
            if (!e.is_array() || e.size() != 2) detail::parse_error("edge must be a pair");
            OrderMap orders;
            if (item.contains("orders")) {
                for (const auto& [k, m] : item.at("orders").items()) {
                    if (k.empty() || k.size() > 9 || k.find_first_not_of("0123456789") != std::string::npos)
                        detail::parse_error("order key '" + k + "' is not a vertex index");
                    const unsigned long key = std::stoul(k);
                    orders.emplace(key, static_cast<unsigned>(detail::to_index(m, "order")));
                }
            }
            d.add_edge(Edge(detail::to_index(e.at(0), "vertex"), detail::to_index(e.at(1), "vertex")), std::move(orders));
        }
        return d;
    });
}

inline json to_json(const Stratum& s) {
    json j{{"diagram", to_json(s.diagram)}, {"dimension", s.dimension}, {"verdict", to_string(s.verdict)}};
    j["witness"] = s.witness ? to_json(s.witness->matrix()) : json(nullptr);
    if (s.offending_edge) j["edge"] = {s.offending_edge->i, s.offending_edge->j};
    if (!s.reason.empty()) j["reason"] = s.reason;
    return j;
}

inline json to_json(const GermClass& g) {
    return json{{"n_divisor", g.n_divisor}, {"matrix", to_json(g.full_matrix)}};
}

inline GermClass germ_from_json(const json& j) {
    return detail::guarded([&]() -> GermClass {
        return GermClass(detail::to_index(detail::field(j, "n_divisor"), "n_divisor"),
                         matrix_from_json(detail::field(j, "matrix")));
    });
}

inline json to_json(const AnalysisReport& r) {
    json edges = json::array();
    for (const auto& e : r.edges) {
        json orders = json::object();
        for (const auto& [k, m] : e.orders) orders[std::to_string(k)] = to_json(m);
        edges.push_back(json{{"edge", {e.edge.i, e.edge.j}},
                             {"biresidue", to_json(e.biresidue)},
                             {"orders", std::move(orders)},
                             {"resonant", e.resonant},
                             {"smoothable", e.smoothable}});
    }
    return json{{"nondegenerate", r.nondegenerate},
                {"holonomic", r.holonomic},
                {"violating_simplices", simplices_to_json(r.violating_simplices)},
                {"characteristic", simplices_to_json(r.characteristic)},
                {"edges", std::move(edges)},
                {"diagram", to_json(r.diagram)}};
}

inline json to_json(const CocycleData& c) {
    json t = json::object();
    for (const auto& [k, v] : c.t) t[std::to_string(k)] = to_json(v);
    json alpha = json::object();
    for (const auto& [i, v] : c.alpha) alpha[std::to_string(i)] = to_json(v);
    return json{{"simplex", simplex_to_json(c.simplex)}, {"t", std::move(t)}, {"alpha", std::move(alpha)}};
}

inline json to_json(const CohomologyReport& r) {
    json contributing = json::array();
    for (const auto& c : r.contributing) contributing.push_back(to_json(c));
    return json{{"poincare", r.poincare}, {"contributing_simplices", std::move(contributing)}, {"hp2", r.hp2}};
}

inline json to_json(const ClassEntry& e) {
    return json{{"encoding", e.canonical.encoding},
                {"diagram", to_json(e.representative)},
                {"edges", e.representative.size()},
                {"dimension", e.dimension},
                {"orbit_size", e.orbit_size},
                {"witness", to_json(e.witness.matrix())}};
}

inline json to_json(const TriplePoint& p) {
    json b = json::array();
    for (const auto& x : p.biresidues) b.push_back(to_json(x));
    return json{{"biresidues", std::move(b)}, {"orders", p.orders}, {"label", to_string(p.label)}, {"orbit_size", p.orbit_size}};
}

inline json to_json(const ChainRecord& r) {
    json b = json::array();
    for (const auto& x : r.biresidues) b.push_back(x.str());
    return json{{"m", r.m},
                {"n", r.n},
                {"biresidues", std::move(b)},
                {"label", "T_{inf," + std::to_string(r.m + 1) + "," + std::to_string(r.n + 1) + "}"},
                {"third_edge_smoothable", r.third_edge_smoothable}};
}

}  // namespace logsymp::io
