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
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "logsymp/complex_model.hpp"
#include "logsymp/error.hpp"

namespace logsymp {

/// Opposite vertex -> order; zero orders are never stored.
using OrderMap = std::map<std::size_t, unsigned>;

/// Decorated edge set (Γ, m).
class SmoothingDiagram {
public:
    SmoothingDiagram() = default;
    explicit SmoothingDiagram(std::size_t num_vertices) : num_vertices_(num_vertices) {}

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    void add_edge(const Edge& e, OrderMap orders = {}) {
        if (e.j >= num_vertices_) throw Error(ErrorCode::BadVertex, "edge vertex out of range");
        OrderMap clean;
        for (const auto& [k, m] : orders) {
            if (k >= num_vertices_ || e.contains(k)) throw Error(ErrorCode::BadVertex, "order at an invalid vertex");
            if (m != 0) clean.emplace(k, m);
        }
        edges_[e] = std::move(clean);
    }

    void remove_edge(const Edge& e) { edges_.erase(e); }

    bool contains(const Edge& e) const { return edges_.count(e) != 0; }

    const OrderMap& orders(const Edge& e) const {
        auto it = edges_.find(e);
        if (it == edges_.end()) throw Error(ErrorCode::BadVertex, "edge not in diagram");
        return it->second;
    }

    unsigned order(const Edge& e, std::size_t k) const {
        const auto& o = orders(e);
        auto it = o.find(k);
        return it == o.end() ? 0U : it->second;
    }

    const std::map<Edge, OrderMap>& decorated_edges() const noexcept { return edges_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (const auto& [e, o] : edges_) out.push_back(e);
        return out;
    }

    std::size_t valency(std::size_t v) const {
        std::size_t n = 0;
        for (const auto& [e, o] : edges_) n += e.contains(v) ? 1 : 0;
        return n;
    }

    /// Relabeling v -> perm[v].
    SmoothingDiagram permuted(std::span<const std::size_t> perm) const {
        SmoothingDiagram d(num_vertices_);
        for (const auto& [e, o] : edges_) {
            OrderMap po;
            for (const auto& [k, m] : o) po.emplace(perm[k], m);
            d.add_edge(Edge(perm[e.i], perm[e.j]), std::move(po));
        }
        return d;
    }

    friend bool operator==(const SmoothingDiagram&, const SmoothingDiagram&) = default;

private:
    std::size_t num_vertices_ = 0;
    std::map<Edge, OrderMap> edges_;
};

struct Violation {
    enum class Kind {
        ValencyViolation,      // three smoothable edges in a 3-horn
        EvenCycle,
        CycleOrderOutside,     // nonzero order of a cycle edge at a vertex off the cycle
        OrderSumViolation,
        OrderPatternViolation,
        InvalidOrder,          // order at a vertex not spanning a triangle with the edge
        EdgeNotAFace,
    };
    Kind kind;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::ValencyViolation: return "ValencyViolation";
        case Violation::Kind::EvenCycle: return "EvenCycle";
        case Violation::Kind::CycleOrderOutside: return "CycleOrderOutside";
        case Violation::Kind::OrderSumViolation: return "OrderSumViolation";
        case Violation::Kind::OrderPatternViolation: return "OrderPatternViolation";
        case Violation::Kind::InvalidOrder: return "InvalidOrder";
        case Violation::Kind::EdgeNotAFace: return "EdgeNotAFace";
    }
    return "Unknown";
}

/// Simple cycles of the underlying graph, each as a vertex sequence starting at its
/// smallest vertex and continuing to the smaller of its two cycle neighbours.
inline std::vector<std::vector<std::size_t>> simple_cycles(const SmoothingDiagram& d) {
    const std::size_t n = d.num_vertices();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : d.edges()) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        // Depth-first search restricted to vertices > s.
        auto dfs = [&](auto&& self, std::size_t v) -> void {
            for (auto w : adj[v]) {
                if (w == s && path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
                if (w <= s || on_path[w]) continue;
                on_path[w] = true;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on_path[w] = false;
            }
        };
        path = {s};
        on_path[s] = true;
        dfs(dfs, s);
        on_path[s] = false;
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

/// Necessary conditions on smoothing diagrams. An empty result means none failed.
inline std::vector<Violation> validate_combinatorial(const SmoothingDiagram& d, const DualComplex& complex) {
    using K = Violation::Kind;
    std::vector<Violation> out;
    auto edge_name = [](const Edge& e) { return "{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}"; };

    for (const auto& [e, orders] : d.decorated_edges()) {
        if (!complex.is_face(e)) {
            out.push_back({K::EdgeNotAFace, edge_name(e)});
            continue;
        }
        auto opp = complex.opposite_vertices(e);
        for (const auto& [k, m] : orders) {
            if (std::find(opp.begin(), opp.end(), k) == opp.end()) {
                out.push_back({K::InvalidOrder, edge_name(e) + " at " + std::to_string(k)});
            }
        }
        if (complex.chern_mode() == ChernMode::SumEqualsTwo) {
            unsigned sum = 0;
            for (const auto& [k, m] : orders) sum += m;
            if (sum != 2) {
                out.push_back({K::OrderSumViolation, edge_name(e) + " sums to " + std::to_string(sum)});
            } else {
                const bool single_two = orders.size() == 1 && orders.begin()->second == 2;
                const bool two_ones = orders.size() == 2 &&
                                      std::all_of(orders.begin(), orders.end(), [](auto& kv) { return kv.second == 1; });
                if (!single_two && !two_ones) out.push_back({K::OrderPatternViolation, edge_name(e)});
            }
        }
    }

    // At most two smoothable edges in any 3-horn.
    for (std::size_t v = 0; v < d.num_vertices(); ++v) {
        std::vector<std::size_t> nbrs;
        for (const auto& e : d.edges())
            if (e.contains(v)) nbrs.push_back(e.i == v ? e.j : e.i);
        bool horn = false;
        for (std::size_t a = 0; a < nbrs.size() && !horn; ++a)
            for (std::size_t b = a + 1; b < nbrs.size() && !horn; ++b)
                for (std::size_t c = b + 1; c < nbrs.size() && !horn; ++c) {
                    horn = complex.is_face(Simplex{v, nbrs[a], nbrs[b]}) && complex.is_face(Simplex{v, nbrs[a], nbrs[c]}) &&
                           complex.is_face(Simplex{v, nbrs[b], nbrs[c]});
                }
        if (horn) out.push_back({K::ValencyViolation, "vertex " + std::to_string(v)});
    }

    if (complex.kind() == ComplexKind::ProjectiveSpace) {
        for (const auto& cyc : simple_cycles(d)) {
            std::string name;
            for (auto v : cyc) name += std::to_string(v);
            if (cyc.size() % 2 == 0) out.push_back({K::EvenCycle, "cycle " + name});
            std::set<std::size_t> on(cyc.begin(), cyc.end());
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                Edge e(cyc[t], cyc[(t + 1) % cyc.size()]);
                for (const auto& [k, m] : d.orders(e)) {
                    if (!on.count(k)) {
                        out.push_back({K::CycleOrderOutside, edge_name(e) + " at " + std::to_string(k) + " off cycle " + name});
                    }
                }
            }
        }
    }
    return out;
}

struct CanonicalForm {
    std::string encoding;
    std::uint64_t orbit_size = 1;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// "N|i-j@k^m.k^m|..." with edges and orders in ascending order.
inline std::string encode_diagram(const SmoothingDiagram& d) {
    std::string s = std::to_string(d.num_vertices()) + "|";
    bool first = true;
    for (const auto& [e, orders] : d.decorated_edges()) {
        if (!first) s += '|';
        first = false;
        s += std::to_string(e.i) + "-" + std::to_string(e.j) + "@";
        bool first_order = true;
        for (const auto& [k, m] : orders) {
            if (!first_order) s += '.';
            first_order = false;
            s += std::to_string(k) + "^" + std::to_string(m);
        }
    }
    return s;
}

inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace detail

/// Inverse of the encoding produced by canonical_form.
inline SmoothingDiagram decode_diagram(const std::string& encoding) {
    auto bar = encoding.find('|');
    if (bar == std::string::npos) throw Error(ErrorCode::Parse, "bad diagram encoding");
    SmoothingDiagram d(std::stoul(encoding.substr(0, bar)));
    std::string rest = encoding.substr(bar + 1);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, '|')) {
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        auto at = tok.find('@');
        Edge e(std::stoul(tok.substr(0, dash)), std::stoul(tok.substr(dash + 1, at - dash - 1)));
        OrderMap orders;
        std::stringstream os(tok.substr(at + 1));
        std::string o;
        while (std::getline(os, o, '.')) {
            if (o.empty()) continue;
            auto caret = o.find('^');
            orders.emplace(std::stoul(o.substr(0, caret)), static_cast<unsigned>(std::stoul(o.substr(caret + 1))));
        }
        d.add_edge(e, std::move(orders));
    }
    return d;
}

/// Lexicographically least encoding over all vertex relabelings.
inline CanonicalForm canonical_form(const SmoothingDiagram& d) {
    constexpr std::size_t kMaxCanonicalVertices = 10;
    const std::size_t n = d.num_vertices();
    if (n > kMaxCanonicalVertices) throw Error(ErrorCode::SizeGuard, "canonical form limited to 10 vertices");
    if (d.empty()) return {detail::encode_diagram(d), 1};
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    const std::string identity = detail::encode_diagram(d);
    std::string best = identity;
    std::uint64_t automorphisms = 0;
    do {
        std::string enc = detail::encode_diagram(d.permuted(perm));
        if (enc == identity) ++automorphisms;
        if (enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, detail::factorial(n) / automorphisms};
}

inline bool are_isomorphic(const SmoothingDiagram& a, const SmoothingDiagram& b) {
    if (a.num_vertices() != b.num_vertices()) throw Error(ErrorCode::SizeMismatch, "diagrams on different vertex sets");
    if (a.size() != b.size()) return false;
    return canonical_form(a).encoding == canonical_form(b).encoding;
}

struct Decomposition {
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::vector<std::size_t>> cycles;
};

/// Splits a graph of valency <= 2 into paths and cycles, vertices in traversal order.
inline Decomposition decompose(const SmoothingDiagram& d) {
    const std::size_t n = d.num_vertices();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : d.edges()) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 2) throw Error(ErrorCode::ValencyTooHigh, "vertex " + std::to_string(v) + " has valency > 2");
        std::sort(adj[v].begin(), adj[v].end());
    }
    Decomposition out;
    std::vector<bool> seen(n, false);
    auto walk = [&](std::size_t start) {
        std::vector<std::size_t> seq{start};
        seen[start] = true;
        std::size_t prev = start, cur = adj[start].front();
        while (!seen[cur]) {
            seen[cur] = true;
            seq.push_back(cur);
            std::size_t next = n;
            for (auto w : adj[cur])
                if (w != prev && (!seen[w] || (w == start && seq.size() > 2))) {
                    next = w;
                    break;
                }
            if (next == n || next == start) break;
            prev = cur;
            cur = next;
        }
        return seq;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && adj[v].size() == 1) out.chains.push_back(walk(v));
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && adj[v].size() == 2) out.cycles.push_back(walk(v));
    return out;
}

/// Graphviz rendering: all vertices, highlighted diagram edges labelled with their orders.
inline std::string to_dot(const SmoothingDiagram& d, const std::string& name = "diagram") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t v = 0; v < d.num_vertices(); ++v) os << "  v" << v << ";\n";
    for (const auto& [e, orders] : d.decorated_edges()) {
        std::string label;
        for (const auto& [k, m] : orders) {
            if (!label.empty()) label += ",";
            label += "m=" + std::to_string(m) + "@v" + std::to_string(k);
        }
        os << "  v" << e.i << " -- v" << e.j << " [color=blue, penwidth=2, label=\"" << label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace logsymp
