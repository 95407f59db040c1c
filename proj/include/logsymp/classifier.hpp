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
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "logsymp/arrangement.hpp"
#include "logsymp/complex_model.hpp"
#include "logsymp/diagram.hpp"
#include "logsymp/leaf_analysis.hpp"

namespace logsymp {

struct ClassEntry {
    CanonicalForm canonical;
    SmoothingDiagram representative;
    std::size_t dimension = 0;
    LogClass witness;
    std::uint64_t orbit_size = 1;
};

struct EnumerationOptions {
    bool use_combinatorial_pruning = true;
    bool parallel = false;
    /// Worker count when parallel; 0 reads LOGSYMP_THREADS, then the hardware.
    unsigned threads = 0;
    /// Restrict to graphs with exactly this many edges.
    std::optional<std::size_t> edge_count;
};

struct EnumerationStats {
    std::uint64_t graph_orbits = 0;
    std::uint64_t labeled_graphs = 0;        // Σ orbit sizes
    std::uint64_t raw_candidates = 0;        // Σ orbit size × decorations of the graph
    std::uint64_t representative_candidates = 0;  // decorated candidates on orbit representatives
    std::uint64_t pruned = 0;
    std::uint64_t realizability_checks = 0;
    std::uint64_t realizable = 0;
};

struct GraphOrbit {
    std::vector<Edge> edges;
    std::uint64_t orbit_size = 1;
};

namespace detail {

inline std::uint64_t graph_automorphisms(std::size_t n, const std::vector<Edge>& edges) {
    std::set<Edge> set(edges.begin(), edges.end());
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (const auto& e : edges)
            if (!set.count(Edge(perm[e.i], perm[e.j]))) {
                ok = false;
                break;
            }
        count += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Component shape: cycle of length >= 3 or path with >= 2 vertices.
struct Component {
    bool cycle;
    std::size_t size;
    auto operator<=>(const Component&) const = default;
};

inline void component_multisets(std::size_t remaining, const Component& max, std::vector<Component>& cur,
                                std::vector<std::vector<Component>>& out) {
    out.push_back(cur);
    for (std::size_t size = 2; size <= remaining; ++size) {
        for (bool cyc : {false, true}) {
            if (cyc && size < 3) continue;
            Component c{cyc, size};
            if (!cur.empty() && max < c) continue;
            cur.push_back(c);
            component_multisets(remaining - size, c, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace detail

/// Isomorphism classes of graphs of valency at most two on n labeled vertices,
/// built from their component shapes, with orbit sizes n!/|Aut|.
inline std::vector<GraphOrbit> graph_orbit_representatives(std::size_t n) {
    if (n > 10) throw Error(ErrorCode::SizeGuard, "graph orbits limited to 10 vertices");
    std::vector<std::vector<detail::Component>> shapes;
    std::vector<detail::Component> cur;
    detail::component_multisets(n, detail::Component{true, n + 1}, cur, shapes);
    std::vector<GraphOrbit> out;
    for (const auto& shape : shapes) {
        GraphOrbit g;
        std::size_t base = 0;
        for (const auto& c : shape) {
            for (std::size_t t = 0; t + 1 < c.size; ++t) g.edges.emplace_back(base + t, base + t + 1);
            if (c.cycle) g.edges.emplace_back(base, base + c.size - 1);
            base += c.size;
        }
        std::sort(g.edges.begin(), g.edges.end());
        g.orbit_size = detail::factorial(n) / detail::graph_automorphisms(n, g.edges);
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const GraphOrbit& a, const GraphOrbit& b) {
        return a.edges.size() != b.edges.size() ? a.edges.size() < b.edges.size() : a.edges < b.edges;
    });
    return out;
}

namespace detail {

inline unsigned worker_count(const EnumerationOptions& options) {
    if (!options.parallel) return 1;
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("LOGSYMP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Cycle edges may only carry orders at vertices of their own cycle.
inline bool cycle_containment_ok(const std::vector<std::vector<std::size_t>>& cycle_of_edge, std::size_t edge_index,
                                 const OrderMap& orders) {
    const auto& cyc = cycle_of_edge[edge_index];
    if (cyc.empty()) return true;
    for (const auto& [k, m] : orders)
        if (std::find(cyc.begin(), cyc.end(), k) == cyc.end()) return false;
    return true;
}

struct GraphWork {
    std::set<std::string> encodings;
    std::uint64_t representative_candidates = 0;
    std::uint64_t pruned = 0;
    std::uint64_t checks = 0;
    std::uint64_t realizable = 0;
};

inline void explore_graph(const GraphOrbit& g, const ComplexPtr& complex, bool prune, GraphWork& work) {
    const std::size_t n = complex->num_vertices();
    SmoothingDiagram bare(n);
    for (const auto& e : g.edges) bare.add_edge(e);

    std::vector<std::vector<OrderMap>> choices;
    for (const auto& e : g.edges) choices.push_back(sum_two_decorations(complex->opposite_vertices(e)));
    std::uint64_t total = 1;
    for (const auto& c : choices) total *= c.size();
    work.representative_candidates += total;

    std::vector<std::vector<std::size_t>> cycle_of_edge(g.edges.size());
    if (prune) {
        for (const auto& cyc : simple_cycles(bare)) {
            if (cyc.size() % 2 == 0) {
                work.pruned += total;
                return;
            }
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                Edge e(cyc[t], cyc[(t + 1) % cyc.size()]);
                auto pos = std::find(g.edges.begin(), g.edges.end(), e) - g.edges.begin();
                cycle_of_edge[static_cast<std::size_t>(pos)] = cyc;
            }
        }
    }

    auto subtree = [&](std::size_t depth) {
        std::uint64_t t = 1;
        for (std::size_t i = depth; i < choices.size(); ++i) t *= choices[i].size();
        return t;
    };

    SmoothingDiagram d(n);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == g.edges.size()) {
            ++work.checks;
            auto s = is_realizable(d, complex, RealizabilityOptions{false, {}});
            if (s.verdict == Verdict::Realizable) {
                ++work.realizable;
                work.encodings.insert(canonical_form(d).encoding);
            }
            return;
        }
        const Edge& e = g.edges[depth];
        for (const auto& dec : choices[depth]) {
            if (prune && !cycle_containment_ok(cycle_of_edge, depth, dec)) {
                work.pruned += subtree(depth + 1);
                continue;
            }
            d.add_edge(e, dec);
            if (prune && depth + 1 < g.edges.size() && !partial_stratum_viable(d, *complex)) {
                work.pruned += subtree(depth + 1);
            } else {
                self(self, depth + 1);
            }
            d.remove_edge(e);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// Isomorphism classes of realizable smoothing diagrams on P^{2n}, sorted by
/// (edge count, dimension, encoding).
inline std::vector<ClassEntry> enumerate_smoothing_diagrams(std::size_t n, const EnumerationOptions& options = {},
                                                            EnumerationStats* stats = nullptr) {
    if (n < 1 || n > 3) throw Error(ErrorCode::SizeGuard, "enumeration supports 1 <= n <= 3");
    const ComplexPtr complex = projective_space_complex(n);
    std::vector<GraphOrbit> graphs;
    for (auto& g : graph_orbit_representatives(complex->num_vertices()))
        if (!options.edge_count || g.edges.size() == *options.edge_count) graphs.push_back(std::move(g));

    std::vector<detail::GraphWork> work(graphs.size());
    const unsigned workers = std::min<unsigned>(detail::worker_count(options), static_cast<unsigned>(graphs.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            detail::explore_graph(graphs[i], complex, options.use_combinatorial_pruning, work[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < graphs.size(); i = next++)
                    detail::explore_graph(graphs[i], complex, options.use_combinatorial_pruning, work[i]);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::set<std::string> encodings;
    EnumerationStats st;
    st.graph_orbits = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::uint64_t decorations = 1;
        for (const auto& e : graphs[i].edges) decorations *= detail::sum_two_decorations(complex->opposite_vertices(e)).size();
        st.labeled_graphs += graphs[i].orbit_size;
        st.raw_candidates += graphs[i].orbit_size * decorations;
        st.representative_candidates += work[i].representative_candidates;
        st.pruned += work[i].pruned;
        st.realizability_checks += work[i].checks;
        st.realizable += work[i].realizable;
        encodings.insert(work[i].encodings.begin(), work[i].encodings.end());
    }

    // Entries are rebuilt from canonical representatives, so they do not depend on
    // which labeled candidate or worker found them first.
    std::vector<ClassEntry> out;
    for (const auto& enc : encodings) {
        SmoothingDiagram rep = decode_diagram(enc);
        Stratum s = is_realizable(rep, complex);
        if (s.verdict != Verdict::Realizable) {
            throw Error(ErrorCode::InconsistentInput, "canonical representative lost realizability: " + enc);
        }
        CanonicalForm cf = canonical_form(rep);
        out.push_back(ClassEntry{cf, std::move(rep), s.dimension, std::move(*s.witness), cf.orbit_size});
    }
    std::sort(out.begin(), out.end(), [](const ClassEntry& a, const ClassEntry& b) {
        return std::forward_as_tuple(a.representative.size(), a.dimension, a.canonical.encoding) <
               std::forward_as_tuple(b.representative.size(), b.dimension, b.canonical.encoding);
    });
    if (stats) *stats = st;
    return out;
}

/// Classes with exactly one smoothable edge.
inline std::vector<ClassEntry> single_edge_classes(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::SizeGuard, "single-edge classes need n >= 2");
    EnumerationOptions opts;
    opts.edge_count = 1;
    return enumerate_smoothing_diagrams(n, opts);
}

enum class TripleLabel { E6tilde, E7tilde, E8tilde };

inline std::string to_string(TripleLabel l) {
    switch (l) {
        case TripleLabel::E6tilde: return "E6tilde";
        case TripleLabel::E7tilde: return "E7tilde";
        case TripleLabel::E8tilde: return "E8tilde";
    }
    return "Unknown";
}

struct TriplePoint {
    std::array<Rational, 3> biresidues;  // cyclic, summing to 1
    std::array<unsigned, 3> orders;
    TripleLabel label;
    std::uint64_t orbit_size;
};

/// Points (b1:b2:b3) of the affine triangle at which all three edges are smoothable.
///
/// Edge i has order (1 - b_i)/b_i after normalizing Σ b = 1, so the orders are the
/// solutions of Σ 1/(m_i + 1) = 1 in nonnegative integers.
inline std::vector<TriplePoint> triple_points_c4() {
    std::vector<TriplePoint> out;
    // With a = m+1 sorted ascending: 1/a1 >= 1/3 forces a1 <= 3, then a2 <= 4, a3 <= 6.
    for (unsigned a = 2; a <= 3; ++a)
        for (unsigned b = a; b <= 6; ++b)
            for (unsigned c = b; c <= 6; ++c) {
                if (Rational(1, a) + Rational(1, b) + Rational(1, c) != Rational(1)) continue;
                std::array<unsigned, 3> sorted{a - 1, b - 1, c - 1};
                const TripleLabel label = a == 3 ? TripleLabel::E6tilde : b == 4 ? TripleLabel::E7tilde : TripleLabel::E8tilde;
                std::vector<std::array<unsigned, 3>> perms;
                do perms.push_back(sorted);
                while (std::next_permutation(sorted.begin(), sorted.end()));
                for (const auto& m : perms) {
                    out.push_back(TriplePoint{{Rational(1, m[0] + 1), Rational(1, m[1] + 1), Rational(1, m[2] + 1)},
                                              m, label, perms.size()});
                }
            }
    std::stable_sort(out.begin(), out.end(),
                     [](const TriplePoint& x, const TriplePoint& y) { return x.orbit_size < y.orbit_size; });
    return out;
}

struct ChainRecord {
    unsigned m = 0;
    unsigned n = 0;
    std::array<BigInt, 3> biresidues;  // (b1, b2, b3) = (n+1, m+1, nm-1)
    bool third_edge_smoothable = false;
};

/// Two smoothable edges {1,2} (order m at 0) and {0,2} (order n at 1) on the affine
/// triangle force biresidues (n+1, m+1, nm-1) up to scale.
inline ChainRecord two_edge_chain_family(unsigned m, unsigned n) {
    if (m > n) throw Error(ErrorCode::InconsistentInput, "two-edge chain expects m <= n");
    static constexpr std::array<std::pair<unsigned, unsigned>, 6> kSmoothable{
        {{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 5}, {3, 3}}};
    ChainRecord r;
    r.m = m;
    r.n = n;
    r.biresidues = {BigInt(n) + 1, BigInt(m) + 1, BigInt(n) * m - 1};
    r.third_edge_smoothable =
        std::find(kSmoothable.begin(), kSmoothable.end(), std::pair{m, n}) != kSmoothable.end();
    return r;
}

/// The diagram of a two-edge chain on the affine triangle.
inline SmoothingDiagram two_edge_chain_diagram(unsigned m, unsigned n) {
    SmoothingDiagram d(3);
    d.add_edge(Edge(1, 2), {{0, m}});
    d.add_edge(Edge(0, 2), {{1, n}});
    return d;
}

/// Realizable diagrams on the affine triangle with every order at most max_order,
/// up to relabeling. Complete only below the bound.
inline std::vector<ClassEntry> germ_triangle_classes(unsigned max_order) {
    const ComplexPtr complex = affine_germ_complex(3);
    const std::array<Edge, 3> all{Edge(0, 1), Edge(0, 2), Edge(1, 2)};
    std::map<std::string, ClassEntry> found;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<Edge> edges;
        for (unsigned t = 0; t < 3; ++t)
            if (mask & (1U << t)) edges.push_back(all[t]);
        std::vector<unsigned> orders(edges.size(), 0);
        while (true) {
            SmoothingDiagram d(3);
            for (std::size_t t = 0; t < edges.size(); ++t) {
                const std::size_t k = 3 - edges[t].i - edges[t].j;
                d.add_edge(edges[t], {{k, orders[t]}});
            }
            CanonicalForm cf = canonical_form(d);
            if (!found.count(cf.encoding)) {
                SmoothingDiagram rep = decode_diagram(cf.encoding);
                Stratum s = is_realizable(rep, complex);
                if (s.verdict == Verdict::Realizable) {
                    found.emplace(cf.encoding, ClassEntry{cf, std::move(rep), s.dimension, std::move(*s.witness), cf.orbit_size});
                }
            }
            std::size_t pos = 0;
            while (pos < orders.size() && orders[pos] == max_order) orders[pos++] = 0;
            if (pos == orders.size()) break;
            ++orders[pos];
        }
    }
    std::vector<ClassEntry> out;
    for (auto& [enc, entry] : found) out.push_back(std::move(entry));
    std::sort(out.begin(), out.end(), [](const ClassEntry& a, const ClassEntry& b) {
        return std::forward_as_tuple(a.representative.size(), a.dimension, a.canonical.encoding) <
               std::forward_as_tuple(b.representative.size(), b.dimension, b.canonical.encoding);
    });
    return out;
}

}  // namespace logsymp
