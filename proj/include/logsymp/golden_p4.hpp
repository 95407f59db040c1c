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
#include <utility>
#include <vector>

#include "logsymp/diagram.hpp"

namespace logsymp::golden {

struct GoldenEdge {
    std::size_t i;
    std::size_t j;
    std::vector<std::pair<std::size_t, unsigned>> orders;
};

struct GoldenDiagram {
    std::size_t dimension;
    std::vector<GoldenEdge> edges;
};

/// The 40 smoothing diagrams of P^4 with their stratum dimensions, one
/// representative per isomorphism class, transcribed independently of the enumerator.
inline const std::vector<GoldenDiagram>& p4_table() {
    static const std::vector<GoldenDiagram> table{
        {1, {{0, 1, {{3, 2}}}, {0, 4, {{2, 2}}}, {1, 2, {{4, 2}}}, {2, 3, {{0, 2}}}, {3, 4, {{1, 2}}}}},
        {1, {{0, 1, {{2, 1}, {4, 1}}}, {0, 4, {{1, 1}, {3, 1}}}, {1, 2, {{0, 1}, {3, 1}}}, {2, 3, {{1, 1}, {4, 1}}}, {3, 4, {{0, 1}, {2, 1}}}}},
        {1, {{0, 1, {{2, 1}, {3, 1}}}, {0, 4, {{3, 2}}}, {1, 2, {{0, 1}, {4, 1}}}, {2, 3, {{4, 2}}}}},
        {1, {{0, 1, {{4, 2}}}, {0, 4, {{3, 2}}}, {1, 2, {{3, 2}}}, {2, 3, {{4, 2}}}}},
        {1, {{0, 1, {{4, 2}}}, {0, 4, {{1, 1}, {2, 1}}}, {1, 2, {{3, 2}}}, {2, 3, {{0, 1}, {1, 1}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{1, 2}}}, {3, 4, {{1, 2}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{1, 2}}}, {3, 4, {{0, 1}, {2, 1}}}}},
        {1, {{0, 4, {{1, 1}, {3, 1}}}, {2, 3, {{1, 1}, {4, 1}}}, {3, 4, {{1, 2}}}}},
        {1, {{0, 4, {{3, 2}}}, {2, 3, {{4, 2}}}, {3, 4, {{1, 2}}}}},
        {1, {{0, 4, {{1, 1}, {2, 1}}}, {2, 3, {{0, 1}, {1, 1}}}, {3, 4, {{0, 1}, {2, 1}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{0, 1}, {4, 1}}}, {3, 4, {{1, 2}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{1, 2}}}, {3, 4, {{0, 1}, {1, 1}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{0, 1}, {4, 1}}}, {3, 4, {{0, 1}, {1, 1}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{0, 1}, {4, 1}}}, {3, 4, {{0, 2}}}}},
        {1, {{0, 4, {{1, 2}}}, {2, 3, {{0, 1}, {4, 1}}}, {3, 4, {{0, 1}, {2, 1}}}}},
        {1, {{0, 1, {{4, 2}}}, {1, 2, {{3, 2}}}, {3, 4, {{0, 1}, {2, 1}}}}},
        {1, {{0, 1, {{4, 2}}}, {1, 2, {{0, 2}}}, {3, 4, {{1, 1}, {2, 1}}}}},
        {1, {{0, 1, {{2, 1}, {4, 1}}}, {1, 2, {{3, 1}, {4, 1}}}, {3, 4, {{0, 2}}}}},
        {1, {{0, 1, {{2, 1}, {4, 1}}}, {1, 2, {{0, 2}}}, {3, 4, {{0, 2}}}}},
        {2, {{0, 1, {{2, 2}}}, {0, 2, {{1, 2}}}, {1, 2, {{0, 2}}}}},
        {2, {{0, 1, {{3, 1}, {4, 1}}}, {1, 2, {{3, 1}, {4, 1}}}}},
        {2, {{0, 1, {{3, 1}, {4, 1}}}, {1, 2, {{0, 2}}}}},
        {2, {{0, 1, {{4, 2}}}, {1, 2, {{3, 2}}}}},
        {2, {{0, 1, {{3, 1}, {4, 1}}}, {1, 2, {{3, 2}}}}},
        {2, {{0, 1, {{3, 2}}}, {1, 2, {{3, 2}}}}},
        {2, {{0, 1, {{3, 2}}}, {1, 2, {{0, 1}, {3, 1}}}}},
        {2, {{0, 1, {{2, 1}, {4, 1}}}, {1, 2, {{3, 2}}}}},
        {2, {{0, 1, {{3, 1}, {4, 1}}}, {1, 2, {{0, 1}, {3, 1}}}}},
        {2, {{0, 1, {{2, 1}, {3, 1}}}, {1, 2, {{0, 1}, {3, 1}}}}},
        {2, {{0, 1, {{2, 1}, {3, 1}}}, {1, 2, {{0, 1}, {4, 1}}}}},
        {2, {{0, 1, {{2, 2}}}, {1, 2, {{0, 1}, {4, 1}}}}},
        {2, {{0, 1, {{2, 2}}}, {1, 2, {{3, 2}}}}},
        {3, {{0, 4, {{1, 2}}}, {2, 3, {{1, 2}}}}},
        {3, {{0, 4, {{2, 1}, {3, 1}}}, {2, 3, {{1, 2}}}}},
        {2, {{0, 4, {{1, 1}, {2, 1}}}, {2, 3, {{0, 1}, {1, 1}}}}},
        {2, {{0, 4, {{2, 2}}}, {2, 3, {{0, 1}, {1, 1}}}}},
        {2, {{0, 4, {{2, 2}}}, {2, 3, {{0, 2}}}}},
        {4, {{3, 4, {{1, 2}}}}},
        {4, {{3, 4, {{0, 1}, {2, 1}}}}},
        {6, {}},
    };
    return table;
}

inline SmoothingDiagram to_diagram(const GoldenDiagram& g) {
    SmoothingDiagram d(5);
    for (const auto& e : g.edges) {
        OrderMap orders(e.orders.begin(), e.orders.end());
        d.add_edge(Edge(e.i, e.j), std::move(orders));
    }
    return d;
}

}  // namespace logsymp::golden
