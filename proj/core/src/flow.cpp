// Copyright 2026 The cdc5 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdc5/flow.hpp"

#include <string>

#include "cdc5/cdc.hpp"
#include "cdc5/error.hpp"

namespace cdc5 {

namespace {

// Colors one connected component's edges (ascending identifiers). The
// component's first edge only tries color 0: any coloring can be permuted to
// start that way, and the lexicographically first one already does.
bool color_component(const MultiGraph& g, const std::vector<EdgeId>& edges, std::vector<std::uint8_t>& mask,
                     std::vector<std::uint8_t>& color) {
    const std::size_t k = edges.size();
    std::vector<std::uint8_t> tried(k, 0);
    std::size_t i = 0;
    while (true) {
        if (i == k) return true;
        const EdgeId e = edges[i];
        const Edge& ed = g.edge(e);
        auto& mu = mask[static_cast<std::size_t>(ed.u)];
        auto& mv = mask[static_cast<std::size_t>(ed.v)];
        std::uint8_t& c = color[static_cast<std::size_t>(e)];
        if (tried[i]) {
            // Undo the previous attempt at this position before trying the next color.
            const auto bit = static_cast<std::uint8_t>(1u << c);
            mu = static_cast<std::uint8_t>(mu & ~bit);
            mv = static_cast<std::uint8_t>(mv & ~bit);
        }
        const std::uint8_t limit = i == 0 ? 1 : 3;
        std::uint8_t next = tried[i] ? static_cast<std::uint8_t>(c + 1) : 0;
        const std::uint8_t blocked = mu | mv;
        while (next < limit && ((blocked >> next) & 1u)) ++next;
        if (next >= limit) {
            tried[i] = 0;
            if (i == 0) return false;
            --i;
            continue;
        }
        c = next;
        tried[i] = 1;
        const auto bit = static_cast<std::uint8_t>(1u << c);
        mu |= bit;
        mv |= bit;
        ++i;
    }
}

void require_subcubic_no_isolated(const MultiGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d != 2 && d != 3)
            throw PreconditionError("flow decision requires degrees 2 or 3; vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(d));
    }
}

}  // namespace

std::optional<EdgeColoring3> three_edge_color(const MultiGraph& g) {
    if (!g.is_cubic()) throw PreconditionError("3-edge-coloring requires a 3-regular graph");
    if (g.has_loop()) return std::nullopt;

    EdgeColoring3 col;
    col.color.assign(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.vertex_count()), 0);

    // Components are independent, so the first coloring of the whole graph is
    // the union of each component's first coloring.
    std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()), -1);
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<std::vector<EdgeId>> edges_of(comps.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges_of[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(g.edge(e).u)])].push_back(e);

    for (const auto& edges : edges_of)
        if (!color_component(g, edges, mask, col.color)) return std::nullopt;
    return col;
}

bool has_nz4flow(const MultiGraph& g) {
    require_subcubic_no_isolated(g);
    if (bridges(g).any()) return false;
    const SuppressionMap sm = suppress_degree2(g);
    return three_edge_color(sm.suppressed_graph).has_value();
}

std::optional<Flow4> find_nz4flow(const MultiGraph& g) {
    require_subcubic_no_isolated(g);
    if (bridges(g).any()) return std::nullopt;
    const SuppressionMap sm = suppress_degree2(g);
    const auto col = three_edge_color(sm.suppressed_graph);
    if (!col) return std::nullopt;
    return lift_flow(coloring_to_flow(*col), sm);
}

Flow4 coloring_to_flow(const EdgeColoring3& col) {
    Flow4 f;
    f.value.reserve(col.color.size());
    for (std::uint8_t c : col.color) f.value.push_back(static_cast<Klein>(c + 1));
    return f;
}

Flow4 lift_flow(const Flow4& f, const SuppressionMap& sm) {
    Flow4 out;
    out.value.assign(static_cast<std::size_t>(sm.original_edge_count), 0);
    for (std::size_t e = 0; e < sm.path_of.size(); ++e)
        for (EdgeId orig : sm.path_of[e]) out.value[static_cast<std::size_t>(orig)] = f.value[e];
    for (const EdgeSet& comp : sm.circuit_components)
        comp.for_each([&](int e) { out.value[static_cast<std::size_t>(e)] = 1; });
    return out;
}

bool verify_flow(const MultiGraph& g, const Flow4& f) {
    if (f.value.size() != static_cast<std::size_t>(g.edge_count())) return false;
    std::vector<Klein> sum(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Klein x = f.value[static_cast<std::size_t>(e)];
        if (x == 0 || x > 3) return false;
        sum[static_cast<std::size_t>(g.edge(e).u)] ^= x;
        sum[static_cast<std::size_t>(g.edge(e).v)] ^= x;
    }
    for (Klein s : sum)
        if (s != 0) return false;
    return true;
}

Flow4 cdc_to_flow(const MultiGraph& g, std::span<const EdgeSet> cdc) {
    if (cdc.size() > 4) throw PreconditionError("cdc_to_flow takes at most 4 elements, got " + std::to_string(cdc.size()));
    if (!verify_cdc(g, cdc).valid()) throw PreconditionError("cdc_to_flow input is not a cycle double cover");
    const Klein first = cdc.size() < 4 ? 1 : 0;
    Flow4 f;
    f.value.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < cdc.size(); ++i) {
        const auto v = static_cast<Klein>(first + i);
        cdc[i].for_each([&](int e) { f.value[static_cast<std::size_t>(e)] ^= v; });
    }
    return f;
}

}  // namespace cdc5
