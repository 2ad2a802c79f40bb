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

#include "cdc5/named_graphs.hpp"

#include <algorithm>

#include "cdc5/error.hpp"

namespace cdc5::named {

namespace {

std::vector<Edge> petersen_edges() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
    return e;
}

bool same_edge(const Edge& e, Vertex a, Vertex b) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); }

MultiGraph petersen_dot_petersen(Edge first_removed, Edge second_removed) {
    const auto base = petersen_edges();
    std::vector<Edge> out;
    for (const Edge& e : base)
        if (!same_edge(e, first_removed.u, first_removed.v) && !same_edge(e, second_removed.u, second_removed.v))
            out.push_back(e);

    // Second copy: drop vertices 0 and 1; survivors 2..9 become 10..17.
    constexpr Vertex x = 0, y = 1;
    auto shift = [](Vertex v) { return v - 2 + 10; };
    std::vector<Vertex> x_nbrs, y_nbrs;
    for (const Edge& e : base) {
        const bool has_x = e.u == x || e.v == x;
        const bool has_y = e.u == y || e.v == y;
        if (has_x && has_y) continue;
        if (has_x)
            x_nbrs.push_back(e.other(x));
        else if (has_y)
            y_nbrs.push_back(e.other(y));
        else
            out.push_back({shift(e.u), shift(e.v)});
    }
    out.push_back({first_removed.u, shift(x_nbrs[0])});
    out.push_back({first_removed.v, shift(x_nbrs[1])});
    out.push_back({second_removed.u, shift(y_nbrs[0])});
    out.push_back({second_removed.v, shift(y_nbrs[1])});
    return MultiGraph(18, std::move(out));
}

}  // namespace

MultiGraph complete4() { return MultiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

MultiGraph petersen() { return MultiGraph(10, petersen_edges()); }

MultiGraph theta() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph cycle(int n) {
    if (n < 1) throw PreconditionError("cycle needs at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return MultiGraph(n, std::move(e));
}

MultiGraph flower_snark(int k) {
    if (k < 3 || k % 2 == 0) throw PreconditionError("flower snark J_k needs odd k >= 3");
    // Vertex blocks: a_i = i, b_i = k+i, c_i = 2k+i, d_i = 3k+i.
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return k + i % k; };
    auto c = [&](int i) { return 2 * k + i; };
    auto d = [&](int i) { return 3 * k + i; };
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        e.push_back({a(i), b(i)});
        e.push_back({a(i), c(i)});
        e.push_back({a(i), d(i)});
    }
    for (int i = 0; i < k; ++i) e.push_back({b(i), b(i + 1)});
    // c_0..c_{k-1} d_0..d_{k-1} close up into one 2k-cycle.
    for (int i = 0; i + 1 < k; ++i) e.push_back({c(i), c(i + 1)});
    e.push_back({c(k - 1), d(0)});
    for (int i = 0; i + 1 < k; ++i) e.push_back({d(i), d(i + 1)});
    e.push_back({d(k - 1), c(0)});
    return MultiGraph(4 * k, std::move(e));
}

MultiGraph blanusa_first() { return petersen_dot_petersen({0, 1}, {2, 3}); }

MultiGraph blanusa_second() { return petersen_dot_petersen({0, 1}, {7, 9}); }

MultiGraph subdivide(const MultiGraph& g, EdgeId e, int times) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("no such edge");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    int n = g.vertex_count();
    const Edge original = edges[static_cast<std::size_t>(e)];
    Vertex prev = original.u;
    for (int t = 0; t < times; ++t) {
        const Vertex fresh = n++;
        if (t == 0)
            edges[static_cast<std::size_t>(e)] = {prev, fresh};
        else
            edges.push_back({prev, fresh});
        prev = fresh;
    }
    if (times > 0) edges.push_back({prev, original.v});
    return MultiGraph(n, std::move(edges));
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    const int shift = a.vertex_count();
    for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    return MultiGraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace cdc5::named
