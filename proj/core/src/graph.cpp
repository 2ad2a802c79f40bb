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

#include "cdc5/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cdc5/error.hpp"

namespace cdc5 {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

}  // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incidence_(static_cast<std::size_t>(vertex_count)) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= n_ || ed.v >= n_)
            throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside 0.." + std::to_string(n_ - 1));
        incidence_[static_cast<std::size_t>(ed.u)].push_back(static_cast<EdgeId>(e));
        incidence_[static_cast<std::size_t>(ed.v)].push_back(static_cast<EdgeId>(e));
    }
}

bool MultiGraph::has_loop() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool MultiGraph::is_simple() const noexcept {
    if (has_loop()) return false;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool MultiGraph::is_cubic() const noexcept {
    for (const auto& inc : incidence_)
        if (inc.size() != 3) return false;
    return true;
}

EdgeSet EdgeDeletion::restrict(const EdgeSet& original) const {
    EdgeSet out(new_to_old.size());
    original.for_each([&](int e) {
        if (const EdgeId ne = old_to_new[static_cast<std::size_t>(e)]; ne >= 0) out.set(static_cast<std::size_t>(ne));
    });
    return out;
}

EdgeSet EdgeDeletion::extend(const EdgeSet& reduced) const {
    EdgeSet out(old_to_new.size());
    reduced.for_each([&](int e) { out.set(static_cast<std::size_t>(new_to_old[static_cast<std::size_t>(e)])); });
    return out;
}

EdgeDeletion delete_edges(const MultiGraph& g, const EdgeSet& removed) {
    if (removed.size() != static_cast<std::size_t>(g.edge_count()))
        throw PreconditionError("edge set does not belong to this graph");
    EdgeDeletion out;
    out.old_to_new.assign(static_cast<std::size_t>(g.edge_count()), -1);
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (removed.test(static_cast<std::size_t>(e))) continue;
        out.old_to_new[static_cast<std::size_t>(e)] = static_cast<EdgeId>(kept.size());
        out.new_to_old.push_back(e);
        kept.push_back(g.edge(e));
    }
    out.graph = MultiGraph(g.vertex_count(), std::move(kept));
    return out;
}

std::vector<int> degrees_in(const MultiGraph& g, const EdgeSet& s) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    s.for_each([&](int e) {
        const Edge& ed = g.edge(e);
        ++deg[static_cast<std::size_t>(ed.u)];
        ++deg[static_cast<std::size_t>(ed.v)];
    });
    return deg;
}

std::vector<std::pair<EdgeId, EdgeId>> matching_conflicts(const MultiGraph& g, const EdgeSet& s) {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    std::vector<EdgeId> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    s.for_each([&](int e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) {
            out.emplace_back(e, e);
            return;
        }
        for (Vertex x : {ed.u, ed.v}) {
            EdgeId& o = owner[static_cast<std::size_t>(x)];
            if (o >= 0)
                out.emplace_back(o, e);
            else
                o = e;
        }
    });
    return out;
}

bool is_matching(const MultiGraph& g, const EdgeSet& s) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    bool ok = true;
    s.for_each([&](int e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop() || used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)]) ok = false;
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
    });
    return ok;
}

EdgeSet bridges(const MultiGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    EdgeSet out = g.empty_set();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;

    // Iterative lowlink DFS. The tree edge into a vertex is skipped by edge
    // identifier, so a parallel copy still counts as a back edge.
    struct Frame {
        Vertex v;
        EdgeId via;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const EdgeId e = inc[f.next++];
                if (e == f.via) continue;
                const Vertex w = g.edge(e).other(f.v);
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex parent = stack.back().v;
            low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(parent)]) out.set(static_cast<std::size_t>(done.via));
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> components(const MultiGraph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    std::vector<std::vector<Vertex>> out;
    std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int r = uf.find(v);
        int& s = slot[static_cast<std::size_t>(r)];
        if (s < 0) {
            s = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(s)].push_back(v);
    }
    return out;
}

bool is_edge_connected_subset(const MultiGraph& g, const EdgeSet& s) {
    if (s.none()) return false;
    UnionFind uf(g.vertex_count());
    int root = -1;
    s.for_each([&](int e) {
        uf.unite(g.edge(e).u, g.edge(e).v);
        root = g.edge(e).u;
    });
    bool connected = true;
    s.for_each([&](int e) {
        if (uf.find(g.edge(e).u) != uf.find(root)) connected = false;
    });
    return connected;
}

SuppressionMap suppress_degree2(const MultiGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d != 2 && d != 3)
            throw PreconditionError("suppression requires degrees 2 or 3; vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(d));
    }

    SuppressionMap sm;
    sm.original_edge_count = g.edge_count();
    sm.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    int kept = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3) sm.vertex_map[static_cast<std::size_t>(v)] = kept++;

    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<Edge> new_edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 3) continue;
        for (EdgeId start : g.incident(v)) {
            if (used[static_cast<std::size_t>(start)]) continue;
            std::vector<EdgeId> path;
            Vertex cur = v;
            EdgeId e = start;
            while (true) {
                used[static_cast<std::size_t>(e)] = 1;
                path.push_back(e);
                cur = g.edge(e).other(cur);
                if (g.degree(cur) == 3) break;
                const auto inc = g.incident(cur);
                e = inc[0] == e ? inc[1] : inc[0];
            }
            new_edges.push_back({sm.vertex_map[static_cast<std::size_t>(v)], sm.vertex_map[static_cast<std::size_t>(cur)]});
            sm.path_of.push_back(std::move(path));
        }
    }
    sm.suppressed_graph = MultiGraph(kept, std::move(new_edges));

    // Whatever is left lies in components made only of degree-2 vertices.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (EdgeId start : g.incident(v)) {
            if (used[static_cast<std::size_t>(start)]) continue;
            EdgeSet comp = g.empty_set();
            Vertex cur = v;
            EdgeId e = start;
            while (!used[static_cast<std::size_t>(e)]) {
                used[static_cast<std::size_t>(e)] = 1;
                comp.set(static_cast<std::size_t>(e));
                cur = g.edge(e).other(cur);
                const auto inc = g.incident(cur);
                e = inc[0] == e ? inc[1] : inc[0];
            }
            sm.circuit_components.push_back(std::move(comp));
        }
    }
    return sm;
}

}  // namespace cdc5
