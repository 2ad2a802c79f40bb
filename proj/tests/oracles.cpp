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

#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <stdexcept>

namespace cdc5::oracle {

int count_components(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    return count;
}

EdgeSet bridges_by_deletion(const MultiGraph& g) {
    const std::vector<Edge> all(g.edges().begin(), g.edges().end());
    const int base = count_components(g.vertex_count(), all);
    EdgeSet out(all.size());
    for (std::size_t e = 0; e < all.size(); ++e) {
        std::vector<Edge> rest = all;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
        if (count_components(g.vertex_count(), rest) > base) out.set(e);
    }
    return out;
}

std::vector<EdgeSet> even_subsets(const MultiGraph& g) {
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("even_subsets oracle is limited to 20 edges");
    std::vector<EdgeSet> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
        bool loop = false;
        for (int e = 0; e < m; ++e) {
            if (!((mask >> e) & 1u)) continue;
            loop = loop || g.edge(e).is_loop();
            ++deg[static_cast<std::size_t>(g.edge(e).u)];
            ++deg[static_cast<std::size_t>(g.edge(e).v)];
        }
        if (loop || std::any_of(deg.begin(), deg.end(), [](int d) { return d % 2; })) continue;
        EdgeSet s(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1u) s.set(static_cast<std::size_t>(e));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<EdgeSet> simple_cycles(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> edge_between(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        edge_between[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(ed.v)] = e;
        edge_between[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(ed.u)] = e;
        adj[static_cast<std::size_t>(ed.u)].push_back(ed.v);
        adj[static_cast<std::size_t>(ed.v)].push_back(ed.u);
    }
    std::vector<EdgeSet> out;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);

    // Each cycle is reported once: it starts at its least vertex and its
    // second vertex is smaller than its last.
    auto extend = [&](auto&& self, int start) -> void {
        const int v = path.back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                EdgeSet c(static_cast<std::size_t>(g.edge_count()));
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    c.set(static_cast<std::size_t>(edge_between[static_cast<std::size_t>(path[i])][static_cast<std::size_t>(path[i + 1])]));
                c.set(static_cast<std::size_t>(edge_between[static_cast<std::size_t>(v)][static_cast<std::size_t>(start)]));
                out.push_back(std::move(c));
            }
            if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, start);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path[static_cast<std::size_t>(s)] = 1;
        extend(extend, s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return out;
}

bool exhaustively_3_edge_colorable(const MultiGraph& g) {
    const int m = g.edge_count();
    if (m > 12) throw std::invalid_argument("coloring oracle is limited to 12 edges");
    if (g.has_loop()) return false;
    std::vector<int> color(static_cast<std::size_t>(m), 0);
    long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < m; ++i, c /= 3) color[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
        bool proper = true;
        for (Vertex v = 0; v < g.vertex_count() && proper; ++v) {
            int seen = 0;
            for (EdgeId e : g.incident(v)) {
                const int bit = 1 << color[static_cast<std::size_t>(e)];
                if (seen & bit) proper = false;
                seen |= bit;
            }
        }
        if (proper) return true;
    }
    return false;
}

int girth(const MultiGraph& g) {
    int best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                if (e == via[static_cast<std::size_t>(v)]) continue;
                const int w = g.edge(e).other(v);
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    via[static_cast<std::size_t>(w)] = e;
                    q.push(w);
                } else {
                    const int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

MultiGraph random_cubic_multigraph(int n, std::mt19937& rng) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < 3; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) edges.push_back({points[i], points[i + 1]});
    return MultiGraph(n, std::move(edges));
}

MultiGraph random_simple_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) edges.push_back({i, j});
    return MultiGraph(n, std::move(edges));
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '>') continue;
        out.push_back(line);
    }
    return out;
}

EdgeSet edges_of(const MultiGraph& g, std::initializer_list<int> ids) {
    return EdgeSet::from_ids(static_cast<std::size_t>(g.edge_count()), ids);
}

EdgeSet walk_edges(const MultiGraph& g, const std::vector<Vertex>& walk) {
    EdgeSet s(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
        bool hit = false;
        for (EdgeId e = 0; e < g.edge_count() && !hit; ++e) {
            const Edge& ed = g.edge(e);
            if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) {
                s.set(static_cast<std::size_t>(e));
                hit = true;
            }
        }
        if (!hit) throw std::invalid_argument("walk uses a non-edge");
    }
    return s;
}

}  // namespace cdc5::oracle
