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

#ifndef CDC5_GRAPH_HPP
#define CDC5_GRAPH_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cdc5/edge_set.hpp"

namespace cdc5 {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u;
    Vertex v;

    bool is_loop() const noexcept { return u == v; }
    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Undirected multigraph with dense, stable edge identifiers.
 *
 * Vertices are 0..n-1 and edges 0..m-1. Loops and parallel edges are
 * allowed. The value is immutable once built; incidence lists are sorted by
 * edge identifier and list a loop twice, so degree() counts loops twice.
 */
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }

    bool has_loop() const noexcept;
    bool is_simple() const noexcept;
    bool is_cubic() const noexcept;

    EdgeSet empty_set() const { return EdgeSet(edges_.size()); }
    EdgeSet all_edges() const { return EdgeSet::full(edges_.size()); }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// Result of removing an edge subset. `old_to_new[e]` is -1 for removed edges.
struct EdgeDeletion {
    MultiGraph graph;
    std::vector<EdgeId> old_to_new;
    std::vector<EdgeId> new_to_old;

    /// Maps a set over the original graph into the reduced graph, dropping removed edges.
    EdgeSet restrict(const EdgeSet& original) const;
    /// Maps a set over the reduced graph back to original identifiers.
    EdgeSet extend(const EdgeSet& reduced) const;
};

EdgeDeletion delete_edges(const MultiGraph& g, const EdgeSet& removed);

/// Per-vertex count of member edges (loops count twice).
std::vector<int> degrees_in(const MultiGraph& g, const EdgeSet& s);

/// True iff no two edges of `s` share an endpoint and `s` holds no loop.
bool is_matching(const MultiGraph& g, const EdgeSet& s);

/// Pairs of member edges that share an endpoint, plus any loops (as {e, e}).
std::vector<std::pair<EdgeId, EdgeId>> matching_conflicts(const MultiGraph& g, const EdgeSet& s);

/// Cut-edges. Parallel edges and loops are never bridges.
EdgeSet bridges(const MultiGraph& g);

/// Connected components ordered by least vertex, each sorted ascending.
std::vector<std::vector<Vertex>> components(const MultiGraph& g);

/// True iff the member edges of `s` form one connected piece (false for empty s).
bool is_edge_connected_subset(const MultiGraph& g, const EdgeSet& s);

/**
 * Output of suppress_degree2.
 *
 * `path_of[e]` lists the original edges replaced by suppressed edge e, in
 * walk order from suppressed_graph.edge(e).u to .v. Components consisting only
 * of degree-2 vertices have no counterpart in suppressed_graph and are kept
 * in circuit_components.
 */
struct SuppressionMap {
    MultiGraph suppressed_graph;
    std::vector<std::vector<EdgeId>> path_of;
    std::vector<EdgeSet> circuit_components;
    /// original vertex -> suppressed vertex, -1 for degree-2 vertices.
    std::vector<Vertex> vertex_map;
    int original_edge_count = 0;
};

/// Replaces every maximal path through degree-2 vertices by one edge.
/// Requires every degree in {2, 3}; throws PreconditionError otherwise.
SuppressionMap suppress_degree2(const MultiGraph& g);

}  // namespace cdc5

#endif  // CDC5_GRAPH_HPP
