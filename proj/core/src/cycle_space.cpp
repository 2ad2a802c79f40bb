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

#include "cdc5/cycle_space.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cdc5 {

namespace {

int lowest_member(const EdgeSet& s) {
    const auto words = s.words();
    for (std::size_t w = 0; w < words.size(); ++w)
        if (words[w]) return static_cast<int>(w * EdgeSet::word_bits) + std::countr_zero(words[w]);
    return -1;
}

}  // namespace

bool is_even_subgraph(const MultiGraph& g, const EdgeSet& s) {
    if (s.size() != static_cast<std::size_t>(g.edge_count())) return false;
    bool loop = false;
    s.for_each([&](int e) { loop = loop || g.edge(e).is_loop(); });
    if (loop) return false;
    for (int d : degrees_in(g, s))
        if (d % 2 != 0) return false;
    return true;
}

bool is_circuit(const MultiGraph& g, const EdgeSet& s) {
    return is_even_subgraph(g, s) && is_edge_connected_subset(g, s);
}

EvenSubgraph CycleBasis::combine(std::uint64_t coefficients) const {
    EvenSubgraph out(static_cast<std::size_t>(edge_count));
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((coefficients >> i) & 1u) out ^= basis[i];
    return out;
}

CycleBasis cycle_space_basis(const MultiGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
        return x;
    };

    std::vector<std::vector<EdgeId>> tree_adj(n);
    std::vector<EdgeId> non_tree;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        const int a = find(ed.u), b = find(ed.v);
        if (a == b) {
            non_tree.push_back(e);
            continue;
        }
        root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        tree_adj[static_cast<std::size_t>(ed.u)].push_back(e);
        tree_adj[static_cast<std::size_t>(ed.v)].push_back(e);
    }

    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<int> depth(n, -1);
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        if (depth[static_cast<std::size_t>(r)] >= 0) continue;
        depth[static_cast<std::size_t>(r)] = 0;
        std::queue<Vertex> q;
        q.push(r);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : tree_adj[static_cast<std::size_t>(v)]) {
                const Vertex w = g.edge(e).other(v);
                if (depth[static_cast<std::size_t>(w)] >= 0) continue;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                parent_edge[static_cast<std::size_t>(w)] = e;
                q.push(w);
            }
        }
    }

    CycleBasis cb;
    cb.edge_count = g.edge_count();
    for (EdgeId e : non_tree) {
        EvenSubgraph c = g.empty_set();
        c.set(static_cast<std::size_t>(e));
        Vertex a = g.edge(e).u, b = g.edge(e).v;
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
            const EdgeId pe = parent_edge[static_cast<std::size_t>(a)];
            c.flip(static_cast<std::size_t>(pe));
            a = g.edge(pe).other(a);
        }
        cb.basis.push_back(std::move(c));
    }
    return cb;
}

std::vector<EvenSubgraph> enumerate_even_subgraphs(const CycleBasis& basis, int guard) {
    std::vector<EvenSubgraph> out;
    for_each_even_subgraph(
        basis,
        [&](const EvenSubgraph& s) {
            out.push_back(s);
            return true;
        },
        guard);
    return out;
}

std::vector<Circuit> enumerate_circuits(const MultiGraph& g, int guard) {
    std::vector<Circuit> out;
    for_each_even_subgraph(
        cycle_space_basis(g),
        [&](const EvenSubgraph& s) {
            if (is_edge_connected_subset(g, s)) out.push_back(s);
            return true;
        },
        guard);
    std::sort(out.begin(), out.end(), card_lex_less);
    return out;
}

std::optional<AffineSolution> solve_affine(const CycleBasis& basis, const EdgeSet& forced_one,
                                           const EdgeSet& forced_zero) {
    if (forced_one.intersects(forced_zero)) throw PreconditionError("forced_one and forced_zero overlap");
    const std::size_t d = basis.dimension();

    // Column of the constraint matrix for each edge: which basis vectors contain it.
    std::vector<EdgeSet> rows_by_edge(static_cast<std::size_t>(basis.edge_count), EdgeSet(d));
    for (std::size_t i = 0; i < d; ++i)
        basis.basis[i].for_each([&](int e) { rows_by_edge[static_cast<std::size_t>(e)].set(i); });

    std::vector<EdgeSet> rows;
    std::vector<char> rhs;
    std::vector<int> pivot;
    const EdgeSet constrained = forced_one | forced_zero;
    bool feasible = true;
    constrained.for_each([&](int e) {
        if (!feasible) return;
        EdgeSet row = rows_by_edge[static_cast<std::size_t>(e)];
        char value = forced_one.test(static_cast<std::size_t>(e)) ? 1 : 0;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (row.test(static_cast<std::size_t>(pivot[k]))) {
                row ^= rows[k];
                value ^= rhs[k];
            }
        }
        const int p = lowest_member(row);
        if (p < 0) {
            if (value) feasible = false;
            return;
        }
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].test(static_cast<std::size_t>(p))) {
                rows[k] ^= row;
                rhs[k] ^= value;
            }
        }
        rows.push_back(std::move(row));
        rhs.push_back(value);
        pivot.push_back(p);
    });
    if (!feasible) return std::nullopt;

    AffineSolution sol;
    sol.particular = EdgeSet(static_cast<std::size_t>(basis.edge_count));
    std::vector<char> is_pivot(d, 0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        is_pivot[static_cast<std::size_t>(pivot[k])] = 1;
        if (rhs[k]) sol.particular ^= basis.basis[static_cast<std::size_t>(pivot[k])];
    }
    for (std::size_t f = 0; f < d; ++f) {
        if (is_pivot[f]) continue;
        EdgeSet v = basis.basis[f];
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k].test(f)) v ^= basis.basis[static_cast<std::size_t>(pivot[k])];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

EdgeSet sym_diff(std::span<const EdgeSet> sets) {
    if (sets.empty()) return EdgeSet();
    EdgeSet out = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) out ^= sets[i];
    return out;
}

}  // namespace cdc5
