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

#include "cdc5/cdc.hpp"

#include <algorithm>
#include <string>

#include "cdc5/error.hpp"

namespace cdc5 {

namespace {

void require_even(const MultiGraph& g, const EdgeSet& s, const char* what) {
    if (s.size() != static_cast<std::size_t>(g.edge_count()))
        throw PreconditionError(std::string(what) + " does not belong to this graph");
    if (!is_even_subgraph(g, s)) throw PreconditionError(std::string(what) + " is not an even subgraph");
}

// The nonempty members of {A, B, D} completing `prescribed` to a CDC.
std::vector<EdgeSet> four_cdc_partners(const MultiGraph& g, const EvenSubgraph& prescribed, int guard) {
    require_even(g, prescribed, "prescribed subgraph");
    if (!has_nz4flow(g)) throw FlowMissingError("graph has no nowhere-zero 4-flow, so no 4-CDC exists");

    const CycleBasis basis = cycle_space_basis(g);
    const EdgeSet all = g.all_edges();
    std::optional<std::vector<EdgeSet>> found;
    for_each_even_subgraph(
        basis,
        [&](const EvenSubgraph& a) {
            const auto sol = solve_affine(basis, all - (prescribed | a), prescribed & a);
            if (!sol) return true;
            const EvenSubgraph& b = sol->particular;
            std::vector<EdgeSet> parts;
            for (const EdgeSet* x : {&a, &b})
                if (x->any()) parts.push_back(*x);
            if (EdgeSet d = prescribed ^ a ^ b; d.any()) parts.push_back(std::move(d));
            found = std::move(parts);
            return false;
        },
        guard);
    if (!found) throw InvariantViolation("4-CDC search exhausted the cycle space although a 4-flow exists");
    return *found;
}

}  // namespace

CdcReport verify_cdc(const MultiGraph& g, std::span<const EdgeSet> elements) {
    CdcReport r;
    r.coverage.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const EdgeSet& s = elements[i];
        if (s.size() != static_cast<std::size_t>(g.edge_count()) || !is_even_subgraph(g, s)) {
            r.non_even_elements.push_back(i);
            if (s.size() != static_cast<std::size_t>(g.edge_count())) continue;
        }
        if (s.none()) r.empty_elements.push_back(i);
        s.for_each([&](int e) { ++r.coverage[static_cast<std::size_t>(e)]; });
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (r.coverage[static_cast<std::size_t>(e)] != 2) r.miscovered.emplace_back(e, r.coverage[static_cast<std::size_t>(e)]);
    return r;
}

std::optional<std::size_t> contains_element_superset(std::span<const EdgeSet> elements, const EdgeSet& c0) {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].size() == c0.size() && c0.is_subset_of(elements[i])) return i;
    return std::nullopt;
}

Cdc four_cdc_with(const MultiGraph& g, const EvenSubgraph& prescribed, int guard) {
    Cdc out;
    if (prescribed.any()) out.push_back(prescribed);
    for (EdgeSet& p : four_cdc_partners(g, prescribed, guard)) out.push_back(std::move(p));
    if (!verify_cdc(g, out).valid()) throw InvariantViolation("constructed 4-CDC failed verification");
    return out;
}

Cdc assemble_prop1(const MultiGraph& g, std::span<const EvenSubgraph> c_list, const EvenSubgraph& c0, int guard) {
    if (!g.is_cubic()) throw PreconditionError("assembly requires a cubic graph");
    if (c_list.empty()) throw PreconditionError("assembly needs at least one even subgraph");
    for (const EvenSubgraph& c : c_list) require_even(g, c, "listed subgraph");
    if (c0.size() != c_list[0].size() || !c0.is_subset_of(c_list[0]))
        throw PreconditionError("the prescribed subgraph is not contained in the first listed subgraph");

    std::vector<int> multiplicity(static_cast<std::size_t>(g.edge_count()), 0);
    for (const EvenSubgraph& c : c_list) c.for_each([&](int e) { ++multiplicity[static_cast<std::size_t>(e)]; });
    std::vector<int> over;
    EdgeSet matching = g.empty_set();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const int k = multiplicity[static_cast<std::size_t>(e)];
        if (k > 2) over.push_back(e);
        if (k == 2) matching.set(static_cast<std::size_t>(e));
    }
    if (!over.empty()) throw ConditionError(1, over, "edges lie in more than two listed subgraphs");

    if (const auto conflicts = matching_conflicts(g, matching); !conflicts.empty()) {
        std::vector<int> witness;
        for (const auto& [a, b] : conflicts) {
            witness.push_back(a);
            witness.push_back(b);
        }
        std::sort(witness.begin(), witness.end());
        witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
        throw ConditionError(2, witness, "doubly covered edges do not form a matching");
    }

    const EdgeDeletion reduced = delete_edges(g, matching);
    if (!has_nz4flow(reduced.graph)) {
        std::vector<int> witness = reduced.extend(bridges(reduced.graph)).ids();
        if (witness.empty()) witness = matching.ids();
        throw ConditionError(3, witness, "G - M has no nowhere-zero 4-flow");
    }

    const EdgeSet combined = reduced.restrict(sym_diff(c_list));
    Cdc out;
    for (const EdgeSet& p : four_cdc_partners(reduced.graph, combined, guard)) out.push_back(reduced.extend(p));
    for (const EvenSubgraph& c : c_list)
        if (c.any()) out.push_back(c);

    if (!verify_cdc(g, out).valid()) throw InvariantViolation("assembled cover failed verification");
    if (!contains_element_superset(out, c0)) throw InvariantViolation("assembled cover lost the prescribed subgraph");
    if (out.size() > c_list.size() + 3) throw InvariantViolation("assembled cover is larger than k + 3");
    return out;
}

Theorem2Witness extract_theorem2_witness(const MultiGraph& g, std::span<const EvenSubgraph> cdc, const EdgeSet& c0) {
    if (!g.is_cubic()) throw PreconditionError("witness extraction requires a cubic graph");
    if (cdc.size() > 5) throw PreconditionError("witness extraction takes at most 5 elements");
    if (!verify_cdc(g, cdc).valid()) throw PreconditionError("input is not a cycle double cover");
    const auto holder = contains_element_superset(cdc, c0);
    if (!holder) throw PreconditionError("no element contains the prescribed subgraph");

    Theorem2Witness w;
    w.c1_index = *holder;
    w.c1 = cdc[*holder];
    w.c2 = g.empty_set();
    for (std::size_t j = 0; j < cdc.size(); ++j) {
        if (j == *holder) continue;
        w.c2_index = j;
        w.c2 = cdc[j];
        break;
    }
    w.matching = w.c1 & w.c2;
    if (!is_matching(g, w.matching)) throw InvariantViolation("C1 ∩ C2 is not a matching");

    w.reduced = delete_edges(g, w.matching);
    if (EdgeSet merged = w.reduced.restrict(w.c1 ^ w.c2); merged.any()) w.reduced_cdc.push_back(std::move(merged));
    for (std::size_t j = 0; j < cdc.size(); ++j) {
        if (j == w.c1_index || (w.c2_index && j == *w.c2_index)) continue;
        if (EdgeSet r = w.reduced.restrict(cdc[j]); r.any()) w.reduced_cdc.push_back(std::move(r));
    }
    if (w.reduced_cdc.size() > 4 || !verify_cdc(w.reduced.graph, w.reduced_cdc).valid())
        throw InvariantViolation("G - M did not inherit a 4-CDC");
    w.reduced_flow = cdc_to_flow(w.reduced.graph, w.reduced_cdc);
    if (!verify_flow(w.reduced.graph, w.reduced_flow)) throw InvariantViolation("flow derived from the 4-CDC is not conserved");
    if (!has_nz4flow(w.reduced.graph)) throw InvariantViolation("G - M has a 4-CDC but the flow decision says no");
    return w;
}

}  // namespace cdc5
