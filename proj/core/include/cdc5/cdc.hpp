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

#ifndef CDC5_CDC_HPP
#define CDC5_CDC_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cdc5/cycle_space.hpp"
#include "cdc5/flow.hpp"
#include "cdc5/graph.hpp"

namespace cdc5 {

/// Ordered cover elements over one host. A valid CDC has only nonempty even
/// subgraphs and covers every edge exactly twice; repeats are allowed.
using Cdc = std::vector<EvenSubgraph>;

struct CdcReport {
    std::vector<std::size_t> non_even_elements;
    std::vector<std::size_t> empty_elements;
    /// (edge, times covered) for every edge not covered exactly twice.
    std::vector<std::pair<EdgeId, int>> miscovered;
    std::vector<int> coverage;

    bool valid() const noexcept { return non_even_elements.empty() && empty_elements.empty() && miscovered.empty(); }
};

CdcReport verify_cdc(const MultiGraph& g, std::span<const EdgeSet> elements);

/// Least index i with c0 ⊆ elements[i].
std::optional<std::size_t> contains_element_superset(std::span<const EdgeSet> elements, const EdgeSet& c0);

/**
 * Cycle double cover of `g` with at most four elements, one equal to
 * `prescribed` (dropped when empty, leaving at most three).
 *
 * For each A of the cycle space (Gray-code order) solves for an even B with
 * every edge outside prescribed ∪ A forced into B and every edge of
 * prescribed ∩ A forced out of B; D = prescribed + A + B completes the cover.
 *
 * Throws FlowMissingError if g has no nowhere-zero 4-flow, PreconditionError
 * if `prescribed` is not an even subgraph of g, CapacityError past `guard`.
 */
Cdc four_cdc_with(const MultiGraph& g, const EvenSubgraph& prescribed, int guard = default_dimension_guard);

/**
 * Builds a CDC of at most k+3 elements from even subgraphs C1..Ck with
 * c0 ⊆ C1, given that
 *   1. each edge lies in at most two of them,
 *   2. the edges lying in two of them form a matching M,
 *   3. G - M has a nowhere-zero 4-flow.
 * The result lists the 4-CDC partners of the symmetric difference first,
 * then C1..Ck; empty sets are dropped. Failed conditions raise
 * ConditionError carrying the condition number and witnessing edges.
 */
Cdc assemble_prop1(const MultiGraph& g, std::span<const EvenSubgraph> c_list, const EvenSubgraph& c0,
                   int guard = default_dimension_guard);

/// What a ≤5-element CDC containing c0 reveals: C1 holds c0, C2 is the next
/// element, M = C1 ∩ C2 is a matching and G - M keeps a ≤4-element CDC.
struct Theorem2Witness {
    std::size_t c1_index = 0;
    std::optional<std::size_t> c2_index;
    EvenSubgraph c1;
    EvenSubgraph c2;
    EdgeSet matching;
    /// G - M, its ≤4-element CDC {C1 + C2, remaining elements}, and the
    /// flow derived from that CDC. Identifiers are those of reduced.graph.
    EdgeDeletion reduced;
    Cdc reduced_cdc;
    Flow4 reduced_flow;
};

/// Throws PreconditionError on an invalid input CDC and InvariantViolation
/// if any recovered guarantee fails.
Theorem2Witness extract_theorem2_witness(const MultiGraph& g, std::span<const EvenSubgraph> cdc, const EdgeSet& c0);

}  // namespace cdc5

#endif  // CDC5_CDC_HPP
