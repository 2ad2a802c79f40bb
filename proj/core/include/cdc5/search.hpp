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

#ifndef CDC5_SEARCH_HPP
#define CDC5_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "cdc5/cdc.hpp"
#include "cdc5/certificate.hpp"

namespace cdc5 {

/// Guards for the pair search. Zero means "no limit" for the last two.
struct SearchOptions {
    int dimension_guard = default_dimension_guard;
    std::uint64_t candidate_limit = 0;
    std::int64_t budget_ms = 0;
};

/**
 * Searches for even subgraphs C1 ⊇ c0 and C2 such that M = C1 ∩ C2 is a
 * matching and G - M has a nowhere-zero 4-flow, then assembles the
 * resulting ≤5-element CDC containing c0.
 *
 * C1 runs over the affine space of even subgraphs containing c0 ordered by
 * |C1 - c0| then lex_less; C2 runs over the whole cycle space (∅ included)
 * ordered by |C1 ∩ C2| then lex_less. The first accepted pair wins.
 *
 * Returns nullopt only after exhausting both spaces. Throws
 * BridgedGraphError for bridged input, PreconditionError for non-cubic g
 * or a c0 that is not an even subgraph, and CapacityError when a guard
 * stops the search.
 */
std::optional<Certificate> find_5cdc_containing(const MultiGraph& g, const EdgeSet& c0, const SearchOptions& options = {});

/// find_5cdc_containing with c0 = ∅.
std::optional<Certificate> has_5cdc(const MultiGraph& g, const SearchOptions& options = {});

inline constexpr int brute_force_default_guard = 7;

/**
 * Exhaustive reference search: multisets of at most `max_elements` nonempty
 * even subgraphs, one containing c0, covering every edge exactly twice.
 * Elements are indexed in card_lex_less order and multisets are explored as
 * nondecreasing index sequences, shorter before longer extensions, so the
 * result is the first such sequence. Requires m <= 64 and cycle-space
 * dimension <= guard (CapacityError otherwise).
 */
std::optional<Cdc> brute_force_cdc(const MultiGraph& g, int max_elements, const EdgeSet& c0,
                                   int guard = brute_force_default_guard);

inline std::optional<Cdc> brute_force_5cdc_oracle(const MultiGraph& g, const EdgeSet& c0,
                                                  int guard = brute_force_default_guard) {
    return brute_force_cdc(g, 5, c0, guard);
}

}  // namespace cdc5

#endif  // CDC5_SEARCH_HPP
