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

#ifndef CDC5_CYCLE_SPACE_HPP
#define CDC5_CYCLE_SPACE_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdc5/error.hpp"
#include "cdc5/graph.hpp"

namespace cdc5 {

/// An edge set meeting every vertex in an even number of edges and holding
/// no loop. On hosts of maximum degree 3 these are the 2-regular subgraphs.
using EvenSubgraph = EdgeSet;

/// A nonempty connected even subgraph.
using Circuit = EdgeSet;

inline constexpr int default_dimension_guard = 24;

bool is_even_subgraph(const MultiGraph& g, const EdgeSet& s);
bool is_circuit(const MultiGraph& g, const EdgeSet& s);

/**
 * Fundamental-cycle basis of the cycle space.
 *
 * The spanning forest is built by union-find over edges in identifier order.
 * Loops are not part of any 2-regular subgraph and are left out, so
 * dimension() = (m - loops) - n + components.
 */
struct CycleBasis {
    int edge_count = 0;
    std::vector<EvenSubgraph> basis;

    std::size_t dimension() const noexcept { return basis.size(); }

    /// Sum of the basis vectors selected by `coefficients` (bit i -> basis[i]).
    EvenSubgraph combine(std::uint64_t coefficients) const;
};

CycleBasis cycle_space_basis(const MultiGraph& g);

inline void check_dimension_guard(std::size_t dim, int guard) {
    if (guard < 0 || dim > static_cast<std::size_t>(guard) || dim >= 63)
        throw CapacityError("cycle space dimension " + std::to_string(dim) + " exceeds the guard of " +
                            std::to_string(guard));
}

/**
 * Visits all 2^k sums of `generators` starting from `offset`, in binary
 * reflected Gray-code order: step i flips generator countr_zero(i). Visiting
 * stops early when `visit` returns false. Indices [begin, end) select a
 * chunk of the sequence so independent chunks can be consumed in parallel.
 */
template <typename Visit>
void for_each_gray_sum(const EdgeSet& offset, std::span<const EdgeSet> generators, std::uint64_t begin,
                       std::uint64_t end, Visit&& visit) {
    if (begin >= end) return;
    EdgeSet current = offset;
    const std::uint64_t start_code = begin ^ (begin >> 1);
    for (std::size_t i = 0; i < generators.size(); ++i)
        if ((start_code >> i) & 1u) current ^= generators[i];
    if (!visit(current)) return;
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        current ^= generators[static_cast<std::size_t>(std::countr_zero(i))];
        if (!visit(current)) return;
    }
}

/// Streams every even subgraph (2^dim of them, Gray-code order starting at ∅).
/// Throws CapacityError when dim exceeds `guard`.
template <typename Visit>
void for_each_even_subgraph(const CycleBasis& basis, Visit&& visit, int guard = default_dimension_guard) {
    check_dimension_guard(basis.dimension(), guard);
    for_each_gray_sum(EdgeSet(static_cast<std::size_t>(basis.edge_count)), basis.basis, 0,
                      std::uint64_t{1} << basis.dimension(), visit);
}

std::vector<EvenSubgraph> enumerate_even_subgraphs(const CycleBasis& basis, int guard = default_dimension_guard);

/// All circuits, ordered by cardinality then lex_less.
std::vector<Circuit> enumerate_circuits(const MultiGraph& g, int guard = default_dimension_guard);

/**
 * Solution of an affine cycle-space constraint problem: the set of even
 * subgraphs X with forced_one ⊆ X and X ∩ forced_zero = ∅ is exactly
 * `particular` + span(kernel).
 */
struct AffineSolution {
    EvenSubgraph particular;
    std::vector<EvenSubgraph> kernel;

    std::size_t dimension() const noexcept { return kernel.size(); }
};

/**
 * Gauss-Jordan elimination over the basis coefficients. Constraint rows are
 * taken in ascending edge order and each new pivot is the lowest remaining
 * coefficient; free coefficients are set to zero, so the particular
 * solution is reproducible. Returns nullopt when infeasible.
 */
std::optional<AffineSolution> solve_affine(const CycleBasis& basis, const EdgeSet& forced_one,
                                           const EdgeSet& forced_zero);

EdgeSet sym_diff(std::span<const EdgeSet> sets);

}  // namespace cdc5

#endif  // CDC5_CYCLE_SPACE_HPP
