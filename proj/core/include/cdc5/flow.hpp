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

#ifndef CDC5_FLOW_HPP
#define CDC5_FLOW_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdc5/graph.hpp"

namespace cdc5 {

/// Klein four-group element encoded in two bits; addition is XOR.
using Klein = std::uint8_t;

/// Proper 3-edge-coloring; color[e] is 0, 1 or 2.
struct EdgeColoring3 {
    std::vector<std::uint8_t> color;
};

/// Nowhere-zero Z2xZ2 flow: value[e] in {1, 2, 3} and the XOR of values
/// around every vertex is 0 (a loop contributes twice and cancels).
struct Flow4 {
    std::vector<Klein> value;
};

/// Deterministic backtracking: edges by identifier, colors 0 < 1 < 2, first
/// success wins. Returns nullopt when a loop is present or no coloring exists.
/// Throws PreconditionError unless g is 3-regular.
std::optional<EdgeColoring3> three_edge_color(const MultiGraph& g);

/// Decides whether a graph with all degrees in {2, 3} has a nowhere-zero
/// 4-flow: no bridges, circuits trivially, the rest via 3-edge-coloring of
/// the suppressed cubic graph.
bool has_nz4flow(const MultiGraph& g);

/// Like has_nz4flow, but builds the flow.
std::optional<Flow4> find_nz4flow(const MultiGraph& g);

/// Colors 0, 1, 2 map to 01, 10, 11.
Flow4 coloring_to_flow(const EdgeColoring3& col);

/// Pulls a flow on sm.suppressed_graph back to the original graph. Circuit
/// components get the constant value 01.
Flow4 lift_flow(const Flow4& f, const SuppressionMap& sm);

bool verify_flow(const MultiGraph& g, const Flow4& f);

/**
 * Flow from a cycle double cover with at most four elements. Elements get
 * distinct Klein values; when there are fewer than four, 00 is reserved for
 * the implicit empty element and the real ones take 01, 10, 11 in order.
 * f(e) is the sum over the two elements covering e, hence nonzero.
 * Throws PreconditionError if the input is not a CDC of g or has > 4 elements.
 */
Flow4 cdc_to_flow(const MultiGraph& g, std::span<const EdgeSet> cdc);

}  // namespace cdc5

#endif  // CDC5_FLOW_HPP
