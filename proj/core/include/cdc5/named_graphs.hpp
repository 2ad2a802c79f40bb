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

#ifndef CDC5_NAMED_GRAPHS_HPP
#define CDC5_NAMED_GRAPHS_HPP

#include "cdc5/graph.hpp"

namespace cdc5::named {

/// K4 with edges 01, 02, 12, 03, 13, 23 (graph6 bit order).
MultiGraph complete4();

/// Outer cycle 0..4 (edges 0..4), spokes i~i+5 (edges 5..9), inner
/// pentagram 5+i ~ 5+((i+2) mod 5) (edges 10..14).
MultiGraph petersen();

/// Two vertices joined by three parallel edges.
MultiGraph theta();

/// The circuit 0-1-...-(n-1)-0; edge i joins i and i+1.
MultiGraph cycle(int n);

/// Flower snark J_k for odd k >= 3 (J_5 has 20 vertices).
MultiGraph flower_snark(int k);

/// Dot product of two Petersen graphs. The first copy loses outer edges 01
/// and 23 (first Blanusa snark) or 01 and the inner edge 79 (second
/// Blanusa snark); the second copy loses the adjacent vertices 0 and 1.
MultiGraph blanusa_first();
MultiGraph blanusa_second();

/// Replaces edge `e` by a path of `times + 1` edges. The new path keeps
/// identifier e for its first edge; later pieces are appended at the end.
MultiGraph subdivide(const MultiGraph& g, EdgeId e, int times = 1);

/// Disjoint union; b's vertices and edges are shifted after a's.
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

}  // namespace cdc5::named

#endif  // CDC5_NAMED_GRAPHS_HPP
