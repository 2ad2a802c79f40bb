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

#ifndef CDC5_GRAPH6_HPP
#define CDC5_GRAPH6_HPP

#include <string>
#include <string_view>

#include "cdc5/graph.hpp"

namespace cdc5 {

/// Largest order representable in the short graph6 header.
inline constexpr int graph6_max_vertices = 62;

/**
 * Parses one short-form graph6 line (trailing whitespace ignored).
 *
 * Edge identifiers follow the bit order of the encoding: columns j = 1..n-1,
 * rows i = 0..j-1. Throws ParseError with the offending byte offset.
 */
MultiGraph parse_graph6(std::string_view text);

/// Encodes a simple graph. Throws FormatError on loops, parallel edges or n > 62.
std::string write_graph6(const MultiGraph& g);

}  // namespace cdc5

#endif  // CDC5_GRAPH6_HPP
