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

#ifndef CDC5_CERTIFICATE_HPP
#define CDC5_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdc5/cdc.hpp"
#include "cdc5/graph.hpp"

namespace cdc5 {

struct SearchStats {
    std::uint64_t candidates_tried = 0;
    std::int64_t elapsed_ms = 0;
};

inline constexpr std::string_view path_theorem2 = "theorem2";
inline constexpr std::string_view path_m_empty = "m-empty";

/// Record of a successful search for a ≤5-element CDC containing c0.
struct Certificate {
    MultiGraph graph;
    EdgeSet c0;
    EdgeSet c1;
    EdgeSet c2;
    EdgeSet matching;
    Cdc cdc;
    std::string path;
    SearchStats stats;
};

/**
 * JSON document with fields graph6 (null for multigraphs), n, m, edges,
 * c0, c1, c2, matching, cdc, coverage, path and stats, in that order.
 * With include_timing = false the elapsed_ms field is written as 0 so two
 * runs can be compared byte for byte.
 */
std::string to_json(const Certificate& cert, bool include_timing = true);

/// Parses the fields back; coverage and graph6 are not consulted.
/// Throws ParseError or FormatError on malformed documents.
Certificate certificate_from_json(std::string_view text);

struct CertificateCheck {
    std::vector<std::string> problems;

    bool ok() const noexcept { return problems.empty(); }
};

/**
 * Re-verifies a certificate document from its own contents: graph sanity,
 * graph6 agreement, every CDC element even and nonempty, each edge covered
 * exactly twice (and matching the stored coverage), c0 ⊆ C1 and inside a CDC
 * element, M = C1 ∩ C2 a matching, and a nowhere-zero 4-flow on G - M.
 * Semantic failures are listed in the result; malformed documents throw
 * ParseError or FormatError.
 */
CertificateCheck verify_certificate_json(std::string_view text);

}  // namespace cdc5

#endif  // CDC5_CERTIFICATE_HPP
