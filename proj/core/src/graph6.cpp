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

#include "cdc5/graph6.hpp"

#include <algorithm>
#include <vector>

#include "cdc5/error.hpp"

namespace cdc5 {

MultiGraph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", 0);

    const int header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw ParseError("long-form graph6 (n > 62) is not supported", 0);
    if (header < 63 || header > 125) throw ParseError("malformed graph6 header byte", 0);
    const int n = header - 63;

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t want = (bits + 5) / 6;
    if (text.size() - 1 != want)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(want + 1) + " bytes, got " +
                             std::to_string(text.size()),
                         std::min(text.size(), want + 1));

    std::vector<int> payload(want);
    for (std::size_t k = 0; k < want; ++k) {
        const int c = static_cast<unsigned char>(text[k + 1]);
        if (c < 63 || c > 126) throw ParseError("graph6 payload byte out of range", k + 1);
        payload[k] = c - 63;
    }
    auto bit = [&](std::size_t idx) { return (payload[idx / 6] >> (5 - idx % 6)) & 1; };

    std::vector<Edge> edges;
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (bit(idx)) edges.push_back({i, j});
    for (; idx < want * 6; ++idx)
        if (bit(idx)) throw ParseError("nonzero graph6 padding bits", idx / 6 + 1);

    return MultiGraph(n, std::move(edges));
}

std::string write_graph6(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n > graph6_max_vertices) throw FormatError("graph6 short form holds at most 62 vertices");
    if (!g.is_simple()) throw FormatError("graph6 cannot encode loops or parallel edges");

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges())
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
            adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;

    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace cdc5
