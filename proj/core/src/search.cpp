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

#include "cdc5/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "cdc5/error.hpp"

namespace cdc5 {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

class BruteForce {
public:
    BruteForce(std::vector<std::uint64_t> masks, std::uint64_t full, std::uint64_t c0, int m, int max_elements)
        : masks_(std::move(masks)), full_(full), max_(max_elements), by_edge_(static_cast<std::size_t>(m)) {
        contains_c0_.resize(masks_.size());
        for (std::size_t j = 0; j < masks_.size(); ++j) {
            contains_c0_[j] = (c0 & ~masks_[j]) == 0;
            if (contains_c0_[j]) last_c0_ = static_cast<int>(j);
            index_.emplace(masks_[j], static_cast<int>(j));
            for (int e = 0; e < m; ++e)
                if ((masks_[j] >> e) & 1u) by_edge_[static_cast<std::size_t>(e)].push_back(static_cast<int>(j));
        }
        c0_empty_ = c0 == 0;
    }

    std::optional<std::vector<int>> run() {
        if (dfs(0, 0, 0, c0_empty_)) return chosen_;
        return std::nullopt;
    }

private:
    bool dfs(int start, std::uint64_t once, std::uint64_t twice, bool has_c0) {
        if (twice == full_) return has_c0;
        const int left = max_ - static_cast<int>(chosen_.size());
        if (left <= 0) return false;
        if (once != full_ && left < 2) return false;
        if (!has_c0 && start > last_c0_) return false;

        // The lowest edge still short of two covers needs a usable element.
        const int e = std::countr_zero(full_ & ~twice);
        const auto& holders = by_edge_[static_cast<std::size_t>(e)];
        const bool coverable = std::any_of(holders.begin(), holders.end(), [&](int j) {
            return j >= start && (masks_[static_cast<std::size_t>(j)] & twice) == 0;
        });
        if (!coverable) return false;

        if (left == 1) {
            // Only one element remains: it must be exactly the singly covered edges.
            const auto it = index_.find(once & ~twice);
            if (it == index_.end() || it->second < start) return false;
            if (!has_c0 && !contains_c0_[static_cast<std::size_t>(it->second)]) return false;
            chosen_.push_back(it->second);
            return true;
        }

        for (int j = start; j < static_cast<int>(masks_.size()); ++j) {
            const std::uint64_t x = masks_[static_cast<std::size_t>(j)];
            if (x & twice) continue;
            chosen_.push_back(j);
            if (dfs(j, once | x, twice | (once & x), has_c0 || contains_c0_[static_cast<std::size_t>(j)])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::vector<std::uint64_t> masks_;
    std::uint64_t full_;
    int max_;
    std::vector<std::vector<int>> by_edge_;
    std::vector<char> contains_c0_;
    std::unordered_map<std::uint64_t, int> index_;
    int last_c0_ = -1;
    bool c0_empty_ = true;
    std::vector<int> chosen_;
};

std::uint64_t to_mask(const EdgeSet& s) { return s.words().empty() ? 0 : s.words()[0]; }

}  // namespace

std::optional<Certificate> find_5cdc_containing(const MultiGraph& g, const EdgeSet& c0, const SearchOptions& options) {
    const auto start = Clock::now();
    if (!g.is_cubic()) throw PreconditionError("the 5-CDC search requires a cubic graph");
    if (const EdgeSet b = bridges(g); b.any())
        throw BridgedGraphError("graph has a bridge (edge " + std::to_string(b.ids().front()) + "), so it has no CDC at all");
    if (c0.size() != static_cast<std::size_t>(g.edge_count()) || !is_even_subgraph(g, c0))
        throw PreconditionError("the prescribed subgraph is not an even subgraph of the graph");

    const CycleBasis basis = cycle_space_basis(g);
    check_dimension_guard(basis.dimension(), options.dimension_guard);

    const auto affine = solve_affine(basis, c0, g.empty_set());
    if (!affine) throw InvariantViolation("an even subgraph is missing from the cycle space");
    std::vector<EvenSubgraph> first;
    first.reserve(std::size_t{1} << affine->dimension());
    for_each_gray_sum(affine->particular, affine->kernel, 0, std::uint64_t{1} << affine->dimension(),
                      [&](const EvenSubgraph& s) {
                          first.push_back(s);
                          return true;
                      });
    std::sort(first.begin(), first.end(), [&](const EdgeSet& a, const EdgeSet& b) {
        const std::size_t ca = a.count() - a.intersection_count(c0);
        const std::size_t cb = b.count() - b.intersection_count(c0);
        if (ca != cb) return ca < cb;
        return lex_less(a, b);
    });

    std::vector<EvenSubgraph> second = enumerate_even_subgraphs(basis, options.dimension_guard);
    std::sort(second.begin(), second.end(), lex_less);

    // A matching in a cubic graph has at most n/2 edges.
    const std::size_t max_matching = static_cast<std::size_t>(g.vertex_count()) / 2;
    std::vector<std::vector<std::uint32_t>> buckets(max_matching + 1);
    std::unordered_map<EdgeSet, bool, EdgeSetHash> flow_memo;
    std::uint64_t tried = 0;

    for (const EvenSubgraph& c1 : first) {
        for (auto& b : buckets) b.clear();
        for (std::uint32_t j = 0; j < second.size(); ++j)
            if (const std::size_t k = c1.intersection_count(second[j]); k <= max_matching) buckets[k].push_back(j);

        for (const auto& bucket : buckets) {
            for (std::uint32_t j : bucket) {
                ++tried;
                if (options.candidate_limit && tried > options.candidate_limit)
                    throw CapacityError("candidate limit of " + std::to_string(options.candidate_limit) + " reached");
                if (options.budget_ms > 0 && (tried & 63u) == 0 && ms_since(start) > options.budget_ms)
                    throw CapacityError("time budget of " + std::to_string(options.budget_ms) + " ms exhausted");

                const EvenSubgraph& c2 = second[j];
                EdgeSet m = c1 & c2;
                if (!is_matching(g, m)) continue;
                auto it = flow_memo.find(m);
                if (it == flow_memo.end()) it = flow_memo.emplace(m, has_nz4flow(delete_edges(g, m).graph)).first;
                if (!it->second) continue;

                Certificate cert;
                cert.graph = g;
                cert.c0 = c0;
                cert.c1 = c1;
                cert.c2 = c2;
                const EvenSubgraph pair[] = {c1, c2};
                cert.cdc = assemble_prop1(g, pair, c0, options.dimension_guard);
                cert.path = std::string(m.none() ? path_m_empty : path_theorem2);
                cert.matching = std::move(m);
                cert.stats.candidates_tried = tried;
                cert.stats.elapsed_ms = ms_since(start);
                return cert;
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> has_5cdc(const MultiGraph& g, const SearchOptions& options) {
    return find_5cdc_containing(g, g.empty_set(), options);
}

std::optional<Cdc> brute_force_cdc(const MultiGraph& g, int max_elements, const EdgeSet& c0, int guard) {
    if (g.edge_count() > 64) throw CapacityError("brute-force search handles at most 64 edges");
    if (c0.size() != static_cast<std::size_t>(g.edge_count())) throw PreconditionError("c0 does not belong to this graph");
    const CycleBasis basis = cycle_space_basis(g);
    check_dimension_guard(basis.dimension(), guard);

    std::vector<EvenSubgraph> elements;
    for (EvenSubgraph& s : enumerate_even_subgraphs(basis, guard))
        if (s.any()) elements.push_back(std::move(s));
    std::sort(elements.begin(), elements.end(), card_lex_less);

    std::vector<std::uint64_t> masks;
    masks.reserve(elements.size());
    for (const auto& s : elements) masks.push_back(to_mask(s));
    const int m = g.edge_count();
    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

    BruteForce search(std::move(masks), full, to_mask(c0), m, max_elements);
    const auto picked = search.run();
    if (!picked) return std::nullopt;
    Cdc out;
    for (int j : *picked) out.push_back(elements[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace cdc5
