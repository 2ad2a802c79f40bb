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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "cdc5/cycle_space.hpp"
#include "cdc5/error.hpp"
#include "cdc5/named_graphs.hpp"
#include "oracles.hpp"

using namespace cdc5;

namespace {

std::set<std::vector<int>> as_id_sets(const std::vector<EdgeSet>& sets) {
    std::set<std::vector<int>> out;
    for (const EdgeSet& s : sets) out.insert(s.ids());
    return out;
}

MultiGraph random_test_graph(std::mt19937& rng) {
    MultiGraph g = oracle::random_cubic_multigraph(2 * (1 + static_cast<int>(rng() % 5)), rng);
    if (rng() % 2) g = named::subdivide(g, static_cast<EdgeId>(rng() % static_cast<unsigned>(g.edge_count())));
    return g;
}

}  // namespace

TEST_SUITE("edge-set") {
    TEST_CASE("set algebra") {
        const EdgeSet a = EdgeSet::from_ids(70, {0, 3, 65});
        const EdgeSet b = EdgeSet::from_ids(70, {3, 4, 69});
        CHECK((a ^ b).ids() == std::vector<int>{0, 4, 65, 69});
        CHECK((a & b).ids() == std::vector<int>{3});
        CHECK((a | b).count() == 5);
        CHECK((a - b).ids() == std::vector<int>{0, 65});
        CHECK(a.complement().count() == 67);
        CHECK(a.intersection_count(b) == 1);
        CHECK((a & b).is_subset_of(a));
        CHECK_FALSE(a.is_subset_of(b));
        CHECK(EdgeSet::full(70).count() == 70);
    }

    TEST_CASE("lex order compares ascending member lists") {
        const auto s = [](std::initializer_list<int> ids) { return EdgeSet::from_ids(8, ids); };
        CHECK(lex_less(s({}), s({0})));
        CHECK(lex_less(s({0, 5}), s({1})));
        CHECK(lex_less(s({0, 1}), s({0, 2})));
        CHECK(lex_less(s({0, 1}), s({0, 1, 2})));
        CHECK_FALSE(lex_less(s({2}), s({2})));
        CHECK(card_lex_less(s({7}), s({0, 1})));
        CHECK(card_lex_less(s({0, 7}), s({1, 2})));
    }

    TEST_CASE("lex order agrees with vector comparison") {
        std::mt19937 rng(2);
        for (int t = 0; t < 2000; ++t) {
            EdgeSet a(130), b(130);
            for (int i = 0; i < 130; ++i) {
                if (rng() % 9 == 0) a.set(static_cast<std::size_t>(i));
                if (rng() % 9 == 0) b.set(static_cast<std::size_t>(i));
            }
            CHECK(lex_less(a, b) == (a.ids() < b.ids()));
        }
    }
}

TEST_SUITE("cycle-space") {
    TEST_CASE("dimensions") {
        CHECK(cycle_space_basis(named::complete4()).dimension() == 3);
        CHECK(cycle_space_basis(named::petersen()).dimension() == 6);
        CHECK(cycle_space_basis(named::theta()).dimension() == 2);
        CHECK(cycle_space_basis(named::blanusa_first()).dimension() == 10);
        CHECK(cycle_space_basis(MultiGraph(1, {{0, 0}})).dimension() == 0);
        CHECK(cycle_space_basis(named::disjoint_union(named::complete4(), named::complete4())).dimension() == 6);
    }

    TEST_CASE("K4 has 8 even subgraphs and 7 circuits") {
        const MultiGraph k4 = named::complete4();
        const auto even = enumerate_even_subgraphs(cycle_space_basis(k4));
        CHECK(even.size() == 8);
        CHECK(as_id_sets(even) == as_id_sets(oracle::even_subsets(k4)));
        const auto circuits = enumerate_circuits(k4);
        CHECK(circuits.size() == 7);
        CHECK(std::count_if(circuits.begin(), circuits.end(), [](const EdgeSet& c) { return c.count() == 3; }) == 4);
        CHECK(std::is_sorted(circuits.begin(), circuits.end(), card_lex_less));
    }

    TEST_CASE("Petersen has 64 even subgraphs and 57 circuits") {
        const MultiGraph p = named::petersen();
        const auto even = enumerate_even_subgraphs(cycle_space_basis(p));
        CHECK(even.size() == 64);
        CHECK(as_id_sets(even) == as_id_sets(oracle::even_subsets(p)));
        const auto circuits = enumerate_circuits(p);
        CHECK(circuits.size() == 57);
        std::map<std::size_t, int> by_length;
        for (const auto& c : circuits) ++by_length[c.count()];
        CHECK(by_length == std::map<std::size_t, int>{{5, 12}, {6, 10}, {8, 15}, {9, 20}});
        CHECK(as_id_sets(circuits) == as_id_sets(oracle::simple_cycles(p)));
    }

    TEST_CASE("Gray-code enumeration starts at the empty set and never repeats") {
        const auto even = enumerate_even_subgraphs(cycle_space_basis(named::petersen()));
        CHECK(even.front().none());
        for (std::size_t i = 1; i < even.size(); ++i) CHECK(is_even_subgraph(named::petersen(), even[i]));
        CHECK(as_id_sets(even).size() == even.size());
    }

    TEST_CASE("chunks of the Gray sequence reproduce the whole") {
        const CycleBasis b = cycle_space_basis(named::petersen());
        std::vector<EdgeSet> whole, pieces;
        for_each_even_subgraph(b, [&](const EdgeSet& s) {
            whole.push_back(s);
            return true;
        });
        for (std::uint64_t start = 0; start < 64; start += 10)
            for_each_gray_sum(EdgeSet(15), b.basis, start, std::min<std::uint64_t>(start + 10, 64), [&](const EdgeSet& s) {
                pieces.push_back(s);
                return true;
            });
        CHECK(whole == pieces);
    }

    TEST_CASE("even subgraphs match the subset oracle on random multigraphs") {
        std::mt19937 rng(19);
        for (int t = 0; t < 120; ++t) {
            const MultiGraph g = random_test_graph(rng);
            if (g.edge_count() > 20) continue;
            const CycleBasis b = cycle_space_basis(g);
            const auto even = enumerate_even_subgraphs(b);
            CHECK(as_id_sets(even) == as_id_sets(oracle::even_subsets(g)));
            int loops = 0;
            for (const Edge& e : g.edges()) loops += e.is_loop();
            CHECK(static_cast<int>(b.dimension()) ==
                  g.edge_count() - loops - g.vertex_count() + static_cast<int>(components(g).size()));
        }
    }

    TEST_CASE("dimension guard") {
        CHECK_THROWS_AS(enumerate_even_subgraphs(cycle_space_basis(named::petersen()), 5), CapacityError);
        CHECK_NOTHROW(enumerate_even_subgraphs(cycle_space_basis(named::petersen()), 6));
        CHECK_THROWS_AS(check_dimension_guard(63, 100), CapacityError);
    }

    TEST_CASE("is_even_subgraph and is_circuit") {
        const MultiGraph k4 = named::complete4();
        CHECK(is_even_subgraph(k4, k4.empty_set()));
        CHECK(is_even_subgraph(k4, oracle::walk_edges(k4, {0, 1, 2})));
        CHECK(is_circuit(k4, oracle::walk_edges(k4, {0, 1, 2})));
        CHECK_FALSE(is_even_subgraph(k4, oracle::edges_of(k4, {0})));
        CHECK_FALSE(is_circuit(k4, k4.empty_set()));
        const MultiGraph two = named::disjoint_union(named::cycle(3), named::cycle(3));
        CHECK(is_even_subgraph(two, two.all_edges()));
        CHECK_FALSE(is_circuit(two, two.all_edges()));
        const MultiGraph loop(1, {{0, 0}});
        CHECK_FALSE(is_even_subgraph(loop, loop.all_edges()));
    }
}

TEST_SUITE("affine-solve") {
    TEST_CASE("K4 forcing one edge leaves a 2-dimensional coset") {
        const MultiGraph k4 = named::complete4();
        const CycleBasis b = cycle_space_basis(k4);
        const auto sol = solve_affine(b, oracle::edges_of(k4, {0}), k4.empty_set());
        REQUIRE(sol);
        CHECK(sol->dimension() == 2);
        CHECK(sol->particular.test(0));
        CHECK(is_even_subgraph(k4, sol->particular));
        for (const auto& k : sol->kernel) CHECK_FALSE(k.test(0));
    }

    TEST_CASE("K4 forcing a whole star is infeasible") {
        const MultiGraph k4 = named::complete4();
        CHECK_FALSE(solve_affine(cycle_space_basis(k4), oracle::edges_of(k4, {0, 1, 3}), k4.empty_set()));
    }

    TEST_CASE("overlapping constraints are a precondition error") {
        const MultiGraph k4 = named::complete4();
        CHECK_THROWS_AS(solve_affine(cycle_space_basis(k4), oracle::edges_of(k4, {0}), oracle::edges_of(k4, {0, 1})),
                        PreconditionError);
    }

    TEST_CASE("solution sets match brute force on random constraints") {
        std::mt19937 rng(23);
        for (int t = 0; t < 300; ++t) {
            const MultiGraph g = random_test_graph(rng);
            if (g.edge_count() > 20) continue;
            EdgeSet one = g.empty_set(), zero = g.empty_set();
            for (int e = 0; e < g.edge_count(); ++e) {
                const unsigned r = rng() % 6;
                if (r == 0) one.set(static_cast<std::size_t>(e));
                if (r == 1) zero.set(static_cast<std::size_t>(e));
            }
            std::vector<EdgeSet> expected;
            for (const EdgeSet& s : oracle::even_subsets(g))
                if (one.is_subset_of(s) && !s.intersects(zero)) expected.push_back(s);

            const auto sol = solve_affine(cycle_space_basis(g), one, zero);
            if (expected.empty()) {
                CHECK_FALSE(sol.has_value());
                continue;
            }
            REQUIRE(sol);
            REQUIRE(sol->dimension() < 20);
            std::vector<EdgeSet> got;
            for_each_gray_sum(sol->particular, sol->kernel, 0, std::uint64_t{1} << sol->dimension(), [&](const EdgeSet& s) {
                got.push_back(s);
                return true;
            });
            CHECK(got.size() == expected.size());
            CHECK(as_id_sets(got) == as_id_sets(expected));
        }
    }

    TEST_CASE("sym_diff") {
        const std::vector<EdgeSet> sets = {EdgeSet::from_ids(5, {0, 1}), EdgeSet::from_ids(5, {1, 2}), EdgeSet::from_ids(5, {2, 4})};
        CHECK(sym_diff(sets).ids() == std::vector<int>{0, 4});
        CHECK(sym_diff({}).size() == 0);
    }
}
