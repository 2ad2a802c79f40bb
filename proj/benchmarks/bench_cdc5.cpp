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

#include <benchmark/benchmark.h>

#include "cdc5/cdc5.hpp"

using namespace cdc5;

static void BM_ThreeEdgeColorPetersen(benchmark::State& state) {
    const MultiGraph g = named::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(three_edge_color(g));
}
BENCHMARK(BM_ThreeEdgeColorPetersen);

static void BM_ThreeEdgeColorFlower(benchmark::State& state) {
    const MultiGraph g = named::flower_snark(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(three_edge_color(g));
}
BENCHMARK(BM_ThreeEdgeColorFlower)->Arg(3)->Arg(5)->Arg(7);

static void BM_Bridges(benchmark::State& state) {
    const MultiGraph g = named::blanusa_first();
    for (auto _ : state) benchmark::DoNotOptimize(bridges(g));
}
BENCHMARK(BM_Bridges);

static void BM_EnumerateCircuits(benchmark::State& state) {
    const MultiGraph g = state.range(0) == 0 ? named::petersen() : named::blanusa_first();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_circuits(g));
}
BENCHMARK(BM_EnumerateCircuits)->Arg(0)->Arg(1);

static void BM_SolveAffine(benchmark::State& state) {
    const MultiGraph g = named::flower_snark(5);
    const CycleBasis basis = cycle_space_basis(g);
    const EdgeSet one = EdgeSet::from_ids(static_cast<std::size_t>(g.edge_count()), {0, 1});
    const EdgeSet zero = EdgeSet::from_ids(static_cast<std::size_t>(g.edge_count()), {5});
    for (auto _ : state) benchmark::DoNotOptimize(solve_affine(basis, one, zero));
}
BENCHMARK(BM_SolveAffine);

static void BM_FindPetersenPentagon(benchmark::State& state) {
    const MultiGraph g = named::petersen();
    const EdgeSet c0 = EdgeSet::from_ids(15, {0, 1, 2, 3, 4});
    for (auto _ : state) benchmark::DoNotOptimize(find_5cdc_containing(g, c0));
}
BENCHMARK(BM_FindPetersenPentagon)->Unit(benchmark::kMicrosecond);

static void BM_Strong5Sweep(benchmark::State& state) {
    const MultiGraph g = state.range(0) == 0 ? named::petersen() : named::blanusa_second();
    for (auto _ : state) benchmark::DoNotOptimize(strong5cdcc_check(g));
}
BENCHMARK(BM_Strong5Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_BruteForcePetersen(benchmark::State& state) {
    const MultiGraph g = named::petersen();
    const EdgeSet c0 = EdgeSet::from_ids(15, {0, 1, 2, 3, 4});
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_5cdc_oracle(g, c0));
}
BENCHMARK(BM_BruteForcePetersen)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
