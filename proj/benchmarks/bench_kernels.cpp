// SPDX-License-Identifier: Apache-2.0
//
// risim -- indoor RIS placement and hybrid beamforming simulator
// Copyright (C) 2026 risim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Compares the OpenMP kernels against their serial reference
// implementations on a representative five-obstacle scene.

#include <benchmark/benchmark.h>

#include "risim/candidates.hpp"
#include "risim/placement.hpp"
#include "risim/scenario.hpp"

namespace {

using namespace risim;

Scene bench_scene() {
    ScenarioConfig config;
    config.obstacle_count = 5;
    return generate_scene(config, /*trial=*/7);
}

void BM_CoverageMapSerial(benchmark::State& state) {
    const Scene scene = bench_scene();
    const std::vector<Point2> ris{{0.0, 5.0}, {10.0, 3.0}};
    for (auto _ : state) {
        auto map = compute_coverage_map_serial(scene, ris, 0.05);
        benchmark::DoNotOptimize(map.state.data());
    }
}
BENCHMARK(BM_CoverageMapSerial)->Unit(benchmark::kMillisecond);

void BM_CoverageMapParallel(benchmark::State& state) {
    const Scene scene = bench_scene();
    const std::vector<Point2> ris{{0.0, 5.0}, {10.0, 3.0}};
    for (auto _ : state) {
        auto map = compute_coverage_map(scene, ris, 0.05);
        benchmark::DoNotOptimize(map.state.data());
    }
}
BENCHMARK(BM_CoverageMapParallel)->Unit(benchmark::kMillisecond);

void BM_VisibilityTableSerial(benchmark::State& state) {
    const Scene scene = bench_scene();
    const CandidateSet cands = build_candidate_set_uniform(scene, 0.25);
    for (auto _ : state) {
        auto table = build_visibility_table_serial(scene, cands, 0.05);
        benchmark::DoNotOptimize(table.masks.data());
    }
}
BENCHMARK(BM_VisibilityTableSerial)->Unit(benchmark::kMillisecond);

void BM_VisibilityTableParallel(benchmark::State& state) {
    const Scene scene = bench_scene();
    const CandidateSet cands = build_candidate_set_uniform(scene, 0.25);
    for (auto _ : state) {
        auto table = build_visibility_table(scene, cands, 0.05);
        benchmark::DoNotOptimize(table.masks.data());
    }
}
BENCHMARK(BM_VisibilityTableParallel)->Unit(benchmark::kMillisecond);

void BM_FullSearch(benchmark::State& state) {
    const Scene scene = bench_scene();
    const CandidateSet cands = build_candidate_set_uniform(scene, 0.1);
    const VisibilityTable table = build_visibility_table(scene, cands, 0.05);
    SearchOptions opts;
    opts.table = &table;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto result = full_search(scene, cands, 3, opts);
        benchmark::DoNotOptimize(result.normalized_coverage);
    }
}
BENCHMARK(BM_FullSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
