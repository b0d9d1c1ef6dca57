// Copyright 2026 The vbsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "vbsq/graph.hpp"
#include "vbsq/stabilizer.hpp"
#include "vbsq/statevec.hpp"
#include "vbsq/vbs.hpp"

namespace {

using namespace vbsq;

// Prepare an L x L grid state and measure X on every site.
void BM_TableauGridAllX(benchmark::State &state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const Graph g = grid(side, side);
    const std::size_t n = g.num_vertices();
    Rng rng(7);
    for (auto _ : state) {
        Tableau t = tableau_graph_state(g);
        for (std::size_t q = 0; q < n; ++q) {
            benchmark::DoNotOptimize(t.measure(PauliString::single(n, q, 'X'), std::ref(rng)));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_TableauGridAllX)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_StateVectorLayer(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    StateVector s = plus_state(n);
    const Mat2 h = gates::hadamard();
    for (auto _ : state) {
        for (std::size_t q = 0; q < n; ++q) s.apply_1q(h, q);
        for (std::size_t q = 0; q + 1 < n; ++q) s.apply_cz(q, q + 1);
        benchmark::DoNotOptimize(s.amplitude(0));
    }
}
BENCHMARK(BM_StateVectorLayer)->Arg(10)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GraphStateDense(benchmark::State &state) {
    const Graph g = grid(4, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graph_state(g));
}
BENCHMARK(BM_GraphStateDense)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Materialize(benchmark::State &state) {
    const VbsSpec spec = make_vbs_spec(grid(2, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(materialize(spec));
}
BENCHMARK(BM_Materialize)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
