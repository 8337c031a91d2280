// Copyright 2026 The gridtours Authors
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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "gridtours/io.hpp"
#include "gridtours/solver.hpp"

namespace gridtours {
namespace {

void Solve(benchmark::State& state, Objective objective) {
  const int side = static_cast<int>(state.range(0));
  const GridSpec g{side, side};
  const SolveRequest req{g, PerimeterMultipleLength(g, 2.0), objective};
  for (auto _ : state) {
    Covering c = solve(req);
    benchmark::DoNotOptimize(c.total_length);
  }
  state.SetComplexityN(g.vertex_count());
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}

void BM_MinLength(benchmark::State& state) {
  Solve(state, Objective::kMinLength);
}
void BM_MinTours(benchmark::State& state) {
  Solve(state, Objective::kMinTours);
}

void BM_Kmin(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const GridSpec g{side, side};
  const std::int64_t len = PerimeterMultipleLength(g, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(kmin(g, len));
}

void Sides(benchmark::internal::Benchmark* b) {
  for (int side : {100, 200, 400, 800, 1600}) b->Arg(side);
}

BENCHMARK(BM_MinLength)->Apply(Sides)->Complexity(benchmark::oN);
BENCHMARK(BM_MinTours)->Apply(Sides)->Complexity(benchmark::oN);
BENCHMARK(BM_Kmin)->Arg(100)->Arg(10000);

}  // namespace
}  // namespace gridtours

BENCHMARK_MAIN();
