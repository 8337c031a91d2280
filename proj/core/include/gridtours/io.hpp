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

#ifndef GRIDTOURS_IO_HPP_
#define GRIDTOURS_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridtours/solver.hpp"

namespace gridtours {

// JSON output document. Tours are lists of [x, y] pairs that repeat B at
// the end. Throws kInvalidInput on malformed input.
std::string emit_json(const Covering& c, int indent = 2);
Covering parse_json(const std::string& text);

std::string render_svg(const Covering& c);

// Vertex map with tour ids and traversal arrows, top row first.
std::string render_ascii(const Covering& c);

struct BenchRow {
  int size = 0;
  std::int64_t vertices = 0;
  Objective objective = Objective::kMinLength;
  std::int64_t max_tour_length = 0;
  int k = 0;
  std::int64_t ops = 0;  // tour points emitted
  std::int64_t wall_ns = 0;
  std::optional<double> ratio;  // median paired ratio to the previous row
  std::int64_t timestamp_ns = 0;
};

struct BenchOptions {
  std::vector<int> sizes;
  double perimeter_multiple = 2.0;
  Objective objective = Objective::kMinLength;
  int repetitions = 15;  // interleaved rounds
};

// Even L nearest to multiple * 2 (cols + rows - 2), at least that bound.
std::int64_t PerimeterMultipleLength(const GridSpec& g, double multiple);

// Square grids. Each round times every size once, batching small sizes;
// wall_ns is the best per-solve time over the rounds.
std::vector<BenchRow> run_bench(const BenchOptions& options);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace gridtours

#endif  // GRIDTOURS_IO_HPP_
