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

#ifndef GRIDTOURS_SOLVER_HPP_
#define GRIDTOURS_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridtours/covering.hpp"
#include "gridtours/grid.hpp"

namespace gridtours {

enum class Objective { kMinTours, kMinLength };

std::string ObjectiveName(Objective o);
std::optional<Objective> ParseObjective(const std::string& name);

struct SolveRequest {
  GridSpec grid;
  std::int64_t max_tour_length = 0;  // L
  Objective objective = Objective::kMinLength;
};

struct VertexCount {
  Point vertex;
  std::int64_t count = 0;
  friend bool operator==(const VertexCount&, const VertexCount&) = default;
};

struct Covering {
  GridSpec grid;
  std::int64_t max_tour_length = 0;
  Objective objective = Objective::kMinLength;
  std::vector<Tour> tours;
  int k = 0;
  std::int64_t total_length = 0;
  std::int64_t repeats_total = 0;
  // Vertices visited more than once, with count - 1, sorted by point.
  std::vector<VertexCount> repeats_by_vertex;
  CaseTag case_tag = CaseTag::kPA;
};

// Throws kOddL, kInfeasible or kInvalidInput for a bad (grid, L) pair.
void ValidateRequest(const GridSpec& g, std::int64_t max_tour_length);

// Minimum tour count from the closed form, in integer arithmetic.
int kmin(const GridSpec& g, std::int64_t max_tour_length);

// Minimum tour count by running painting for increasing r.
int kmin_finder_reference(const GridSpec& g, std::int64_t max_tour_length);

Covering solve_min_tours(const SolveRequest& req);
Covering solve_min_length(const SolveRequest& req);
Covering solve(const SolveRequest& req);

// Fills k, total_length and the repeat fields from the tours.
void FillCounts(Covering& c);

// Tours with every point transposed.
std::vector<Tour> TransposeTours(const std::vector<Tour>& tours);

// Bounds on the minimum repeat count for k tours; lower clamped to 0.
std::pair<std::int64_t, std::int64_t> repeat_bounds(int k);

// Repeats forced by m tours reaching above level j, k tours in total.
// Requires 0 <= j <= 2m - 1.
std::int64_t lower_bound_repeats(int k, int m, int j);

// Every optimal covering with k tours reaches at least this level.
int range_level_lower_bound(int k);

}  // namespace gridtours

#endif  // GRIDTOURS_SOLVER_HPP_
