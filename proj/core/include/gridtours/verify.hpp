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

#ifndef GRIDTOURS_VERIFY_HPP_
#define GRIDTOURS_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridtours/grid.hpp"
#include "gridtours/solver.hpp"

namespace gridtours {

struct Violation {
  std::string code;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::int64_t covered_count = 0;
  std::int64_t total_length = 0;
  std::int64_t repeats_total = 0;
  std::vector<VertexCount> repeats_by_vertex;
  std::int64_t max_tour_length = 0;  // longest tour seen
  std::vector<int> per_tour_max_level;

  void Add(std::string code, std::string detail);
  void Merge(const VerificationReport& other);
};

// Closed at B, unit steps, inside the grid, even length at most L.
VerificationReport validate_tour(const Tour& t, const GridSpec& g,
                                 std::int64_t max_tour_length);

struct CoverageResult {
  bool is_covering = false;
  std::int64_t covered_count = 0;
  std::int64_t repeats_total = 0;
  std::vector<VertexCount> repeats_by_vertex;
};

// Counts each tour's visits once per position, closing point excluded.
CoverageResult coverage_and_repeats(const std::vector<Tour>& tours,
                                    const GridSpec& g);

// Tour validity, coverage and the length/repeat identity.
VerificationReport verify_tours(const std::vector<Tour>& tours,
                                const GridSpec& g,
                                std::int64_t max_tour_length);

// Repeat window and reach levels for the solver's constructions.
VerificationReport check_theorem_bounds(const Covering& c);

// Full check of a covering; stored counts must match recomputed ones.
VerificationReport verify(const Covering& c);

struct OracleLimits {
  int max_cells = 12;
  std::int64_t max_tour_length = 16;
};

// Limits from GRIDTOURS_ORACLE_GUARD if set, defaults otherwise.
OracleLimits OracleLimitsFromEnv();

// Exact minimum total length covering. Throws kResourceGuard past limits.
Covering brute_force_min_length(const GridSpec& g, std::int64_t max_tour_length,
                                const OracleLimits& limits = {});

// Exact minimum tour count, with the smallest total among such coverings.
Covering brute_force_min_tours_covering(const GridSpec& g,
                                        std::int64_t max_tour_length,
                                        const OracleLimits& limits = {});
int brute_force_min_tours(const GridSpec& g, std::int64_t max_tour_length,
                          const OracleLimits& limits = {});

// Tours built one at a time, each taking uncovered vertices in
// boustrophedon order while the way back still fits in L.
Covering greedy_covering(const GridSpec& g, std::int64_t max_tour_length);

}  // namespace gridtours

#endif  // GRIDTOURS_VERIFY_HPP_
