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

#ifndef GRIDTOURS_COVERING_HPP_
#define GRIDTOURS_COVERING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridtours/grid.hpp"

namespace gridtours {

// Which construction produced a set of walks or tours.
enum class CaseTag { kSingle, kPA, kPAO, kPAR, kColumn, kOracle, kGreedy };

std::string CaseTagName(CaseTag tag);
std::optional<CaseTag> ParseCaseTag(const std::string& name);

// Walks anchored on the baseline of some A_i, ordered by their starting
// baseline point. For PAO the designated point is the one baseline point no
// walk covers; it becomes its own tour when lifted.
struct WalkSet {
  std::vector<Walk> walks;
  CaseTag case_tag = CaseTag::kPA;
  std::optional<Point> designated_point;
  int baseline_level = 0;
  std::int64_t budget = 0;
  // Walks already run from B and back (vertical descent applied).
  bool lifted = false;
};

// Walk budget left for the part of a tour above `level` once the monotone
// ascent and descent are paid for.
inline std::int64_t WalkBudgetAt(std::int64_t max_tour_length, int level) {
  return max_tour_length - 2 * static_cast<std::int64_t>(level);
}

// S-maximal walk over A = AddRow(u), from the bottom-left point of u to the
// bottom-left point of A. u must be a family member other than S1(., ., 1)
// with at least two columns in its bottom row; budget must be even and at
// least the perimeter of A minus 2.
Walk u_covering(const Shape& u, std::int64_t budget);

// Walk covering all of A = AddRow(u) between the same endpoints. Makes one
// repeat exactly when A has an odd number of rows and of columns.
Walk otu_covering(const Shape& u, std::int64_t budget);

// Walk covering A' = AddRow(AddRow(u)) minus the leftmost point of its bottom
// row, from the leftmost point of the third row to the leftmost point of the
// second row, without repeats. u needs odd row and column counts.
Walk otu_odd_covering(const Shape& u, std::int64_t budget);

// Up-and-down walk over a single column Rect(1, b), starting and ending at
// its bottom point.
Walk otu_r_covering(const Shape& column, std::int64_t budget);

// Painting: r walks covering A_{2r-1}. Requires cols <= rows and
// 1 <= r <= cols / 2. Returns nullopt when the construction does not fit in
// `budget`. With `lift`, each walk is returned already extended to a closed
// tour through B.
std::optional<WalkSet> try_painting(const GridSpec& g, int r,
                                    std::int64_t budget, bool lift = false);
// As try_painting, but throws kInfeasible.
WalkSet painting(const GridSpec& g, int r, std::int64_t budget);

// k - 1 walks over A_{2k-2} plus the designated baseline point (2k - 2, 0).
// Intended for odd grids with 2 <= k < ceil(cols / 2). Budget is the tour
// limit L.
std::optional<WalkSet> try_pao(const GridSpec& g, int k,
                               std::int64_t max_tour_length);
WalkSet pao(const GridSpec& g, int k, std::int64_t max_tour_length);

// (cols + 1) / 2 walks over A_{cols-1} for odd cols, the last one running up
// and down the rightmost column. Budget is the tour limit L.
std::optional<WalkSet> try_par(const GridSpec& g,
                               std::int64_t max_tour_length);
WalkSet par(const GridSpec& g, std::int64_t max_tour_length);

// Lifts baseline walks to tours through the base station: along row 0, up
// to the walk start, the walk, down to row 0 and back along it. Throws
// kBudgetExceeded if a lifted tour is longer than max_tour_length and
// kInvalidWalk if a walk does not start and end on the baseline.
std::vector<Tour> vertical_descent(const WalkSet& walks, const GridSpec& g,
                                   std::int64_t max_tour_length);
// Releases each walk once it is lifted.
std::vector<Tour> vertical_descent(WalkSet&& walks, const GridSpec& g,
                                   std::int64_t max_tour_length);

}  // namespace gridtours

#endif  // GRIDTOURS_COVERING_HPP_
