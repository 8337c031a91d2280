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

#include "gridtours/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gridtours/error.hpp"

namespace gridtours {

namespace {

__extension__ typedef __int128 Int128;

std::int64_t ISqrt(Int128 d) {
  if (d <= 0) return 0;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
  while (s > 0 && static_cast<Int128>(s) * s > d) --s;
  while (static_cast<Int128>(s + 1) * (s + 1) <= d) ++s;
  return s;
}

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int Cap(const GridSpec& g) { return (g.cols + 1) / 2; }

GridSpec Canonical(const GridSpec& g) {
  return g.cols <= g.rows ? g : g.transposed();
}

bool TrivialSingle(const GridSpec& g, std::int64_t max_tour_length) {
  const std::int64_t n = g.vertex_count();
  return max_tour_length > n || (max_tour_length == n && n % 2 == 0);
}

// |A_{2k-1}| + [n odd] <= k (L - 4k + 3), valid while 2k - 1 < cols.
bool CapacityHolds(const GridSpec& g, std::int64_t max_tour_length, int k) {
  const Int128 n = g.vertex_count();
  const Int128 kk = k;
  const Int128 area = n - kk * (2 * kk - 1);
  const Int128 capacity = kk * (max_tour_length - 4 * kk + 3);
  return area + (n % 2) <= capacity;
}

}  // namespace

std::string ObjectiveName(Objective o) {
  return o == Objective::kMinTours ? "min-tours" : "min-length";
}

std::optional<Objective> ParseObjective(const std::string& name) {
  if (name == "min-tours") return Objective::kMinTours;
  if (name == "min-length") return Objective::kMinLength;
  return std::nullopt;
}

void ValidateRequest(const GridSpec& g, std::int64_t max_tour_length) {
  ValidateGrid(g);
  if (max_tour_length < 0) {
    throw Error(ErrorCode::kInvalidInput, "L must be nonnegative");
  }
  if (max_tour_length % 2 != 0) {
    throw Error(ErrorCode::kOddL, "L must be even");
  }
  if (max_tour_length < 2LL * (g.cols + g.rows - 2)) {
    throw Error(ErrorCode::kInfeasible,
                "L is below the round trip to the far corner");
  }
}

int kmin(const GridSpec& grid, std::int64_t max_tour_length) {
  ValidateRequest(grid, max_tour_length);
  const GridSpec g = Canonical(grid);
  if (TrivialSingle(g, max_tour_length)) return 1;
  const int cap = Cap(g);
  const std::int64_t n = g.vertex_count();
  const Int128 l = max_tour_length;
  const Int128 d = l * l + 4 * l + (n % 2 == 0 ? 4 : -4) - Int128{8} * n;
  if (d < 0) return cap;
  const std::int64_t s = ISqrt(d);
  const std::int64_t q = max_tour_length + 2 - s;
  std::int64_t k = static_cast<Int128>(s) * s == d ? FloorDiv(q + 3, 4)
                                                   : FloorDiv(q - 1, 4) + 1;
  k = std::max<std::int64_t>(k, 1);
  if (k >= cap) return cap;
  const int ki = static_cast<int>(k);
  return CapacityHolds(g, max_tour_length, ki) ? ki : cap;
}

int kmin_finder_reference(const GridSpec& grid, std::int64_t max_tour_length) {
  ValidateRequest(grid, max_tour_length);
  const GridSpec g = Canonical(grid);
  if (TrivialSingle(g, max_tour_length)) return 1;
  const int cap = Cap(g);
  for (int i = 1; i < cap; ++i) {
    if (try_painting(g, i, WalkBudgetAt(max_tour_length, 2 * i - 1))) {
      return i;
    }
  }
  return cap;
}

std::vector<Tour> TransposeTours(const std::vector<Tour>& tours) {
  std::vector<Tour> out = tours;
  for (Tour& t : out) {
    for (Point& p : t.points) std::swap(p.x, p.y);
  }
  return out;
}

namespace {

// Visit counts per vertex, closing point excluded. False if a counter
// would overflow T.
template <typename T>
bool CountVisits(const Covering& c, std::vector<T>& visits) {
  const GridSpec& g = c.grid;
  visits.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  constexpr T kMax = std::numeric_limits<T>::max();
  for (const Tour& t : c.tours) {
    const std::size_t n = t.points.size();
    const std::size_t counted = n <= 1 ? n : n - 1;
    for (std::size_t i = 0; i < counted; ++i) {
      if (!g.contains(t.points[i])) {
        throw Error(ErrorCode::kInternal, "tour leaves the grid");
      }
      T& v = visits[g.index(t.points[i])];
      if (v == kMax) return false;
      ++v;
    }
  }
  return true;
}

template <typename T>
void StoreRepeats(Covering& c, const std::vector<T>& visits) {
  const GridSpec& g = c.grid;
  c.repeats_total = 0;
  c.repeats_by_vertex.clear();
  for (int y = 0; y < g.rows; ++y) {
    for (int x = 0; x < g.cols; ++x) {
      const std::int64_t v = visits[g.index({x, y})];
      if (v > 1) {
        c.repeats_total += v - 1;
        c.repeats_by_vertex.push_back({{x, y}, v - 1});
      }
    }
  }
  std::sort(c.repeats_by_vertex.begin(), c.repeats_by_vertex.end(),
            [](const VertexCount& a, const VertexCount& b) {
              return a.vertex < b.vertex;
            });
}

}  // namespace

void FillCounts(Covering& c) {
  c.total_length = 0;
  for (const Tour& t : c.tours) c.total_length += t.length();
  c.k = static_cast<int>(c.tours.size());
  // 16-bit counters keep the table small on large grids.
  std::vector<std::uint16_t> narrow;
  if (CountVisits(c, narrow)) {
    StoreRepeats(c, narrow);
  } else {
    std::vector<std::uint32_t> wide;
    CountVisits(c, wide);
    StoreRepeats(c, wide);
  }
}

namespace {

WalkSet Dispatch(const GridSpec& g, std::int64_t max_tour_length,
                 bool allow_pao) {
  const int k = kmin(g, max_tour_length);
  const int cap = Cap(g);
  if (g.cols % 2 == 1 && k == cap) return par(g, max_tour_length);
  if (allow_pao && g.vertex_count() % 2 == 1 && k >= 2 && k < cap) {
    if (auto ws = try_pao(g, k, max_tour_length)) return *std::move(ws);
  }
  auto ws = try_painting(g, k, WalkBudgetAt(max_tour_length, 2 * k - 1),
                         /*lift=*/true);
  if (!ws) {
    throw Error(ErrorCode::kInternal,
                "painting failed at the minimum tour count");
  }
  return *std::move(ws);
}

Covering Solve(const SolveRequest& req, bool allow_pao) {
  ValidateRequest(req.grid, req.max_tour_length);
  const bool flip = req.grid.cols > req.grid.rows;
  const GridSpec g = Canonical(req.grid);
  WalkSet ws = Dispatch(g, req.max_tour_length, allow_pao);
  Covering c;
  c.grid = req.grid;
  c.max_tour_length = req.max_tour_length;
  c.objective = req.objective;
  c.case_tag = ws.case_tag;
  c.tours = vertical_descent(std::move(ws), g, req.max_tour_length);
  if (flip) c.tours = TransposeTours(c.tours);
  FillCounts(c);
  return c;
}

}  // namespace

Covering solve_min_tours(const SolveRequest& req) {
  if (req.objective != Objective::kMinTours) {
    throw Error(ErrorCode::kInvalidInput, "objective must be min-tours");
  }
  return Solve(req, /*allow_pao=*/false);
}

Covering solve_min_length(const SolveRequest& req) {
  if (req.objective != Objective::kMinLength) {
    throw Error(ErrorCode::kInvalidInput, "objective must be min-length");
  }
  return Solve(req, /*allow_pao=*/true);
}

Covering solve(const SolveRequest& req) {
  return req.objective == Objective::kMinTours ? solve_min_tours(req)
                                               : solve_min_length(req);
}

std::pair<std::int64_t, std::int64_t> repeat_bounds(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "k must be positive");
  const std::int64_t base = 2LL * k * k - 2LL * k;
  return {std::max<std::int64_t>(0, base - 1), base + 1};
}

std::int64_t lower_bound_repeats(int k, int m, int j) {
  if (k < 1 || m < 0 || j < 0 || j > 2 * m - 1) {
    if (!(j == 0 && m >= 0 && k >= 1)) {
      throw Error(ErrorCode::kInvalidInput, "requires 0 <= j <= 2m - 1");
    }
  }
  return 2LL * m * j + k - static_cast<std::int64_t>(j + 1) * (j + 2) / 2;
}

int range_level_lower_bound(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "k must be positive");
  return 2 * k - 2;
}

}  // namespace gridtours
