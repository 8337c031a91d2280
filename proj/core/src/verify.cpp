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

#include "gridtours/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "gridtours/error.hpp"

namespace gridtours {

namespace {

std::string Str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int MaxLevel(const Tour& t) {
  int m = 0;
  for (Point p : t.points) m = std::max(m, level_of(p));
  return m;
}

}  // namespace

void VerificationReport::Add(std::string code, std::string detail) {
  valid = false;
  violations.push_back({std::move(code), std::move(detail)});
}

void VerificationReport::Merge(const VerificationReport& other) {
  for (const Violation& v : other.violations) Add(v.code, v.detail);
}

VerificationReport validate_tour(const Tour& t, const GridSpec& g,
                                 std::int64_t max_tour_length) {
  VerificationReport r;
  if (t.points.empty()) {
    r.Add("empty_tour", "tour has no points");
    return r;
  }
  if (t.points.front() != kBase || t.points.back() != kBase) {
    r.Add("open_walk", "tour must start and end at " + Str(kBase));
  }
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    const Point p = t.points[i];
    if (!g.contains(p)) {
      r.Add("out_of_grid", "point " + Str(p) + " at index " +
                               std::to_string(i));
    }
    if (i > 0 && ManhattanDistance(t.points[i - 1], p) != 1) {
      r.Add("non_unit_step", Str(t.points[i - 1]) + " -> " + Str(p));
    }
  }
  const std::int64_t len = t.length();
  if (len % 2 != 0) r.Add("odd_length", "length " + std::to_string(len));
  if (len > max_tour_length) {
    r.Add("budget_exceeded", "length " + std::to_string(len) + " > L = " +
                                 std::to_string(max_tour_length));
  }
  r.total_length = len;
  r.max_tour_length = len;
  r.per_tour_max_level.push_back(MaxLevel(t));
  return r;
}

CoverageResult coverage_and_repeats(const std::vector<Tour>& tours,
                                    const GridSpec& g) {
  std::vector<std::uint32_t> visits(static_cast<std::size_t>(g.vertex_count()),
                                    0);
  for (const Tour& t : tours) {
    const std::size_t n = t.points.size();
    const std::size_t stop = n <= 1 ? n : n - 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (g.contains(t.points[i])) ++visits[g.index(t.points[i])];
    }
  }
  CoverageResult res;
  for (int y = 0; y < g.rows; ++y) {
    for (int x = 0; x < g.cols; ++x) {
      const std::int64_t v = visits[g.index({x, y})];
      if (v == 0) continue;
      ++res.covered_count;
      if (v > 1) {
        res.repeats_total += v - 1;
        res.repeats_by_vertex.push_back({{x, y}, v - 1});
      }
    }
  }
  std::sort(res.repeats_by_vertex.begin(), res.repeats_by_vertex.end(),
            [](const VertexCount& a, const VertexCount& b) {
              return a.vertex < b.vertex;
            });
  res.is_covering = res.covered_count == g.vertex_count();
  return res;
}

VerificationReport verify_tours(const std::vector<Tour>& tours,
                                const GridSpec& g,
                                std::int64_t max_tour_length) {
  VerificationReport r;
  if (tours.empty()) r.Add("uncovered", "no tours");
  bool has_zero_length = false;
  for (std::size_t i = 0; i < tours.size(); ++i) {
    VerificationReport tr = validate_tour(tours[i], g, max_tour_length);
    for (const Violation& v : tr.violations) {
      r.Add(v.code, "tour " + std::to_string(i) + ": " + v.detail);
    }
    r.total_length += tr.total_length;
    r.max_tour_length = std::max(r.max_tour_length, tr.max_tour_length);
    r.per_tour_max_level.insert(r.per_tour_max_level.end(),
                                tr.per_tour_max_level.begin(),
                                tr.per_tour_max_level.end());
    has_zero_length = has_zero_length || tours[i].length() == 0;
  }
  const CoverageResult cov = coverage_and_repeats(tours, g);
  r.covered_count = cov.covered_count;
  r.repeats_total = cov.repeats_total;
  r.repeats_by_vertex = cov.repeats_by_vertex;
  if (!cov.is_covering) {
    r.Add("uncovered", std::to_string(g.vertex_count() - cov.covered_count) +
                           " vertices not visited");
  } else if (r.valid && !has_zero_length &&
             r.total_length != cov.covered_count + cov.repeats_total) {
    r.Add("identity", "total length " + std::to_string(r.total_length) +
                          " != vertices + repeats " +
                          std::to_string(cov.covered_count +
                                         cov.repeats_total));
  }
  return r;
}

VerificationReport check_theorem_bounds(const Covering& c) {
  VerificationReport r;
  const int k = static_cast<int>(c.tours.size());
  if (k == 0) return r;
  const CoverageResult cov = coverage_and_repeats(c.tours, c.grid);
  const CaseTag tag = c.case_tag;
  if (tag == CaseTag::kSingle || tag == CaseTag::kPA ||
      tag == CaseTag::kPAO) {
    const auto [lo, hi] = repeat_bounds(k);
    if (cov.repeats_total < lo || cov.repeats_total > hi) {
      r.Add("repeat_bounds", "repeats " + std::to_string(cov.repeats_total) +
                                 " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
  }
  if (tag == CaseTag::kPA || tag == CaseTag::kPAO) {
    const int need = range_level_lower_bound(k);
    int below_top = 0;
    for (std::size_t i = 0; i < c.tours.size(); ++i) {
      const int level = MaxLevel(c.tours[i]);
      if (level < need) {
        r.Add("reach_level", "tour " + std::to_string(i) + " peaks at level " +
                                 std::to_string(level) + " < " +
                                 std::to_string(need));
      }
      if (level < 2 * k - 1) ++below_top;
    }
    if (below_top > 1) {
      r.Add("low_tours", std::to_string(below_top) +
                             " tours stay below level " +
                             std::to_string(2 * k - 1));
    }
  }
  if (tag == CaseTag::kPAR) {
    // Repeats at or above the baseline against half the shortest walk.
    const int level = std::min(c.grid.cols, c.grid.rows) - 1;
    std::vector<std::int64_t> visits(
        static_cast<std::size_t>(c.grid.vertex_count()), 0);
    std::int64_t shortest = -1;
    for (const Tour& t : c.tours) {
      for (std::size_t i = 0; i + 1 < t.points.size(); ++i) {
        if (level_of(t.points[i]) >= level) ++visits[c.grid.index(t.points[i])];
      }
      const std::int64_t walk = t.length() - 2LL * level;
      shortest = shortest < 0 ? walk : std::min(shortest, walk);
    }
    std::int64_t region_repeats = 0;
    for (std::int64_t v : visits) region_repeats += v > 1 ? v - 1 : 0;
    if (2 * region_repeats < shortest) {
      r.Add("par_lower_bound",
            "repeats above level " + std::to_string(level) + " = " +
                std::to_string(region_repeats) + " < " +
                std::to_string(shortest) + " / 2");
    }
  }
  return r;
}

VerificationReport verify(const Covering& c) {
  VerificationReport r = verify_tours(c.tours, c.grid, c.max_tour_length);
  if (c.k != static_cast<int>(c.tours.size())) {
    r.Add("metadata_mismatch", "k = " + std::to_string(c.k) + " but " +
                                   std::to_string(c.tours.size()) + " tours");
  }
  if (c.total_length != r.total_length) {
    r.Add("metadata_mismatch",
          "total_length = " + std::to_string(c.total_length) +
              ", recomputed " + std::to_string(r.total_length));
  }
  if (c.repeats_total != r.repeats_total) {
    r.Add("metadata_mismatch",
          "repeats_total = " + std::to_string(c.repeats_total) +
              ", recomputed " + std::to_string(r.repeats_total));
  }
  if (!c.repeats_by_vertex.empty() &&
      c.repeats_by_vertex != r.repeats_by_vertex) {
    r.Add("metadata_mismatch", "repeats_by_vertex differs from recomputed");
  }
  if (r.valid) r.Merge(check_theorem_bounds(c));
  return r;
}

OracleLimits OracleLimitsFromEnv() {
  OracleLimits limits;
  if (const char* env = std::getenv("GRIDTOURS_ORACLE_GUARD")) {
    const int cells = std::atoi(env);
    if (cells > 0) {
      limits.max_cells = std::min(cells, 20);
      limits.max_tour_length = std::max<std::int64_t>(16, 2LL * cells);
    }
  }
  return limits;
}

namespace {

struct Cost {
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend auto operator<=>(const Cost&, const Cost&) = default;
};

// Shortest closed walk from B for every visited set, by BFS over
// (position, visited set) states.
class TourTable {
 public:
  TourTable(const GridSpec& g, std::int64_t max_tour_length)
      : g_(g), n_(static_cast<int>(g.vertex_count())) {
    const std::size_t states = (std::size_t{1} << n_) * n_;
    dist_.assign(states, -1);
    parent_.assign(states, -1);
    std::vector<std::int32_t> queue;
    queue.reserve(states);
    const std::int32_t start = State(1, 0);
    dist_[start] = 0;
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t s = queue[head];
      if (dist_[s] >= max_tour_length) continue;
      const std::uint32_t mask = static_cast<std::uint32_t>(s / n_);
      const int pos = s % n_;
      const Point p{pos % g_.cols, pos / g_.cols};
      for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1},
                      Point{p.x - 1, p.y}, Point{p.x, p.y - 1}}) {
        if (!g_.contains(q)) continue;
        const int qi = static_cast<int>(g_.index(q));
        const std::int32_t t = State(mask | (1u << qi), qi);
        if (dist_[t] >= 0) continue;
        dist_[t] = dist_[s] + 1;
        parent_[t] = s;
        queue.push_back(t);
      }
    }
  }

  // -1 if no closed walk within L visits exactly `mask`.
  std::int32_t cost(std::uint32_t mask) const { return dist_[State(mask, 0)]; }

  Tour tour(std::uint32_t mask) const {
    std::vector<Point> rev;
    for (std::int32_t s = State(mask, 0); s >= 0; s = parent_[s]) {
      const int pos = s % n_;
      rev.push_back({pos % g_.cols, pos / g_.cols});
    }
    return Tour{{rev.rbegin(), rev.rend()}};
  }

 private:
  std::int32_t State(std::uint32_t mask, int pos) const {
    return static_cast<std::int32_t>(mask) * n_ + pos;
  }

  GridSpec g_;
  int n_;
  std::vector<std::int32_t> dist_;
  std::vector<std::int32_t> parent_;
};

void CheckGuard(const GridSpec& g, std::int64_t max_tour_length,
                const OracleLimits& limits) {
  ValidateRequest(g, max_tour_length);
  if (g.vertex_count() > limits.max_cells ||
      max_tour_length > limits.max_tour_length) {
    throw Error(ErrorCode::kResourceGuard,
                "oracle limited to " + std::to_string(limits.max_cells) +
                    " vertices and L <= " +
                    std::to_string(limits.max_tour_length));
  }
}

// Optimal covering under the lexicographic cost (total, count) or
// (count, total).
Covering OracleSolve(const GridSpec& g, std::int64_t max_tour_length,
                     const OracleLimits& limits, bool count_first) {
  CheckGuard(g, max_tour_length, limits);
  const int n = static_cast<int>(g.vertex_count());
  const TourTable table(g, max_tour_length);
  const std::uint32_t full = (1u << n) - 1;
  const std::size_t size = std::size_t{1} << n;

  // Cheapest walk whose visited set contains each mask.
  constexpr std::int64_t kNone = -1;
  std::vector<std::int64_t> best(size, kNone);
  std::vector<std::uint32_t> witness(size, 0);
  for (std::uint32_t m = 0; m <= full; ++m) {
    if ((m & 1u) && table.cost(m) >= 0) {
      best[m] = table.cost(m);
      witness[m] = m;
    }
  }
  for (int bit = 0; bit < n; ++bit) {
    for (std::uint32_t m = 0; m <= full; ++m) {
      if (m & (1u << bit)) continue;
      const std::uint32_t up = m | (1u << bit);
      if (best[up] == kNone) continue;
      if (best[m] == kNone || best[up] < best[m]) {
        best[m] = best[up];
        witness[m] = witness[up];
      }
    }
  }

  const Cost kInf{INT64_MAX, INT64_MAX};
  std::vector<Cost> dp(size, kInf);
  std::vector<std::uint32_t> choice(size, 0);
  dp[0] = {0, 0};
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    // Submasks of s that contain its lowest vertex.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t t = sub | low;
      const Cost& tail = dp[s ^ t];
      if (best[t] != kNone && tail != kInf) {
        const Cost c = count_first
                           ? Cost{tail.first + 1, tail.second + best[t]}
                           : Cost{tail.first + best[t], tail.second + 1};
        if (c < dp[s]) {
          dp[s] = c;
          choice[s] = t;
        }
      }
      if (sub == 0) break;
    }
  }
  if (dp[full] == kInf) {
    throw Error(ErrorCode::kInfeasible, "no covering within L");
  }
  Covering c;
  c.grid = g;
  c.max_tour_length = max_tour_length;
  c.objective = count_first ? Objective::kMinTours : Objective::kMinLength;
  c.case_tag = CaseTag::kOracle;
  for (std::uint32_t s = full; s != 0; s ^= choice[s]) {
    c.tours.push_back(table.tour(witness[choice[s]]));
  }
  FillCounts(c);
  return c;
}

}  // namespace

Covering brute_force_min_length(const GridSpec& g, std::int64_t max_tour_length,
                                const OracleLimits& limits) {
  return OracleSolve(g, max_tour_length, limits, /*count_first=*/false);
}

Covering brute_force_min_tours_covering(const GridSpec& g,
                                        std::int64_t max_tour_length,
                                        const OracleLimits& limits) {
  return OracleSolve(g, max_tour_length, limits, /*count_first=*/true);
}

int brute_force_min_tours(const GridSpec& g, std::int64_t max_tour_length,
                          const OracleLimits& limits) {
  return brute_force_min_tours_covering(g, max_tour_length, limits).k;
}

namespace {

void StepTo(std::vector<Point>& path, Point& cur, Point to, bool x_first) {
  auto move_x = [&] {
    while (cur.x != to.x) {
      cur.x += cur.x < to.x ? 1 : -1;
      path.push_back(cur);
    }
  };
  auto move_y = [&] {
    while (cur.y != to.y) {
      cur.y += cur.y < to.y ? 1 : -1;
      path.push_back(cur);
    }
  };
  if (x_first) {
    move_x();
    move_y();
  } else {
    move_y();
    move_x();
  }
}

}  // namespace

Covering greedy_covering(const GridSpec& g, std::int64_t max_tour_length) {
  ValidateRequest(g, max_tour_length);
  std::vector<Point> order;
  order.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int y = 0; y < g.rows; ++y) {
    for (int i = 0; i < g.cols; ++i) {
      order.push_back({y % 2 == 0 ? i : g.cols - 1 - i, y});
    }
  }
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  covered[g.index(kBase)] = true;
  std::size_t next = 0;
  Covering c;
  c.grid = g;
  c.max_tour_length = max_tour_length;
  c.objective = Objective::kMinLength;
  c.case_tag = CaseTag::kGreedy;
  auto mark = [&](const std::vector<Point>& pts) {
    for (Point p : pts) covered[g.index(p)] = true;
  };
  for (;;) {
    while (next < order.size() && covered[g.index(order[next])]) ++next;
    if (next == order.size()) break;
    Tour t;
    t.points.push_back(kBase);
    Point cur = kBase;
    std::int64_t len = 0;
    for (std::size_t i = next; i < order.size(); ++i) {
      const Point target = order[i];
      if (covered[g.index(target)]) continue;
      const std::int64_t step = ManhattanDistance(cur, target);
      if (len + step + level_of(target) > max_tour_length) break;
      const std::size_t before = t.points.size();
      StepTo(t.points, cur, target, /*x_first=*/true);
      mark({t.points.begin() + static_cast<std::ptrdiff_t>(before),
            t.points.end()});
      len += step;
    }
    StepTo(t.points, cur, kBase, /*x_first=*/false);
    if (t.length() == 0) {
      throw Error(ErrorCode::kInternal, "greedy tour made no progress");
    }
    c.tours.push_back(std::move(t));
  }
  if (c.tours.empty()) c.tours.push_back(Tour{{kBase}});
  FillCounts(c);
  return c;
}

}  // namespace gridtours
