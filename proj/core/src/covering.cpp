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

#include "gridtours/covering.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "gridtours/error.hpp"

namespace gridtours {

std::string CaseTagName(CaseTag tag) {
  switch (tag) {
    case CaseTag::kSingle: return "single";
    case CaseTag::kPA: return "PA";
    case CaseTag::kPAO: return "PAO";
    case CaseTag::kPAR: return "PAR";
    case CaseTag::kColumn: return "column";
    case CaseTag::kOracle: return "oracle";
    case CaseTag::kGreedy: return "greedy";
  }
  return "unknown";
}

std::optional<CaseTag> ParseCaseTag(const std::string& name) {
  for (CaseTag t : {CaseTag::kSingle, CaseTag::kPA, CaseTag::kPAO,
                    CaseTag::kPAR, CaseTag::kColumn, CaseTag::kOracle,
                    CaseTag::kGreedy}) {
    if (CaseTagName(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

// Right-aligned row stack. Row 0 is the added row, row 1 the bottom row of
// the shape being covered.
struct Profile {
  int bottom_y = 0;
  int right = 0;
  std::vector<int> left;

  int rows() const { return static_cast<int>(left.size()); }
  int y(int i) const { return bottom_y + i; }
};

struct ZoneResult {
  Walk walk;
  // Points of the ascent from B that precede the zone walk, when lifted.
  std::size_t lead = 0;
  // Rightmost covered x per profile row; left[i] - 1 if none.
  std::vector<int> covered;
};

Profile ProfileOf(const Shape& a) {
  const auto& rows = a.rows();
  if (rows.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "area needs at least two rows");
  }
  Profile p;
  p.bottom_y = rows.front().y;
  p.right = rows.front().x_hi;
  for (const RowSpan& r : rows) {
    if (r.x_hi != p.right) {
      throw Error(ErrorCode::kInvalidInput, "area rows are not right-aligned");
    }
    p.left.push_back(r.x_lo);
  }
  return p;
}

// Monotone paths between B and a point: along row 0, then vertically.
void Ascend(std::vector<Point>& out, Point to) {
  out.push_back(kBase);
  for (int x = 1; x <= to.x; ++x) out.push_back({x, 0});
  for (int y = 1; y <= to.y; ++y) out.push_back({to.x, y});
}

void Descend(std::vector<Point>& out, Point from) {
  for (int y = from.y - 1; y >= 0; --y) out.push_back({from.x, y});
  for (int x = from.x - 1; x >= 0; --x) out.push_back({x, 0});
}

void Zigzag(std::vector<Point>& out, int from_x, int to_x, int y_top,
            int y_bottom) {
  for (int x = from_x; x >= to_x; --x) {
    if ((from_x - x) % 2 == 0) {
      out.push_back({x, y_top});
      out.push_back({x, y_bottom});
    } else {
      out.push_back({x, y_bottom});
      out.push_back({x, y_top});
    }
  }
}

// kSMaximal keeps the walk budget-tight unless the residual is terminal.
// kPainting gives back a single leftover column whenever the rows below can
// take it, stopping at l - 2.
enum class ZoneMode { kComplete, kSMaximal, kPainting };

// Step 1 boundary walk, then serpentine extensions over row pairs from the
// top down. kComplete finishes every pair regardless of budget.
// A nonnegative lift_level prefixes the walk with its ascent from B and
// reserves room for the descent.
ZoneResult CoverZone(const Profile& a, std::int64_t budget, ZoneMode mode,
                     int lift_level = -1) {
  const bool complete = mode == ZoneMode::kComplete;
  const int h = a.rows();
  const int top = h - 1;
  const int r = a.right;
  const int l = a.left[1];
  if (h < 2 || a.left[0] != l + 1 || l + 1 > r) {
    throw Error(ErrorCode::kInvalidInput, "area is not AddRow of a shape");
  }
  for (int i = 2; i < h; ++i) {
    if (a.left[i] < a.left[i - 1] || a.left[i] > r) {
      throw Error(ErrorCode::kInvalidInput, "rows do not form a staircase");
    }
  }
  if (top >= 2 && a.left[top] + 1 > r) {
    throw Error(ErrorCode::kInvalidInput, "top rows leave no return lane");
  }
  const std::int64_t step1 = 2LL * (top - 1) + 2LL * (r - l);
  if (!complete && step1 > budget) {
    throw Error(ErrorCode::kInvalidInput, "budget below perimeter minus 2");
  }

  std::vector<int> cov(h);
  for (int i = 0; i < h; ++i) {
    cov[i] = i >= top - 1 ? r : std::min(r, a.left[i + 2] + 1);
  }

  std::vector<int> ext(h, 0);
  std::int64_t rem = complete ? kUnbounded : budget - step1;
  int j = top - 2;
  while (j >= 0 && cov[j] >= r) --j;
  for (; j >= 1; j -= 2) {
    const int n = r - cov[j];
    if (r - cov[j - 1] != n) {
      throw Error(ErrorCode::kInternal, "unpaired rows in zone");
    }
    if (rem < 2) break;
    const int m = complete ? n : static_cast<int>(std::min<std::int64_t>(
                                     n, rem / 2));
    ext[j] = m;
    rem -= 2LL * m;
    if (m == n) continue;
    if (n - m == 1) {
      // Width below the pair; for j == 1 it is the next baseline row.
      const int below = j >= 2 ? r - cov[j - 2] : r - l - 1;
      if (j >= 3 && below >= 3 && r - cov[j - 3] == below) {
        ext[j] -= 1;
        ext[j - 2] = 1;
      } else if (mode == ZoneMode::kPainting && below >= 2) {
        ext[j] -= 1;
      } else if (j == 2 && a.left[2] == l && below == r - l - 1 &&
                 below > 2) {
        ext[j] -= 1;
      }
    }
    break;
  }

  ZoneResult res;
  std::vector<Point>& w = res.walk.points;
  std::size_t points = static_cast<std::size_t>(step1) + 1;
  for (int e : ext) points += 2 * static_cast<std::size_t>(e);
  const std::size_t lift =
      lift_level < 0 ? 0 : 2 * static_cast<std::size_t>(lift_level) + 1;
  w.reserve(points + 4 + lift);
  if (lift_level >= 0) {
    Ascend(w, {l, a.y(1)});
    res.lead = w.size() - 1;
  } else {
    w.push_back({l, a.y(1)});
  }
  int x = l;
  for (int i = 1; i <= top; ++i) {
    const int target = i < top ? a.left[i + 1] : r;
    for (int xx = x + 1; xx <= target; ++xx) w.push_back({xx, a.y(i)});
    x = target;
    if (i < top) w.push_back({x, a.y(i + 1)});
  }
  w.push_back({r, a.y(top - 1)});
  x = r;
  for (int i = top - 1; i >= 0; --i) {
    const int target = i == 0 ? l + 1 : a.left[i + 1] + 1;
    for (int xx = x - 1; xx >= target; --xx) w.push_back({xx, a.y(i)});
    x = target;
    if (i == 0) break;
    if (ext[i] > 0) {
      if (cov[i] != x) {
        throw Error(ErrorCode::kInternal, "serpentine off its anchor");
      }
      for (int k = 1; k <= ext[i]; ++k) w.push_back({x + k, a.y(i)});
      for (int k = ext[i]; k >= 1; --k) w.push_back({x + k, a.y(i - 1)});
    }
    w.push_back({x, a.y(i - 1)});
  }
  for (int i = 1; i < h; ++i) {
    if (ext[i] > 0) {
      cov[i] += ext[i];
      cov[i - 1] += ext[i];
    }
  }
  if (!complete &&
      static_cast<std::int64_t>(w.size() - res.lead) - 1 > budget) {
    throw Error(ErrorCode::kInternal, "zone walk over budget");
  }
  res.covered = std::move(cov);
  return res;
}

// Replaces the tail (r, y1) .. (l + 1, y1), (l + 1, y0) with a zigzag over
// rows 0 and 1 so that row 0 is finished.
void CombBottom(const Profile& a, ZoneResult& z) {
  const int r = a.right;
  const int l = a.left[1];
  std::vector<Point>& w = z.walk.points;
  const std::size_t tail = static_cast<std::size_t>(r - l) + 1;
  if (a.rows() < 3 || a.left[2] != l || z.covered[0] != l + 1 ||
      w.size() < tail + 1 || w[w.size() - tail] != Point{r, a.y(1)} ||
      w.back() != Point{l + 1, a.y(0)}) {
    throw Error(ErrorCode::kInternal, "unexpected walk tail before comb");
  }
  w.resize(w.size() - tail);
  if ((r - l) % 2 == 1) {
    Zigzag(w, r, l + 1, a.y(1), a.y(0));
  } else {
    Zigzag(w, r, l + 2, a.y(1), a.y(0));
    w.push_back({l + 2, a.y(1)});
    w.push_back({l + 1, a.y(1)});
    w.push_back({l + 1, a.y(0)});
  }
  z.covered[0] = r;
}

void RequireEvenBudget(std::int64_t budget) {
  if (budget < 0 || budget % 2 != 0) {
    throw Error(ErrorCode::kInvalidInput, "walk budget must be even and >= 0");
  }
}

void RequireFamily(const Shape& u) {
  if (u.kind() == ShapeKind::kEmpty || u.kind() == ShapeKind::kAddRow) {
    throw Error(ErrorCode::kInvalidInput, "shape must be in the family");
  }
  if (u.rows().front().width() < 2) {
    throw Error(ErrorCode::kInvalidInput, "bottom row needs two points");
  }
}

// Complete cover of a profile, with the comb when row 0 is left open.
ZoneResult CoverAll(const Profile& p, int lift_level = -1) {
  ZoneResult z = CoverZone(p, 0, ZoneMode::kComplete, lift_level);
  if (z.covered[0] < p.right) CombBottom(p, z);
  for (int i = 0; i < p.rows(); ++i) {
    if (z.covered[i] < p.right) {
      throw Error(ErrorCode::kInternal, "complete cover left a gap");
    }
  }
  return z;
}

// Cover of AddRow(u) plus a row from l + 3 to r below it, leaving l + 2.
ZoneResult CoverOdd(const Profile& p) {
  ZoneResult z = CoverZone(p, 0, ZoneMode::kComplete);
  const int r = p.right;
  const int l = p.left[1];
  for (int i = 0; i < p.rows(); ++i) {
    if (z.covered[i] < r) {
      throw Error(ErrorCode::kInfeasible, "odd cover left a gap");
    }
  }
  if ((r - l) % 2 != 0) {
    throw Error(ErrorCode::kInfeasible, "odd cover needs an odd width");
  }
  std::vector<Point>& w = z.walk.points;
  const std::size_t tail = static_cast<std::size_t>(r - l);
  if (w.size() < tail + 1 || w[w.size() - tail] != Point{r, p.y(0)} ||
      w.back() != Point{l + 1, p.y(0)}) {
    throw Error(ErrorCode::kInternal, "unexpected walk tail in odd cover");
  }
  if (r >= l + 3) {
    w.resize(w.size() - tail);
    Zigzag(w, r, l + 3, p.y(0), p.y(0) - 1);
    w.push_back({l + 2, p.y(0)});
    w.push_back({l + 1, p.y(0)});
  }
  return z;
}

}  // namespace

Walk u_covering(const Shape& u, std::int64_t budget) {
  RequireFamily(u);
  RequireEvenBudget(budget);
  if (u.kind() == ShapeKind::kS1 && u.c() == 1) {
    throw Error(ErrorCode::kInvalidInput, "S1 with c = 1 has no U-covering");
  }
  const Profile p = ProfileOf(add_row(u));
  return CoverZone(p, budget, ZoneMode::kSMaximal).walk;
}

Walk otu_covering(const Shape& u, std::int64_t budget) {
  RequireFamily(u);
  RequireEvenBudget(budget);
  const Shape a = add_row(u);
  if (budget < a.size()) {
    throw Error(ErrorCode::kInvalidInput, "budget below |AddRow(U)|");
  }
  ZoneResult z = CoverAll(ProfileOf(a));
  if (z.walk.length() > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "complete cover over budget");
  }
  return std::move(z.walk);
}

Walk otu_odd_covering(const Shape& u, std::int64_t budget) {
  RequireFamily(u);
  RequireEvenBudget(budget);
  if (u.height() % 2 == 0 || u.width() % 2 == 0) {
    throw Error(ErrorCode::kInvalidInput, "shape needs odd rows and columns");
  }
  const Shape a = add_row(u);
  if (a.anchor().y < 1) {
    throw Error(ErrorCode::kInvalidInput, "no room for the second added row");
  }
  ZoneResult z = CoverOdd(ProfileOf(a));
  if (z.walk.length() > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "odd cover over budget");
  }
  return std::move(z.walk);
}

Walk otu_r_covering(const Shape& column, std::int64_t budget) {
  if (column.kind() != ShapeKind::kRect || column.a() != 1) {
    throw Error(ErrorCode::kInvalidInput, "expected a single column");
  }
  const int b = column.b();
  if (budget < 2LL * (b - 1)) {
    throw Error(ErrorCode::kInvalidInput, "budget below 2 (b - 1)");
  }
  const Point base = column.anchor();
  Walk w;
  for (int i = 0; i < b; ++i) w.points.push_back({base.x, base.y + i});
  for (int i = b - 2; i >= 0; --i) w.points.push_back({base.x, base.y + i});
  return w;
}

namespace {

// First uncovered x per row of the working region; right + 1 when full.
struct Frontier {
  int right = 0;
  std::vector<int> start;

  Frontier(const GridSpec& g, int level) : right(g.cols - 1) {
    start.resize(g.rows);
    for (int y = 0; y < g.rows; ++y) {
      start[y] = std::min(std::max(0, level - y), right + 1);
    }
  }

  bool row_open(int y) const { return start[y] <= right; }

  int top_open() const {
    int y = static_cast<int>(start.size()) - 1;
    while (y >= 0 && !row_open(y)) --y;
    return y;
  }

  // Profile of AddRow(U) where U holds the open rows from y_bottom up.
  Profile ProfileFrom(int y_bottom, int l) const {
    if (y_bottom < 1 || start[y_bottom] != l || start[y_bottom - 1] != l + 1) {
      throw Error(ErrorCode::kInternal, "frontier does not match the baseline");
    }
    const int top = std::max(top_open(), y_bottom);
    Profile p;
    p.bottom_y = y_bottom - 1;
    p.right = right;
    for (int y = y_bottom - 1; y <= top; ++y) {
      if (!row_open(y)) {
        throw Error(ErrorCode::kInternal, "gap in the uncovered rows");
      }
      p.left.push_back(start[y]);
    }
    return p;
  }

  void Apply(const Profile& p, const std::vector<int>& covered) {
    for (int i = 0; i < p.rows(); ++i) {
      int& s = start[p.y(i)];
      s = std::max(s, covered[i] + 1);
    }
  }

  bool all_covered() const { return top_open() < 0; }
};

bool CanonicalForPainting(const GridSpec& g) {
  ValidateGrid(g);
  return g.cols <= g.rows;
}

// Runs U-coverings for steps 1 .. steps at baseline level `level`.
// With lift set, each walk comes back as a closed tour through B.
bool RunUCoverings(Frontier& f, int level, int steps, std::int64_t budget,
                   std::vector<Walk>& out, bool lift = false) {
  for (int i = 1; i <= steps; ++i) {
    const int yb = level - 2 * i + 2;
    const Profile p = f.ProfileFrom(yb, 2 * i - 2);
    ZoneResult z;
    try {
      z = CoverZone(p, budget, ZoneMode::kPainting, lift ? level : -1);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidInput) return false;
      throw;
    }
    f.Apply(p, z.covered);
    if (lift) Descend(z.walk.points, z.walk.back());
    out.push_back(std::move(z.walk));
  }
  return true;
}

}  // namespace

std::optional<WalkSet> try_painting(const GridSpec& g, int r,
                                    std::int64_t budget, bool lift) {
  if (!CanonicalForPainting(g)) {
    throw Error(ErrorCode::kInvalidInput, "painting expects cols <= rows");
  }
  if (r < 1 || 2 * r > g.cols) {
    throw Error(ErrorCode::kInvalidInput, "painting needs 1 <= r <= cols / 2");
  }
  if (budget < 0 || budget % 2 != 0) return std::nullopt;
  const int level = 2 * r - 1;
  WalkSet ws;
  ws.case_tag = r == 1 ? CaseTag::kSingle : CaseTag::kPA;
  ws.baseline_level = level;
  ws.budget = budget;
  ws.lifted = lift;
  Frontier f(g, level);
  if (!RunUCoverings(f, level, r - 1, budget, ws.walks, lift)) {
    return std::nullopt;
  }
  const Profile p = f.ProfileFrom(1, 2 * r - 2);
  ZoneResult z = CoverAll(p, lift ? level : -1);
  if (z.walk.length() - static_cast<std::int64_t>(z.lead) > budget) {
    return std::nullopt;
  }
  f.Apply(p, z.covered);
  if (lift) Descend(z.walk.points, z.walk.back());
  ws.walks.push_back(std::move(z.walk));
  if (!f.all_covered()) {
    throw Error(ErrorCode::kInternal, "painting left points uncovered");
  }
  return ws;
}

WalkSet painting(const GridSpec& g, int r, std::int64_t budget) {
  auto ws = try_painting(g, r, budget);
  if (!ws) throw Error(ErrorCode::kInfeasible, "painting does not fit budget");
  return *std::move(ws);
}

std::optional<WalkSet> try_pao(const GridSpec& g, int k,
                               std::int64_t max_tour_length) {
  if (!CanonicalForPainting(g)) {
    throw Error(ErrorCode::kInvalidInput, "PAO expects cols <= rows");
  }
  if (k < 2 || 2 * k - 1 > g.cols) {
    throw Error(ErrorCode::kInvalidInput, "PAO needs 2 <= k <= (cols + 1) / 2");
  }
  const int level = 2 * k - 2;
  const std::int64_t budget = WalkBudgetAt(max_tour_length, level);
  if (budget < 0 || budget % 2 != 0) return std::nullopt;
  WalkSet ws;
  ws.case_tag = CaseTag::kPAO;
  ws.baseline_level = level;
  ws.budget = budget;
  ws.designated_point = Point{level, 0};
  Frontier f(g, level);
  if (!RunUCoverings(f, level, k - 2, budget, ws.walks)) return std::nullopt;
  const Profile p = f.ProfileFrom(2, 2 * k - 4);
  ZoneResult z;
  try {
    z = CoverOdd(p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) return std::nullopt;
    throw;
  }
  if (z.walk.length() > budget) return std::nullopt;
  f.Apply(p, z.covered);
  f.start[0] = f.right + 1;
  ws.walks.push_back(std::move(z.walk));
  if (!f.all_covered()) {
    throw Error(ErrorCode::kInternal, "PAO left points uncovered");
  }
  return ws;
}

WalkSet pao(const GridSpec& g, int k, std::int64_t max_tour_length) {
  auto ws = try_pao(g, k, max_tour_length);
  if (!ws) throw Error(ErrorCode::kInfeasible, "PAO does not fit budget");
  return *std::move(ws);
}

std::optional<WalkSet> try_par(const GridSpec& g,
                               std::int64_t max_tour_length) {
  if (!CanonicalForPainting(g)) {
    throw Error(ErrorCode::kInvalidInput, "PAR expects cols <= rows");
  }
  if (g.cols % 2 == 0) {
    throw Error(ErrorCode::kInvalidInput, "PAR needs an odd column count");
  }
  const int k = (g.cols + 1) / 2;
  const int level = g.cols - 1;
  const std::int64_t budget = WalkBudgetAt(max_tour_length, level);
  if (budget < 0 || budget % 2 != 0) return std::nullopt;
  WalkSet ws;
  ws.case_tag = g.cols == 1 ? CaseTag::kColumn : CaseTag::kPAR;
  ws.baseline_level = level;
  ws.budget = budget;
  Frontier f(g, level);
  if (!RunUCoverings(f, level, k - 1, budget, ws.walks)) return std::nullopt;
  const int top = f.top_open();
  for (int y = 0; y <= top; ++y) {
    if (f.start[y] != f.right) return std::nullopt;
  }
  if (top < 0) throw Error(ErrorCode::kInternal, "PAR has no last column");
  const Shape column = Shape::Rect(1, top + 1, {f.right, 0});
  if (2LL * top > budget) return std::nullopt;
  ws.walks.push_back(otu_r_covering(column, budget));
  return ws;
}

WalkSet par(const GridSpec& g, std::int64_t max_tour_length) {
  auto ws = try_par(g, max_tour_length);
  if (!ws) throw Error(ErrorCode::kInfeasible, "PAR does not fit budget");
  return *std::move(ws);
}

namespace {

Tour Lift(const std::vector<Point>& walk, const GridSpec& g, int level,
          std::int64_t max_tour_length) {
  const Point s = walk.front();
  const Point e = walk.back();
  if (!g.contains(s) || !g.contains(e) || level_of(s) != level ||
      level_of(e) != level) {
    throw Error(ErrorCode::kInvalidWalk,
                "walk must run between baseline points");
  }
  Tour t;
  t.points.reserve(walk.size() + 2 * static_cast<std::size_t>(level) + 1);
  Ascend(t.points, s);
  t.points.insert(t.points.end(), walk.begin() + 1, walk.end());
  Descend(t.points, e);
  if (t.length() > max_tour_length) {
    throw Error(ErrorCode::kBudgetExceeded, "lifted tour exceeds L");
  }
  return t;
}

}  // namespace

std::vector<Tour> vertical_descent(const WalkSet& walks, const GridSpec& g,
                                   std::int64_t max_tour_length) {
  return vertical_descent(WalkSet(walks), g, max_tour_length);
}

std::vector<Tour> vertical_descent(WalkSet&& walks, const GridSpec& g,
                                   std::int64_t max_tour_length) {
  if (walks.lifted) {
    for (const Walk& w : walks.walks) {
      if (w.points.empty() || w.front() != kBase || w.back() != kBase) {
        throw Error(ErrorCode::kInvalidWalk, "lifted walk must close at B");
      }
      if (w.length() > max_tour_length) {
        throw Error(ErrorCode::kBudgetExceeded, "lifted tour exceeds L");
      }
    }
    return std::move(walks.walks);
  }
  std::vector<Tour> tours;
  tours.reserve(walks.walks.size() + 1);
  for (Walk& w : walks.walks) {
    if (w.points.empty()) {
      throw Error(ErrorCode::kInvalidWalk, "empty walk");
    }
    tours.push_back(Lift(w.points, g, walks.baseline_level, max_tour_length));
    std::vector<Point>().swap(w.points);
  }
  if (walks.designated_point) {
    tours.push_back(Lift({*walks.designated_point}, g, walks.baseline_level,
                         max_tour_length));
  }
  return tours;
}

}  // namespace gridtours
