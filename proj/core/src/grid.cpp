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

#include "gridtours/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gridtours/error.hpp"

namespace gridtours {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "InvalidInput";
    case ErrorCode::kLevelOutOfRange:
      return "LevelOutOfRange";
    case ErrorCode::kDegenerateShape:
      return "DegenerateShape";
    case ErrorCode::kInvalidWalk:
      return "InvalidWalk";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kOddL:
      return "OddL";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kResourceGuard:
      return "ResourceGuard";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

void ValidateGrid(const GridSpec& g) {
  if (g.cols < 1 || g.rows < 1) {
    throw Error(ErrorCode::kInvalidInput, "grid dimensions must be positive");
  }
}

std::int64_t level_size(const GridSpec& g, int level) {
  if (level < 0 || level > g.max_level()) return 0;
  // x ranges over [max(0, level - rows + 1), min(cols - 1, level)].
  const int lo = std::max(0, level - (g.rows - 1));
  const int hi = std::min(g.cols - 1, level);
  return hi >= lo ? hi - lo + 1 : 0;
}

std::int64_t region_size(const GridSpec& g, int level) {
  ValidateGrid(g);
  if (level < 0 || level > g.max_level()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(level) + " outside [0, " +
                    std::to_string(g.max_level()) + "]");
  }
  std::int64_t below = 0;
  for (int i = 0; i < level; ++i) below += level_size(g, i);
  return g.vertex_count() - below;
}

std::vector<Point> baseline(const GridSpec& g, int level) {
  std::vector<Point> out;
  for (int x = 0; x <= level; ++x) {
    const Point p{x, level - x};
    if (g.contains(p)) out.push_back(p);
  }
  return out;
}

bool HasUnitSteps(std::span<const Point> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (ManhattanDistance(points[i - 1], points[i]) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string ShapeKindName(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kEmpty:
      return "Empty";
    case ShapeKind::kRect:
      return "Rect";
    case ShapeKind::kS1:
      return "S1";
    case ShapeKind::kS2:
      return "S2";
    case ShapeKind::kAddRow:
      return "AddRow";
  }
  return "?";
}

namespace {

std::vector<RowSpan> Translate(std::vector<RowSpan> rows, Point by) {
  for (auto& r : rows) {
    r.y += by.y;
    r.x_lo += by.x;
    r.x_hi += by.x;
  }
  return rows;
}

}  // namespace

Shape Shape::Empty() { return Shape(); }

Shape Shape::Rect(int a, int b, Point anchor) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::kInvalidInput, "Rect needs a, b >= 1");
  }
  Shape s;
  s.kind_ = ShapeKind::kRect;
  s.a_ = a;
  s.b_ = b;
  s.anchor_ = anchor;
  std::vector<RowSpan> rows;
  for (int y = 0; y < b; ++y) rows.push_back({y, 0, a - 1});
  s.rows_ = Translate(std::move(rows), anchor);
  return s;
}

Shape Shape::S1(int a, int b, int c, Point anchor) {
  if (b < 3 || c < 1 || c >= a) {
    throw Error(ErrorCode::kInvalidInput, "S1 needs b >= 3 and 1 <= c < a");
  }
  Shape s;
  s.kind_ = ShapeKind::kS1;
  s.a_ = a;
  s.b_ = b;
  s.c_ = c;
  s.anchor_ = anchor;
  std::vector<RowSpan> rows;
  for (int y = 0; y < b; ++y) {
    rows.push_back({y, y >= b - 2 ? a - c : 0, a - 1});
  }
  s.rows_ = Translate(std::move(rows), anchor);
  return s;
}

Shape Shape::S2(int a, int b, Point anchor) {
  if (a < 3 || b < 5) {
    throw Error(ErrorCode::kInvalidInput, "S2 needs a >= 3 and b >= 5");
  }
  Shape s;
  s.kind_ = ShapeKind::kS2;
  s.a_ = a;
  s.b_ = b;
  s.anchor_ = anchor;
  std::vector<RowSpan> rows;
  for (int y = 0; y < b; ++y) {
    int lo = 0;
    if (y >= b - 2) {
      lo = a - 2;
    } else if (y >= b - 4) {
      lo = 1;
    }
    rows.push_back({y, lo, a - 1});
  }
  s.rows_ = Translate(std::move(rows), anchor);
  return s;
}

Shape add_row(const Shape& s) {
  if (s.rows_.empty() || s.rows_.front().width() < 2) {
    throw Error(ErrorCode::kDegenerateShape,
                "AddRow needs a bottom row with at least two points");
  }
  Shape out;
  out.kind_ = ShapeKind::kAddRow;
  out.inner_ = std::make_shared<const Shape>(s);
  const RowSpan& bottom = s.rows_.front();
  out.rows_.reserve(s.rows_.size() + 1);
  out.rows_.push_back({bottom.y - 1, bottom.x_lo + 1, bottom.x_hi});
  out.rows_.insert(out.rows_.end(), s.rows_.begin(), s.rows_.end());
  int min_x = out.rows_.front().x_lo;
  for (const auto& r : out.rows_) min_x = std::min(min_x, r.x_lo);
  out.anchor_ = {min_x, bottom.y - 1};
  return out;
}

std::int64_t Shape::size() const {
  std::int64_t n = 0;
  for (const auto& r : rows_) n += r.width();
  return n;
}

bool Shape::contains(Point p) const {
  if (rows_.empty()) return false;
  const int idx = p.y - rows_.front().y;
  if (idx < 0 || idx >= static_cast<int>(rows_.size())) return false;
  const RowSpan& r = rows_[static_cast<std::size_t>(idx)];
  return p.x >= r.x_lo && p.x <= r.x_hi;
}

std::vector<Point> Shape::points() const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const auto& r : rows_) {
    for (int x = r.x_lo; x <= r.x_hi; ++x) out.push_back({x, r.y});
  }
  return out;
}

int Shape::width() const {
  if (rows_.empty()) return 0;
  int lo = rows_.front().x_lo;
  int hi = rows_.front().x_hi;
  for (const auto& r : rows_) {
    lo = std::min(lo, r.x_lo);
    hi = std::max(hi, r.x_hi);
  }
  return hi - lo + 1;
}

int Shape::height() const { return static_cast<int>(rows_.size()); }

std::string Shape::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ShapeKind::kEmpty:
      os << "Empty";
      break;
    case ShapeKind::kRect:
      os << "Rect(" << a_ << "," << b_ << ")";
      break;
    case ShapeKind::kS1:
      os << "S1(" << a_ << "," << b_ << "," << c_ << ")";
      break;
    case ShapeKind::kS2:
      os << "S2(" << a_ << "," << b_ << ")";
      break;
    case ShapeKind::kAddRow:
      os << "AddRow(" << (inner_ ? inner_->describe() : "?") << ")";
      break;
  }
  if (kind_ != ShapeKind::kEmpty) {
    os << "@(" << anchor_.x << "," << anchor_.y << ")";
  }
  return os.str();
}

std::optional<Shape> classify_shape(std::span<const Point> vertices) {
  std::vector<Point> pts(vertices.begin(), vertices.end());
  std::sort(pts.begin(), pts.end(), [](Point l, Point r) {
    return l.y != r.y ? l.y < r.y : l.x < r.x;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return Shape::Empty();

  std::vector<RowSpan> rows;
  for (const Point p : pts) {
    if (!rows.empty() && rows.back().y == p.y) {
      if (p.x != rows.back().x_hi + 1) return std::nullopt;  // gap in row
      rows.back().x_hi = p.x;
    } else {
      if (!rows.empty() && p.y != rows.back().y + 1) return std::nullopt;
      rows.push_back({p.y, p.x, p.x});
    }
  }
  const int x_hi = rows.front().x_hi;
  int x_min = rows.front().x_lo;
  for (const auto& r : rows) {
    if (r.x_hi != x_hi) return std::nullopt;
    x_min = std::min(x_min, r.x_lo);
  }
  const int h = static_cast<int>(rows.size());
  const int w = x_hi - x_min + 1;
  const Point anchor{x_min, rows.front().y};
  auto offset = [&](int i) {
    return rows[static_cast<std::size_t>(i)].x_lo - x_min;
  };
  auto zero_below = [&](int end) {
    for (int i = 0; i < end; ++i) {
      if (offset(i) != 0) return false;
    }
    return true;
  };

  if (zero_below(h)) return Shape::Rect(w, h, anchor);
  if (h >= 3 && zero_below(h - 2) && offset(h - 2) == offset(h - 1)) {
    return Shape::S1(w, h, w - offset(h - 1), anchor);
  }
  if (h >= 5 && w >= 3 && zero_below(h - 4) && offset(h - 4) == 1 &&
      offset(h - 3) == 1 && offset(h - 2) == w - 2 && offset(h - 1) == w - 2) {
    return Shape::S2(w, h, anchor);
  }
  return std::nullopt;
}

SMaximalityReport is_s_maximal(const Walk& walk, const Shape& area,
                               std::int64_t budget) {
  if (walk.points.empty() || !HasUnitSteps(walk.points)) {
    throw Error(ErrorCode::kInvalidWalk, "walk is empty or has non-unit steps");
  }
  for (const Point p : walk.points) {
    if (!area.contains(p)) {
      throw Error(ErrorCode::kInvalidWalk, "walk leaves the area");
    }
  }
  const std::set<Point> covered(walk.points.begin(), walk.points.end());

  SMaximalityReport report;
  std::vector<Point> residual;
  report.rows_are_prefixes = true;
  for (const auto& r : area.rows()) {
    bool seen_gap = false;
    for (int x = r.x_lo; x <= r.x_hi; ++x) {
      const bool in = covered.count({x, r.y}) > 0;
      if (!in) {
        seen_gap = true;
        residual.push_back({x, r.y});
      } else if (seen_gap) {
        report.rows_are_prefixes = false;
      }
    }
  }

  // Columns, scanned top to bottom.
  std::map<int, std::vector<int>> columns;
  for (auto it = area.rows().rbegin(); it != area.rows().rend(); ++it) {
    for (int x = it->x_lo; x <= it->x_hi; ++x) columns[x].push_back(it->y);
  }
  report.columns_are_prefixes = true;
  for (const auto& [x, ys] : columns) {
    bool seen_gap = false;
    for (const int y : ys) {
      const bool in = covered.count({x, y}) > 0;
      if (!in) {
        seen_gap = true;
      } else if (seen_gap) {
        report.columns_are_prefixes = false;
      }
    }
  }

  report.residual = classify_shape(residual);
  report.residual_in_family = report.residual.has_value();

  const int a = area.width();
  bool terminal = false;
  if (report.residual) {
    const Shape& res = *report.residual;
    terminal = res.kind() == ShapeKind::kEmpty ||
               (res.kind() == ShapeKind::kRect && res.a() == a - 2 &&
                res.b() == 1) ||
               (res.kind() == ShapeKind::kS1 && res.a() == a - 2 &&
                res.b() == 3 && res.c() == 2);
  }
  report.budget_or_terminal = walk.length() == budget || terminal;

  if (!report.residual_in_family) {
    report.violation = "residual not in family";
  } else if (!report.rows_are_prefixes) {
    report.violation = "row coverage is not a left prefix";
  } else if (!report.columns_are_prefixes) {
    report.violation = "column coverage is not a top prefix";
  } else if (!report.budget_or_terminal) {
    report.violation = "walk below budget with non-terminal residual " +
                       report.residual->describe();
  }
  return report;
}

}  // namespace gridtours
