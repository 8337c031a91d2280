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

#ifndef GRIDTOURS_GRID_HPP_
#define GRIDTOURS_GRID_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gridtours {

// Lattice point. x is the column (grows rightward), y the row (grows upward);
// the base station sits at the origin.
struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline constexpr Point kBase{0, 0};

inline int ManhattanDistance(Point a, Point b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

// Level of a point: its Manhattan distance from the base station.
inline int level_of(Point p) { return p.x + p.y; }

struct GridSpec {
  int cols = 1;
  int rows = 1;

  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(cols) * rows;
  }
  bool contains(Point p) const {
    return p.x >= 0 && p.y >= 0 && p.x < cols && p.y < rows;
  }
  int max_level() const { return (cols - 1) + (rows - 1); }
  GridSpec transposed() const { return {rows, cols}; }
  // Row-major dense index, used for per-vertex counters.
  std::size_t index(Point p) const {
    return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(cols) +
           static_cast<std::size_t>(p.x);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Throws kInvalidInput unless both dimensions are positive.
void ValidateGrid(const GridSpec& g);

// Number of grid points at exactly `level`.
std::int64_t level_size(const GridSpec& g, int level);

// |A_i|: number of grid points with x + y >= level. Throws kLevelOutOfRange
// outside [0, max_level].
std::int64_t region_size(const GridSpec& g, int level);

// Points of `level` ordered by increasing x (t_1, t_2, ...), clipped to the
// grid.
std::vector<Point> baseline(const GridSpec& g, int level);

// A lattice walk. Consecutive points are unit steps apart; a single point is
// a walk of length zero.
struct Walk {
  std::vector<Point> points;

  std::int64_t length() const {
    return points.empty() ? 0 : static_cast<std::int64_t>(points.size()) - 1;
  }
  Point front() const { return points.front(); }
  Point back() const { return points.back(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

// A closed walk anchored at the base station.
using Tour = Walk;

bool HasUnitSteps(std::span<const Point> points);

// ---------------------------------------------------------------------------
// Staircase shapes.
//
// Every shape handled here is a stack of horizontal rows whose right ends are
// aligned; only the left ends vary.

enum class ShapeKind { kEmpty, kRect, kS1, kS2, kAddRow };

std::string ShapeKindName(ShapeKind kind);

// One row of a shape: points (x, y) for x in [x_lo, x_hi].
struct RowSpan {
  int y;
  int x_lo;
  int x_hi;

  int width() const { return x_hi - x_lo + 1; }
  friend bool operator==(const RowSpan&, const RowSpan&) = default;
};

class Shape {
 public:
  Shape() = default;

  static Shape Empty();
  // a columns, b rows. a, b >= 1.
  static Shape Rect(int a, int b, Point anchor = {});
  // Rect(a, b) minus its upper-left (a - c) x 2 block. b >= 3, 1 <= c < a.
  static Shape S1(int a, int b, int c, Point anchor = {});
  // Rect(a, b - 2) minus its upper-left 1 x 2 block, with a 2 x 2 block
  // right-aligned on top. a >= 3, b >= 5.
  static Shape S2(int a, int b, Point anchor = {});

  ShapeKind kind() const { return kind_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  // Bottom-left corner of the bounding box.
  Point anchor() const { return anchor_; }
  const Shape* inner() const { return inner_.get(); }

  // Rows bottom to top. Empty for kEmpty.
  const std::vector<RowSpan>& rows() const { return rows_; }
  std::int64_t size() const;
  bool contains(Point p) const;
  std::vector<Point> points() const;
  int width() const;   // bounding-box columns
  int height() const;  // bounding-box rows
  std::string describe() const;

  friend Shape add_row(const Shape& s);
  friend bool operator==(const Shape& l, const Shape& r) {
    return l.kind_ == r.kind_ && l.a_ == r.a_ && l.b_ == r.b_ &&
           l.c_ == r.c_ && l.anchor_ == r.anchor_ && l.rows_ == r.rows_;
  }

 private:
  ShapeKind kind_ = ShapeKind::kEmpty;
  int a_ = 0;
  int b_ = 0;
  int c_ = 0;
  Point anchor_{};
  std::shared_ptr<const Shape> inner_;
  std::vector<RowSpan> rows_;
};

// Adds a row below `s` with one point fewer than the bottom row of `s` (its
// leftmost point removed). The result is anchored one row lower. Throws
// kDegenerateShape if the bottom row has fewer than two points.
Shape add_row(const Shape& s);

// Recognizes Empty, Rect, S1 and S2 up to translation. Degenerate parameter
// choices that coincide as point sets are reported in that order of
// preference. Returns nullopt for anything outside the family.
std::optional<Shape> classify_shape(std::span<const Point> vertices);

struct SMaximalityReport {
  bool residual_in_family = false;
  bool rows_are_prefixes = false;
  bool columns_are_prefixes = false;
  bool budget_or_terminal = false;
  std::optional<Shape> residual;
  std::string violation;

  bool ok() const {
    return residual_in_family && rows_are_prefixes && columns_are_prefixes &&
           budget_or_terminal;
  }
};

// Checks the four S-maximality conditions for `walk` inside `area` (an
// AddRow of a family member) under walk budget `budget`. Throws kInvalidWalk
// if the walk is not a unit-step walk inside `area`.
SMaximalityReport is_s_maximal(const Walk& walk, const Shape& area,
                               std::int64_t budget);

}  // namespace gridtours

#endif  // GRIDTOURS_GRID_HPP_
