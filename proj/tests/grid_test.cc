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

#include <algorithm>
#include <set>
#include <vector>

#include "gridtours/error.hpp"
#include "gridtours/grid.hpp"
#include "gtest/gtest.h"

namespace gridtours {
namespace {

std::int64_t CountAtOrAbove(const GridSpec& g, int level) {
  std::int64_t n = 0;
  for (int y = 0; y < g.rows; ++y) {
    for (int x = 0; x < g.cols; ++x) n += x + y >= level;
  }
  return n;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(LevelTest, Examples) {
  EXPECT_EQ(level_of({0, 0}), 0);
  EXPECT_EQ(level_of({2, 2}), 4);
  EXPECT_EQ(level_size({10, 10}, 7), 8);
}

TEST(LevelTest, LevelsPartitionTheGrid) {
  for (int c = 1; c <= 9; ++c) {
    for (int r = 1; r <= 9; ++r) {
      const GridSpec g{c, r};
      std::int64_t sum = 0;
      for (int i = 0; i <= g.max_level(); ++i) sum += level_size(g, i);
      EXPECT_EQ(sum, g.vertex_count());
    }
  }
}

TEST(RegionSizeTest, Examples) {
  EXPECT_EQ(region_size({10, 10}, 0), 100);
  EXPECT_EQ(region_size({10, 10}, 7), 72);
  EXPECT_EQ(region_size({3, 3}, 3), 3);
  EXPECT_EQ(CodeOf([] { region_size({3, 3}, 5); }),
            ErrorCode::kLevelOutOfRange);
  EXPECT_EQ(CodeOf([] { region_size({3, 3}, -1); }),
            ErrorCode::kLevelOutOfRange);
}

TEST(RegionSizeTest, MatchesEnumerationAndClosedForm) {
  for (int c = 1; c <= 12; ++c) {
    for (int r = c; r <= 14; ++r) {
      const GridSpec g{c, r};
      for (int i = 0; i <= g.max_level(); ++i) {
        ASSERT_EQ(region_size(g, i), CountAtOrAbove(g, i));
      }
      for (int k = 1; 2 * k - 1 <= std::min(c, g.max_level()); ++k) {
        EXPECT_EQ(region_size(g, 2 * k - 1),
                  g.vertex_count() - k * (2 * k - 1));
      }
      for (int k = 1; 2 * k - 2 <= c - 1; ++k) {
        EXPECT_EQ(region_size(g, 2 * k - 2),
                  g.vertex_count() - (k - 1) * (2 * k - 1));
      }
    }
  }
}

TEST(BaselineTest, LeftToRightAndClipped) {
  const auto b = baseline({4, 6}, 3);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b.front(), (Point{0, 3}));
  EXPECT_EQ(b.back(), (Point{3, 0}));
  const auto clipped = baseline({3, 4}, 4);
  ASSERT_EQ(clipped.size(), 2u);
  EXPECT_EQ(clipped.front(), (Point{1, 3}));
  for (Point p : clipped) EXPECT_EQ(level_of(p), 4);
  EXPECT_TRUE(std::is_sorted(clipped.begin(), clipped.end(),
                             [](Point a, Point c) { return a.x < c.x; }));
}

TEST(ShapeTest, SizesAndMembership) {
  const Shape r = Shape::Rect(3, 2);
  EXPECT_EQ(r.size(), 6);
  EXPECT_TRUE(r.contains({2, 1}));
  EXPECT_FALSE(r.contains({3, 1}));
  const Shape s1 = Shape::S1(4, 3, 2);
  EXPECT_EQ(s1.size(), 12 - 4);
  EXPECT_FALSE(s1.contains({0, 2}));
  EXPECT_TRUE(s1.contains({2, 2}));
  const Shape s2 = Shape::S2(4, 6);
  EXPECT_EQ(s2.size(), 4 * 4 - 2 + 4);
  EXPECT_FALSE(s2.contains({0, 3}));
  EXPECT_TRUE(s2.contains({1, 3}));
  EXPECT_FALSE(s2.contains({1, 4}));
  EXPECT_TRUE(s2.contains({2, 5}));
}

TEST(ShapeTest, RejectsAliasedParameters) {
  EXPECT_EQ(CodeOf([] { Shape::S1(4, 2, 2); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(CodeOf([] { Shape::S1(4, 3, 4); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(CodeOf([] { Shape::S2(2, 6); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(CodeOf([] { Shape::S2(4, 4); }), ErrorCode::kInvalidInput);
}

TEST(AddRowTest, Examples) {
  const Shape a = add_row(Shape::Rect(2, 2, {0, 1}));
  EXPECT_EQ(a.size(), 5);
  ASSERT_EQ(a.rows().front(), (RowSpan{0, 1, 1}));
  EXPECT_EQ(a.anchor(), (Point{0, 0}));
  EXPECT_EQ(add_row(Shape::Rect(5, 3)).size(), 19);
  EXPECT_EQ(CodeOf([] { add_row(Shape::Rect(1, 4)); }),
            ErrorCode::kDegenerateShape);
}

TEST(AddRowTest, PreservesColumns) {
  for (int a = 2; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      const Shape s = Shape::Rect(a, b, {0, 1});
      const Shape t = add_row(s);
      for (Point p : s.points()) EXPECT_TRUE(t.contains(p));
      EXPECT_EQ(t.size(), s.size() + a - 1);
    }
  }
}

std::vector<Shape> AllShapes(int max) {
  std::vector<Shape> out;
  for (int a = 1; a <= max; ++a) {
    for (int b = 1; b <= max; ++b) {
      out.push_back(Shape::Rect(a, b, {2, 3}));
      if (b >= 3) {
        for (int c = 1; c < a; ++c) out.push_back(Shape::S1(a, b, c, {2, 3}));
      }
      if (a >= 3 && b >= 5) out.push_back(Shape::S2(a, b, {2, 3}));
    }
  }
  return out;
}

TEST(ClassifyTest, Examples) {
  std::vector<Point> block;
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 3; ++x) block.push_back({x, y});
  }
  EXPECT_EQ(classify_shape(block), Shape::Rect(3, 2));
  std::vector<Point> stair;
  for (Point p : Shape::Rect(4, 3).points()) {
    if (!(p.x < 2 && p.y >= 1)) stair.push_back(p);
  }
  const auto s = classify_shape(stair);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind(), ShapeKind::kS1);
  EXPECT_EQ(s->a(), 4);
  EXPECT_EQ(s->c(), 2);
  const std::vector<Point> tromino{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_FALSE(classify_shape(tromino).has_value());
  EXPECT_EQ(classify_shape(std::vector<Point>{})->kind(), ShapeKind::kEmpty);
}

TEST(ClassifyTest, RoundTripsEveryShape) {
  for (const Shape& s : AllShapes(12)) {
    const auto pts = s.points();
    const auto back = classify_shape(pts);
    ASSERT_TRUE(back.has_value()) << s.describe();
    EXPECT_EQ(*back, s) << s.describe() << " vs " << back->describe();
  }
}

TEST(SMaximalTest, StepOneWalkCoversSmallArea) {
  const Shape a = add_row(Shape::Rect(2, 2, {0, 1}));
  const Walk w{{{0, 1}, {0, 2}, {1, 2}, {1, 1}, {1, 0}}};
  const auto r = is_s_maximal(w, a, 8);
  EXPECT_TRUE(r.ok()) << r.violation;
  ASSERT_TRUE(r.residual.has_value());
  EXPECT_EQ(r.residual->kind(), ShapeKind::kEmpty);
}

TEST(SMaximalTest, RejectsNonPrefixRow) {
  const Shape a = add_row(Shape::Rect(3, 2, {0, 1}));
  const Walk w{{{2, 1}}};
  const auto r = is_s_maximal(w, a, 0);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.rows_are_prefixes);
}

TEST(SMaximalTest, RejectsSlackWithTwoRowResidual) {
  // Leaves Rect(2, 3) with budget to spare.
  const Shape a = add_row(Shape::Rect(4, 2, {0, 1}));
  const Walk w{{{0, 1}, {0, 2}, {1, 2}, {1, 1}, {1, 0}}};
  const auto r = is_s_maximal(w, a, 12);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.budget_or_terminal);
}

TEST(SMaximalTest, WalkOutsideAreaThrows) {
  const Shape a = add_row(Shape::Rect(2, 2, {0, 1}));
  const Walk w{{{0, 1}, {0, 2}, {0, 3}}};
  EXPECT_EQ(CodeOf([&] { is_s_maximal(w, a, 8); }), ErrorCode::kInvalidWalk);
}

}  // namespace
}  // namespace gridtours
