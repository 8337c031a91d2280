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
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "gridtours/error.hpp"
#include "gridtours/grid.hpp"
#include "gridtours/solver.hpp"
#include "gridtours/verify.hpp"
#include "gtest/gtest.h"

namespace gridtours {
namespace {

bool HasCode(const VerificationReport& r, const std::string& code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

Covering MinLength(int cols, int rows, std::int64_t len) {
  return solve(SolveRequest{{cols, rows}, len, Objective::kMinLength});
}

TEST(ValidateTourTest, Examples) {
  GridSpec g{3, 3};
  VerificationReport ok = validate_tour(Tour{{{0, 0}, {1, 0}, {0, 0}}}, g, 8);
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.total_length, 2);
  VerificationReport bad = validate_tour(Tour{{{0, 0}, {1, 1}}}, g, 8);
  EXPECT_FALSE(bad.valid);
  EXPECT_TRUE(HasCode(bad, "non_unit_step"));
  EXPECT_TRUE(HasCode(bad, "open_walk"));
  VerificationReport outside =
      validate_tour(Tour{{{0, 0}, {0, -1}, {0, 0}}}, g, 8);
  EXPECT_TRUE(HasCode(outside, "out_of_grid"));
  EXPECT_TRUE(HasCode(validate_tour(Tour{}, g, 8), "empty_tour"));
}

TEST(ValidateTourTest, BudgetExceeded) {
  GridSpec g{10, 10};
  Tour t;
  t.points.push_back(kBase);
  for (int i = 0; i < 19; ++i) {
    t.points.push_back({1, 0});
    t.points.push_back(kBase);
  }
  ASSERT_EQ(t.length(), 38);
  EXPECT_TRUE(HasCode(validate_tour(t, g, 36), "budget_exceeded"));
}

TEST(CoverageTest, Examples) {
  Covering c = MinLength(10, 10, 36);
  CoverageResult r = coverage_and_repeats(c.tours, c.grid);
  EXPECT_TRUE(r.is_covering);
  EXPECT_EQ(r.repeats_total, 24);
  EXPECT_EQ(c.total_length, 124);

  Covering ham = MinLength(2, 3, 6);
  EXPECT_EQ(coverage_and_repeats(ham.tours, ham.grid).repeats_total, 0);

  std::vector<Tour> two{Tour{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}},
                        Tour{{{0, 0}, {0, 1}, {0, 2}, {0, 1}, {0, 0}}}};
  CoverageResult s = coverage_and_repeats(two, {2, 3});
  EXPECT_FALSE(s.is_covering);
  EXPECT_EQ(s.covered_count, 5);
  ASSERT_FALSE(s.repeats_by_vertex.empty());
  EXPECT_EQ(s.repeats_by_vertex.front().vertex, kBase);
  EXPECT_EQ(s.repeats_by_vertex.front().count, 1);
}

TEST(VerifyTest, SolverOutputsVerify) {
  for (int c = 1; c <= 9; ++c) {
    for (int r = c; r <= 9; ++r) {
      std::int64_t lo = 2LL * (c + r - 2);
      for (std::int64_t len = lo; len <= lo + 10; len += 2) {
        Covering cov = MinLength(c, r, len);
        VerificationReport rep = verify(cov);
        ASSERT_TRUE(rep.valid)
            << c << "x" << r << " L=" << len << ": "
            << (rep.violations.empty() ? "" : rep.violations[0].detail);
        if (c * r > 1) {
          EXPECT_EQ(rep.total_length - rep.repeats_total, c * r);
        }
      }
    }
  }
}

TEST(VerifyTest, TamperingIsCaught) {
  Covering c = MinLength(10, 10, 36);
  Covering meta = c;
  meta.total_length += 2;
  EXPECT_TRUE(HasCode(verify(meta), "metadata_mismatch"));

  Covering dropped = c;
  dropped.tours.pop_back();
  FillCounts(dropped);
  EXPECT_TRUE(HasCode(verify(dropped), "uncovered"));

  Covering extra = c;
  extra.tours.push_back(Tour{{{0, 0}, {1, 0}, {0, 0}}});
  FillCounts(extra);
  VerificationReport r = verify(extra);
  EXPECT_FALSE(r.valid);
}

TEST(BoundsCheckTest, TenByTenCoveringPasses) {
  EXPECT_TRUE(check_theorem_bounds(MinLength(10, 10, 36)).valid);
}

TEST(BoundsCheckTest, TooManyRepeatsFlagged) {
  Covering c = MinLength(10, 10, 36);
  auto slack = std::min_element(
      c.tours.begin(), c.tours.end(),
      [](const Tour& a, const Tour& b) { return a.length() < b.length(); });
  ASSERT_LE(slack->length(), 34);
  slack->points.insert(slack->points.begin() + 1, {Point{1, 0}, kBase});
  FillCounts(c);
  ASSERT_EQ(c.repeats_total, 26);
  VerificationReport r = check_theorem_bounds(c);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(HasCode(r, "repeat_bounds"));
}

TEST(BoundsCheckTest, PaoAtLowerBound) {
  int seen = 0;
  for (int c = 3; c <= 15 && seen == 0; c += 2) {
    for (int r = c; r <= 15 && seen == 0; r += 2) {
      for (std::int64_t len = 2LL * (c + r - 2); len <= c * r; len += 2) {
        Covering cov = MinLength(c, r, len);
        if (cov.case_tag != CaseTag::kPAO || cov.k != 3) continue;
        EXPECT_EQ(cov.repeats_total, 11);
        EXPECT_TRUE(check_theorem_bounds(cov).valid);
        ++seen;
        break;
      }
    }
  }
  EXPECT_EQ(seen, 1);
}

TEST(OracleTest, Examples) {
  Covering a = brute_force_min_length({2, 2}, 8);
  EXPECT_EQ(a.total_length, 4);
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(a.repeats_total, 0);
  Covering b = brute_force_min_length({3, 3}, 8);
  EXPECT_EQ(b.total_length, 12);
  EXPECT_EQ(b.k, 2);
  EXPECT_EQ(b.repeats_total, 3);
  EXPECT_TRUE(verify(b).valid);
  Covering h = brute_force_min_length({2, 3}, 6);
  EXPECT_EQ(h.total_length, 6);
  EXPECT_EQ(h.k, 1);
  EXPECT_EQ(brute_force_min_tours({2, 2}, 8), 1);
  EXPECT_EQ(brute_force_min_tours({3, 3}, 8), 2);
  EXPECT_EQ(brute_force_min_tours({2, 3}, 6), 1);
}

TEST(OracleTest, AgreesWithSolver) {
  for (int c = 1; c <= 12; ++c) {
    for (int r = 1; c * r <= 12; ++r) {
      for (std::int64_t len = 2LL * (c + r - 2); len <= 16; len += 2) {
        GridSpec g{c, r};
        Covering o = brute_force_min_length(g, len);
        Covering s = MinLength(c, r, len);
        EXPECT_EQ(o.total_length, s.total_length)
            << c << "x" << r << " L=" << len;
        EXPECT_EQ(brute_force_min_tours(g, len), kmin(g, len));
      }
    }
  }
}

TEST(OracleTest, ResourceGuard) {
  try {
    brute_force_min_length({6, 6}, 20);
    FAIL() << "expected a guard error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceGuard);
  }
  OracleLimits wide{16, 32};
  EXPECT_NO_THROW(brute_force_min_tours({4, 4}, 12, wide));
}

TEST(GreedyTest, SolverBeatsGreedy) {
  Covering g = greedy_covering({10, 10}, 36);
  EXPECT_TRUE(verify(g).valid);
  EXPECT_GE(g.total_length, 128);
  EXPECT_EQ(MinLength(10, 10, 36).total_length, 124);
}

}  // namespace
}  // namespace gridtours
