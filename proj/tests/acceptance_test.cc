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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gridtours/covering.hpp"
#include "gridtours/error.hpp"
#include "gridtours/grid.hpp"
#include "gridtours/io.hpp"
#include "gridtours/solver.hpp"
#include "gridtours/verify.hpp"
#include "nlohmann/json.hpp"

namespace gridtours {
namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

Outcome Fail(std::string note) { return {false, std::move(note)}; }

Covering Solve(int cols, int rows, std::int64_t len, Objective o) {
  return solve(SolveRequest{{cols, rows}, len, o});
}

std::int64_t Even(std::int64_t v) { return v + (v & 1); }

Outcome TenByTenReference() {
  Covering c = Solve(10, 10, 36, Objective::kMinLength);
  if (c.k != 4 || c.total_length != 124 || c.repeats_total != 24) {
    return Fail("k=" + std::to_string(c.k) +
                " total=" + std::to_string(c.total_length) +
                " repeats=" + std::to_string(c.repeats_total));
  }
  VerificationReport r = verify(c);
  if (!r.valid || r.covered_count != 100 || r.max_tour_length > 36) {
    return Fail("verification failed");
  }
  return {true, "k=4 total=124 repeats=24"};
}

Outcome KminAgreement() {
  int oracle_cases = 0;
  for (int c = 1; c <= 12; ++c) {
    for (int r = 1; c * r <= 12; ++r) {
      GridSpec g{c, r};
      for (std::int64_t len = 2LL * (c + r - 2); len <= 16; len += 2) {
        int a = kmin(g, len);
        int b = kmin_finder_reference(g, len);
        int o = brute_force_min_tours(g, len);
        if (a != b || a != o) {
          return Fail(std::to_string(c) + "x" + std::to_string(r) +
                      " L=" + std::to_string(len));
        }
        ++oracle_cases;
      }
    }
  }
  int sweep = 0;
  for (int c = 1; c <= 15; ++c) {
    for (int r = c; r <= 15; ++r) {
      GridSpec g{c, r};
      std::int64_t lo = 2LL * (c + r - 2);
      for (std::int64_t len = lo; len <= lo + 20; len += 2) {
        if (kmin(g, len) != kmin_finder_reference(g, len)) {
          return Fail(std::to_string(c) + "x" + std::to_string(r) +
                      " L=" + std::to_string(len));
        }
        ++sweep;
      }
    }
  }
  return {true, std::to_string(oracle_cases) + " oracle cases, " +
                    std::to_string(sweep) + " sweep cases"};
}

Outcome OracleEquivalence() {
  int cases = 0;
  std::set<std::pair<int, int>> shapes;
  for (int c = 1; c <= 12; ++c) {
    for (int r = 1; c * r <= 12; ++r) {
      GridSpec g{c, r};
      for (std::int64_t len = 2LL * (c + r - 2); len <= 16; len += 2) {
        std::int64_t o = brute_force_min_length(g, len).total_length;
        std::int64_t s = Solve(c, r, len, Objective::kMinLength).total_length;
        if (o != s) {
          return Fail(std::to_string(c) + "x" + std::to_string(r) +
                      " L=" + std::to_string(len) + " oracle " +
                      std::to_string(o) + " solver " + std::to_string(s));
        }
        shapes.insert({c, r});
        ++cases;
      }
    }
  }
  for (auto need : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {3, 3}, {3, 4}, {2, 5}}) {
    if (!shapes.count(need)) return Fail("missing a required grid");
  }
  if (cases < 30) return Fail("only " + std::to_string(cases) + " cases");
  return {true, std::to_string(cases) + " instances"};
}

Outcome RepeatBounds() {
  int checked = 0;
  for (int c = 1; c <= 25; ++c) {
    for (int r = c; r <= 25; ++r) {
      const bool even = (c * r) % 2 == 0;
      for (std::int64_t len = 2LL * (c + r - 2); len <= c * r + 2; len += 2) {
        for (Objective o : {Objective::kMinLength, Objective::kMinTours}) {
          Covering cov = Solve(c, r, len, o);
          if (cov.case_tag != CaseTag::kPA && cov.case_tag != CaseTag::kPAO) {
            continue;
          }
          const std::int64_t k = cov.k;
          const std::int64_t mid = 2 * k * k - 2 * k;
          const std::int64_t rep = verify(cov).repeats_total;
          if (rep < mid - 1 || rep > mid + 1 || (even && rep != mid)) {
            return Fail(std::to_string(c) + "x" + std::to_string(r) +
                        " L=" + std::to_string(len) +
                        " repeats=" + std::to_string(rep));
          }
          ++checked;
        }
      }
    }
  }
  return {true, std::to_string(checked) + " PA/PAO coverings"};
}

std::vector<Shape> Family(Point anchor) {
  std::vector<Shape> out;
  for (int a = 1; a <= 10; ++a) {
    for (int b = 1; b <= 10; ++b) {
      out.push_back(Shape::Rect(a, b, anchor));
      if (b >= 3) {
        for (int c = 2; c < a; ++c) out.push_back(Shape::S1(a, b, c, anchor));
      }
      if (a >= 3 && b >= 5) out.push_back(Shape::S2(a, b, anchor));
    }
  }
  return out;
}

int FullRows(const Walk& w, const Shape& area) {
  std::set<Point> seen(w.points.begin(), w.points.end());
  int full = 0;
  for (const RowSpan& row : area.rows()) {
    bool all = true;
    for (int x = row.x_lo; x <= row.x_hi && all; ++x) {
      all = seen.count({x, row.y}) > 0;
    }
    full += all;
  }
  return full;
}

Outcome SMaximality() {
  int walks = 0;
  int exempt = 0;
  for (const Shape& u : Family({0, 1})) {
    if (u.a() < 2) continue;
    Shape area = add_row(u);
    std::int64_t lo =
        Even(2LL * (area.height() - 2) + 2LL * (area.width() - 1));
    for (std::int64_t l = lo; l <= Even(area.size()); l += 2) {
      Walk w = u_covering(u, l);
      SMaximalityReport rep = is_s_maximal(w, area, l);
      if (w.length() > l || !rep.ok()) {
        return Fail(u.describe() + " l=" + std::to_string(l) + ": " +
                    rep.violation);
      }
      const int full = FullRows(w, area);
      const int rows = static_cast<int>(area.rows().size());
      if (full == rows && rows % 2 == 1) {
        ++exempt;
      } else if (full % 2 != 0) {
        return Fail(u.describe() + " l=" + std::to_string(l) +
                    ": odd number of full rows");
      }
      ++walks;
    }
  }
  return {true, std::to_string(walks) + " walks, " + std::to_string(exempt) +
                    " odd-row areas covered whole"};
}

Outcome OtuParity() {
  int shapes = 0;
  for (const Shape& u : Family({0, 1})) {
    if (u.a() < 2) continue;
    Shape area = add_row(u);
    if (area.width() > 10 || area.height() > 10) continue;
    Walk w = otu_covering(u, Even(area.size()));
    std::set<Point> seen(w.points.begin(), w.points.end());
    std::int64_t repeats =
        static_cast<std::int64_t>(w.points.size() - seen.size());
    bool odd = area.width() % 2 == 1 && area.height() % 2 == 1;
    if (static_cast<std::int64_t>(seen.size()) != area.size() ||
        repeats != (odd ? 1 : 0)) {
      return Fail(u.describe() + " repeats=" + std::to_string(repeats));
    }
    ++shapes;
  }
  return {true, std::to_string(shapes) + " shapes"};
}

Outcome LinearTime() {
  std::string worst;
  for (const char* objective : {"min-length", "min-tours"}) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run_cli(
        {"bench", "--sizes", "100,200,400,800,1600", "--max-length-policy",
         "perimeter-multiple", "2", "--objective", objective},
        out, err);
    if (code != cli::kExitOk) {
      return Fail("bench exited " + std::to_string(code));
    }
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
      std::vector<std::string> cells;
      std::istringstream fields(line);
      for (std::string cell; std::getline(fields, cell, ',');) {
        cells.push_back(cell);
      }
      if (cells.size() < 8) return Fail("short CSV row");
      ++rows;
      if (cells[7].empty()) continue;
      double ratio = std::stod(cells[7]);
      worst += " " + cells[7];
      if (ratio > 5.0) {
        return Fail(std::string(objective) + " size " + cells[0] +
                    " ratio " + cells[7]);
      }
    }
    if (rows != 5) return Fail("expected 5 rows");
  }
  return {true, "ratios" + worst};
}

Outcome GreedyGap() {
  Covering g = greedy_covering({10, 10}, 36);
  Covering s = Solve(10, 10, 36, Objective::kMinLength);
  if (!verify(g).valid) return Fail("greedy covering invalid");
  if (g.total_length < 128 || s.total_length != 124) {
    return Fail("greedy " + std::to_string(g.total_length));
  }
  return {true, "greedy " + std::to_string(g.total_length) + " vs 124"};
}

using Mutation = std::function<void(nlohmann::json&)>;

Outcome Adversarial() {
  const nlohmann::json base = nlohmann::json::parse(
      emit_json(Solve(10, 10, 36, Objective::kMinLength)));
  auto& tours = base["tours"];
  const std::size_t last = tours[0].size() - 1;
  std::vector<std::pair<std::string, Mutation>> cases{
      {"open_walk", [&](nlohmann::json& d) { d["tours"][0].erase(last); }},
      {"open_walk", [](nlohmann::json& d) { d["tours"][1].erase(0); }},
      {"odd_length",
       [](nlohmann::json& d) {
         d["tours"][0] = {{0, 0}, {1, 0}, {1, 1}, {0, 0}};
       }},
      {"out_of_grid",
       [](nlohmann::json& d) {
         auto& t = d["tours"][0];
         t.insert(t.begin() + 1, {{-1, 0}, {0, 0}});
       }},
      {"out_of_grid",
       [](nlohmann::json& d) {
         auto& t = d["tours"][1];
         t.insert(t.begin() + 1, {{0, 10}, {0, 0}});
       }},
      {"uncovered", [](nlohmann::json& d) { d["tours"].erase(3); }},
      {"metadata_mismatch", [](nlohmann::json& d) { d["repeats_total"] = 23; }},
      {"metadata_mismatch", [](nlohmann::json& d) { d["total_length"] = 126; }},
      {"metadata_mismatch", [](nlohmann::json& d) { d["k"] = 5; }},
      {"budget_exceeded", [](nlohmann::json& d) { d["L"] = 30; }},
  };
  int rejected = 0;
  for (const auto& [code, mutate] : cases) {
    nlohmann::json doc = base;
    mutate(doc);
    VerificationReport r = verify(parse_json(doc.dump()));
    bool hit = false;
    for (const Violation& v : r.violations) hit = hit || v.code == code;
    if (r.valid || !hit) {
      return Fail("case " + std::to_string(rejected) + " not rejected with " +
                  code);
    }
    ++rejected;
  }
  return {true, std::to_string(rejected) + " documents rejected"};
}

}  // namespace
}  // namespace gridtours

int main() {
  using gridtours::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> all{
      {"10x10 L=36 reference covering", gridtours::TenByTenReference},
      {"kmin triple agreement", gridtours::KminAgreement},
      {"min-length oracle equivalence", gridtours::OracleEquivalence},
      {"repeat bounds over n_c <= n_r <= 25", gridtours::RepeatBounds},
      {"S-maximality suite", gridtours::SMaximality},
      {"OTU parity law", gridtours::OtuParity},
      {"linear-time bench", gridtours::LinearTime},
      {"greedy gap", gridtours::GreedyGap},
      {"verifier adversarial suite", gridtours::Adversarial},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].second();
    } catch (const std::exception& e) {
      o = gridtours::Fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    failed += !o.pass;
    std::printf("%s criterion %zu: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL",
                i + 1, all[i].first, o.note.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
