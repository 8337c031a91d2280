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

#include "gridtours/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gridtours/error.hpp"
#include "json.hpp"

namespace gridtours {

namespace {

using Json = nlohmann::ordered_json;

Json PointJson(Point p) { return Json::array({p.x, p.y}); }

Point PointFrom(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw Error(ErrorCode::kInvalidInput, "point must be [x, y]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

const Json& Field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::kInvalidInput, std::string("missing field ") + key);
  }
  return *it;
}

std::int64_t IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kInvalidInput, std::string(key) + " not integer");
  }
  return v.get<std::int64_t>();
}

std::string StrField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_string()) {
    throw Error(ErrorCode::kInvalidInput, std::string(key) + " not a string");
  }
  return v.get<std::string>();
}

}  // namespace

std::string emit_json(const Covering& c, int indent) {
  Json doc;
  doc["grid"] = {{"cols", c.grid.cols}, {"rows", c.grid.rows}};
  doc["L"] = c.max_tour_length;
  doc["objective"] = ObjectiveName(c.objective);
  doc["k"] = c.k;
  doc["total_length"] = c.total_length;
  doc["repeats_total"] = c.repeats_total;
  doc["case_tag"] = CaseTagName(c.case_tag);
  Json repeats = Json::array();
  for (const VertexCount& v : c.repeats_by_vertex) {
    repeats.push_back(Json::array({v.vertex.x, v.vertex.y, v.count}));
  }
  doc["repeats_by_vertex"] = std::move(repeats);
  Json tours = Json::array();
  for (const Tour& t : c.tours) {
    Json pts = Json::array();
    for (Point p : t.points) pts.push_back(PointJson(p));
    tours.push_back(std::move(pts));
  }
  doc["tours"] = std::move(tours);
  return doc.dump(indent) + "\n";
}

Covering parse_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidInput, "document must be an object");
  }
  Covering c;
  const Json& grid = Field(doc, "grid");
  c.grid.cols = static_cast<int>(IntField(grid, "cols"));
  c.grid.rows = static_cast<int>(IntField(grid, "rows"));
  ValidateGrid(c.grid);
  c.max_tour_length = IntField(doc, "L");
  const auto objective = ParseObjective(StrField(doc, "objective"));
  if (!objective) throw Error(ErrorCode::kInvalidInput, "unknown objective");
  c.objective = *objective;
  c.k = static_cast<int>(IntField(doc, "k"));
  c.total_length = IntField(doc, "total_length");
  c.repeats_total = IntField(doc, "repeats_total");
  const auto tag = ParseCaseTag(StrField(doc, "case_tag"));
  if (!tag) throw Error(ErrorCode::kInvalidInput, "unknown case_tag");
  c.case_tag = *tag;
  if (auto it = doc.find("repeats_by_vertex"); it != doc.end()) {
    if (!it->is_array()) {
      throw Error(ErrorCode::kInvalidInput, "repeats_by_vertex not a list");
    }
    for (const Json& e : *it) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) {
        throw Error(ErrorCode::kInvalidInput, "bad repeats_by_vertex entry");
      }
      c.repeats_by_vertex.push_back(
          {PointFrom(Json::array({e[0], e[1]})), e[2].get<std::int64_t>()});
    }
  }
  const Json& tours = Field(doc, "tours");
  if (!tours.is_array()) throw Error(ErrorCode::kInvalidInput, "tours");
  for (const Json& t : tours) {
    if (!t.is_array()) {
      throw Error(ErrorCode::kInvalidInput, "tour must be a list of points");
    }
    Tour tour;
    tour.points.reserve(t.size());
    for (const Json& p : t) tour.points.push_back(PointFrom(p));
    c.tours.push_back(std::move(tour));
  }
  return c;
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22",
                                    "#17becf"};
constexpr int kCell = 24;
constexpr std::int64_t kMinSampleNs = 2'000'000;
constexpr std::int64_t kMaxBatch = 1000;
constexpr int kMargin = 16;

}  // namespace

std::string render_svg(const Covering& c) {
  const GridSpec& g = c.grid;
  const int width = 2 * kMargin + (g.cols - 1) * kCell;
  const int height = 2 * kMargin + (g.rows - 1) * kCell;
  auto sx = [&](int x) { return kMargin + x * kCell; };
  auto sy = [&](int y) { return kMargin + (g.rows - 1 - y) * kCell; };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n"
      << "<title>" << g.cols << "x" << g.rows << " L=" << c.max_tour_length
      << " k=" << c.k << " total=" << c.total_length << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int x = 0; x < g.cols; ++x) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\""
        << sx(x) << "\" y2=\"" << sy(g.rows - 1) << "\"/>\n";
  }
  for (int y = 0; y < g.rows; ++y) {
    out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(y) << "\" x2=\""
        << sx(g.cols - 1) << "\" y2=\"" << sy(y) << "\"/>\n";
  }
  out << "</g>\n";
  for (std::size_t i = 0; i < c.tours.size(); ++i) {
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[i % 10]
        << "\" stroke-width=\"3\" stroke-linejoin=\"round\" "
           "stroke-opacity=\"0.8\" points=\"";
    bool first = true;
    for (Point p : c.tours[i].points) {
      if (!first) out << ' ';
      out << sx(p.x) << ',' << sy(p.y);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "<g fill=\"#444444\">\n";
  for (int y = 0; y < g.rows; ++y) {
    for (int x = 0; x < g.cols; ++x) {
      out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
          << "\" r=\"2\"/>\n";
    }
  }
  out << "</g>\n"
      << "<rect x=\"" << sx(0) - 6 << "\" y=\"" << sy(0) - 6
      << "\" width=\"12\" height=\"12\" fill=\"black\"/>\n"
      << "<text x=\"" << sx(0) + 8 << "\" y=\"" << sy(0) - 8
      << "\" font-family=\"monospace\" font-size=\"12\">B</text>\n"
      << "</svg>\n";
  return out.str();
}

std::string render_ascii(const Covering& c) {
  const GridSpec& g = c.grid;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::string vertex(n, '.');
  std::string right(n, ' ');
  std::string up(n, ' ');
  auto id = [](std::size_t i) {
    constexpr const char* kIds = "0123456789abcdefghijklmnopqrstuvwxyz";
    return i < 36 ? kIds[i] : '*';
  };
  for (std::size_t i = 0; i < c.tours.size(); ++i) {
    const auto& pts = c.tours[i].points;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!g.contains(pts[j])) continue;
      char& v = vertex[g.index(pts[j])];
      if (v == '.') v = id(i);
      if (j == 0 || !g.contains(pts[j - 1])) continue;
      const Point a = pts[j - 1];
      const Point b = pts[j];
      if (a.y == b.y && std::abs(a.x - b.x) == 1) {
        char& e = right[g.index({std::min(a.x, b.x), a.y})];
        if (e == ' ') e = b.x > a.x ? '>' : '<';
      } else if (a.x == b.x && std::abs(a.y - b.y) == 1) {
        char& e = up[g.index({a.x, std::min(a.y, b.y)})];
        if (e == ' ') e = b.y > a.y ? '^' : 'v';
      }
    }
  }
  vertex[g.index(kBase)] = 'B';
  std::ostringstream out;
  for (int y = g.rows - 1; y >= 0; --y) {
    std::string line;
    for (int x = 0; x < g.cols; ++x) {
      line += vertex[g.index({x, y})];
      if (x + 1 < g.cols) line += right[g.index({x, y})];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (y == 0) break;
    line.clear();
    for (int x = 0; x < g.cols; ++x) {
      line += up[g.index({x, y - 1})];
      if (x + 1 < g.cols) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  for (std::size_t i = 0; i < c.tours.size(); ++i) {
    out << "tour " << id(i) << ": length " << c.tours[i].length() << '\n';
  }
  return out.str();
}

std::int64_t PerimeterMultipleLength(const GridSpec& g, double multiple) {
  const std::int64_t perimeter = 2LL * (g.cols + g.rows - 2);
  std::int64_t l = std::llround(multiple * static_cast<double>(perimeter));
  if (l % 2 != 0) ++l;
  return std::max(l, perimeter);
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto elapsed = [](Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                                start)
        .count();
  };
  std::vector<BenchRow> rows;
  std::vector<SolveRequest> requests;
  std::vector<int> batch;
  for (int size : options.sizes) {
    const GridSpec g{size, size};
    BenchRow row;
    row.size = size;
    row.vertices = g.vertex_count();
    row.objective = options.objective;
    row.max_tour_length =
        PerimeterMultipleLength(g, options.perimeter_multiple);
    row.wall_ns = std::numeric_limits<std::int64_t>::max();
    requests.push_back({g, row.max_tour_length, options.objective});
    const auto start = Clock::now();
    const Covering c = solve(requests.back());
    const std::int64_t warm = std::max<std::int64_t>(1, elapsed(start));
    row.k = c.k;
    for (const Tour& t : c.tours) {
      row.ops += static_cast<std::int64_t>(t.points.size());
    }
    batch.push_back(static_cast<int>(
        std::clamp<std::int64_t>(kMinSampleNs / warm, 1, kMaxBatch)));
    rows.push_back(row);
  }
  // Rounds interleave the sizes so a slow spell lands on neighbouring sizes
  // together; ratios pair samples from the same round.
  const int rounds = std::max(1, options.repetitions);
  std::vector<std::vector<std::int64_t>> samples(rows.size());
  for (int round = 0; round < rounds; ++round) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto start = Clock::now();
      for (int b = 0; b < batch[i]; ++b) solve(requests[i]);
      const std::int64_t ns =
          std::max<std::int64_t>(1, elapsed(start) / batch[i]);
      samples[i].push_back(ns);
      rows[i].wall_ns = std::min(rows[i].wall_ns, ns);
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      std::vector<double> paired;
      for (int round = 0; round < rounds; ++round) {
        paired.push_back(static_cast<double>(samples[i][round]) /
                         static_cast<double>(samples[i - 1][round]));
      }
      const auto mid = paired.begin() + paired.size() / 2;
      std::nth_element(paired.begin(), mid, paired.end());
      rows[i].ratio = *mid;
    }
    rows[i].timestamp_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            Clock::now().time_since_epoch())
            .count();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "size,vertices,objective,L,k,ops,wall_ns,ratio,timestamp\n";
  for (const BenchRow& r : rows) {
    out << r.size << ',' << r.vertices << ',' << ObjectiveName(r.objective)
        << ',' << r.max_tour_length << ',' << r.k << ',' << r.ops << ','
        << r.wall_ns << ',';
    if (r.ratio) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.ratio);
      out << buf;
    }
    out << ',' << r.timestamp_ns << '\n';
  }
  return out.str();
}

}  // namespace gridtours
