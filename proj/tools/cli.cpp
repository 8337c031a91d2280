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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "CLI11.hpp"
#include "gridtours/error.hpp"
#include "gridtours/io.hpp"
#include "gridtours/solver.hpp"
#include "gridtours/verify.hpp"

namespace gridtours::cli {

namespace {

struct InstanceFlags {
  int cols = 0;
  int rows = 0;
  std::int64_t max_length = 0;
  std::string objective = "min-length";
  std::string format = "json";
  std::string out_path;
};

void AddInstanceFlags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--cols", f.cols, "grid columns")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rows", f.rows, "grid rows")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-length", f.max_length, "tour length limit L")
      ->required();
  cmd->add_option("--objective", f.objective)
      ->check(CLI::IsMember({"min-tours", "min-length"}));
  cmd->add_option("--format", f.format)
      ->check(CLI::IsMember({"json", "svg", "ascii"}));
  cmd->add_option("--out", f.out_path, "write output to a file");
}

SolveRequest RequestFrom(const InstanceFlags& f) {
  return {{f.cols, f.rows}, f.max_length, *ParseObjective(f.objective)};
}

std::string Render(const Covering& c, const std::string& format) {
  if (format == "svg") return render_svg(c);
  if (format == "ascii") return render_ascii(c);
  return emit_json(c);
}

void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  }
  file << text;
}

void PrintReport(const VerificationReport& r, std::ostream& out) {
  out << "valid: " << (r.valid ? "yes" : "no") << '\n'
      << "covered: " << r.covered_count << '\n'
      << "total_length: " << r.total_length << '\n'
      << "repeats_total: " << r.repeats_total << '\n'
      << "longest_tour: " << r.max_tour_length << '\n';
  for (const Violation& v : r.violations) {
    out << "violation " << v.code << ": " << v.detail << '\n';
  }
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kOddL:
    case ErrorCode::kInfeasible:
      return kExitInfeasible;
    case ErrorCode::kResourceGuard:
      return kExitResourceGuard;
    case ErrorCode::kInvalidInput:
    case ErrorCode::kLevelOutOfRange:
      return kExitUsage;
    default:
      return kExitVerifyFailed;
  }
}

int CmdSolve(const InstanceFlags& f, bool check, std::ostream& out,
             std::ostream& err) {
  const Covering c = solve(RequestFrom(f));
  if (check) {
    const VerificationReport r = verify(c);
    if (!r.valid) {
      PrintReport(r, err);
      return kExitVerifyFailed;
    }
  }
  Emit(Render(c, f.format), f.out_path, out);
  return kExitOk;
}

int CmdOracle(const InstanceFlags& f, std::ostream& out, std::ostream& err) {
  const SolveRequest req = RequestFrom(f);
  const OracleLimits limits = OracleLimitsFromEnv();
  const Covering best =
      req.objective == Objective::kMinTours
          ? brute_force_min_tours_covering(req.grid, req.max_tour_length,
                                           limits)
          : brute_force_min_length(req.grid, req.max_tour_length, limits);
  const Covering fast = solve(req);
  const bool match = req.objective == Objective::kMinTours
                         ? best.k == fast.k
                         : best.total_length == fast.total_length;
  Emit(Render(best, f.format), f.out_path, out);
  err << "oracle total=" << best.total_length << " k=" << best.k
      << "; solver total=" << fast.total_length << " k=" << fast.k << ": "
      << (match ? "match" : "MISMATCH") << '\n';
  return match ? kExitOk : kExitVerifyFailed;
}

int CmdVerify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << path << '\n';
      return kExitUsage;
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  const Covering c = parse_json(text);
  const VerificationReport r = verify(c);
  PrintReport(r, out);
  return r.valid ? kExitOk : kExitVerifyFailed;
}

// Large freed blocks stay in the heap so repeated solves do not pay for
// fresh page faults.
void RetainFreedMemory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, -1);
#endif
}

int CmdBench(const BenchOptions& options, const std::string& path,
             std::ostream& out) {
  RetainFreedMemory();
  Emit(bench_csv(run_bench(options)), path, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Covering rectangular grids with length-bounded tours",
               "gridtours"};
  app.require_subcommand(1);

  InstanceFlags solve_flags;
  bool check = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance");
  AddInstanceFlags(solve_cmd, solve_flags);
  solve_cmd->add_flag("--verify", check, "verify before printing");

  InstanceFlags oracle_flags;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exact search on tiny instances");
  AddInstanceFlags(oracle_cmd, oracle_flags);

  std::string input;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a document");
  verify_cmd->add_option("--input", input, "JSON document, - for stdin")
      ->required();

  BenchOptions bench;
  std::vector<std::string> policy{"perimeter-multiple", "2"};
  std::string bench_objective = "min-length";
  std::string bench_out;
  CLI::App* bench_cmd = app.add_subcommand("bench", "timing table as CSV");
  bench_cmd->add_option("--sizes", bench.sizes, "square grid sides")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-length-policy", policy,
                        "perimeter-multiple K")
      ->expected(2);
  bench_cmd->add_option("--objective", bench_objective)
      ->check(CLI::IsMember({"min-tours", "min-length"}));
  bench_cmd->add_option("--rounds", bench.repetitions)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve_flags, check, out, err);
    if (*oracle_cmd) return CmdOracle(oracle_flags, out, err);
    if (*verify_cmd) return CmdVerify(input, out, err);
    if (*bench_cmd) {
      if (policy.size() != 2 || policy[0] != "perimeter-multiple") {
        err << "error: --max-length-policy expects perimeter-multiple K\n";
        return kExitUsage;
      }
      try {
        bench.perimeter_multiple = std::stod(policy[1]);
      } catch (const std::exception&) {
        err << "error: bad multiple " << policy[1] << '\n';
        return kExitUsage;
      }
      if (bench.perimeter_multiple <= 0) {
        err << "error: multiple must be positive\n";
        return kExitUsage;
      }
      bench.objective = *ParseObjective(bench_objective);
      return CmdBench(bench, bench_out, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e);
  }
  return kExitUsage;
}

}  // namespace gridtours::cli
