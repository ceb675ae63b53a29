// Copyright 2026 The rcperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rc: roller coaster permutations, scores, and partition numbers.
//
// Exit codes: 0 success, 1 verification failure (or other runtime error),
// 2 usage or parse error, 3 guard violation.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcperm/errors.h"
#include "rcperm/partition.h"
#include "rcperm/permutation.h"
#include "rcperm/rc_search.h"
#include "rcperm/scoring.h"
#include "rcperm/verify.h"

namespace {

using nlohmann::json;
using namespace rcperm;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GlobalFlags {
  std::string format = "text";
  int threads = 0;
  std::string cache_dir;
  bool no_cache = false;
};

int ResolveThreads(const GlobalFlags& g) {
  if (g.threads > 0) return g.threads;
  if (const char* env = std::getenv("RC_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return omp_get_max_threads();
}

std::optional<std::filesystem::path> ResolveCacheDir(const GlobalFlags& g) {
  if (g.no_cache) return std::nullopt;
  if (!g.cache_dir.empty()) return g.cache_dir;
  if (const char* env = std::getenv("RC_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "rcperm";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "rcperm";
  }
  return std::nullopt;
}

std::optional<SearchMode> ResolveMode(const std::string& text) {
  if (text == "auto") return std::nullopt;
  return ParseSearchMode(text);
}

SearchMode ModeFor(std::optional<SearchMode> mode, int n) {
  return mode.value_or(n <= 9 ? SearchMode::kExhaustive : SearchMode::kFiltered);
}

// Progress goes to stderr so stdout stays machine readable.
std::function<void(std::int64_t, std::int64_t)> ProgressFor(int n) {
  if (n < 13) return nullptr;
  auto last_percent = std::make_shared<int>(-1);
  return [n, last_percent](std::int64_t done, std::int64_t total) {
    const int percent = static_cast<int>(100 * done / total);
    if (percent == *last_percent) return;
    *last_percent = percent;
    std::cerr << "\r[n=" << n << "] " << percent << "% (" << done << "/"
              << total << " shards)" << std::flush;
    if (done == total) std::cerr << "\n";
  };
}

std::string ScoreLine(const ScoreReport& r, const std::string& format) {
  if (format == "json") {
    return json{{"perm", r.perm.ToString()},
                {"total_switches", ToDecimal(r.total_switches)},
                {"own_switches", r.own_switches},
                {"method", std::string(ScoreMethodName(r.method))}}
        .dump();
  }
  if (format == "csv") {
    return "\"" + r.perm.ToString() + "\"," + ToDecimal(r.total_switches) +
           "," + std::to_string(r.own_switches) + "," +
           std::string(ScoreMethodName(r.method));
  }
  return "perm=" + r.perm.ToString() +
         " total_switches=" + ToDecimal(r.total_switches) +
         " own_switches=" + std::to_string(r.own_switches) +
         " method=" + std::string(ScoreMethodName(r.method));
}

int RunScore(const GlobalFlags& g, const std::string& perm_text,
             const std::string& method, int brute_guard) {
  const Permutation p = Parse(perm_text);
  std::vector<ScoreReport> reports;
  if (method == "fast" || method == "both") reports.push_back(TotalSwitchesFast(p));
  if (method == "brute" || method == "both") {
    reports.push_back(TotalSwitchesBrute(p, brute_guard));
  }
  if (g.format == "csv") std::cout << "perm,total_switches,own_switches,method\n";
  if (g.format == "json" && reports.size() > 1) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(json::parse(ScoreLine(r, "json")));
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& r : reports) std::cout << ScoreLine(r, g.format) << "\n";
  }
  if (reports.size() == 2) {
    const bool match = reports[0].total_switches == reports[1].total_switches;
    if (g.format == "text") std::cout << "match=" << (match ? "true" : "false") << "\n";
    if (!match) return kExitFailure;
  }
  return kExitOk;
}

std::string FormatRcSet(const RcSet& rc, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << RcSetToJson(rc) << "\n";
  } else if (format == "csv") {
    out << "perm\n";
    for (const Permutation& p : rc.perms) out << "\"" << p.ToString() << "\"\n";
  } else {
    out << "# n=" << rc.n << " t_max=" << ToDecimal(rc.t_max)
        << " count=" << rc.perms.size() << "\n";
    for (const Permutation& p : rc.perms) out << p.ToString() << "\n";
  }
  return out.str();
}

int RunEnumerate(const GlobalFlags& g, int n, const std::string& mode_text,
                 const std::string& out_path, bool allow_large) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.mode = ModeFor(ResolveMode(mode_text), n);
  cfg.shard_count = ResolveThreads(g);
  cfg.cache_dir = ResolveCacheDir(g);
  cfg.allow_large = allow_large;
  cfg.progress = ProgressFor(n);
  const RcSet rc = EnumerateRc(cfg);
  const std::string text = FormatRcSet(rc, g.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

int RunCandidates(const GlobalFlags& g, int n) {
  const std::int64_t count = CandidateCount(n);
  if (g.format == "json") {
    std::cout << json{{"n", n}, {"candidates", count}}.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "n,candidates\n" << n << "," << count << "\n";
  } else {
    std::cout << "n=" << n << " candidates=" << count << "\n";
  }
  return kExitOk;
}

void PrintCover(const PartitionCover& cover, const std::string& format) {
  if (format == "json") {
    std::cout << CoverToJson(cover) << "\n";
    return;
  }
  if (format == "csv") {
    for (const MonotonePiece& piece : cover.pieces) {
      std::string positions, values;
      for (int pos : piece.positions.positions()) {
        if (!positions.empty()) positions += ' ';
        positions += std::to_string(pos);
      }
      for (int v : Subsequence(cover.perm, piece.positions)) {
        if (!values.empty()) values += ' ';
        values += std::to_string(v);
      }
      std::cout << CoverSourceName(cover.source) << "," << cover.size() << ","
                << DirectionName(piece.direction) << "," << positions << ","
                << values << "\n";
    }
    return;
  }
  std::cout << "perm=" << cover.perm.ToString()
            << " source=" << CoverSourceName(cover.source)
            << " k=" << cover.size() << "\n";
  for (const MonotonePiece& piece : cover.pieces) {
    std::string values;
    for (int v : Subsequence(cover.perm, piece.positions)) {
      if (!values.empty()) values += ',';
      values += std::to_string(v);
    }
    std::cout << "  " << DirectionName(piece.direction) << " {" << values
              << "}\n";
  }
}

int RunPartition(const GlobalFlags& g, const std::string& perm_text,
                 const std::string& method) {
  const Permutation p = Parse(perm_text);
  std::vector<PartitionCover> covers;
  if (method == "exact" || method == "both") covers.push_back(PartitionNumber(p).cover);
  if (method == "constructive" || method == "both") {
    covers.push_back(ConstructiveCover(p));
  }
  if (g.format == "csv") std::cout << "source,k,direction,positions,values\n";
  if (g.format == "json" && covers.size() > 1) {
    json arr = json::array();
    for (const auto& c : covers) arr.push_back(json::parse(CoverToJson(c)));
    std::cout << arr.dump() << "\n";
    return kExitOk;
  }
  for (const auto& c : covers) PrintCover(c, g.format);
  return kExitOk;
}

int RunVerify(const GlobalFlags& g, int n_max, const std::string& mode_text,
              bool self_test) {
  VerificationReport report;
  if (self_test) {
    report = SelfTest();
  } else {
    VerifyOptions options;
    options.n_max = n_max;
    options.mode = ResolveMode(mode_text);
    options.threads = ResolveThreads(g);
    options.cache_dir = ResolveCacheDir(g);
    options.log = [](std::string_view line) { std::cerr << line << "\n"; };
    report = Verify(options);
  }
  if (g.format == "json") {
    std::cout << report.ToJson().dump(2) << "\n";
  } else {
    std::cout << report.ToText();
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int RunTable(const GlobalFlags& g, int n_max, const std::string& mode_text) {
  VerifyOptions options;
  options.n_max = n_max;
  options.mode = ResolveMode(mode_text);
  options.threads = ResolveThreads(g);
  options.cache_dir = ResolveCacheDir(g);
  options.log = [](std::string_view line) { std::cerr << line << "\n"; };
  const std::vector<BoundRow> rows =
      n_max >= 3 ? BuildTable(ComputeRcSets(options)) : std::vector<BoundRow>{};
  if (g.format == "json") {
    json arr = json::array();
    for (const BoundRow& r : rows) {
      arr.push_back({{"n", r.n}, {"p_max", r.p_max}, {"bound", r.bound}});
    }
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << "n,p_max,bound\n";
    for (const BoundRow& r : rows) std::cout << BoundRowToCsv(r) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roller coaster permutations and monotone partition numbers"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads (default RC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "RC set cache (default RC_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the cache");

  const auto modes = CLI::IsMember({"auto", "exhaustive", "filtered"});

  std::string perm_text, score_method, partition_method;
  int brute_guard = kBruteForceGuard;
  auto* score = app.add_subcommand("score", "Total switches of a permutation");
  score->add_option("--perm", perm_text, "Permutation, e.g. 2143 or 2,1,4,3")->required();
  score->add_option("--method", score_method, "fast | brute | both")
      ->default_val("fast")
      ->check(CLI::IsMember({"fast", "brute", "both"}));
  score->add_option("--brute-guard", brute_guard, "Largest n the brute oracle accepts");

  int n = 0;
  std::string mode_text, out_path;
  bool allow_large = false;
  auto* enumerate = app.add_subcommand("enumerate", "Compute RC(n)");
  enumerate->add_option("--n", n, "Permutation length")->required()->check(CLI::Range(3, 64));
  enumerate->add_option("--mode", mode_text, "auto | exhaustive | filtered")
      ->default_val("auto")
      ->check(modes);
  enumerate->add_option("--out", out_path, "Write to a file instead of stdout");
  enumerate->add_flag("--allow-large", allow_large, "Lift the exhaustive n <= 13 guard");

  auto* candidates = app.add_subcommand("candidates", "Size of the filtered search space");
  candidates->add_option("--n", n, "Permutation length")->required()->check(CLI::Range(3, 64));

  auto* partition = app.add_subcommand("partition", "Monotone partition of a permutation");
  partition->add_option("--perm", perm_text, "Permutation")->required();
  partition->add_option("--method", partition_method, "exact | constructive | both")
      ->default_val("exact")
      ->check(CLI::IsMember({"exact", "constructive", "both"}));

  int verify_n_max = 9;
  int table_n_max = 14;
  bool self_test = false;
  auto* verify = app.add_subcommand("verify", "Check theorems, lists and table");
  verify->add_option("--n-max", verify_n_max, "Largest n to verify")->default_val(9);
  verify->add_option("--mode", mode_text, "auto | exhaustive | filtered")
      ->default_val("auto")
      ->check(modes);
  verify->add_flag("--self-test", self_test, "Run planted-failure self tests instead");

  auto* table = app.add_subcommand("table", "P_max(n) against the bound, as CSV");
  table->add_option("--n-max", table_n_max, "Largest n")->default_val(14);
  table->add_option("--mode", mode_text, "auto | exhaustive | filtered")
      ->default_val("auto")
      ->check(modes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*score) return RunScore(g, perm_text, score_method, brute_guard);
    if (*enumerate) return RunEnumerate(g, n, mode_text, out_path, allow_large);
    if (*candidates) return RunCandidates(g, n);
    if (*partition) return RunPartition(g, perm_text, partition_method);
    if (*verify) return RunVerify(g, verify_n_max, mode_text, self_test);
    if (*table) return RunTable(g, table_n_max, mode_text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
