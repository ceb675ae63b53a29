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

#include "rcperm/verify.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

#include "rcperm/errors.h"
#include "rcperm/golden.h"

namespace rcperm {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::string_view kCheckIds[] = {
    "golden_lists",       "closure",         "alternating_dichotomy",
    "endpoint_difference", "position_dominance", "below_endpoints",
    "constructive_cover", "bound_theorem",   "reference_table",
};

// Runs `body` as check `id`, timing it. The body returns nullopt on pass
// or the counterexample payload on failure.
template <typename Body>
CheckResult Timed(std::string_view id, std::string n_range, Body body) {
  CheckResult r;
  r.check_id = std::string(id);
  r.n_range = std::move(n_range);
  r.status = CheckStatus::kPass;
  const auto start = Clock::now();
  std::optional<json> failure = body(r);
  r.elapsed = Clock::now() - start;
  if (r.status != CheckStatus::kSkipped) {
    r.status = failure ? CheckStatus::kFail : CheckStatus::kPass;
    r.counterexample = std::move(failure);
  }
  return r;
}

CheckResult Skipped(std::string_view id, std::string n_range,
                    std::string note) {
  CheckResult r;
  r.check_id = std::string(id);
  r.n_range = std::move(n_range);
  r.status = CheckStatus::kSkipped;
  r.note = std::move(note);
  return r;
}

std::set<std::string> CanonicalSet(const std::vector<Permutation>& perms) {
  std::set<std::string> out;
  for (const Permutation& p : perms) out.insert(p.ToString());
  return out;
}

// Orientation of a member for the dominance checks, read off its first
// step so that planted non-alternating inputs still get a verdict.
bool StartsWithAscent(const Permutation& p) { return p[0] < p[1]; }

bool IsInteriorPeak(const Permutation& p, int q) {
  return (q % 2 == 0) == StartsWithAscent(p);
}

template <typename Pred>
CheckResult PerMember(std::string_view id, const RcSet& rc, Pred violation) {
  if (rc.n < 3 || rc.perms.empty()) {
    return Skipped(id, std::to_string(rc.n), "requires a nonempty set, n >= 3");
  }
  return Timed(id, std::to_string(rc.n),
               [&](CheckResult&) -> std::optional<json> {
                 for (const Permutation& p : rc.perms) {
                   if (auto bad = violation(p)) {
                     (*bad)["perm"] = p.ToString();
                     return bad;
                   }
                 }
                 return std::nullopt;
               });
}

RcSet SetFromTexts(int n, const std::vector<std::string>& texts) {
  RcSet rc;
  rc.n = n;
  for (const auto& t : texts) rc.perms.push_back(Parse(t));
  rc.t_max = TotalSwitchesKernel(rc.perms.front().values());
  return rc;
}

}  // namespace

std::string_view CheckStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* VerificationReport::Find(std::string_view check_id) const {
  for (const CheckResult& c : checks) {
    if (c.check_id == check_id) return &c;
  }
  return nullptr;
}

json VerificationReport::ToJson() const {
  json arr = json::array();
  for (const CheckResult& c : checks) {
    json entry = {{"check_id", c.check_id},
                  {"n_range", c.n_range},
                  {"status", std::string(CheckStatusName(c.status))},
                  {"elapsed_seconds", c.elapsed.count()}};
    entry["counterexample"] = c.counterexample ? *c.counterexample : json();
    if (!c.note.empty()) entry["note"] = c.note;
    arr.push_back(std::move(entry));
  }
  return {{"ok", ok()}, {"checks", std::move(arr)}};
}

std::string VerificationReport::ToText() const {
  std::ostringstream out;
  int pass = 0, fail = 0, skipped = 0;
  for (const CheckResult& c : checks) {
    std::string status(CheckStatusName(c.status));
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    char line[160];
    std::snprintf(line, sizeof(line), "%-7s %-22s n=%-8s %8.3fs",
                  status.c_str(), c.check_id.c_str(), c.n_range.c_str(),
                  c.elapsed.count());
    out << line;
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
    if (c.counterexample) out << "        counterexample: " << c.counterexample->dump() << "\n";
    pass += c.status == CheckStatus::kPass;
    fail += c.status == CheckStatus::kFail;
    skipped += c.status == CheckStatus::kSkipped;
  }
  out << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return out.str();
}

CheckResult CheckGoldenLists(
    const RcByN& rc_by_n,
    const std::map<int, std::vector<std::string>>& fixtures) {
  std::vector<int> present;
  for (const auto& [n, expected] : fixtures) {
    if (rc_by_n.count(n)) present.push_back(n);
  }
  if (present.empty()) {
    return Skipped("golden_lists", "-", "no computed set for n = 3..9");
  }
  const std::string range =
      std::to_string(present.front()) + ".." + std::to_string(present.back());
  return Timed("golden_lists", range, [&](CheckResult&) -> std::optional<json> {
    for (int n : present) {
      std::set<std::string> want;
      for (const auto& t : fixtures.at(n)) want.insert(Parse(t).ToString());
      const std::set<std::string> got = CanonicalSet(rc_by_n.at(n).perms);
      if (want == got) continue;
      std::vector<std::string> missing, unexpected;
      std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                          std::back_inserter(missing));
      std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                          std::back_inserter(unexpected));
      return json{{"n", n},
                  {"expected_count", want.size()},
                  {"observed_count", got.size()},
                  {"missing", missing},
                  {"unexpected", unexpected}};
    }
    return std::nullopt;
  });
}

CheckResult CheckGoldenLists(const RcByN& rc_by_n) {
  return CheckGoldenLists(rc_by_n, GoldenRcLists());
}

CheckResult CheckClosure(const RcSet& rc) {
  if (rc.perms.empty()) return Skipped("closure", std::to_string(rc.n), "empty set");
  return Timed("closure", std::to_string(rc.n),
               [&](CheckResult&) -> std::optional<json> {
                 const std::set<std::string> members = CanonicalSet(rc.perms);
                 for (const Permutation& p : rc.perms) {
                   const Permutation rev = Reverse(p);
                   const Permutation comp = Complement(p);
                   for (const auto& [name, image] :
                        {std::pair{"reverse", &rev}, std::pair{"complement", &comp}}) {
                     if (!members.count(image->ToString())) {
                       return json{{"perm", p.ToString()},
                                   {"operation", name},
                                   {"image", image->ToString()},
                                   {"expected", "image in set"}};
                     }
                   }
                 }
                 return std::nullopt;
               });
}

CheckResult CheckAlternating(const RcSet& rc) {
  return PerMember("alternating_dichotomy", rc,
                   [](const Permutation& p) -> std::optional<json> {
                     const bool a = IsAlternating(p);
                     const bool r = IsReverseAlternating(p);
                     if (a != r) return std::nullopt;
                     return json{{"alternating", a},
                                 {"reverse_alternating", r},
                                 {"expected", "exactly one"}};
                   });
}

CheckResult CheckEndpoints(const RcSet& rc) {
  return PerMember("endpoint_difference", rc,
                   [](const Permutation& p) -> std::optional<json> {
                     const int diff = std::abs(p.at(1) - p.at(p.size()));
                     if (diff == 1) return std::nullopt;
                     return json{{"observed", diff}, {"expected", 1}};
                   });
}

CheckResult CheckPositionDominance(const RcSet& rc) {
  return PerMember(
      "position_dominance", rc, [](const Permutation& p) -> std::optional<json> {
        const int n = p.size();
        const int hi = std::max(p.at(1), p.at(n));
        for (int q = 2; q <= n - 1; ++q) {
          if (IsInteriorPeak(p, q) && p.at(q) <= hi) {
            return json{{"position", q},
                        {"observed", p.at(q)},
                        {"expected", "> " + std::to_string(hi)}};
          }
        }
        return std::nullopt;
      });
}

CheckResult CheckBelowEndpoints(const RcSet& rc) {
  return PerMember(
      "below_endpoints", rc, [](const Permutation& p) -> std::optional<json> {
        const int n = p.size();
        const int lo = std::min(p.at(1), p.at(n));
        for (int q = 2; q <= n - 1; ++q) {
          if (!IsInteriorPeak(p, q) && p.at(q) >= lo) {
            return json{{"position", q},
                        {"observed", p.at(q)},
                        {"expected", "< " + std::to_string(lo)}};
          }
        }
        return std::nullopt;
      });
}

CheckResult CheckConstructiveCover(const RcSet& rc) {
  int matched_prediction = 0;
  int members = 0;
  CheckResult r = PerMember(
      "constructive_cover", rc, [&](const Permutation& p) -> std::optional<json> {
        const int bound = BoundFormula(p.size());
        ConstructiveTrace trace;
        int pieces = 0;
        try {
          pieces = ConstructiveCover(p, &trace).size();
        } catch (const std::exception& e) {
          return json{{"error", e.what()}};
        }
        ++members;
        matched_prediction += trace.bottom_runs == trace.predicted_bottom_runs;
        const int exact = PartitionNumber(p).k;
        if (exact <= pieces && pieces <= bound) return std::nullopt;
        return json{{"partition_number", exact},
                    {"constructive_pieces", pieces},
                    {"bound", bound},
                    {"expected", "partition_number <= pieces <= bound"}};
      });
  if (r.status == CheckStatus::kPass) {
    r.note = "bottom run count matched prediction on " +
             std::to_string(matched_prediction) + "/" + std::to_string(members);
  }
  return r;
}

std::vector<BoundRow> BuildTable(const RcByN& rc_by_n) {
  std::vector<BoundRow> rows;
  for (const auto& [n, rc] : rc_by_n) {
    if (n >= 3 && !rc.perms.empty()) rows.push_back(Pmax(n, rc));
  }
  return rows;
}

CheckResult CheckBoundTheorem(const std::vector<BoundRow>& rows) {
  if (rows.empty()) return Skipped("bound_theorem", "-", "no rows");
  const std::string range =
      std::to_string(rows.front().n) + ".." + std::to_string(rows.back().n);
  return Timed("bound_theorem", range, [&](CheckResult&) -> std::optional<json> {
    for (const BoundRow& row : rows) {
      if (row.p_max > row.bound || row.bound != BoundFormula(row.n)) {
        return json{{"n", row.n},
                    {"p_max", row.p_max},
                    {"bound", row.bound},
                    {"expected", "p_max <= bound"}};
      }
    }
    return std::nullopt;
  });
}

CheckResult CheckTable(const std::vector<BoundRow>& rows,
                       const std::vector<BoundRow>& fixture) {
  std::vector<std::pair<BoundRow, BoundRow>> pairs;
  for (const BoundRow& row : rows) {
    for (const BoundRow& want : fixture) {
      if (want.n == row.n) pairs.emplace_back(row, want);
    }
  }
  if (pairs.empty()) return Skipped("reference_table", "-", "no overlapping rows");
  const std::string range = std::to_string(pairs.front().first.n) + ".." +
                            std::to_string(pairs.back().first.n);
  return Timed("reference_table", range, [&](CheckResult&) -> std::optional<json> {
    json mismatches = json::array();
    for (const auto& [got, want] : pairs) {
      if (got == want) continue;
      mismatches.push_back({{"n", got.n},
                            {"observed", BoundRowToCsv(got)},
                            {"expected", BoundRowToCsv(want)}});
    }
    if (mismatches.empty()) return std::nullopt;
    json payload = mismatches.front();
    payload["mismatched_rows"] = std::move(mismatches);
    return payload;
  });
}

CheckResult CheckTable(const std::vector<BoundRow>& rows) {
  return CheckTable(rows, GoldenBoundTable());
}

CheckResult Aggregate(std::string_view check_id,
                      const std::vector<CheckResult>& parts) {
  CheckResult out;
  out.check_id = std::string(check_id);
  std::vector<const CheckResult*> active;
  for (const CheckResult& p : parts) {
    out.elapsed += p.elapsed;
    if (p.status != CheckStatus::kSkipped) active.push_back(&p);
  }
  if (active.empty()) {
    out.n_range = "-";
    out.status = CheckStatus::kSkipped;
    return out;
  }
  out.n_range = active.front()->n_range == active.back()->n_range
                    ? active.front()->n_range
                    : active.front()->n_range + ".." + active.back()->n_range;
  out.status = CheckStatus::kPass;
  std::vector<std::string> notes;
  for (const CheckResult* p : active) {
    if (!p->note.empty()) notes.push_back("n=" + p->n_range + ": " + p->note);
    if (p->status == CheckStatus::kFail && out.status != CheckStatus::kFail) {
      out.status = CheckStatus::kFail;
      out.counterexample = p->counterexample;
      (*out.counterexample)["n"] = p->n_range;
    }
  }
  for (size_t i = 0; i < notes.size(); ++i) {
    out.note += (i ? "; " : "") + notes[i];
  }
  return out;
}

RcByN ComputeRcSets(const VerifyOptions& options) {
  RcByN out;
  for (int n = 3; n <= options.n_max; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.mode = options.mode.value_or(n <= 9 ? SearchMode::kExhaustive
                                            : SearchMode::kFiltered);
    cfg.shard_count = options.threads;
    cfg.cache_dir = options.cache_dir;
    SearchStats stats;
    out.emplace(n, EnumerateRc(cfg, &stats));
    if (options.log) {
      options.log("n=" + std::to_string(n) + " mode=" +
                  std::string(SearchModeName(cfg.mode)) + " " +
                  (stats.from_cache ? "cached"
                                    : std::to_string(stats.candidates) +
                                          " candidates") +
                  " |RC|=" + std::to_string(out.at(n).perms.size()));
    }
  }
  return out;
}

VerificationReport VerifySets(const RcByN& rc_by_n) {
  VerificationReport report;
  report.checks.push_back(CheckGoldenLists(rc_by_n));
  std::vector<CheckResult> closure, alt, ends, dom, below, cover;
  for (const auto& [n, rc] : rc_by_n) {
    closure.push_back(CheckClosure(rc));
    alt.push_back(CheckAlternating(rc));
    ends.push_back(CheckEndpoints(rc));
    dom.push_back(CheckPositionDominance(rc));
    below.push_back(CheckBelowEndpoints(rc));
    cover.push_back(CheckConstructiveCover(rc));
  }
  report.checks.push_back(Aggregate("closure", closure));
  report.checks.push_back(Aggregate("alternating_dichotomy", alt));
  report.checks.push_back(Aggregate("endpoint_difference", ends));
  CheckResult dominance = Aggregate("position_dominance", dom);
  if (dominance.status != CheckStatus::kSkipped) {
    dominance.note = "interior positions 2..n-1 only";
  }
  report.checks.push_back(std::move(dominance));
  report.checks.push_back(Aggregate("below_endpoints", below));
  report.checks.push_back(Aggregate("constructive_cover", cover));
  const auto start = Clock::now();
  const std::vector<BoundRow> rows = BuildTable(rc_by_n);
  const auto table_time = Clock::now() - start;
  report.checks.push_back(CheckBoundTheorem(rows));
  report.checks.back().elapsed += table_time;
  report.checks.push_back(CheckTable(rows));
  return report;
}

VerificationReport Verify(const VerifyOptions& options) {
  if (options.n_max < 3) {
    VerificationReport report;
    for (std::string_view id : kCheckIds) {
      report.checks.push_back(Skipped(id, "-", "requires n >= 3"));
    }
    return report;
  }
  return VerifySets(ComputeRcSets(options));
}

VerificationReport SelfTest() {
  VerificationReport report;
  auto expect_failure = [&](std::string_view id, const CheckResult& r) {
    CheckResult entry;
    entry.check_id = "selftest:" + std::string(id);
    entry.n_range = r.n_range;
    entry.elapsed = r.elapsed;
    const bool caught = r.status == CheckStatus::kFail && r.counterexample;
    entry.status = caught ? CheckStatus::kPass : CheckStatus::kFail;
    if (caught) {
      entry.note = "planted failure detected";
    } else {
      entry.counterexample = json{{"observed", CheckStatusName(r.status)},
                                  {"expected", "fail"}};
    }
    report.checks.push_back(std::move(entry));
  };

  {
    auto tampered = GoldenRcLists();
    tampered[4][0] = "1234";
    RcByN sets;
    sets.emplace(4, SetFromTexts(4, GoldenRcLists().at(4)));
    expect_failure("golden_lists", CheckGoldenLists(sets, tampered));
  }
  expect_failure("closure", CheckClosure(SetFromTexts(4, {"2143"})));
  expect_failure("alternating_dichotomy",
                 CheckAlternating(SetFromTexts(4, {"1234"})));
  expect_failure("endpoint_difference", CheckEndpoints(SetFromTexts(4, {"1423"})));
  // 5,3,7,1,8,2,6,4 with 6 and 3 swapped.
  const RcSet swapped = SetFromTexts(8, {"56718234"});
  expect_failure("position_dominance", CheckPositionDominance(swapped));
  expect_failure("below_endpoints", CheckBelowEndpoints(swapped));
  expect_failure("constructive_cover",
                 CheckConstructiveCover(SetFromTexts(4, {"1234"})));
  expect_failure("bound_theorem", CheckBoundTheorem({{5, 4, BoundFormula(5)}}));
  expect_failure("reference_table", CheckTable({{6, 2, 3}}));
  return report;
}

}  // namespace rcperm
