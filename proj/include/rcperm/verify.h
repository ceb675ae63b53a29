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

#ifndef RCPERM_VERIFY_H_
#define RCPERM_VERIFY_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rcperm/partition.h"
#include "rcperm/rc_search.h"

namespace rcperm {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view CheckStatusName(CheckStatus s);

struct CheckResult {
  std::string check_id;
  std::string n_range;
  CheckStatus status = CheckStatus::kSkipped;
  // Always present on kFail: the offending permutation(s) and the observed
  // versus expected values.
  std::optional<nlohmann::json> counterexample;
  std::chrono::duration<double> elapsed{0};
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* Find(std::string_view check_id) const;
  nlohmann::json ToJson() const;
  std::string ToText() const;
};

using RcByN = std::map<int, RcSet>;

// Set equality with the reference lists for n = 3..9. Missing n are
// ignored; the check is skipped when none are present.
CheckResult CheckGoldenLists(
    const RcByN& rc_by_n,
    const std::map<int, std::vector<std::string>>& fixtures);
CheckResult CheckGoldenLists(const RcByN& rc_by_n);

// Reverse and complement each map the set onto itself.
CheckResult CheckClosure(const RcSet& rc);
// Each member is alternating or reverse alternating, not both.
CheckResult CheckAlternating(const RcSet& rc);
// |p1 - pn| = 1 for each member.
CheckResult CheckEndpoints(const RcSet& rc);
// Interior peaks lie above both endpoints (positions 2..n-1 only).
CheckResult CheckPositionDominance(const RcSet& rc);
// Interior valleys lie below both endpoints. Reported separately.
CheckResult CheckBelowEndpoints(const RcSet& rc);
// partition number <= constructive cover size <= bound, per member.
CheckResult CheckConstructiveCover(const RcSet& rc);

std::vector<BoundRow> BuildTable(const RcByN& rc_by_n);
// p_max <= bound on every row.
CheckResult CheckBoundTheorem(const std::vector<BoundRow>& rows);
// Rows equal the reference table wherever both exist.
CheckResult CheckTable(const std::vector<BoundRow>& rows,
                       const std::vector<BoundRow>& fixture);
CheckResult CheckTable(const std::vector<BoundRow>& rows);

// Folds per-n results for one check into a single entry spanning them.
CheckResult Aggregate(std::string_view check_id,
                      const std::vector<CheckResult>& parts);

struct VerifyOptions {
  int n_max = 9;
  // nullopt: exhaustive for n <= 9, filtered above.
  std::optional<SearchMode> mode;
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  std::function<void(std::string_view)> log;
};

// RC sets for every n in 3..n_max.
RcByN ComputeRcSets(const VerifyOptions& options);

// Runs every check over 3..n_max. All entries are skipped when n_max < 3.
VerificationReport Verify(const VerifyOptions& options);
VerificationReport VerifySets(const RcByN& rc_by_n);

// Feeds planted counterexamples to every check. An entry passes when the
// check under test reported a failure with a counterexample.
VerificationReport SelfTest();

}  // namespace rcperm

#endif  // RCPERM_VERIFY_H_
