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

#ifndef RCPERM_PARTITION_H_
#define RCPERM_PARTITION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcperm/permutation.h"
#include "rcperm/rc_search.h"

namespace rcperm {

// One block of a partition. Blocks of one or two entries are always
// monotone; one-entry blocks carry Direction::kSingleton.
struct MonotonePiece {
  PositionSet positions;
  Direction direction = Direction::kSingleton;
};

enum class CoverSource { kExact, kConstructive };

std::string_view CoverSourceName(CoverSource s);

// Pairwise disjoint monotone pieces covering positions 1..n.
struct PartitionCover {
  Permutation perm;
  std::vector<MonotonePiece> pieces;
  CoverSource source = CoverSource::kExact;

  int size() const { return static_cast<int>(pieces.size()); }
};

struct PartitionResult {
  int k = 0;
  PartitionCover cover;
};

// Minimum number of disjoint monotone subsequences covering p, with a
// witness. Iterative deepening from LowerBound(p); each round is a
// backtracking assignment of positions, in order, to at most k chains.
PartitionResult PartitionNumber(const Permutation& p);

// ceil(n / L), L the length of a longest monotone subsequence.
int LowerBound(const Permutation& p);

inline constexpr int kPartitionOracleGuard = 10;

// Minimum block count over every set partition of the positions whose
// blocks are all monotone. Exhaustive over restricted growth strings;
// throws GuardError when n > guard.
int PartitionNumberOracle(const Permutation& p,
                          int guard = kPartitionOracleGuard);

// floor(ceil((n - 2) / 2) / 2) + 2, for n >= 3.
int BoundFormula(int n);

enum class EndpointPairing {
  kLastBottomRun,          // equal run counts: the last bottom run takes p_n
  kSecondToLastBottomRun,  // more bottom runs: the second-to-last takes p_n
  kEndpointAlone,          // the designated bottom run was already used
};

// What the construction observed on one input.
struct ConstructiveTrace {
  bool complemented = false;
  int top_runs = 0;
  int bottom_runs = 0;
  EndpointPairing pairing = EndpointPairing::kLastBottomRun;
  // floor(ceil((n - 2) / 2) / 2) + 1, the bottom run count the bound
  // argument predicts for worst-case inputs.
  int predicted_bottom_runs = 0;
};

// The cover built from contiguous increasing runs of the interior
// entries. Requires |p1 - pn| = 1 and p alternating or reverse
// alternating (throws PreconditionError otherwise). Alternating inputs are
// complemented, covered, and mapped back. Throws ConstructionError when a
// joined group is not monotone.
PartitionCover ConstructiveCover(const Permutation& p,
                                 ConstructiveTrace* trace = nullptr);

struct BoundRow {
  int n = 0;
  int p_max = 0;
  int bound = 0;

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

// p_max = max partition number over rc.perms. Throws PreconditionError on
// an empty set or a set for a different n.
BoundRow Pmax(int n, const RcSet& rc);

// Describes the first violated cover invariant, or nullopt if the cover
// is a disjoint monotone cover of its permutation.
std::optional<std::string> ValidateCover(const PartitionCover& cover);

std::string CoverToJson(const PartitionCover& cover);
std::string BoundRowToCsv(const BoundRow& row);

}  // namespace rcperm

#endif  // RCPERM_PARTITION_H_
