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

#ifndef RCPERM_SCORING_H_
#define RCPERM_SCORING_H_

#include <span>
#include <string>
#include <string_view>

#include "rcperm/permutation.h"

namespace rcperm {

// Exact total-switch values. t(p) < n^3 * 2^n, so 128 bits hold every
// value for n <= 64.
using SwitchTotal = unsigned __int128;

inline constexpr int kMaxScoredLength = 64;
inline constexpr int kBruteForceGuard = 20;

std::string ToDecimal(SwitchTotal value);
// Throws std::invalid_argument on anything but a decimal digit string that
// fits in 128 bits.
SwitchTotal ParseDecimal(std::string_view text);

enum class ScoreMethod { kBrute, kFast };

std::string_view ScoreMethodName(ScoreMethod m);

struct ScoreReport {
  Permutation perm;
  SwitchTotal total_switches = 0;
  int own_switches = 0;
  ScoreMethod method = ScoreMethod::kFast;
};

// Sums SwitchCount over all 2^n subsequences by direct enumeration.
// Throws GuardError when n exceeds `guard`.
ScoreReport TotalSwitchesBrute(const Permutation& p,
                               int guard = kBruteForceGuard);

// Same value via weighted switch triples; see TotalSwitchesKernel.
ScoreReport TotalSwitchesFast(const Permutation& p);

// The scoring kernel behind TotalSwitchesFast, usable on raw value spans
// inside search loops (values must be a permutation of 1..n, n <= 64).
//
// A triple of positions i < j < k whose values switch direction at j is a
// switch of exactly those subsequences in which i, j, k are consecutive
// picks: nothing may be chosen strictly between them, while the i-1
// positions before i and the n-k positions after k are free. Hence
//
//   t(p) = sum over switching (i, j, k) of 2^(i-1) * 2^(n-k).
//
// Grouping by the middle index j, a switch at j is either a peak (both
// neighbours smaller) or a valley (both larger), so
//
//   t(p) = sum_j  Lsmall(j) * Rsmall(j) + Llarge(j) * Rlarge(j)
//
// where Lsmall(j) sums 2^(i-1) over i < j with p_i < p_j and Rsmall(j)
// sums 2^(n-k) over k > j with p_k < p_j (likewise for "large"). Each of
// the four prefix aggregates is one pass, giving O(n^2) overall.
SwitchTotal TotalSwitchesKernel(std::span<const int> values);

}  // namespace rcperm

#endif  // RCPERM_SCORING_H_
