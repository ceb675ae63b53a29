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

#include "rcperm/scoring.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "rcperm/errors.h"

namespace rcperm {

std::string ToDecimal(SwitchTotal value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

SwitchTotal ParseDecimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal");
  constexpr SwitchTotal kMax = ~SwitchTotal{0};
  SwitchTotal value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid decimal digit in '" +
                                  std::string(text) + "'");
    }
    const int d = c - '0';
    if (value > (kMax - d) / 10) {
      throw std::invalid_argument("decimal overflows 128 bits");
    }
    value = value * 10 + d;
  }
  return value;
}

std::string_view ScoreMethodName(ScoreMethod m) {
  return m == ScoreMethod::kBrute ? "brute" : "fast";
}

ScoreReport TotalSwitchesBrute(const Permutation& p, int guard) {
  const int n = p.size();
  if (n > guard || n > 62) {
    throw GuardError("brute-force scoring limited to n <= " +
                     std::to_string(std::min(guard, 62)) + ", got " +
                     std::to_string(n));
  }
  const auto v = p.values();
  SwitchTotal total = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) < 3) continue;
    int prev2 = 0, prev = 0, seen = 0, switches = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      const int cur = v[std::countr_zero(bits)];
      if (seen >= 2 && ((prev > prev2) != (cur > prev))) ++switches;
      prev2 = prev;
      prev = cur;
      ++seen;
    }
    total += static_cast<SwitchTotal>(switches);
  }
  return {p, total, SwitchCount(v), ScoreMethod::kBrute};
}

SwitchTotal TotalSwitchesKernel(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  SwitchTotal total = 0;
  for (int j = 1; j + 1 < n; ++j) {
    const int pivot = values[j];
    std::uint64_t left_small = 0, left_large = 0;
    for (int i = 0; i < j; ++i) {
      const std::uint64_t w = std::uint64_t{1} << i;
      if (values[i] < pivot) {
        left_small += w;
      } else {
        left_large += w;
      }
    }
    std::uint64_t right_small = 0, right_large = 0;
    for (int k = j + 1; k < n; ++k) {
      const std::uint64_t w = std::uint64_t{1} << (n - 1 - k);
      if (values[k] < pivot) {
        right_small += w;
      } else {
        right_large += w;
      }
    }
    total += static_cast<SwitchTotal>(left_small) * right_small +
             static_cast<SwitchTotal>(left_large) * right_large;
  }
  return total;
}

ScoreReport TotalSwitchesFast(const Permutation& p) {
  if (p.size() > kMaxScoredLength) {
    throw GuardError("scoring supports n <= 64, got " +
                     std::to_string(p.size()));
  }
  return {p, TotalSwitchesKernel(p.values()), SwitchCount(p.values()),
          ScoreMethod::kFast};
}

}  // namespace rcperm
