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

#include "rcperm/permutation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "rcperm/errors.h"

namespace rcperm {
namespace {

void Validate(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw ParseError(ParseErrorKind::kEmpty, "empty permutation");
  for (int v : values) {
    if (v < 1 || v > n) {
      throw ParseError(ParseErrorKind::kOutOfRange,
                       "value " + std::to_string(v) + " outside 1.." +
                           std::to_string(n));
    }
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (seen[v]) {
      throw ParseError(ParseErrorKind::kDuplicate,
                       "duplicate value " + std::to_string(v));
    }
    seen[v] = true;
  }
}

bool IsDelimiter(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

// Greedy reconstruction of the lexicographically smallest longest chain
// under `before(a, b)` (a may precede b). O(n^2).
template <typename Less>
std::vector<int> SmallestLongestChain(std::span<const int> v, Less before) {
  const int n = static_cast<int>(v.size());
  std::vector<int> tail(n, 1);  // longest chain starting at i
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      if (before(v[i], v[j])) tail[i] = std::max(tail[i], tail[j] + 1);
    }
  }
  const int best = *std::max_element(tail.begin(), tail.end());
  std::vector<int> positions;
  int need = best;
  int last = -1;
  for (int i = 0; i < n && need > 0; ++i) {
    if (tail[i] != need) continue;
    if (last >= 0 && !before(v[last], v[i])) continue;
    positions.push_back(i + 1);
    last = i;
    --need;
  }
  return positions;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  Validate(values_);
}

Permutation Permutation::Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::ToString() const {
  std::string out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::ToCompactString() const {
  std::string out;
  for (int v : values_) out += std::to_string(v);
  return out;
}

Permutation Parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsDelimiter(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !IsDelimiter(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw ParseError(ParseErrorKind::kEmpty, "empty input");

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char c : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "unexpected character '" + std::string(1, c) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    for (std::string_view tok : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "not an integer: '" + std::string(tok) + "'");
      }
      values.push_back(v);
    }
  }
  return Permutation(std::move(values));
}

Permutation Reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation Complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n + 1 - p[i];
  return Permutation(std::move(v));
}

bool IsAlternating(const Permutation& p) {
  if (p.size() <= 2) return true;
  for (int i = 0; i + 1 < p.size(); ++i) {
    const bool ascent = p[i] < p[i + 1];
    if (ascent != (i % 2 == 0)) return false;
  }
  return true;
}

bool IsReverseAlternating(const Permutation& p) {
  if (p.size() <= 2) return true;
  for (int i = 0; i + 1 < p.size(); ++i) {
    const bool descent = p[i] > p[i + 1];
    if (descent != (i % 2 == 0)) return false;
  }
  return true;
}

PositionSet::PositionSet(std::vector<int> positions)
    : positions_(std::move(positions)) {
  for (size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 1 || (i > 0 && positions_[i] <= positions_[i - 1])) {
      throw std::invalid_argument(
          "positions must be strictly increasing and 1-based");
    }
  }
}

PositionSet PositionSet::All(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return PositionSet(std::move(v));
}

std::vector<int> Subsequence(const Permutation& p, const PositionSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int pos : s.positions()) {
    if (pos > p.size()) {
      throw std::out_of_range("position " + std::to_string(pos) +
                              " exceeds length " + std::to_string(p.size()));
    }
    out.push_back(p.at(pos));
  }
  return out;
}

int SwitchCount(std::span<const int> x) {
  int count = 0;
  for (size_t i = 1; i + 1 < x.size(); ++i) {
    if ((x[i] > x[i - 1]) != (x[i + 1] > x[i])) ++count;
  }
  return count;
}

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::kIncreasing:
      return "inc";
    case Direction::kDecreasing:
      return "dec";
    case Direction::kSingleton:
      return "singleton";
  }
  return "?";
}

MonotoneSubsequence LongestMonotone(const Permutation& p) {
  auto inc = SmallestLongestChain(p.values(), std::less<int>());
  auto dec = SmallestLongestChain(p.values(), std::greater<int>());
  if (inc.size() == 1 && dec.size() == 1) {
    return {PositionSet(std::move(inc)), Direction::kSingleton};
  }
  if (inc.size() > dec.size() || (inc.size() == dec.size() && inc < dec)) {
    return {PositionSet(std::move(inc)), Direction::kIncreasing};
  }
  return {PositionSet(std::move(dec)), Direction::kDecreasing};
}

}  // namespace rcperm
