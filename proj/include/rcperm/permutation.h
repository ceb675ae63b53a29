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

#ifndef RCPERM_PERMUTATION_H_
#define RCPERM_PERMUTATION_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcperm {

// A permutation of {1..n} in one-line notation. Values are 1-based; the
// element accessors take 0-based offsets unless named `at`.
class Permutation {
 public:
  // Throws ParseError unless `values` is a rearrangement of 1..n, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation Identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int offset) const { return values_[offset]; }
  // 1-based position lookup.
  int at(int position) const { return values_.at(position - 1); }
  std::span<const int> values() const { return values_; }

  // Canonical text form, e.g. "3,2,6,1,5,4".
  std::string ToString() const;
  // Undelimited digit form "326154"; only meaningful when n <= 9.
  std::string ToCompactString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Accepts comma/whitespace separated integers, or an undelimited digit
// string when every value is below 10.
Permutation Parse(std::string_view text);

Permutation Reverse(const Permutation& p);
Permutation Complement(const Permutation& p);

// p1 < p2 > p3 < ... throughout. Vacuously true for n <= 2.
bool IsAlternating(const Permutation& p);
// p1 > p2 < p3 > ... throughout. Vacuously true for n <= 2.
bool IsReverseAlternating(const Permutation& p);

// Strictly increasing 1-based positions into some host permutation.
class PositionSet {
 public:
  PositionSet() = default;
  // Throws std::invalid_argument unless strictly increasing and >= 1.
  explicit PositionSet(std::vector<int> positions);

  static PositionSet All(int n);

  int size() const { return static_cast<int>(positions_.size()); }
  bool empty() const { return positions_.empty(); }
  std::span<const int> positions() const { return positions_; }
  int operator[](int i) const { return positions_[i]; }

  friend auto operator<=>(const PositionSet&, const PositionSet&) = default;

 private:
  std::vector<int> positions_;
};

// Values of `p` at `s`, in position order. Throws std::out_of_range if a
// position exceeds n.
std::vector<int> Subsequence(const Permutation& p, const PositionSet& s);

// Interior indices where the direction flips. Entries must be distinct.
int SwitchCount(std::span<const int> x);

enum class Direction { kIncreasing, kDecreasing, kSingleton };

std::string_view DirectionName(Direction d);

struct MonotoneSubsequence {
  PositionSet positions;
  Direction direction;
};

// A longest strictly monotone subsequence. Among all maximum-length
// candidates in either direction the lexicographically smallest position
// set wins.
MonotoneSubsequence LongestMonotone(const Permutation& p);

}  // namespace rcperm

#endif  // RCPERM_PERMUTATION_H_
