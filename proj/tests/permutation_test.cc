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

#include <random>

#include "gtest/gtest.h"
#include "rcperm/errors.h"
#include "test_util.h"

namespace rcperm {
namespace {

using ::rcperm::testing::AllPermutations;
using ::rcperm::testing::LongestMonotoneLengthDp;
using ::rcperm::testing::RandomPermutation;

std::vector<int> Values(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

ParseErrorKind ParseKind(std::string_view text) {
  try {
    Parse(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseErrorKind::kMalformed;
}

TEST(ParseTest, CompactAndDelimitedForms) {
  EXPECT_EQ(Values(Parse("2143")), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(Values(Parse("1")), (std::vector<int>{1}));
  EXPECT_EQ(Values(Parse("3,2,6,1,5,4")), (std::vector<int>{3, 2, 6, 1, 5, 4}));
  EXPECT_EQ(Values(Parse(" 2 1\t4, 3 ")), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(Values(Parse("10,1,2,3,4,5,6,7,8,9")).front(), 10);
}

TEST(ParseTest, DistinctErrors) {
  EXPECT_EQ(ParseKind("3 3 1"), ParseErrorKind::kDuplicate);
  EXPECT_EQ(ParseKind("1,4"), ParseErrorKind::kOutOfRange);
  EXPECT_EQ(ParseKind("0"), ParseErrorKind::kOutOfRange);
  EXPECT_EQ(ParseKind(""), ParseErrorKind::kEmpty);
  EXPECT_EQ(ParseKind(" , "), ParseErrorKind::kEmpty);
  EXPECT_EQ(ParseKind("1,x"), ParseErrorKind::kMalformed);
  EXPECT_EQ(ParseKind("12a"), ParseErrorKind::kMalformed);
}

TEST(PermutationTest, CanonicalText) {
  const Permutation p = Parse("326154");
  EXPECT_EQ(p.ToString(), "3,2,6,1,5,4");
  EXPECT_EQ(p.ToCompactString(), "326154");
  EXPECT_EQ(Parse(p.ToString()), p);
}

TEST(PermutationTest, ReverseAndComplementExamples) {
  const Permutation p = Parse("3,6,2,7,1,5,4");
  EXPECT_EQ(Reverse(p), Parse("4,5,1,7,2,6,3"));
  EXPECT_EQ(Complement(p), Parse("5,2,6,1,7,3,4"));
  EXPECT_EQ(Complement(Parse("2143")), Parse("3412"));
  EXPECT_EQ(Reverse(Parse("1")), Parse("1"));
}

TEST(PermutationTest, SymmetryOperatorsAreCommutingInvolutions) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Permutation p = RandomPermutation(rng, 1 + trial % 12);
    EXPECT_EQ(Reverse(Reverse(p)), p);
    EXPECT_EQ(Complement(Complement(p)), p);
    EXPECT_EQ(Reverse(Complement(p)), Complement(Reverse(p)));
  }
}

TEST(AlternationTest, Examples) {
  EXPECT_TRUE(IsAlternating(Parse("56281734")));
  EXPECT_FALSE(IsReverseAlternating(Parse("56281734")));
  EXPECT_TRUE(IsReverseAlternating(Parse("43718265")));
  EXPECT_FALSE(IsAlternating(Parse("43718265")));
  EXPECT_FALSE(IsAlternating(Parse("123")));
  EXPECT_FALSE(IsReverseAlternating(Parse("123")));
}

TEST(AlternationTest, ShortPermutationsSatisfyBoth) {
  for (const char* text : {"1", "12", "21"}) {
    EXPECT_TRUE(IsAlternating(Parse(text))) << text;
    EXPECT_TRUE(IsReverseAlternating(Parse(text))) << text;
  }
}

TEST(AlternationTest, ComplementSwapsPredicatesExhaustively) {
  for (int n = 3; n <= 7; ++n) {
    for (const Permutation& p : AllPermutations(n)) {
      EXPECT_EQ(IsAlternating(p), IsReverseAlternating(Complement(p)))
          << p.ToString();
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Permutation p = RandomPermutation(rng, 8 + trial % 3);
    EXPECT_EQ(IsAlternating(p), IsReverseAlternating(Complement(p)));
  }
}

TEST(SubsequenceTest, Examples) {
  const Permutation p = Parse("582639174");
  EXPECT_EQ(Subsequence(p, PositionSet({1, 2, 6})), (std::vector<int>{5, 8, 9}));
  EXPECT_EQ(Subsequence(p, PositionSet::All(9)), Values(p));
  EXPECT_EQ(Subsequence(Parse("2143"), PositionSet({2, 3})),
            (std::vector<int>{1, 4}));
  EXPECT_THROW(Subsequence(Parse("21"), PositionSet({1, 3})), std::out_of_range);
  EXPECT_THROW(PositionSet({2, 2}), std::invalid_argument);
  EXPECT_THROW(PositionSet({0, 1}), std::invalid_argument);
}

TEST(SwitchCountTest, Examples) {
  EXPECT_EQ(SwitchCount(std::vector<int>{3, 2, 6, 1, 5, 4}), 4);
  EXPECT_EQ(SwitchCount(std::vector<int>{1, 2, 3, 4}), 0);
  EXPECT_EQ(SwitchCount(std::vector<int>{2, 1, 4, 3}), 2);
  EXPECT_EQ(SwitchCount(std::vector<int>{7, 3}), 0);
  EXPECT_EQ(SwitchCount(std::vector<int>{}), 0);
}

TEST(SwitchCountTest, MaximalExactlyForAlternatingShapes) {
  for (int n = 3; n <= 7; ++n) {
    for (const Permutation& p : AllPermutations(n)) {
      const bool zigzag = IsAlternating(p) || IsReverseAlternating(p);
      EXPECT_EQ(SwitchCount(p.values()) == n - 2, zigzag) << p.ToString();
      EXPECT_EQ(SwitchCount(p.values()), SwitchCount(Complement(p).values()));
      EXPECT_EQ(SwitchCount(p.values()), SwitchCount(Reverse(p).values()));
    }
  }
}

TEST(LongestMonotoneTest, Examples) {
  const MonotoneSubsequence m = LongestMonotone(Parse("582639174"));
  EXPECT_EQ(m.direction, Direction::kDecreasing);
  EXPECT_EQ(Subsequence(Parse("582639174"), m.positions),
            (std::vector<int>{8, 6, 3, 1}));

  const MonotoneSubsequence id = LongestMonotone(Permutation::Identity(6));
  EXPECT_EQ(id.direction, Direction::kIncreasing);
  EXPECT_EQ(id.positions, PositionSet::All(6));

  const MonotoneSubsequence two = LongestMonotone(Parse("21"));
  EXPECT_EQ(two.direction, Direction::kDecreasing);
  EXPECT_EQ(two.positions.size(), 2);

  EXPECT_EQ(LongestMonotone(Parse("1")).direction, Direction::kSingleton);
}

TEST(LongestMonotoneTest, TieBreakIsLexicographicallySmallestPositions) {
  // 2,1,4,3: increasing {1,3},{1,4},{2,3},{2,4}; decreasing {1,2},{3,4}.
  EXPECT_EQ(LongestMonotone(Parse("2143")).positions, PositionSet({1, 2}));
  // 1,3,2: increasing {1,2},{1,3}; decreasing {2,3}.
  const MonotoneSubsequence m = LongestMonotone(Parse("132"));
  EXPECT_EQ(m.positions, PositionSet({1, 2}));
  EXPECT_EQ(m.direction, Direction::kIncreasing);
}

TEST(LongestMonotoneTest, MatchesQuadraticDp) {
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& p : AllPermutations(n)) {
      const MonotoneSubsequence m = LongestMonotone(p);
      ASSERT_EQ(m.positions.size(), LongestMonotoneLengthDp(p)) << p.ToString();
      const std::vector<int> v = Subsequence(p, m.positions);
      if (m.direction == Direction::kIncreasing) {
        EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
      } else if (m.direction == Direction::kDecreasing) {
        EXPECT_TRUE(std::is_sorted(v.rbegin(), v.rend()));
      }
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const Permutation p = RandomPermutation(rng, 8 + trial % 3);
    EXPECT_EQ(LongestMonotone(p).positions.size(), LongestMonotoneLengthDp(p));
  }
}

}  // namespace
}  // namespace rcperm
