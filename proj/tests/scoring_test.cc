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

#include <random>

#include "gtest/gtest.h"
#include "rcperm/errors.h"
#include "test_util.h"

namespace rcperm {
namespace {

using ::rcperm::testing::AllPermutations;
using ::rcperm::testing::RandomPermutation;

TEST(ScoringTest, HandComputedValues) {
  // (1,3,2): only the full sequence switches.
  EXPECT_EQ(TotalSwitchesBrute(Parse("132")).total_switches, 1);
  EXPECT_EQ(TotalSwitchesFast(Parse("132")).total_switches, 1);
  // (2,1,4,3): switch triples (1,2,3),(1,2,4),(1,3,4),(2,3,4) weigh
  // 2,1,1,2.
  EXPECT_EQ(TotalSwitchesBrute(Parse("2143")).total_switches, 6);
  EXPECT_EQ(TotalSwitchesFast(Parse("2143")).total_switches, 6);
  EXPECT_EQ(TotalSwitchesFast(Parse("2143")).own_switches, 2);
}

TEST(ScoringTest, FrozenMaximaOfReferenceSets) {
  // Brute-force values of one reference member per n.
  const std::pair<const char*, int> cases[] = {
      {"132", 1},        {"2143", 6},          {"24153", 21},
      {"326154", 64},    {"3517264", 171},     {"43718265", 434},
      {"471639285", 1057},
  };
  for (const auto& [text, t] : cases) {
    EXPECT_EQ(TotalSwitchesFast(Parse(text)).total_switches, t) << text;
    EXPECT_EQ(TotalSwitchesBrute(Parse(text)).total_switches, t) << text;
  }
}

TEST(ScoringTest, MonotoneScoresZero) {
  for (int n = 1; n <= 20; ++n) {
    const Permutation id = Permutation::Identity(n);
    EXPECT_EQ(TotalSwitchesFast(id).total_switches, 0);
    EXPECT_EQ(TotalSwitchesFast(Reverse(id)).total_switches, 0);
  }
  EXPECT_EQ(TotalSwitchesBrute(Permutation::Identity(12)).total_switches, 0);
}

TEST(ScoringTest, ArgmaxOverS4) {
  SwitchTotal best = 0;
  std::vector<std::string> argmax;
  for (const Permutation& p : AllPermutations(4)) {
    const SwitchTotal t = TotalSwitchesFast(p).total_switches;
    if (t > best) {
      best = t;
      argmax.clear();
    }
    if (t == best) argmax.push_back(p.ToCompactString());
  }
  EXPECT_EQ(best, 6);
  EXPECT_EQ(argmax, (std::vector<std::string>{"2143", "2413", "3142", "3412"}));
}

TEST(ScoringTest, FastMatchesBruteExhaustively) {
  for (int n = 1; n <= 8; ++n) {
    for (const Permutation& p : AllPermutations(n)) {
      const ScoreReport fast = TotalSwitchesFast(p);
      const ScoreReport brute = TotalSwitchesBrute(p);
      ASSERT_EQ(fast.total_switches, brute.total_switches) << p.ToString();
      EXPECT_EQ(fast.own_switches, brute.own_switches);
    }
  }
}

TEST(ScoringTest, FastMatchesBruteOnSamples) {
  std::mt19937_64 rng(20260101);
  for (int n = 9; n <= 13; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const Permutation p = RandomPermutation(rng, n);
      ASSERT_EQ(TotalSwitchesFast(p).total_switches,
                TotalSwitchesBrute(p).total_switches)
          << p.ToString();
    }
  }
}

TEST(ScoringTest, ReportInvariantsAndSymmetry) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const Permutation p = RandomPermutation(rng, 2 + trial % 15);
    const ScoreReport r = TotalSwitchesFast(p);
    EXPECT_GE(r.total_switches, static_cast<SwitchTotal>(r.own_switches));
    const bool monotone = r.perm == Permutation::Identity(p.size()) ||
                          r.perm == Reverse(Permutation::Identity(p.size()));
    EXPECT_EQ(r.total_switches == 0, monotone) << p.ToString();
    EXPECT_EQ(TotalSwitchesFast(Reverse(p)).total_switches, r.total_switches);
    EXPECT_EQ(TotalSwitchesFast(Complement(p)).total_switches, r.total_switches);
  }
}

TEST(ScoringTest, WideValuesStayExact) {
  // n = 64 zigzag: every weight is far beyond 64 bits.
  std::vector<int> v;
  for (int i = 0; i < 32; ++i) {
    v.push_back(2 * i + 2);
    v.push_back(2 * i + 1);
  }
  const Permutation p(v);
  const SwitchTotal t = TotalSwitchesFast(p).total_switches;
  EXPECT_GT(t, static_cast<SwitchTotal>(~std::uint64_t{0}));
  EXPECT_EQ(TotalSwitchesFast(Reverse(p)).total_switches, t);
  EXPECT_EQ(TotalSwitchesFast(Complement(p)).total_switches, t);
  EXPECT_EQ(ParseDecimal(ToDecimal(t)), t);
}

TEST(ScoringTest, Guards) {
  EXPECT_THROW(TotalSwitchesBrute(Permutation::Identity(21)), GuardError);
  EXPECT_NO_THROW(TotalSwitchesBrute(Permutation::Identity(3), 3));
  EXPECT_THROW(TotalSwitchesBrute(Permutation::Identity(4), 3), GuardError);
  EXPECT_THROW(TotalSwitchesFast(Permutation::Identity(65)), GuardError);
}

TEST(DecimalTest, RoundTripAndErrors) {
  EXPECT_EQ(ToDecimal(0), "0");
  EXPECT_EQ(ToDecimal(1057), "1057");
  const SwitchTotal max = ~SwitchTotal{0};
  EXPECT_EQ(ToDecimal(max), "340282366920938463463374607431768211455");
  EXPECT_EQ(ParseDecimal("340282366920938463463374607431768211455"), max);
  EXPECT_THROW(ParseDecimal("340282366920938463463374607431768211456"),
               std::invalid_argument);
  EXPECT_THROW(ParseDecimal(""), std::invalid_argument);
  EXPECT_THROW(ParseDecimal("12x"), std::invalid_argument);
}

}  // namespace
}  // namespace rcperm
