// Copyright 2026 The sgmcts Authors
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


#include <gtest/gtest.h>

#include "sgmcts/policy/local.h"
#include "sgmcts/propcalc/environment.h"
#include "sgmcts/sgmdp/transition.h"
#include "unit/test_util.h"

namespace sgmcts {
namespace {

using propcalc::PropCalcEnv;
using testing::MakeTask;

TEST(EnumerationPolicy, CanonicalPrefix) {
  PropCalcEnv env(MakeTask({{"h", "A"}}, "A"));
  EnumerationPolicy policy(env);
  Rng rng(0);
  auto s = env.initial_state();
  auto g = env.root_goal();
  auto three = policy.SampleCandidates(s, g, 3, rng);
  ASSERT_FALSE(three.empty());
  EXPECT_LE(three.size(), 3u);
  EXPECT_EQ(three[0], "exact h");
  EXPECT_TRUE(policy.SampleCandidates(s, g, 0, rng).empty());
  EXPECT_EQ(policy.SampleCandidates(s, g, 3, rng), three);
  EXPECT_EQ(policy.determinism(), DeterminismClass::kDeterministic);
}

TEST(EnumerationPolicy, MatchesEnvironmentList) {
  PropCalcEnv env(MakeTask({{"h", "A ∧ B"}, {"f", "C → (B ∧ A)"}}, "B ∧ A"));
  EnumerationPolicy policy(env);
  Rng rng(0);
  auto all = env.enumerate_actions(env.initial_state(), env.root_goal());
  for (int k = 0; k <= static_cast<int>(all.size()) + 2; ++k) {
    auto got = policy.SampleCandidates(env.initial_state(), env.root_goal(), k,
                                       rng);
    ASSERT_EQ(got.size(), std::min<std::size_t>(all.size(),
                                                static_cast<std::size_t>(k)));
    EXPECT_TRUE(std::equal(got.begin(), got.end(), all.begin()));
  }
}

// A start state with at least ten valid actions.
PropCalcEnv WideEnv() {
  return PropCalcEnv(MakeTask({{"p", "A ∧ B"},
                               {"q", "C ∨ D"},
                               {"r", "E ∧ F"},
                               {"s", "A ∧ C"}},
                              "(A ∧ B) ∧ (C ∧ D)"));
}

TEST(StochasticPolicy, EpsilonOneIsAllInvalid) {
  auto env = WideEnv();
  StochasticPolicy policy(env, StochasticPolicyOptions{1.0});
  Rng rng(8);
  auto s = env.initial_state();
  auto g = env.root_goal();
  auto c = policy.SampleCandidates(s, g, 10, rng);
  ASSERT_EQ(c.size(), 10u);
  for (const auto& a : c) {
    EXPECT_EQ(ClassifyAction(env, s, g, a), ActionClass::kInvalid) << a;
  }
}

TEST(StochasticPolicy, SeedDeterminism) {
  auto env = WideEnv();
  StochasticPolicy policy(env);
  auto draw = [&](std::uint64_t seed) {
    Rng rng(seed);
    return policy.SampleCandidates(env.initial_state(), env.root_goal(), 6,
                                   rng);
  };
  EXPECT_EQ(draw(1), draw(1));
  bool differs = false;
  for (std::uint64_t seed = 2; seed < 10 && !differs; ++seed) {
    differs = draw(seed) != draw(1);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(policy.determinism(), DeterminismClass::kSeededStochastic);
}

TEST(StochasticPolicy, NoRepeatsAndCap) {
  auto env = WideEnv();
  StochasticPolicy policy(env);
  Rng rng(4);
  auto all = env.enumerate_actions(env.initial_state(), env.root_goal());
  for (int k : {0, 1, 5, 10, 40}) {
    auto c = policy.SampleCandidates(env.initial_state(), env.root_goal(), k,
                                     rng);
    EXPECT_EQ(c.size(), std::min<std::size_t>(all.size(),
                                              static_cast<std::size_t>(k)));
    std::set<Action> unique(c.begin(), c.end());
    EXPECT_EQ(unique.size(), c.size());
  }
}

TEST(StochasticPolicy, InvalidRateWithinBinomialBounds) {
  auto env = WideEnv();
  auto s = env.initial_state();
  auto g = env.root_goal();
  ASSERT_GE(env.enumerate_actions(s, g).size(), 10u);
  StochasticPolicy policy(env, StochasticPolicyOptions{0.3});
  Rng rng(2024);
  const int draws = 10000;
  long invalid = 0;
  for (int i = 0; i < draws; ++i) {
    auto c = policy.SampleCandidates(s, g, 10, rng);
    ASSERT_EQ(c.size(), 10u);
    for (const auto& a : c) {
      invalid += ClassifyAction(env, s, g, a) == ActionClass::kInvalid;
    }
  }
  const double n = 10.0 * draws;
  const double mean = 0.3 * n;
  const double sd = std::sqrt(n * 0.3 * 0.7);
  EXPECT_NEAR(static_cast<double>(invalid), mean, 2.576 * sd);
}

TEST(StochasticPolicy, RejectsBadOptions) {
  auto env = WideEnv();
  EXPECT_THROW(StochasticPolicy(env, StochasticPolicyOptions{1.5}),
               std::invalid_argument);
  StochasticPolicyOptions negative;
  negative.cases_weight = -1.0;
  EXPECT_THROW(StochasticPolicy(env, negative), std::invalid_argument);
}

TEST(StochasticPolicy, ConjectureWeightZeroDisablesHave) {
  auto env = WideEnv();
  StochasticPolicyOptions options;
  options.conjecture_weight = 0.0;
  StochasticPolicy policy(env, options);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    for (const auto& a : policy.SampleCandidates(env.initial_state(),
                                                 env.root_goal(), 10, rng)) {
      EXPECT_FALSE(a.starts_with("have")) << a;
    }
  }
}

}  // namespace
}  // namespace sgmcts
