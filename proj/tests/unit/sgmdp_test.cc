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

#include <random>
#include <vector>

#include "sgmcts/policy/local.h"
#include "sgmcts/propcalc/corpus.h"
#include "sgmcts/propcalc/environment.h"
#include "sgmcts/sgmdp/goal_stack.h"
#include "sgmcts/sgmdp/reward.h"
#include "sgmcts/sgmdp/transition.h"
#include "unit/test_util.h"

namespace sgmcts {
namespace {

using propcalc::Goal;
using propcalc::PropCalcEnv;
using testing::F;
using testing::MakeTask;
using Stack = GoalStack<Goal>;

TEST(GoalStack, PushAndRemoveLast) {
  Stack s(Goal{"", F("A")});
  EXPECT_EQ(s.size(), 1u);
  auto pushed = s.Pushed(Goal{"c", F("B")});
  EXPECT_EQ(pushed.size(), 2u);
  EXPECT_EQ(pushed.top().label, "c");
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(pushed.RemoveLast(), s);
  auto empty = s.RemoveLast();
  EXPECT_TRUE(empty.empty());
  EXPECT_THROW(empty.top(), EmptyGoalStack);
  EXPECT_THROW(empty.RemoveLast(), EmptyGoalStack);
  EXPECT_EQ(pushed.Serialize([](const Goal& g) { return g.label + "!"; }),
            "[! | c!]");
}

TEST(ClassifyAction, Examples) {
  PropCalcEnv env(MakeTask({{"h", "A ∧ B"}}, "A ∧ B"));
  auto s = env.initial_state();
  auto g = env.root_goal();
  EXPECT_EQ(ClassifyAction(env, s, g, "exact h"), ActionClass::kPrimitive);
  EXPECT_EQ(ClassifyAction(env, s, g, "have c : A"),
            ActionClass::kGoalProposal);
  EXPECT_EQ(ClassifyAction(env, s, g, ""), ActionClass::kInvalid);
}

TEST(Step, FourCases) {
  PropCalcEnv env(MakeTask({{"h", "A"}}, "A"), propcalc::EnvOptions{false});
  auto s = env.initial_state();
  Stack goals(env.root_goal());

  auto noop = Step(env, s, goals, "intro q");
  EXPECT_EQ(noop.case_tag, TransitionCase::kNoOp);
  EXPECT_EQ(noop.next_state, s);
  EXPECT_EQ(noop.next_goals, goals);
  EXPECT_FALSE(noop.solved_root);

  auto pushed = Step(env, s, goals, "have c : A");
  EXPECT_EQ(pushed.case_tag, TransitionCase::kGoalPushed);
  EXPECT_EQ(pushed.next_state, s);
  EXPECT_EQ(pushed.next_goals, goals.Pushed(Goal{"c", F("A")}));

  auto solved = Step(env, pushed.next_state, pushed.next_goals, "exact h");
  EXPECT_EQ(solved.case_tag, TransitionCase::kGoalSolved);
  EXPECT_EQ(solved.next_goals, goals);
  EXPECT_FALSE(solved.solved_root);
  EXPECT_TRUE(env.goal_solved(solved.next_state, Goal{"c", F("A")}));

  auto root = Step(env, solved.next_state, solved.next_goals, "exact c");
  EXPECT_EQ(root.case_tag, TransitionCase::kGoalSolved);
  EXPECT_TRUE(root.next_goals.empty());
  EXPECT_TRUE(root.solved_root);
  EXPECT_THROW(Step(env, root.next_state, root.next_goals, "exact h"),
               EmptyGoalStack);

  PropCalcEnv imp(MakeTask({}, "A → A"));
  auto progressed =
      Step(imp, imp.initial_state(), Stack(imp.root_goal()), "intro h");
  EXPECT_EQ(progressed.case_tag, TransitionCase::kProgressed);
  EXPECT_EQ(progressed.next_goals.size(), 1u);
}

TEST(Step, RecordFields) {
  PropCalcEnv env(MakeTask({{"h", "A"}}, "A"));
  auto out = Step(env, env.initial_state(), Stack(env.root_goal()), "exact h");
  auto record = ToRecord(env, out);
  EXPECT_EQ(record["case"], "GoalSolved");
  EXPECT_EQ(record["goals"], "[]");
  EXPECT_EQ(record["solved_root"], true);
  EXPECT_EQ(record["state"], "no goals | proven: | history: exact h");
}

TEST(ShapedReward, Examples) {
  RewardSpec spec;
  spec.lambda = 0.5;
  PropCalcEnv env(MakeTask({{"h", "A"}}, "A ∨ B"));
  Stack goals(env.root_goal());
  auto s0 = env.initial_state();
  EXPECT_DOUBLE_EQ(ShapedReward(env, s0, goals, env.root_goal(), spec), 0.0);

  auto pushed = Step(env, s0, goals, "have c : A");
  auto solved = Step(env, pushed.next_state, pushed.next_goals, "exact h");
  // Measured against the stack that still holds the conjecture.
  EXPECT_DOUBLE_EQ(ShapedReward(env, solved.next_state, pushed.next_goals,
                                env.root_goal(), spec),
                   0.5);

  auto left = Step(env, solved.next_state, solved.next_goals, "left");
  auto done = Step(env, left.next_state, left.next_goals, "exact c");
  ASSERT_TRUE(done.next_goals.empty());
  EXPECT_DOUBLE_EQ(ShapedReward(env, done.next_state, done.next_goals,
                                env.root_goal(), spec),
                   1.5);
}

TEST(ShapedReward, MonotoneInLambda) {
  PropCalcEnv env(MakeTask({{"h", "A"}}, "A ∨ B"));
  auto pushed =
      Step(env, env.initial_state(), Stack(env.root_goal()), "have c : A");
  auto solved = Step(env, pushed.next_state, pushed.next_goals, "exact h");
  double previous = -1.0;
  for (double lambda = 0.0; lambda <= 4.0; lambda += 0.25) {
    RewardSpec spec;
    spec.lambda = lambda;
    double r = ShapedReward(env, solved.next_state, pushed.next_goals,
                            env.root_goal(), spec);
    EXPECT_GE(r, previous);
    previous = r;
  }
}

TEST(DiscountedReturn, Examples) {
  EXPECT_DOUBLE_EQ(DiscountedReturn(std::vector<double>{1.0}, 0.9), 1.0);
  EXPECT_DOUBLE_EQ(DiscountedReturn(std::vector<double>{0, 0, 1.5}, 1.0), 1.5);
  EXPECT_DOUBLE_EQ(DiscountedReturn(std::vector<double>{0.5, 1.5}, 0.5), 1.25);
  EXPECT_THROW(DiscountedReturn(std::vector<double>{1.0}, 0.0),
               std::invalid_argument);
  EXPECT_THROW(DiscountedReturn(std::vector<double>{1.0}, 1.5),
               std::invalid_argument);
}

TEST(RewardSpec, Validation) {
  RewardSpec spec;
  EXPECT_NO_THROW(spec.Validate());
  spec.lambda = -0.1;
  EXPECT_THROW(spec.Validate(), std::invalid_argument);
  spec = RewardSpec{};
  spec.gamma = 0.0;
  EXPECT_THROW(spec.Validate(), std::invalid_argument);
  spec = RewardSpec{};
  spec.conjecture_weight = std::numeric_limits<double>::infinity();
  EXPECT_THROW(spec.Validate(), std::invalid_argument);
  EXPECT_EQ(ParseEstimationRecipe("DepthWeighted"),
            EstimationRecipe::kDepthWeighted);
  EXPECT_THROW(ParseEstimationRecipe("Rollout"), std::invalid_argument);
}

// Random walks over generated tasks that mix valid and invalid actions. The
// case partition and the stack-size law are checked at every step.
TEST(Step, FuzzCasePartition) {
  auto tasks = propcalc::GenerateCorpus(21, 30, propcalc::DifficultyProfile{1, 5});
  std::mt19937_64 rng(99);
  int steps = 0;
  std::map<TransitionCase, int> seen;
  for (const auto& task : tasks) {
    PropCalcEnv env(task);
    for (int walk = 0; walk < 10; ++walk) {
      auto state = env.initial_state();
      Stack goals(env.root_goal());
      for (int t = 0; t < 12 && !goals.empty(); ++t) {
        auto options = env.enumerate_actions(state, goals.top());
        const auto& junk = InvalidActionPool();
        std::vector<Action> pool = options;
        pool.insert(pool.end(), junk.begin(), junk.end());
        pool.push_back("have z : " + task.target.ToString());
        pool.push_back("have c : A ∧ B");
        const Action& action = pool[rng() % pool.size()];

        auto cls = ClassifyAction(env, state, goals.top(), action);
        auto out = Step(env, state, goals, action);
        ++steps;
        ++seen[out.case_tag];
        long delta = static_cast<long>(out.next_goals.size()) -
                     static_cast<long>(goals.size());
        switch (out.case_tag) {
          case TransitionCase::kNoOp:
            EXPECT_EQ(delta, 0);
            EXPECT_EQ(out.next_state, state);
            EXPECT_EQ(out.next_goals, goals);
            break;
          case TransitionCase::kGoalPushed:
            EXPECT_EQ(delta, 1);
            EXPECT_NE(cls, ActionClass::kInvalid);
            if (cls == ActionClass::kGoalProposal) {
              EXPECT_EQ(out.next_state, state);
            }
            break;
          case TransitionCase::kGoalSolved:
            EXPECT_EQ(delta, -1);
            EXPECT_EQ(cls, ActionClass::kPrimitive);
            EXPECT_EQ(out.solved_root, out.next_goals.empty());
            break;
          case TransitionCase::kProgressed:
            EXPECT_EQ(delta, 0);
            EXPECT_EQ(cls, ActionClass::kPrimitive);
            break;
        }
        if (cls == ActionClass::kInvalid) {
          EXPECT_EQ(out.case_tag, TransitionCase::kNoOp);
        }
        state = out.next_state;
        goals = out.next_goals;
      }
    }
  }
  EXPECT_GE(steps, 2000);
  EXPECT_EQ(seen.size(), 4u);
}

}  // namespace
}  // namespace sgmcts
