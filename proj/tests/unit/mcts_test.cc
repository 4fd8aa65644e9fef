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

#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgmcts/policy/local.h"
#include "sgmcts/propcalc/environment.h"
#include "sgmcts/search/mcts.h"
#include "support/trace_replay.h"
#include "unit/test_util.h"

namespace sgmcts {
namespace {

using propcalc::PropCalcEnv;
using testing::MakeTask;
using Env = PropCalcEnv;
using Tree = SearchTree<Env>;
using Stack = GoalStack<propcalc::Goal>;

// Returns the same candidate list every time, or throws when empty and
// `fail` is set.
class ScriptedPolicy : public Policy<Env> {
 public:
  explicit ScriptedPolicy(std::vector<Action> candidates, bool fail = false)
      : candidates_(std::move(candidates)), fail_(fail) {}
  std::vector<Action> SampleCandidates(const propcalc::ProofState&,
                                       const propcalc::Goal&, int k,
                                       Rng&) override {
    ++calls;
    if (fail_) throw PolicyFailure("offline");
    std::vector<Action> out = candidates_;
    if (static_cast<int>(out.size()) > k) out.resize(static_cast<std::size_t>(k));
    return out;
  }
  DeterminismClass determinism() const override {
    return DeterminismClass::kDeterministic;
  }
  int calls = 0;

 private:
  std::vector<Action> candidates_;
  bool fail_;
};

Tree RootTree(const Env& env) {
  return Tree(env.initial_state(), Stack(env.root_goal()));
}

NodeId Grow(Tree& tree, const Env& env, NodeId parent, const Action& action) {
  const auto& n = tree.node(parent);
  auto out = Step(env, n.state, n.goals, action);
  EXPECT_NE(out.case_tag, TransitionCase::kNoOp) << action;
  return tree.AddChild(parent, action, std::move(out));
}

TEST(UcbScore, Examples) {
  EXPECT_NEAR(UcbScore(0.0, 1, 1, 1.0, UcbVariant::kParentVisits), 0.0, 1e-4);
  EXPECT_NEAR(UcbScore(0.5, 2, 10, 1.0, UcbVariant::kParentVisits), 1.5729,
              1e-4);
  EXPECT_NEAR(UcbScore(0.5, 4, 0, 1.0, UcbVariant::kNodeVisits), 1.0887,
              1e-4);
  EXPECT_NEAR(UcbScore(0.5, 4, 999, 1.0, UcbVariant::kNodeVisits), 1.0887,
              1e-4);
}

TEST(UcbScore, DomainErrors) {
  EXPECT_THROW(UcbScore(0.0, 0, 5, 1.0, UcbVariant::kParentVisits),
               std::domain_error);
  EXPECT_THROW(UcbScore(0.0, 0, 5, 1.0, UcbVariant::kNodeVisits),
               std::domain_error);
  EXPECT_THROW(UcbScore(0.0, 1, 0, 1.0, UcbVariant::kParentVisits),
               std::domain_error);
}

class SelectTest : public ::testing::Test {
 protected:
  Env env{MakeTask({{"h", "A"}, {"k", "B"}}, "A ∧ B")};
  Tree tree = RootTree(env);
  SearchConfig config;

  void Visit(NodeId id, std::int64_t n, double w) {
    tree.node(id).visits = n;
    tree.node(id).value = w;
  }
};

TEST_F(SelectTest, SingleNode) {
  EXPECT_EQ(Select(tree, config), (std::vector<NodeId>{0}));
}

TEST_F(SelectTest, ArgmaxChild) {
  NodeId a = Grow(tree, env, 0, "have c : A");
  NodeId b = Grow(tree, env, 0, "have d : B");
  tree.SetStatus(0, NodeStatus::kChildrenFull);
  Visit(0, 2, 1.1);
  Visit(a, 1, 0.2);
  Visit(b, 1, 0.9);
  EXPECT_EQ(Select(tree, config), (std::vector<NodeId>{0, b}));
}

TEST_F(SelectTest, TiesGoToEarliestChild) {
  NodeId a = Grow(tree, env, 0, "have c : A");
  Grow(tree, env, 0, "have d : B");
  tree.SetStatus(0, NodeStatus::kChildrenFull);
  Visit(0, 2, 1.0);
  Visit(a, 1, 0.5);
  Visit(2, 1, 0.5);
  EXPECT_EQ(Select(tree, config), (std::vector<NodeId>{0, a}));
}

TEST_F(SelectTest, SkipsExhaustedSubtrees) {
  NodeId a = Grow(tree, env, 0, "have c : A");
  NodeId b = Grow(tree, env, 0, "have d : B");
  tree.SetStatus(0, NodeStatus::kChildrenFull);
  Visit(0, 2, 5.0);
  Visit(a, 1, 5.0);
  Visit(b, 1, 0.0);
  tree.SetStatus(a, NodeStatus::kExpansionExhausted);
  EXPECT_EQ(Select(tree, config), (std::vector<NodeId>{0, b}));
  tree.SetStatus(b, NodeStatus::kExpansionExhausted);
  EXPECT_THROW(Select(tree, config), NoSelectableNode);
}

TEST_F(SelectTest, TraversesFullNodes) {
  NodeId a = Grow(tree, env, 0, "have c : A");
  NodeId aa = Grow(tree, env, a, "exact h");
  tree.SetStatus(0, NodeStatus::kExpansionExhausted);
  tree.SetStatus(a, NodeStatus::kChildrenFull);
  Visit(0, 2, 0.0);
  Visit(a, 2, 0.0);
  Visit(aa, 1, 0.0);
  EXPECT_EQ(Select(tree, config), (std::vector<NodeId>{0, a, aa}));
}

TEST_F(SelectTest, NeverEntersTerminalNodes) {
  Env easy(MakeTask({{"h", "A"}}, "A"));
  Tree t = RootTree(easy);
  NodeId done = Grow(t, easy, 0, "exact h");
  EXPECT_EQ(t.node(done).status, NodeStatus::kTerminal);
  t.node(0).visits = 1;
  t.node(done).visits = 1;
  EXPECT_EQ(Select(t, config), (std::vector<NodeId>{0}));
  t.SetStatus(0, NodeStatus::kExpansionExhausted);
  EXPECT_THROW(Select(t, config), NoSelectableNode);
}

class ExpandTest : public SelectTest {
 protected:
  Rng rng{1};
};

TEST_F(ExpandTest, FirstValidCandidateWins) {
  ScriptedPolicy policy({"split", "exact h"});
  auto r = Expand(tree, 0, policy, env, config, rng, 10);
  ASSERT_TRUE(r.child);
  EXPECT_EQ(tree.node(*r.child).action, "split");
  EXPECT_EQ(tree.node(*r.child).incoming, TransitionCase::kGoalPushed);
  EXPECT_EQ(tree.node(0).failed_trials, 0);
  EXPECT_EQ(r.trials, 1);
  EXPECT_EQ(r.samples, 1);
  EXPECT_EQ(tree.node(0).status, NodeStatus::kOpen);
}

TEST_F(ExpandTest, AllInvalidExhausts) {
  std::vector<Action> junk(10, "intro");
  for (int i = 0; i < 10; ++i) junk[static_cast<std::size_t>(i)] += std::to_string(i);
  ScriptedPolicy policy(junk);
  auto r = Expand(tree, 0, policy, env, config, rng, 10);
  EXPECT_FALSE(r.child);
  EXPECT_EQ(tree.node(0).status, NodeStatus::kExpansionExhausted);
  EXPECT_EQ(tree.node(0).failed_trials, 10);
  EXPECT_EQ(r.samples, 10);
  ASSERT_EQ(r.status_changes.size(), 1u);
  EXPECT_EQ(r.status_changes[0].second, NodeStatus::kExpansionExhausted);
}

TEST_F(ExpandTest, ShortCandidateListsCountAsFailures) {
  ScriptedPolicy policy({"bogus"});
  auto r = Expand(tree, 0, policy, env, config, rng, 10);
  EXPECT_FALSE(r.child);
  EXPECT_EQ(r.trials, 10);
  EXPECT_EQ(r.samples, 1);
  EXPECT_EQ(tree.node(0).status, NodeStatus::kExpansionExhausted);
}

TEST_F(ExpandTest, DuplicatesAreFailedTrials) {
  ScriptedPolicy policy({"split", "  split ", "have c : A"});
  auto first = Expand(tree, 0, policy, env, config, rng, 10);
  ASSERT_TRUE(first.child);
  auto second = Expand(tree, 0, policy, env, config, rng, 10);
  ASSERT_TRUE(second.child);
  EXPECT_EQ(tree.node(*second.child).action, "have c : A");
  EXPECT_EQ(second.trials, 3);
  EXPECT_EQ(tree.node(0).failed_trials, 2);
}

TEST_F(ExpandTest, ChildCapMarksFull) {
  config.max_children = 10;
  std::vector<Action> proposals = {"split"};
  const char* atoms[] = {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"};
  for (const char* a : atoms) proposals.push_back(std::string("have c : ") + a);
  ScriptedPolicy policy(proposals);
  for (int i = 0; i < 9; ++i) {
    auto r = Expand(tree, 0, policy, env, config, rng, 10);
    ASSERT_TRUE(r.child);
    EXPECT_EQ(tree.node(0).status, NodeStatus::kOpen);
  }
  EXPECT_EQ(tree.node(0).children.size(), 9u);
  auto r = Expand(tree, 0, policy, env, config, rng, 10);
  ASSERT_TRUE(r.child);
  EXPECT_EQ(tree.node(0).status, NodeStatus::kChildrenFull);
  EXPECT_EQ(r.status_changes.back().second, NodeStatus::kChildrenFull);
  EXPECT_THROW(Expand(tree, 0, policy, env, config, rng, 10), std::logic_error);
}

TEST_F(ExpandTest, PolicyFailureIsAFailedTrial) {
  ScriptedPolicy policy({}, true);
  auto r = Expand(tree, 0, policy, env, config, rng, 10);
  EXPECT_FALSE(r.child);
  EXPECT_EQ(r.policy_failures, 10);
  EXPECT_EQ(r.samples, 10);
  EXPECT_EQ(policy.calls, 10);
  EXPECT_EQ(tree.node(0).status, NodeStatus::kExpansionExhausted);
}

TEST_F(ExpandTest, PartialAllowanceDoesNotExhaust) {
  ScriptedPolicy policy({"bad", "worse", "split"});
  auto r = Expand(tree, 0, policy, env, config, rng, 2);
  EXPECT_FALSE(r.child);
  EXPECT_EQ(r.samples, 2);
  EXPECT_EQ(tree.node(0).status, NodeStatus::kOpen);
}

TEST(Estimate, Examples) {
  RewardSpec spec;
  spec.lambda = 0.5;

  Env easy(MakeTask({{"h", "A"}}, "A"));
  Tree t1 = RootTree(easy);
  NodeId done = Grow(t1, easy, 0, "exact h");
  spec.recipe = EstimationRecipe::kRootOnly;
  EXPECT_DOUBLE_EQ(Estimate(easy, t1, done, spec), 1.5);

  Env env(MakeTask({{"h", "A"}, {"k", "B"}}, "(A ∧ B) ∨ C"));
  Tree t2 = RootTree(env);
  NodeId n = Grow(t2, env, 0, "have c : A");
  n = Grow(t2, env, n, "exact h");
  n = Grow(t2, env, n, "have d : B");
  n = Grow(t2, env, n, "exact k");
  n = Grow(t2, env, n, "left");
  EXPECT_EQ(t2.node(n).solved_conjectures, 2);
  spec.recipe = EstimationRecipe::kSolvedConjectureCount;
  spec.conjecture_weight = 0.1;
  EXPECT_NEAR(Estimate(env, t2, n, spec), 0.2, 1e-12);

  Env hard(MakeTask({}, "A → (B → A)"));
  Tree t3 = RootTree(hard);
  NodeId first = Grow(t3, hard, 0, "intro h");
  spec.recipe = EstimationRecipe::kDepthWeighted;
  spec.depth_weight = 0.01;
  EXPECT_NEAR(Estimate(hard, t3, first, spec), 0.01, 1e-12);

  spec.recipe = EstimationRecipe::kCombined;
  EXPECT_NEAR(Estimate(env, t2, n, spec), 0.2 + 0.05, 1e-12);
}

TEST(Estimate, UsesTheConditioningGoal) {
  RewardSpec spec;
  spec.lambda = 0.5;
  spec.recipe = EstimationRecipe::kRootOnly;
  Env env(MakeTask({{"h", "A"}}, "A ∨ B"));
  Tree t = RootTree(env);
  NodeId c = Grow(t, env, 0, "have c : A");
  NodeId solved = Grow(t, env, c, "exact h");
  EXPECT_DOUBLE_EQ(Estimate(env, t, solved, spec), 0.5);
}

TEST(Backpropagate, Examples) {
  Env env(MakeTask({}, "A → (B → A)"));
  Tree t = RootTree(env);
  NodeId a = Grow(t, env, 0, "intro h");
  NodeId b = Grow(t, env, a, "intro h1");
  Backpropagate(t, {0, a, b}, 1.5);
  for (NodeId id : {0, a, b}) {
    EXPECT_EQ(t.node(id).visits, 1);
    EXPECT_DOUBLE_EQ(t.node(id).value, 1.5);
  }
  Backpropagate(t, {0, a, b}, 0.0);
  for (NodeId id : {0, a, b}) {
    EXPECT_EQ(t.node(id).visits, 2);
    EXPECT_DOUBLE_EQ(t.node(id).value, 1.5);
  }
  Backpropagate(t, {0}, 1.0);
  Backpropagate(t, {0}, 1.0);
  EXPECT_EQ(t.node(0).visits, 4);
  EXPECT_DOUBLE_EQ(t.node(0).value, 3.5);
}

TEST(ExtractProof, HavePath) {
  Env env(MakeTask({{"h", "A"}}, "A"), propcalc::EnvOptions{false});
  Tree t = RootTree(env);
  NodeId n = Grow(t, env, 0, "have c : A");
  n = Grow(t, env, n, "exact h");
  n = Grow(t, env, n, "exact c");
  auto proof = ExtractProof(t, n);
  EXPECT_EQ(proof, (std::vector<Action>{"have c : A", "exact h", "exact c"}));
  EXPECT_TRUE(env.check_proof(proof));
  EXPECT_THROW(ExtractProof(t, 0), NotTerminal);

  Tree single = RootTree(env);
  NodeId leaf = Grow(single, env, 0, "exact h");
  EXPECT_EQ(ExtractProof(single, leaf), (std::vector<Action>{"exact h"}));
}

TEST(Search, OneStepTask) {
  Env env(MakeTask({{"h", "A"}}, "A"));
  EnumerationPolicy policy(env);
  auto r = Search(env, policy, SearchConfig{});
  EXPECT_EQ(r.outcome, SearchOutcome::kProved);
  EXPECT_EQ(r.iterations_used, 1);
  EXPECT_EQ(r.proof, (std::vector<Action>{"exact h"}));
  EXPECT_EQ(r.stop_reason, StopReason::kProofFound);
}

TEST(Search, UnprovableTaskExhaustsBudget) {
  Env env(MakeTask({}, "A"));
  EnumerationPolicy policy(env);
  SearchConfig config;
  config.max_iterations = 50;
  auto r = Search(env, policy, config);
  EXPECT_EQ(r.outcome, SearchOutcome::kBudgetExhausted);
  EXPECT_FALSE(r.proof);
  EXPECT_LE(r.iterations_used, 50);
}

TEST(Search, IterationBounds) {
  Env env(MakeTask({{"h", "A"}}, "A"));
  ScriptedPolicy policy({"exact h"});
  SearchConfig config;
  config.max_iterations = 0;
  EXPECT_THROW(Search(env, policy, config), std::invalid_argument);
  config.max_iterations = 1;
  auto r = Search(env, policy, config);
  EXPECT_EQ(r.outcome, SearchOutcome::kProved);
}

TEST(Search, SampleBudgetStopsSearch) {
  Env env(MakeTask({{"h", "A ∧ B"}, {"k", "C ∨ D"}}, "(B ∧ A) ∧ (D ∨ C)"));
  ScriptedPolicy policy({"nope", "still nope", "no"});
  SearchConfig config;
  config.sample_budget = 7;
  auto r = Search(env, policy, config);
  EXPECT_EQ(r.stop_reason, StopReason::kSampleBudget);
  EXPECT_LE(r.policy_samples_used, 7);
}

TEST(Search, TraceReplaysCleanly) {
  Env env(MakeTask({{"h", "A ∧ B"}, {"k", "C ∨ D"}}, "(B ∧ A) ∧ (D ∨ C)"));
  StochasticPolicy policy(env, StochasticPolicyOptions{0.3});
  SearchConfig config;
  config.max_children = 3;
  config.max_expansion_trials = 4;
  config.seed = 5;
  std::stringstream trace;
  auto r = Search(env, policy, config, &trace);
  auto replay = testing::ReplayTrace(trace, config.max_children);
  EXPECT_EQ(replay.iterations, r.iterations_used);
  for (const auto& v : replay.violations) ADD_FAILURE() << v;

  trace.clear();
  trace.seekg(0);
  std::string line;
  std::getline(trace, line);
  auto record = nlohmann::json::parse(line);
  for (const char* key : {"iter", "selected_path", "action_text", "case",
                          "reward", "N_root", "W_root", "status_changes",
                          "child", "samples"}) {
    EXPECT_TRUE(record.contains(key)) << key;
  }
}

TEST(TraceReplay, DetectsTampering) {
  Env env(MakeTask({{"h", "A ∧ B"}, {"k", "C ∨ D"}}, "(B ∧ A) ∧ (D ∨ C)"));
  StochasticPolicy policy(env, StochasticPolicyOptions{0.3});
  SearchConfig config;
  config.max_children = 2;
  config.seed = 9;
  std::stringstream trace;
  Search(env, policy, config, &trace);
  std::vector<nlohmann::json> lines;
  std::string line;
  while (std::getline(trace, line)) lines.push_back(nlohmann::json::parse(line));
  ASSERT_GE(lines.size(), 4u);

  auto replay = [&](const std::vector<nlohmann::json>& records) {
    std::stringstream out;
    for (const auto& r : records) out << r.dump() << '\n';
    return testing::ReplayTrace(out, config.max_children).violations.size();
  };
  EXPECT_EQ(replay(lines), 0u);

  auto bad_n = lines;
  bad_n[2]["N_root"] = bad_n[2]["N_root"].get<int>() + 1;
  EXPECT_GT(replay(bad_n), 0u);

  auto bad_w = lines;
  bad_w[1]["W_root"] = bad_w[1]["W_root"].get<double>() + 0.5;
  EXPECT_GT(replay(bad_w), 0u);

  auto bad_path = lines;
  bad_path[3]["selected_path"] = nlohmann::json::array({0, 12345});
  EXPECT_GT(replay(bad_path), 0u);

  auto reordered = lines;
  std::swap(reordered[1], reordered[2]);
  EXPECT_GT(replay(reordered), 0u);
}

TEST(Search, DeterministicForSeededPolicies) {
  Env env(MakeTask({{"h", "A ∧ B"}, {"k", "C ∨ D"}}, "(B ∧ A) ∧ (D ∨ C)"));
  auto run = [&](std::uint64_t seed) {
    StochasticPolicy policy(env, StochasticPolicyOptions{0.2});
    SearchConfig config;
    config.seed = seed;
    std::stringstream trace;
    Search(env, policy, config, &trace);
    return trace.str();
  };
  EXPECT_EQ(run(3), run(3));
  EXPECT_NE(run(3), run(4));
}

}  // namespace
}  // namespace sgmcts
