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

#ifndef SGMCTS_SEARCH_MCTS_H_
#define SGMCTS_SEARCH_MCTS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgmcts/policy/policy.h"
#include "sgmcts/search/config.h"
#include "sgmcts/sgmdp/environment.h"
#include "sgmcts/sgmdp/goal_stack.h"
#include "sgmcts/sgmdp/reward.h"
#include "sgmcts/sgmdp/transition.h"

namespace sgmcts {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class NodeStatus { kOpen, kExpansionExhausted, kChildrenFull, kTerminal };

std::string_view ToString(NodeStatus s);

class NoSelectableNode : public std::runtime_error {
 public:
  NoSelectableNode() : std::runtime_error("no node is eligible for expansion") {}
};

class NotTerminal : public std::logic_error {
 public:
  NotTerminal() : std::logic_error("node still has open goals") {}
};

// Exploration score of a child. Throws std::domain_error when node_visits is
// zero (or parent_visits is zero for the parent-count variant).
double UcbScore(double mean_value, std::int64_t node_visits,
                std::int64_t parent_visits, double c, UcbVariant variant);

template <Environment E>
struct SearchNode {
  typename E::State state;
  GoalStack<typename E::Goal> goals;
  NodeId parent = kNoNode;
  Action action;  // edge label from the parent; empty at the root
  TransitionCase incoming = TransitionCase::kNoOp;

  std::int64_t visits = 0;  // N
  double value = 0.0;       // W
  std::vector<NodeId> children;  // creation order
  int failed_trials = 0;
  NodeStatus status = NodeStatus::kOpen;
  int depth = 0;
  int solved_conjectures = 0;  // GoalSolved edges from the root to here

  // Some node in this subtree (itself included) can still be expanded.
  bool selectable = true;

  double mean() const { return value / static_cast<double>(visits); }
};

// Arena-backed search tree. Node 0 is the root.
template <Environment E>
class SearchTree {
 public:
  using Node = SearchNode<E>;

  SearchTree(typename E::State state, GoalStack<typename E::Goal> goals) {
    Node root;
    root.state = std::move(state);
    root.goals = std::move(goals);
    if (root.goals.empty()) {
      root.status = NodeStatus::kTerminal;
      root.selectable = false;
    }
    nodes_.push_back(std::move(root));
  }

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  Node& node(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }

  NodeId AddChild(NodeId parent, Action action, TransitionOutcome<E> outcome) {
    Node child;
    child.state = std::move(outcome.next_state);
    child.goals = std::move(outcome.next_goals);
    child.parent = parent;
    child.action = std::move(action);
    child.incoming = outcome.case_tag;
    child.depth = node(parent).depth + 1;
    child.solved_conjectures =
        node(parent).solved_conjectures +
        (outcome.case_tag == TransitionCase::kGoalSolved ? 1 : 0);
    if (child.goals.empty()) {
      child.status = NodeStatus::kTerminal;
      child.selectable = false;
    }
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(child));
    node(parent).children.push_back(id);
    RefreshSelectable(parent);
    return id;
  }

  void SetStatus(NodeId id, NodeStatus status) {
    node(id).status = status;
    RefreshSelectable(id);
  }

 private:
  void RefreshSelectable(NodeId id) {
    while (id != kNoNode) {
      Node& n = node(id);
      bool selectable = n.status == NodeStatus::kOpen;
      for (NodeId c : n.children) selectable = selectable || node(c).selectable;
      if (selectable == n.selectable) return;
      n.selectable = selectable;
      id = n.parent;
    }
  }

  std::vector<Node> nodes_;
};

// Descends from the root by maximum UCB score (ties: earliest child) through
// subtrees that still contain an Open node, and returns the path to the first
// Open node reached. Exhausted and full nodes are traversed but never
// returned; terminal nodes are never entered.
template <Environment E>
std::vector<NodeId> Select(const SearchTree<E>& tree,
                           const SearchConfig& config) {
  NodeId current = tree.root();
  if (!tree.node(current).selectable) throw NoSelectableNode();
  std::vector<NodeId> path{current};
  while (tree.node(current).status != NodeStatus::kOpen) {
    const auto& parent = tree.node(current);
    NodeId best = kNoNode;
    double best_score = -std::numeric_limits<double>::infinity();
    for (NodeId id : parent.children) {
      const auto& child = tree.node(id);
      if (!child.selectable) continue;
      double score = UcbScore(child.mean(), child.visits, parent.visits,
                              config.exploration_c, config.ucb_variant);
      if (best == kNoNode || score > best_score) {
        best = id;
        best_score = score;
      }
    }
    if (best == kNoNode) throw NoSelectableNode();
    current = best;
    path.push_back(current);
  }
  return path;
}

std::string NormalizeAction(std::string_view action);

struct ExpansionResult {
  std::optional<NodeId> child;
  int trials = 0;            // candidates examined, plus backend failures
  std::int64_t samples = 0;  // candidates examined, plus backend failures
  int policy_failures = 0;
  std::vector<std::pair<NodeId, NodeStatus>> status_changes;
};

// Asks the policy for up to `trial_allowance` candidates (at most
// max_expansion_trials) for `id` and keeps the first that yields a non-NoOp
// transition and is not already a child. A full allowance with no success
// marks the node ExpansionExhausted; reaching max_children marks it
// ChildrenFull.
template <Environment E>
ExpansionResult Expand(SearchTree<E>& tree, NodeId id, Policy<E>& policy,
                       const E& env, const SearchConfig& config, Rng& rng,
                       int trial_allowance) {
  ExpansionResult result;
  const int allowance = std::min(trial_allowance, config.max_expansion_trials);
  auto& node = tree.node(id);
  if (node.status != NodeStatus::kOpen) {
    throw std::logic_error("expanding a node that is not Open");
  }

  auto duplicate = [&](const Action& action) {
    std::string key = NormalizeAction(action);
    for (NodeId c : tree.node(id).children) {
      if (NormalizeAction(tree.node(c).action) == key) return true;
    }
    return false;
  };

  while (result.trials < allowance) {
    std::vector<Action> candidates;
    try {
      candidates = policy.SampleCandidates(tree.node(id).state,
                                           tree.node(id).goals.top(),
                                           allowance - result.trials, rng);
    } catch (const PolicyFailure&) {
      ++result.trials;
      ++result.samples;
      ++result.policy_failures;
      continue;
    }
    const std::size_t usable = std::min<std::size_t>(
        candidates.size(), static_cast<std::size_t>(allowance - result.trials));
    for (std::size_t i = 0; i < usable; ++i) {
      ++result.trials;
      ++result.samples;
      const Action& action = candidates[i];
      if (duplicate(action)) continue;
      const auto& current = tree.node(id);
      auto outcome = Step(env, current.state, current.goals, action);
      if (outcome.case_tag == TransitionCase::kNoOp) continue;
      NodeId child = tree.AddChild(id, action, std::move(outcome));
      result.child = child;
      if (tree.node(child).status == NodeStatus::kTerminal) {
        result.status_changes.emplace_back(child, NodeStatus::kTerminal);
      }
      if (static_cast<int>(tree.node(id).children.size()) >=
          config.max_children) {
        tree.SetStatus(id, NodeStatus::kChildrenFull);
        result.status_changes.emplace_back(id, NodeStatus::kChildrenFull);
      }
      tree.node(id).failed_trials += result.trials - 1;
      return result;
    }
    // Whatever the policy did not supply counts as failed.
    result.trials = allowance;
  }
  tree.node(id).failed_trials += result.trials;
  if (allowance == config.max_expansion_trials) {
    tree.SetStatus(id, NodeStatus::kExpansionExhausted);
    result.status_changes.emplace_back(id, NodeStatus::kExpansionExhausted);
  }
  return result;
}

// Initial value of a freshly created node: the shaped reward of the child's
// state against the goal the expanding policy was conditioned on (the
// parent's top goal), plus the recipe's verified-progress terms.
template <Environment E>
double Estimate(const E& env, const SearchTree<E>& tree, NodeId child_id,
                const RewardSpec& spec) {
  const auto& child = tree.node(child_id);
  const auto& conditioning =
      child.parent == kNoNode ? child.goals : tree.node(child.parent).goals;
  double base =
      ShapedReward(env, child.state, conditioning, env.root_goal(), spec);
  double conjectures = spec.conjecture_weight * child.solved_conjectures;
  double depth = spec.depth_weight * child.depth;
  switch (spec.recipe) {
    case EstimationRecipe::kRootOnly:
      return base;
    case EstimationRecipe::kSolvedConjectureCount:
      return base + conjectures;
    case EstimationRecipe::kDepthWeighted:
      return base + depth;
    case EstimationRecipe::kCombined:
      return base + conjectures + depth;
  }
  return base;
}

// N += 1 and W += reward on every node of the path; no discounting.
template <Environment E>
void Backpropagate(SearchTree<E>& tree, const std::vector<NodeId>& path,
                   double reward) {
  for (NodeId id : path) {
    auto& n = tree.node(id);
    n.visits += 1;
    n.value += reward;
  }
}

// Edge labels from the root down to `id`, which must have no open goals.
template <Environment E>
std::vector<Action> ExtractProof(const SearchTree<E>& tree, NodeId id) {
  if (!tree.node(id).goals.empty()) throw NotTerminal();
  std::vector<Action> proof;
  for (NodeId n = id; n != tree.root(); n = tree.node(n).parent) {
    proof.push_back(tree.node(n).action);
  }
  std::reverse(proof.begin(), proof.end());
  return proof;
}

enum class SearchOutcome { kProved, kBudgetExhausted };

enum class StopReason { kProofFound, kIterationLimit, kNoSelectableNode,
                        kSampleBudget };

std::string_view ToString(SearchOutcome o);
std::string_view ToString(StopReason r);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::kBudgetExhausted;
  StopReason stop_reason = StopReason::kIterationLimit;
  std::optional<std::vector<Action>> proof;
  int iterations_used = 0;
  std::int64_t nodes_created = 0;
  std::int64_t policy_samples_used = 0;
  int policy_failures = 0;
  // Every checker-verified script reached, in discovery order.
  std::vector<std::vector<Action>> verified_proofs;
};

// Repeats select, expand, estimate and backpropagate. Stops at the first
// verified proof or when a limit in StopReason is hit. One JSON line per
// iteration goes to `trace` when given:
//   {"iter", "selected_path", "action_text", "case", "reward", "N_root",
//    "W_root", "status_changes", "child", "samples"}
// Unsuccessful expansions write null into the child-related fields.
template <Environment E>
SearchResult Search(const E& env, Policy<E>& policy, const SearchConfig& config,
                    std::ostream* trace = nullptr) {
  config.Validate();
  SearchTree<E> tree(env.initial_state(),
                     GoalStack<typename E::Goal>(env.root_goal()));
  Rng rng(config.seed);
  SearchResult result;

  auto finish = [&](StopReason reason) {
    result.stop_reason = reason;
    result.nodes_created = static_cast<std::int64_t>(tree.size());
    return result;
  };

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    int allowance = config.max_expansion_trials;
    if (config.sample_budget) {
      std::int64_t left = *config.sample_budget - result.policy_samples_used;
      if (left <= 0) return finish(StopReason::kSampleBudget);
      allowance = static_cast<int>(
          std::min<std::int64_t>(left, config.max_expansion_trials));
    }
    std::vector<NodeId> path;
    try {
      path = Select(tree, config);
    } catch (const NoSelectableNode&) {
      return finish(StopReason::kNoSelectableNode);
    }
    result.iterations_used = iter + 1;

    ExpansionResult expansion =
        Expand(tree, path.back(), policy, env, config, rng, allowance);
    result.policy_samples_used += expansion.samples;
    result.policy_failures += expansion.policy_failures;

    std::optional<double> reward;
    bool proved = false;
    if (expansion.child) {
      NodeId child = *expansion.child;
      reward = Estimate(env, tree, child, config.reward);
      std::vector<NodeId> backup = path;
      backup.push_back(child);
      Backpropagate(tree, backup, *reward);
      if (tree.node(child).goals.empty()) {
        auto proof = ExtractProof(tree, child);
        if (env.check_proof(proof)) {
          result.verified_proofs.push_back(proof);
          result.proof = std::move(proof);
          result.outcome = SearchOutcome::kProved;
          proved = true;
        }
      }
    }

    if (trace != nullptr) {
      nlohmann::ordered_json line;
      line["iter"] = iter;
      line["selected_path"] = path;
      if (expansion.child) {
        const auto& child = tree.node(*expansion.child);
        line["action_text"] = child.action;
        line["case"] = ToString(child.incoming);
        line["reward"] = *reward;
      } else {
        line["action_text"] = nullptr;
        line["case"] = nullptr;
        line["reward"] = nullptr;
      }
      line["N_root"] = tree.node(tree.root()).visits;
      line["W_root"] = tree.node(tree.root()).value;
      nlohmann::ordered_json changes = nlohmann::ordered_json::array();
      for (const auto& [id, status] : expansion.status_changes) {
        changes.push_back(std::to_string(id) + ":" +
                          std::string(ToString(status)));
      }
      line["status_changes"] = std::move(changes);
      if (expansion.child) {
        line["child"] = *expansion.child;
      } else {
        line["child"] = nullptr;
      }
      line["samples"] = expansion.samples;
      *trace << line.dump() << '\n';
    }
    if (proved) return finish(StopReason::kProofFound);
  }
  return finish(StopReason::kIterationLimit);
}

inline double UcbScore(double mean_value, std::int64_t node_visits,
                       std::int64_t parent_visits, double c,
                       UcbVariant variant) {
  if (node_visits <= 0) {
    throw std::domain_error("UCB score needs a visited node");
  }
  const double n = static_cast<double>(node_visits);
  double count = n;
  if (variant == UcbVariant::kParentVisits) {
    if (parent_visits <= 0) {
      throw std::domain_error("UCB score needs a visited parent");
    }
    count = static_cast<double>(parent_visits);
  }
  return mean_value + c * std::sqrt(std::log(count) / n);
}

inline std::string NormalizeAction(std::string_view action) {
  std::string out;
  bool space = false;
  for (char ch : action) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(ch);
  }
  return out;
}

inline std::string_view ToString(NodeStatus s) {
  switch (s) {
    case NodeStatus::kOpen:
      return "Open";
    case NodeStatus::kExpansionExhausted:
      return "ExpansionExhausted";
    case NodeStatus::kChildrenFull:
      return "ChildrenFull";
    case NodeStatus::kTerminal:
      return "Terminal";
  }
  return "?";
}

inline std::string_view ToString(SearchOutcome o) {
  return o == SearchOutcome::kProved ? "Proved" : "BudgetExhausted";
}

inline std::string_view ToString(StopReason r) {
  switch (r) {
    case StopReason::kProofFound:
      return "ProofFound";
    case StopReason::kIterationLimit:
      return "IterationLimit";
    case StopReason::kNoSelectableNode:
      return "NoSelectableNode";
    case StopReason::kSampleBudget:
      return "SampleBudget";
  }
  return "?";
}

}  // namespace sgmcts

#endif  // SGMCTS_SEARCH_MCTS_H_
