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

#ifndef SGMCTS_SGMDP_TRANSITION_H_
#define SGMCTS_SGMDP_TRANSITION_H_

#include <exception>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sgmcts/sgmdp/environment.h"
#include "sgmcts/sgmdp/goal_stack.h"

namespace sgmcts {

enum class ActionClass { kPrimitive, kGoalProposal, kInvalid };

// The four branches of the goal-aware transition function.
enum class TransitionCase {
  kNoOp,         // neither a tactic nor a conjecture: nothing changes
  kGoalPushed,   // one goal pushed: a conjecture (state kept) or a tactic
                 // that splits off a subgoal (state advanced)
  kGoalSolved,   // tactic closes the top goal: state advanced, goal popped
  kProgressed,   // tactic applies but leaves the top goal open
};

std::string_view ToString(ActionClass c);
std::string_view ToString(TransitionCase c);

template <Environment E>
struct TransitionOutcome {
  typename E::State next_state;
  GoalStack<typename E::Goal> next_goals;
  TransitionCase case_tag;
  bool solved_root = false;
};

// Conjectures take precedence over tactics; anything the environment throws
// on is Invalid.
template <Environment E>
ActionClass ClassifyAction(const E& env, const typename E::State& state,
                           const typename E::Goal& top,
                           std::string_view action) {
  try {
    if (env.is_goal(state, top, action)) return ActionClass::kGoalProposal;
    if (env.is_primitive(state, top, action)) return ActionClass::kPrimitive;
  } catch (const std::exception&) {
  }
  return ActionClass::kInvalid;
}

template <Environment E>
TransitionOutcome<E> Step(const E& env, const typename E::State& state,
                          const GoalStack<typename E::Goal>& goals,
                          std::string_view action) {
  const auto& top = goals.top();
  switch (ClassifyAction(env, state, top, action)) {
    case ActionClass::kInvalid:
      return {state, goals, TransitionCase::kNoOp, false};
    case ActionClass::kGoalProposal:
      return {state, goals.Pushed(env.to_goal(action)),
              TransitionCase::kGoalPushed, false};
    case ActionClass::kPrimitive:
      break;
  }
  auto next = env.apply(state, action, top);
  if (!next) return {state, goals, TransitionCase::kNoOp, false};
  if (env.solves(state, action, top)) {
    bool root = goals.size() == 1;
    return {std::move(*next), goals.RemoveLast(), TransitionCase::kGoalSolved,
            root};
  }
  if (auto opened = env.opened_goal(state, action, top)) {
    return {std::move(*next), goals.Pushed(std::move(*opened)),
            TransitionCase::kGoalPushed, false};
  }
  return {std::move(*next), goals, TransitionCase::kProgressed, false};
}

// Trace record: {case, state, goals, solved_root}.
template <Environment E>
nlohmann::ordered_json ToRecord(const E& env,
                                const TransitionOutcome<E>& outcome) {
  nlohmann::ordered_json record;
  record["case"] = ToString(outcome.case_tag);
  record["state"] = env.format_state(outcome.next_state);
  record["goals"] = outcome.next_goals.Serialize(
      [&](const typename E::Goal& g) { return env.format_goal(g); });
  record["solved_root"] = outcome.solved_root;
  return record;
}

inline std::string_view ToString(ActionClass c) {
  switch (c) {
    case ActionClass::kPrimitive:
      return "Primitive";
    case ActionClass::kGoalProposal:
      return "GoalProposal";
    case ActionClass::kInvalid:
      return "Invalid";
  }
  return "?";
}

inline std::string_view ToString(TransitionCase c) {
  switch (c) {
    case TransitionCase::kNoOp:
      return "NoOp";
    case TransitionCase::kGoalPushed:
      return "GoalPushed";
    case TransitionCase::kGoalSolved:
      return "GoalSolved";
    case TransitionCase::kProgressed:
      return "Progressed";
  }
  return "?";
}

}  // namespace sgmcts

#endif  // SGMCTS_SGMDP_TRANSITION_H_
