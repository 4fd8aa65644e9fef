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

#ifndef SGMCTS_SGMDP_ENVIRONMENT_H_
#define SGMCTS_SGMDP_ENVIRONMENT_H_

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgmcts {

// Actions are token sequences; every environment in this library uses their
// UTF-8 text.
using Action = std::string;

// What an environment must provide to be searched as a self-generated
// goal-conditioned MDP. All members must be deterministic functions of their
// arguments.
//
//   is_goal(s, g, a)           a is a valid conjecture proposal (IsGoal)
//   is_primitive(s, g, a)      a is a valid tactic on goal g (IsPrimitiveAction)
//   to_goal(a)                 the goal a proposes (ToGoal)
//   apply(s, a, g)             successor state, or nullopt (T)
//   solves(s, a, g)            a closes g in s (Solves)
//   opened_goal(s, a, g)       goal a opens next to g, e.g. the first
//                              conjunct of a split (nullopt for most tactics)
//   goal_solved(s, g)          base reward predicate R(s, g)
//   check_proof(actions)       independent replay of a full action script
//
// IsGoal and IsPrimitiveAction also receive the current state and top goal;
// well-formedness of a conjecture depends on the labels already in scope.
template <typename E>
concept Environment =
    std::copy_constructible<typename E::State> &&
    std::equality_comparable<typename E::Goal> &&
    requires(const E& env, const typename E::State& state,
             const typename E::Goal& goal, std::string_view action,
             const std::vector<Action>& script) {
      { env.initial_state() } -> std::convertible_to<typename E::State>;
      { env.root_goal() } -> std::convertible_to<typename E::Goal>;
      { env.is_goal(state, goal, action) } -> std::same_as<bool>;
      { env.is_primitive(state, goal, action) } -> std::same_as<bool>;
      { env.to_goal(action) } -> std::convertible_to<typename E::Goal>;
      {
        env.apply(state, action, goal)
      } -> std::same_as<std::optional<typename E::State>>;
      { env.solves(state, action, goal) } -> std::same_as<bool>;
      {
        env.opened_goal(state, action, goal)
      } -> std::same_as<std::optional<typename E::Goal>>;
      { env.goal_solved(state, goal) } -> std::same_as<bool>;
      { env.check_proof(script) } -> std::same_as<bool>;
      { env.format_state(state) } -> std::convertible_to<std::string>;
      { env.format_goal(goal) } -> std::convertible_to<std::string>;
    };

}  // namespace sgmcts

#endif  // SGMCTS_SGMDP_ENVIRONMENT_H_
