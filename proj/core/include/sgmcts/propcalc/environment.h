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

#ifndef SGMCTS_PROPCALC_ENVIRONMENT_H_
#define SGMCTS_PROPCALC_ENVIRONMENT_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sgmcts/propcalc/formula.h"
#include "sgmcts/propcalc/tactic.h"
#include "sgmcts/sgmdp/environment.h"

namespace sgmcts::propcalc {

// A theorem to prove: `hypotheses ⊢ target`.
struct Task {
  std::string id;
  Hypotheses hypotheses;
  Formula target;
  int oracle_depth = -1;  // shortest conjecture-free proof length, if known
};

// Goals are named statements. The root goal has an empty label; a conjecture
// goal is `label : statement` exactly as proposed by its `have`. A tactic that
// splits its sequent in two (split, cases on a disjunction) keeps the second
// half in the current goal and pushes the first as a branch goal labelled
// `#<n>`, where n is the length of the history when it was opened.
struct Goal {
  std::string label;
  Formula statement;

  bool is_root() const { return label.empty(); }
  bool is_branch() const { return label.starts_with('#'); }
  friend bool operator==(const Goal&, const Goal&) = default;
};

// Open sequents, bottom to top, one per started goal and ordered like the
// goal stack. A conjecture goal that has just been pushed owns no sequent yet; its sequent is opened from the current top sequent the
// first time a tactic runs against it.
//
// `history` is the accepted proof script: every primitive tactic, preceded by
// the `have` of each conjecture at the moment its sequent is opened. Replaying
// it from the task reproduces the state. `visited` holds every configuration
// of open sequents reached so far; a tactic that would return to one of them
// is rejected, so no proof path cycles.
struct ProofState {
  std::vector<Sequent> open;
  std::set<std::string> proven;  // labels of closed conjectures and branches
  std::vector<std::string> history;
  std::set<std::string> visited;

  friend bool operator==(const ProofState&, const ProofState&) = default;
};

struct EnvOptions {
  // Reject a conjecture whose statement repeats the goal being worked on.
  bool dedup_goals = true;
};

ProofState InitialState(const Task& task);

// The sequent the top goal is currently working on, opening it virtually when
// the goal has not been started. nullopt when it cannot be opened (label
// clash with a hypothesis in scope, or nothing left to prove).
std::optional<Sequent> CurrentSequent(const ProofState& state, const Goal& top);

struct TacticResult {
  ProofState state;
  bool closed_goal = false;  // the tactic discharged the sequent of `top`
  std::optional<Goal> opened;  // branch goal pushed above `top`
};

// Applies a primitive tactic to the top goal. Fails when the tactic does not
// apply or leads back to a visited configuration. When a conjecture closes, `label : statement` becomes a hypothesis of the sequent
// beneath it.
std::optional<TacticResult> ApplyTactic(const ProofState& state,
                                        const Tactic& tactic, const Goal& top);

inline constexpr int kMaxConjectureProposals = 8;

class PropCalcEnv {
 public:
  using State = ProofState;
  using Goal = propcalc::Goal;

  explicit PropCalcEnv(Task task, EnvOptions options = {});

  const Task& task() const { return task_; }
  const EnvOptions& options() const { return options_; }

  State initial_state() const { return InitialState(task_); }
  Goal root_goal() const { return Goal{"", task_.target}; }

  bool is_goal(const State& state, const Goal& top,
               std::string_view action) const;
  bool is_primitive(const State& state, const Goal& top,
                    std::string_view action) const;
  // Only meaningful when is_goal holds for some state.
  Goal to_goal(std::string_view action) const;
  std::optional<State> apply(const State& state, std::string_view action,
                             const Goal& top) const;
  bool solves(const State& state, std::string_view action,
              const Goal& top) const;
  std::optional<Goal> opened_goal(const State& state, std::string_view action,
                                  const Goal& top) const;
  bool goal_solved(const State& state, const Goal& goal) const;
  bool check_proof(const std::vector<Action>& script) const;

  // Every valid action for `top` in canonical order: the applicable
  // primitive tactics (see ApplicableTactics), then up to
  // kMaxConjectureProposals `have` proposals drawn from the subformulas of
  // the current target, followed by commuted conjunctions.
  std::vector<Action> enumerate_actions(const State& state,
                                        const Goal& top) const;

  std::string format_state(const State& state) const;
  std::string format_goal(const Goal& goal) const;

 private:
  Task task_;
  EnvOptions options_;
};

static_assert(Environment<PropCalcEnv>);

}  // namespace sgmcts::propcalc

#endif  // SGMCTS_PROPCALC_ENVIRONMENT_H_
