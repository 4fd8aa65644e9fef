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

#include "sgmcts/propcalc/environment.h"

#include <algorithm>
#include <stdexcept>

#include "sgmcts/propcalc/checker.h"

namespace sgmcts::propcalc {

namespace {

bool LabelInScope(const Hypotheses& hyps, const std::string& label) {
  if (hyps.contains(label)) return true;
  auto it = hyps.lower_bound(label + ".");
  return it != hyps.end() && it->first.starts_with(label + ".");
}

std::string OwnerName(const std::string& owner) {
  return owner.empty() ? "root" : owner;
}

std::string Configuration(const std::vector<Sequent>& open) {
  std::string key;
  for (const auto& s : open) key += ToString(s) + "\x1e";
  return key;
}

}  // namespace

ProofState InitialState(const Task& task) {
  ProofState state;
  state.open.push_back(Sequent{"", task.hypotheses, task.target});
  state.visited.insert(Configuration(state.open));
  return state;
}

std::optional<Sequent> CurrentSequent(const ProofState& state,
                                      const Goal& top) {
  if (state.open.empty()) return std::nullopt;
  const Sequent& last = state.open.back();
  if (last.owner == top.label) return last;
  if (top.is_root() || top.is_branch() || LabelInScope(last.hyps, top.label)) {
    return std::nullopt;
  }
  return Sequent{top.label, last.hyps, top.statement};
}

std::optional<TacticResult> ApplyTactic(const ProofState& state,
                                        const Tactic& tactic,
                                        const Goal& top) {
  if (tactic.kind == TacticKind::kHave) return std::nullopt;
  auto current = CurrentSequent(state, top);
  if (!current) return std::nullopt;
  auto replacement = ApplyToSequent(*current, tactic);
  if (!replacement) return std::nullopt;

  TacticResult result{state, false, std::nullopt};
  ProofState& next = result.state;
  if (state.open.back().owner == top.label) {
    next.open.pop_back();
  } else {
    next.history.push_back(
        Tactic{TacticKind::kHave, top.label, top.statement}.ToString());
  }
  next.history.push_back(tactic.ToString());
  for (auto& s : *replacement) next.open.push_back(std::move(s));
  if (replacement->size() == 2) {
    Sequent& branch = next.open.back();
    branch.owner = "#" + std::to_string(next.history.size());
    result.opened = Goal{branch.owner, branch.target};
  }

  result.closed_goal = replacement->empty();
  if (result.closed_goal && !top.is_root()) {
    next.proven.insert(top.label);
    if (!top.is_branch() && !next.open.empty()) {
      next.open.back().hyps.emplace(top.label, top.statement);
    }
  }
  if (!next.visited.insert(Configuration(next.open)).second) return std::nullopt;
  return result;
}

PropCalcEnv::PropCalcEnv(Task task, EnvOptions options)
    : task_(std::move(task)), options_(options) {}

bool PropCalcEnv::is_goal(const State& state, const Goal& top,
                          std::string_view action) const {
  auto tactic = ParseTactic(action);
  if (!tactic || tactic->kind != TacticKind::kHave) return false;
  if (!top.is_root() &&
      (state.open.empty() || state.open.back().owner != top.label)) {
    return false;
  }
  auto current = CurrentSequent(state, top);
  if (!current) return false;
  const std::string& label = tactic->label;
  if (LabelInScope(current->hyps, label) || label == top.label ||
      state.proven.contains(label)) {
    return false;
  }
  for (const auto& s : state.open) {
    if (s.owner == label) return false;
  }
  if (options_.dedup_goals &&
      (*tactic->formula == top.statement || *tactic->formula == current->target)) {
    return false;
  }
  return true;
}

bool PropCalcEnv::is_primitive(const State& state, const Goal& top,
                               std::string_view action) const {
  auto tactic = ParseTactic(action);
  return tactic && ApplyTactic(state, *tactic, top).has_value();
}

Goal PropCalcEnv::to_goal(std::string_view action) const {
  auto tactic = ParseTactic(action);
  if (!tactic || tactic->kind != TacticKind::kHave) {
    throw std::invalid_argument("not a conjecture: " + std::string(action));
  }
  return Goal{tactic->label, *tactic->formula};
}

std::optional<ProofState> PropCalcEnv::apply(const State& state,
                                             std::string_view action,
                                             const Goal& top) const {
  auto tactic = ParseTactic(action);
  if (!tactic) return std::nullopt;
  auto result = ApplyTactic(state, *tactic, top);
  if (!result) return std::nullopt;
  return std::move(result->state);
}

bool PropCalcEnv::solves(const State& state, std::string_view action,
                         const Goal& top) const {
  auto tactic = ParseTactic(action);
  if (!tactic) return false;
  auto result = ApplyTactic(state, *tactic, top);
  return result && result->closed_goal;
}

std::optional<Goal> PropCalcEnv::opened_goal(const State& state,
                                             std::string_view action,
                                             const Goal& top) const {
  auto tactic = ParseTactic(action);
  if (!tactic) return std::nullopt;
  auto result = ApplyTactic(state, *tactic, top);
  if (!result) return std::nullopt;
  return std::move(result->opened);
}

bool PropCalcEnv::goal_solved(const State& state, const Goal& goal) const {
  if (goal.is_root()) return state.open.empty();
  return state.proven.contains(goal.label);
}

bool PropCalcEnv::check_proof(const std::vector<Action>& script) const {
  return CheckProof(task_, script);
}

std::vector<Action> PropCalcEnv::enumerate_actions(const State& state,
                                                   const Goal& top) const {
  std::vector<Action> actions;
  auto current = CurrentSequent(state, top);
  if (!current) return actions;
  for (const Tactic& t : ApplicableTactics(*current)) {
    actions.push_back(t.ToString());
  }

  std::vector<Formula> statements;
  auto consider = [&](const Formula& f) {
    if (std::find(statements.begin(), statements.end(), f) != statements.end()) {
      return;
    }
    for (const auto& [label, h] : current->hyps) {
      if (h == f) return;
    }
    statements.push_back(f);
  };
  std::vector<Formula> parts = Subformulas(current->target);
  for (std::size_t i = 1; i < parts.size(); ++i) consider(parts[i]);
  for (const Formula& f : parts) {
    if (f.connective() == Connective::kAnd) {
      consider(Formula::And(f.rhs(), f.lhs()));
    }
  }

  auto label_free = [&](const std::string& label) {
    if (LabelInScope(current->hyps, label) || label == top.label ||
        state.proven.contains(label)) {
      return false;
    }
    return std::none_of(state.open.begin(), state.open.end(),
                        [&](const Sequent& s) { return s.owner == label; });
  };
  std::string label = "c";
  for (int i = 1; !label_free(label); ++i) label = "c" + std::to_string(i);

  int proposed = 0;
  for (const Formula& f : statements) {
    if (proposed == kMaxConjectureProposals) break;
    Action action = Tactic{TacticKind::kHave, label, f}.ToString();
    if (is_goal(state, top, action)) {
      actions.push_back(std::move(action));
      ++proposed;
    }
  }
  return actions;
}

std::string PropCalcEnv::format_state(const State& state) const {
  std::string out = state.open.empty() ? "no goals" : "";
  for (std::size_t i = 0; i < state.open.size(); ++i) {
    if (i > 0) out += " ; ";
    out += "<" + OwnerName(state.open[i].owner) + "> " +
           ToString(state.open[i]);
  }
  out += " | proven:";
  for (const auto& label : state.proven) out += " " + label;
  out += " | history:";
  for (std::size_t i = 0; i < state.history.size(); ++i) {
    out += (i == 0 ? " " : " ; ") + state.history[i];
  }
  return out;
}

std::string PropCalcEnv::format_goal(const Goal& goal) const {
  if (goal.is_root()) return "⊢ " + goal.statement.ToString();
  return goal.label + " : " + goal.statement.ToString();
}

}  // namespace sgmcts::propcalc
