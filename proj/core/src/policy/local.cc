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

#include "sgmcts/policy/local.h"

#include <random>
#include <stdexcept>

#include "sgmcts/propcalc/tactic.h"

namespace sgmcts {

using propcalc::ParseTactic;
using propcalc::TacticKind;

std::vector<Action> EnumerationPolicy::SampleCandidates(
    const propcalc::ProofState& state, const propcalc::Goal& top, int k,
    Rng& /*rng*/) {
  std::vector<Action> actions = env_.enumerate_actions(state, top);
  if (k <= 0) return {};
  if (actions.size() > static_cast<std::size_t>(k)) {
    actions.resize(static_cast<std::size_t>(k));
  }
  return actions;
}

const std::vector<Action>& InvalidActionPool() {
  static const std::vector<Action> pool = {"", "sorry", "exact", "intro",
                                           "split left", "have : A"};
  return pool;
}

StochasticPolicy::StochasticPolicy(const propcalc::PropCalcEnv& env,
                                   StochasticPolicyOptions options)
    : env_(env), options_(options) {
  if (!(options_.epsilon >= 0.0 && options_.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  for (double w : {options_.closing_weight, options_.directed_weight,
                   options_.cases_weight, options_.conjecture_weight}) {
    if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
  }
}

double StochasticPolicy::Weight(const Action& action) const {
  auto tactic = ParseTactic(action);
  switch (tactic->kind) {
    case TacticKind::kExact:
      return options_.closing_weight;
    case TacticKind::kCases:
      return options_.cases_weight;
    case TacticKind::kHave:
      return options_.conjecture_weight;
    default:
      break;
  }
  return options_.directed_weight;
}

std::vector<Action> StochasticPolicy::SampleCandidates(
    const propcalc::ProofState& state, const propcalc::Goal& top, int k,
    Rng& rng) {
  std::vector<Action> pool = env_.enumerate_actions(state, top);
  std::vector<double> weights;
  weights.reserve(pool.size());
  for (const auto& a : pool) weights.push_back(Weight(a));

  std::bernoulli_distribution invalid(options_.epsilon);
  std::uniform_int_distribution<std::size_t> junk(
      0, InvalidActionPool().size() - 1);
  std::vector<Action> out;
  for (int slot = 0; slot < k; ++slot) {
    if (invalid(rng)) {
      out.push_back(InvalidActionPool()[junk(rng)]);
      continue;
    }
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) break;
    std::discrete_distribution<std::size_t> pick(weights.begin(),
                                                 weights.end());
    std::size_t i = pick(rng);
    out.push_back(pool[i]);
    weights[i] = 0.0;
  }
  return out;
}

}  // namespace sgmcts
