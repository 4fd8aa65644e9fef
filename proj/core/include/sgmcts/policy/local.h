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

#ifndef SGMCTS_POLICY_LOCAL_H_
#define SGMCTS_POLICY_LOCAL_H_

#include <string>
#include <vector>

#include "sgmcts/policy/policy.h"
#include "sgmcts/propcalc/environment.h"

namespace sgmcts {

// First k entries of the environment's canonical action list. Ignores the
// RNG.
class EnumerationPolicy : public Policy<propcalc::PropCalcEnv> {
 public:
  explicit EnumerationPolicy(const propcalc::PropCalcEnv& env) : env_(env) {}

  std::vector<Action> SampleCandidates(const propcalc::ProofState& state,
                                       const propcalc::Goal& top, int k,
                                       Rng& rng) override;
  DeterminismClass determinism() const override {
    return DeterminismClass::kDeterministic;
  }

 private:
  const propcalc::PropCalcEnv& env_;
};

struct StochasticPolicyOptions {
  // Probability that a slot is filled with a deliberately invalid action.
  double epsilon = 0.0;
  // Sampling weights per action family.
  double closing_weight = 4.0;   // exact on the current target
  double directed_weight = 2.0;  // intro, apply, split, left, right
  double cases_weight = 1.0;
  double conjecture_weight = 1.0;  // have; 0 disables conjectures
};

// Weighted sampling without replacement from the canonical action list.
// Each of the k slots is independently replaced, with probability epsilon,
// by an action that is never valid.
class StochasticPolicy : public Policy<propcalc::PropCalcEnv> {
 public:
  StochasticPolicy(const propcalc::PropCalcEnv& env,
                   StochasticPolicyOptions options = {});

  std::vector<Action> SampleCandidates(const propcalc::ProofState& state,
                                       const propcalc::Goal& top, int k,
                                       Rng& rng) override;
  DeterminismClass determinism() const override {
    return DeterminismClass::kSeededStochastic;
  }

  const StochasticPolicyOptions& options() const { return options_; }

 private:
  double Weight(const Action& action) const;

  const propcalc::PropCalcEnv& env_;
  StochasticPolicyOptions options_;
};

// Texts the stochastic policy uses as invalid candidates.
const std::vector<Action>& InvalidActionPool();

}  // namespace sgmcts

#endif  // SGMCTS_POLICY_LOCAL_H_
