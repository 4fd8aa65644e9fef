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

#ifndef SGMCTS_SGMDP_REWARD_H_
#define SGMCTS_SGMDP_REWARD_H_

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sgmcts/sgmdp/environment.h"
#include "sgmcts/sgmdp/goal_stack.h"

namespace sgmcts {

// How a freshly created search node is valued. Every recipe starts from the
// shaped reward; the others add verified-progress terms on top of it.
enum class EstimationRecipe {
  kRootOnly,
  kSolvedConjectureCount,
  kDepthWeighted,
  kCombined,
};

std::string_view ToString(EstimationRecipe r);
EstimationRecipe ParseEstimationRecipe(std::string_view text);

struct RewardSpec {
  double lambda = 0.5;  // weight of the current-goal term
  double gamma = 1.0;   // discount, used for trajectory scoring only
  EstimationRecipe recipe = EstimationRecipe::kCombined;
  double conjecture_weight = 0.1;
  double depth_weight = 0.01;

  // Throws std::invalid_argument when an invariant is violated.
  void Validate() const;
};

// R(s, g0) + lambda * R(s, top). With an empty stack the root has been
// proved and the current-goal term inherits the root term, so a full proof
// scores 1 + lambda.
template <Environment E>
double ShapedReward(const E& env, const typename E::State& state,
                    const GoalStack<typename E::Goal>& goals,
                    const typename E::Goal& root, const RewardSpec& spec) {
  double root_term = env.goal_solved(state, root) ? 1.0 : 0.0;
  double top_term = root_term;
  if (!goals.empty()) top_term = env.goal_solved(state, goals.top()) ? 1.0 : 0.0;
  return root_term + spec.lambda * top_term;
}

// Sum over t of gamma^t * rewards[t].
double DiscountedReturn(std::span<const double> rewards, double gamma);

inline void RewardSpec::Validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be finite and non-negative");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  if (!(conjecture_weight >= 0.0) || !std::isfinite(conjecture_weight) ||
      !(depth_weight >= 0.0) || !std::isfinite(depth_weight)) {
    throw std::invalid_argument(
        "estimation weights must be finite and non-negative");
  }
}

inline double DiscountedReturn(std::span<const double> rewards, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  double total = 0.0;
  double discount = 1.0;
  for (double r : rewards) {
    total += discount * r;
    discount *= gamma;
  }
  return total;
}

inline std::string_view ToString(EstimationRecipe r) {
  switch (r) {
    case EstimationRecipe::kRootOnly:
      return "RootOnly";
    case EstimationRecipe::kSolvedConjectureCount:
      return "SolvedConjectureCount";
    case EstimationRecipe::kDepthWeighted:
      return "DepthWeighted";
    case EstimationRecipe::kCombined:
      return "Combined";
  }
  return "?";
}

inline EstimationRecipe ParseEstimationRecipe(std::string_view text) {
  for (auto r : {EstimationRecipe::kRootOnly,
                 EstimationRecipe::kSolvedConjectureCount,
                 EstimationRecipe::kDepthWeighted,
                 EstimationRecipe::kCombined}) {
    if (ToString(r) == text) return r;
  }
  throw std::invalid_argument("unknown estimation recipe: " +
                              std::string(text));
}

}  // namespace sgmcts

#endif  // SGMCTS_SGMDP_REWARD_H_
