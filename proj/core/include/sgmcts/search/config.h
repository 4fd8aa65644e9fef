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

#ifndef SGMCTS_SEARCH_CONFIG_H_
#define SGMCTS_SEARCH_CONFIG_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sgmcts/sgmdp/reward.h"

namespace sgmcts {

// kParentVisits is standard UCT, V + C sqrt(ln N_parent / N). kNodeVisits
// uses the node's own count in both places, V + C sqrt(ln N / N).
enum class UcbVariant { kParentVisits, kNodeVisits };

std::string_view ToString(UcbVariant v);
UcbVariant ParseUcbVariant(std::string_view text);

struct SearchConfig {
  double exploration_c = 0.05;
  int max_expansion_trials = 10;
  int max_children = 10;
  int max_iterations = 512;  // K
  UcbVariant ucb_variant = UcbVariant::kParentVisits;
  std::uint64_t seed = 0;
  RewardSpec reward;
  // Cap on policy samples (one per candidate); unset means unlimited.
  std::optional<std::int64_t> sample_budget;

  void Validate() const {
    if (!(exploration_c >= 0.0) || !std::isfinite(exploration_c)) {
      throw std::invalid_argument("exploration constant must be >= 0");
    }
    if (max_expansion_trials < 1) {
      throw std::invalid_argument("max_expansion_trials must be >= 1");
    }
    if (max_children < 1) {
      throw std::invalid_argument("max_children must be >= 1");
    }
    if (max_iterations < 1) {
      throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (sample_budget && *sample_budget < 1) {
      throw std::invalid_argument("sample_budget must be >= 1");
    }
    reward.Validate();
  }
};

inline std::string_view ToString(UcbVariant v) {
  return v == UcbVariant::kParentVisits ? "ParentVisits" : "NodeVisits";
}

inline UcbVariant ParseUcbVariant(std::string_view text) {
  if (text == "ParentVisits") return UcbVariant::kParentVisits;
  if (text == "NodeVisits") return UcbVariant::kNodeVisits;
  throw std::invalid_argument("unknown UCB variant: " + std::string(text));
}

}  // namespace sgmcts

#endif  // SGMCTS_SEARCH_CONFIG_H_
