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

#ifndef SGMCTS_POLICY_POLICY_H_
#define SGMCTS_POLICY_POLICY_H_

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgmcts/sgmdp/environment.h"

namespace sgmcts {

using Rng = std::mt19937_64;

enum class DeterminismClass { kDeterministic, kSeededStochastic, kExternal };

std::string_view ToString(DeterminismClass d);

// The policy backend could not produce candidates (transport failure,
// timeout, malformed response). Search records it as a failed trial.
class PolicyFailure : public std::runtime_error {
 public:
  explicit PolicyFailure(const std::string& what, int attempts = 1)
      : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// pi(a | s, top goal). Implementations see the proof state and the top goal
// only and must not touch search-tree state. At most k candidates are
// returned, in the order they should be tried.
template <Environment E>
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::vector<Action> SampleCandidates(const typename E::State& state,
                                               const typename E::Goal& top,
                                               int k, Rng& rng) = 0;
  virtual DeterminismClass determinism() const = 0;
};

inline std::string_view ToString(DeterminismClass d) {
  switch (d) {
    case DeterminismClass::kDeterministic:
      return "Deterministic";
    case DeterminismClass::kSeededStochastic:
      return "SeededStochastic";
    case DeterminismClass::kExternal:
      return "External";
  }
  return "?";
}

}  // namespace sgmcts

#endif  // SGMCTS_POLICY_POLICY_H_
