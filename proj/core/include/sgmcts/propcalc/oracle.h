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

#ifndef SGMCTS_PROPCALC_ORACLE_H_
#define SGMCTS_PROPCALC_ORACLE_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgmcts/propcalc/environment.h"

namespace sgmcts::propcalc {

inline constexpr int kMaxOracleDepth = 8;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleStats {
  std::size_t states_visited = 0;
};

// Breadth-first search over conjecture-free proofs, using every applicable
// primitive tactic on the active sequent. Returns a shortest proof of length
// at most `depth_bound`, or nullopt. Throws BudgetExceeded when depth_bound
// exceeds kMaxOracleDepth.
std::optional<std::vector<std::string>> OracleSolve(
    const Task& task, int depth_bound, OracleStats* stats = nullptr);

}  // namespace sgmcts::propcalc

#endif  // SGMCTS_PROPCALC_ORACLE_H_
