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

#include "sgmcts/propcalc/oracle.h"

#include <deque>
#include <unordered_map>

namespace sgmcts::propcalc {

namespace {

std::string Key(const std::vector<Sequent>& open) {
  std::string key;
  for (const auto& s : open) {
    key += ToString(s);
    key += '\n';
  }
  return key;
}

struct Visit {
  std::string parent;  // key of the predecessor
  std::string tactic;
  int depth = 0;
};

}  // namespace

std::optional<std::vector<std::string>> OracleSolve(const Task& task,
                                                    int depth_bound,
                                                    OracleStats* stats) {
  if (depth_bound > kMaxOracleDepth) {
    throw BudgetExceeded("oracle depth bound " + std::to_string(depth_bound) +
                         " exceeds " + std::to_string(kMaxOracleDepth));
  }
  std::vector<Sequent> start{Sequent{"", task.hypotheses, task.target}};
  std::unordered_map<std::string, Visit> seen;
  std::deque<std::pair<std::string, std::vector<Sequent>>> frontier;
  std::string start_key = Key(start);
  seen.emplace(start_key, Visit{"", "", 0});
  frontier.emplace_back(start_key, std::move(start));

  auto unwind = [&](std::string key) {
    std::vector<std::string> proof;
    while (!seen.at(key).tactic.empty()) {
      const Visit& v = seen.at(key);
      proof.push_back(v.tactic);
      key = v.parent;
    }
    return std::vector<std::string>(proof.rbegin(), proof.rend());
  };

  while (!frontier.empty()) {
    auto [key, open] = std::move(frontier.front());
    frontier.pop_front();
    if (stats != nullptr) ++stats->states_visited;
    int depth = seen.at(key).depth;
    if (depth >= depth_bound) continue;
    const Sequent& active = open.back();
    for (const Tactic& t : ApplicableTactics(active)) {
      auto pieces = ApplyToSequent(active, t);
      if (!pieces) continue;
      std::vector<Sequent> next(open.begin(), open.end() - 1);
      for (auto& p : *pieces) next.push_back(std::move(p));
      std::string next_key = Key(next);
      if (seen.contains(next_key)) continue;
      seen.emplace(next_key, Visit{key, t.ToString(), depth + 1});
      if (next.empty()) return unwind(next_key);
      frontier.emplace_back(std::move(next_key), std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace sgmcts::propcalc
