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

#ifndef SGMCTS_PROPCALC_CHECKER_H_
#define SGMCTS_PROPCALC_CHECKER_H_

#include <string>
#include <vector>

namespace sgmcts::propcalc {

struct Task;

// Replays `script` from the task's initial sequent and accepts iff every
// tactic is legal and nothing remains open afterwards. This is a separate
// implementation of the calculus from ApplyTactic; search results are only
// trusted once they pass here.
bool CheckProof(const Task& task, const std::vector<std::string>& script);

}  // namespace sgmcts::propcalc

#endif  // SGMCTS_PROPCALC_CHECKER_H_
