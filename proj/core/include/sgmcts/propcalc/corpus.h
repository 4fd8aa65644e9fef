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

#ifndef SGMCTS_PROPCALC_CORPUS_H_
#define SGMCTS_PROPCALC_CORPUS_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgmcts/propcalc/environment.h"

namespace sgmcts::propcalc {

struct DifficultyProfile {
  int min_depth = 1;
  int max_depth = 6;
};

// Random provable sequents, stratified by the oracle's shortest-proof length:
// `count` is spread evenly over [min_depth, max_depth], lower depths taking
// any remainder. Every task carries its oracle depth. Deterministic per seed.
std::vector<Task> GenerateCorpus(std::uint64_t seed, int count,
                                 const DifficultyProfile& profile);

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-delimited task records:
//   {"id": "...", "hypotheses": {"h": "(A ∧ B)"}, "target": "...",
//    "oracle_depth": 3}
nlohmann::ordered_json ToJson(const Task& task);
Task TaskFromJson(const nlohmann::json& record);

void WriteCorpus(std::ostream& out, const std::vector<Task>& tasks);
// Throws CorpusError naming the offending line.
std::vector<Task> ReadCorpus(std::istream& in);
std::vector<Task> ReadCorpusFile(const std::string& path);
void WriteCorpusFile(const std::string& path, const std::vector<Task>& tasks);

}  // namespace sgmcts::propcalc

#endif  // SGMCTS_PROPCALC_CORPUS_H_
