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

#ifndef SGMCTS_BENCH_RUNNER_H_
#define SGMCTS_BENCH_RUNNER_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgmcts/bench/report.h"
#include "sgmcts/policy/local.h"
#include "sgmcts/policy/remote.h"
#include "sgmcts/propcalc/environment.h"
#include "sgmcts/search/config.h"

namespace sgmcts::bench {

enum class PolicyBackend { kEnumeration, kStochastic, kRemote };

std::string_view ToString(PolicyBackend b);
PolicyBackend ParsePolicyBackend(std::string_view text);

struct RunConfig {
  std::filesystem::path corpus_path;
  SearchConfig search;  // its seed and sample_budget are set per run
  PolicyBackend backend = PolicyBackend::kEnumeration;
  StochasticPolicyOptions stochastic;
  std::vector<RemotePolicyConfig> remote;
  propcalc::EnvOptions env;
  // pass@k's k, counted in policy samples and shared by all repetitions of a
  // task.
  std::int64_t sample_budget = 512;
  int repetitions = 1;
  int workers = 0;  // 0: hardware concurrency
  std::filesystem::path output_dir;  // empty: write nothing
  std::uint64_t seed = 0;

  void Validate() const;
  nlohmann::ordered_json ToJson() const;
};

// Searches every task, restarting the tree for each repetition until the
// repetitions or the task's sample budget run out. A task is Proved iff some
// repetition found a checker-verified proof. When output_dir is set, writes
//   report.json   structured report (no wall time)
//   report.txt    human-readable table
//   timing.json   wall time
//   traces/<task>.rep<r>.jsonl
// Results are deterministic for local backends regardless of worker count.
BenchReport RunBenchmark(const RunConfig& config,
                         const std::vector<propcalc::Task>& tasks);

// Reads the corpus from config.corpus_path (throws propcalc::CorpusError).
BenchReport RunBenchmark(const RunConfig& config);

// Seed of one repetition, derived from the global seed and the task's
// position in the corpus.
std::uint64_t RepetitionSeed(std::uint64_t global_seed, std::size_t task_index,
                             int repetition);

// Re-checks every Proved record against the task and demotes records whose
// proof fails to Errored. Returns the number demoted.
int VerifyProofs(BenchReport& report, const std::vector<propcalc::Task>& tasks);

}  // namespace sgmcts::bench

#endif  // SGMCTS_BENCH_RUNNER_H_
