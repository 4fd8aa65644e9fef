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


#include <benchmark/benchmark.h>

#include "sgmcts/policy/local.h"
#include "sgmcts/propcalc/checker.h"
#include "sgmcts/propcalc/corpus.h"
#include "sgmcts/propcalc/oracle.h"
#include "sgmcts/search/mcts.h"

namespace {

using namespace sgmcts;
using namespace sgmcts::propcalc;

void BM_ParseFormula(benchmark::State& state) {
  const std::string text = "((A ∧ B) → (C ∨ ¬D)) ∧ ((E → F) ∨ (B ∧ ¬A))";
  for (auto _ : state) benchmark::DoNotOptimize(ParseFormula(text));
}
BENCHMARK(BM_ParseFormula);

// One task per oracle depth, drawn from a fixed corpus.
const Task& TaskAtDepth(int depth) {
  static const auto tasks = GenerateCorpus(7, 60, DifficultyProfile{1, 6});
  for (const auto& t : tasks) {
    if (t.oracle_depth == depth) return t;
  }
  return tasks.front();
}

void BM_OracleSolve(benchmark::State& state) {
  const Task& task = TaskAtDepth(static_cast<int>(state.range(0)));
  OracleStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(OracleSolve(task, 8, &stats));
  state.counters["states"] = benchmark::Counter(
      static_cast<double>(stats.states_visited), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_OracleSolve)->DenseRange(2, 6, 2);

void BM_CheckProof(benchmark::State& state) {
  const Task& task = TaskAtDepth(5);
  auto proof = *OracleSolve(task, 8);
  for (auto _ : state) benchmark::DoNotOptimize(CheckProof(task, proof));
}
BENCHMARK(BM_CheckProof);

void BM_SearchEnumeration(benchmark::State& state) {
  const Task& task = TaskAtDepth(static_cast<int>(state.range(0)));
  PropCalcEnv env(task);
  SearchConfig config;
  std::int64_t samples = 0;
  for (auto _ : state) {
    EnumerationPolicy policy(env);
    auto result = Search(env, policy, config);
    samples += result.policy_samples_used;
  }
  state.counters["samples"] = benchmark::Counter(
      static_cast<double>(samples), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SearchEnumeration)->DenseRange(2, 6, 2);

void BM_StochasticSample(benchmark::State& state) {
  const Task& task = TaskAtDepth(4);
  PropCalcEnv env(task);
  StochasticPolicy policy(env, StochasticPolicyOptions{0.1});
  Rng rng(1);
  auto s = env.initial_state();
  auto g = env.root_goal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(policy.SampleCandidates(s, g, 10, rng));
  }
}
BENCHMARK(BM_StochasticSample);

}  // namespace

BENCHMARK_MAIN();
