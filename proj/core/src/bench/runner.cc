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

#include "sgmcts/bench/runner.h"

#include <atomic>
#include <chrono>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "sgmcts/propcalc/checker.h"
#include "sgmcts/propcalc/corpus.h"
#include "sgmcts/search/mcts.h"

namespace sgmcts::bench {

namespace {

using propcalc::PropCalcEnv;
using propcalc::Task;

std::unique_ptr<Policy<PropCalcEnv>> MakePolicy(const RunConfig& config,
                                                const PropCalcEnv& env,
                                                const RemoteClient* client) {
  switch (config.backend) {
    case PolicyBackend::kEnumeration:
      return std::make_unique<EnumerationPolicy>(env);
    case PolicyBackend::kStochastic:
      return std::make_unique<StochasticPolicy>(env, config.stochastic);
    case PolicyBackend::kRemote:
      return std::make_unique<RemotePolicy<PropCalcEnv>>(env, *client);
  }
  throw std::logic_error("unknown backend");
}

std::string TraceName(const std::string& task_id, int repetition) {
  std::string safe;
  for (char c : task_id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    safe.push_back(ok ? c : '_');
  }
  return safe + ".rep" + std::to_string(repetition) + ".jsonl";
}

TaskRecord RunTask(const RunConfig& config, const Task& task,
                   std::size_t index, const RemoteClient* client) {
  TaskRecord record;
  record.task_id = task.id;
  PropCalcEnv env(task, config.env);
  auto policy = MakePolicy(config, env, client);

  std::vector<std::vector<Action>> found;
  bool backend_down = true;
  std::string backend_error;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    std::int64_t left = config.sample_budget - record.samples_used;
    if (left <= 0) break;
    SearchConfig search = config.search;
    search.seed = RepetitionSeed(config.seed, index, rep);
    search.sample_budget = left;

    std::ostringstream trace;
    SearchResult result = Search(env, *policy, search, &trace);
    record.iterations += result.iterations_used;
    record.samples_used += result.policy_samples_used;
    if (!(result.policy_failures > 0 && result.nodes_created == 1)) {
      backend_down = false;
    } else {
      backend_error = "policy backend failed on every request";
    }
    for (auto& p : result.verified_proofs) found.push_back(std::move(p));
    if (result.proof && record.proof.empty()) record.proof = *result.proof;

    if (!config.output_dir.empty()) {
      std::ofstream out(config.output_dir / "traces" / TraceName(task.id, rep));
      out << trace.str();
    }
  }

  if (!record.proof.empty()) {
    record.outcome = TaskOutcome::kProved;
    record.proof_length = static_cast<int>(record.proof.size());
  } else if (backend_down && config.repetitions > 0) {
    record.outcome = TaskOutcome::kErrored;
    record.error = backend_error;
  }
  record.distinct_correct_proofs = CountDistinctProofs(task, found);
  return record;
}

}  // namespace

std::string_view ToString(PolicyBackend b) {
  switch (b) {
    case PolicyBackend::kEnumeration:
      return "enumeration";
    case PolicyBackend::kStochastic:
      return "stochastic";
    case PolicyBackend::kRemote:
      return "remote";
  }
  return "?";
}

PolicyBackend ParsePolicyBackend(std::string_view text) {
  for (auto b : {PolicyBackend::kEnumeration, PolicyBackend::kStochastic,
                 PolicyBackend::kRemote}) {
    if (ToString(b) == text) return b;
  }
  throw std::invalid_argument("unknown policy backend: " + std::string(text));
}

void RunConfig::Validate() const {
  if (sample_budget < 1) throw std::invalid_argument("sample_budget must be >= 1");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (workers < 0) throw std::invalid_argument("workers must be >= 0");
  if (backend == PolicyBackend::kRemote && remote.empty()) {
    throw std::invalid_argument("remote backend needs at least one endpoint");
  }
  SearchConfig probe = search;
  probe.sample_budget.reset();
  probe.Validate();
}

nlohmann::ordered_json RunConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["corpus"] = corpus_path.filename().string();
  j["backend"] = ToString(backend);
  j["sample_budget"] = sample_budget;
  j["repetitions"] = repetitions;
  j["seed"] = seed;
  j["dedup_goals"] = env.dedup_goals;
  nlohmann::ordered_json s;
  s["exploration_c"] = search.exploration_c;
  s["max_expansion_trials"] = search.max_expansion_trials;
  s["max_children"] = search.max_children;
  s["max_iterations"] = search.max_iterations;
  s["ucb_variant"] = sgmcts::ToString(search.ucb_variant);
  s["lambda"] = search.reward.lambda;
  s["gamma"] = search.reward.gamma;
  s["recipe"] = sgmcts::ToString(search.reward.recipe);
  s["conjecture_weight"] = search.reward.conjecture_weight;
  s["depth_weight"] = search.reward.depth_weight;
  j["search"] = std::move(s);
  if (backend == PolicyBackend::kStochastic) {
    j["stochastic"] = {{"epsilon", stochastic.epsilon},
                       {"closing_weight", stochastic.closing_weight},
                       {"directed_weight", stochastic.directed_weight},
                       {"cases_weight", stochastic.cases_weight},
                       {"conjecture_weight", stochastic.conjecture_weight}};
  }
  if (backend == PolicyBackend::kRemote) {
    nlohmann::ordered_json endpoints = nlohmann::ordered_json::array();
    for (const auto& r : remote) endpoints.push_back(sgmcts::ToJson(r));
    j["remote"] = std::move(endpoints);
  }
  return j;
}

std::uint64_t RepetitionSeed(std::uint64_t global_seed, std::size_t task_index,
                             int repetition) {
  std::seed_seq seq{static_cast<std::uint32_t>(global_seed),
                    static_cast<std::uint32_t>(global_seed >> 32),
                    static_cast<std::uint32_t>(task_index),
                    static_cast<std::uint32_t>(repetition)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

int VerifyProofs(BenchReport& report, const std::vector<Task>& tasks) {
  int demoted = 0;
  for (std::size_t i = 0; i < report.tasks.size(); ++i) {
    TaskRecord& r = report.tasks[i];
    if (r.outcome != TaskOutcome::kProved) continue;
    if (!propcalc::CheckProof(tasks.at(i), r.proof)) {
      r.outcome = TaskOutcome::kErrored;
      r.error = "proof failed re-verification";
      ++demoted;
    }
  }
  report.aggregate = Tally(report.tasks);
  return demoted;
}

BenchReport RunBenchmark(const RunConfig& config,
                         const std::vector<Task>& tasks) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir / "traces");
  }
  std::unique_ptr<RemoteClient> client;
  if (config.backend == PolicyBackend::kRemote) {
    client = std::make_unique<RemoteClient>(config.remote);
  }

  BenchReport report;
  report.config = config.ToJson();
  report.tasks.resize(tasks.size());

  int workers = config.workers;
  if (workers == 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  workers = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        report.tasks[i] = RunTask(config, tasks[i], i, client.get());
      } catch (const std::exception& e) {
        TaskRecord r;
        r.task_id = tasks[i].id;
        r.outcome = TaskOutcome::kErrored;
        r.error = e.what();
        report.tasks[i] = std::move(r);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  VerifyProofs(report, tasks);
  report.aggregate.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!config.output_dir.empty()) {
    std::ofstream(config.output_dir / "report.json")
        << ToJson(report).dump(2) << '\n';
    std::ofstream(config.output_dir / "report.txt") << RenderTable(report);
    nlohmann::ordered_json timing = {
        {"wall_time_s", report.aggregate.wall_time_s}};
    std::ofstream(config.output_dir / "timing.json") << timing.dump(2) << '\n';
  }
  return report;
}

BenchReport RunBenchmark(const RunConfig& config) {
  return RunBenchmark(config, propcalc::ReadCorpusFile(config.corpus_path));
}

}  // namespace sgmcts::bench
