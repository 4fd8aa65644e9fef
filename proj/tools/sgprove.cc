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


// sgprove: command-line front end to the benchmark harness.
//
//   sgprove run --corpus tasks.jsonl --output out/ [--config run.ini]
//   sgprove compare a/report.json b/report.json
//   sgprove gen-corpus --seed 7 --count 100 --max-depth 5 -o tasks.jsonl
//   sgprove oracle --hyp "h : A ∧ B" --target "B ∧ A"
//
// Exit status: 0 on completion, 1 on usage errors, 2 when the corpus or
// configuration cannot be used, 3 when the policy backend failed on every
// task.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgmcts/bench/report.h"
#include "sgmcts/bench/runner.h"
#include "sgmcts/propcalc/corpus.h"
#include "sgmcts/propcalc/formula.h"
#include "sgmcts/propcalc/oracle.h"

namespace {

using namespace sgmcts;

constexpr int kExitBadInput = 2;
constexpr int kExitBackend = 3;

struct RunFlags {
  std::string corpus;
  std::string output;
  std::string backend = "enumeration";
  std::int64_t sample_budget = 512;
  int repetitions = 1;
  int workers = 0;
  std::uint64_t seed = 0;
  SearchConfig search;
  std::string ucb_variant = "ParentVisits";
  std::string recipe = "Combined";
  bool no_dedup = false;
  StochasticPolicyOptions stochastic;
  std::vector<std::string> endpoints;
  RemotePolicyConfig remote;
};

void AddRun(CLI::App& app, RunFlags& f) {
  auto* run = app.add_subcommand("run", "Search every task of a corpus");
  run->add_option("--corpus", f.corpus, "Task file (one JSON record per line)")
      ->required();
  run->add_option("-o,--output", f.output,
                  "Directory for report.json, report.txt, timing.json and "
                  "traces/");
  run->add_option("--backend", f.backend, "Policy backend")
      ->check(CLI::IsMember({"enumeration", "stochastic", "remote"}));
  run->add_option("--sample-budget", f.sample_budget,
                  "Policy samples per task (the k of pass@k)");
  run->add_option("--repetitions", f.repetitions, "Search restarts per task");
  run->add_option("--workers", f.workers, "Parallel tasks (0: all cores)");
  run->add_option("--seed", f.seed, "Global seed");

  run->add_option("--exploration-c", f.search.exploration_c, "UCB constant");
  run->add_option("--max-expansion-trials", f.search.max_expansion_trials);
  run->add_option("--max-children", f.search.max_children);
  run->add_option("--max-iterations", f.search.max_iterations, "K");
  run->add_option("--ucb-variant", f.ucb_variant)
      ->check(CLI::IsMember({"ParentVisits", "NodeVisits"}));
  run->add_option("--lambda", f.search.reward.lambda, "Subgoal reward weight");
  run->add_option("--gamma", f.search.reward.gamma);
  run->add_option("--recipe", f.recipe, "Estimation recipe")
      ->check(CLI::IsMember(
          {"RootOnly", "SolvedConjectureCount", "DepthWeighted", "Combined"}));
  run->add_option("--conjecture-weight", f.search.reward.conjecture_weight);
  run->add_option("--depth-weight", f.search.reward.depth_weight);
  run->add_flag("--no-dedup-goals", f.no_dedup,
                "Accept conjectures that repeat the current goal");

  run->add_option("--epsilon", f.stochastic.epsilon,
                  "Stochastic backend: share of invalid candidates");
  run->add_option("--closing-weight", f.stochastic.closing_weight);
  run->add_option("--directed-weight", f.stochastic.directed_weight);
  run->add_option("--cases-weight", f.stochastic.cases_weight);
  run->add_option("--conjecture-proposal-weight",
                  f.stochastic.conjecture_weight);

  run->add_option("--endpoint", f.endpoints,
                  "Remote backend: completion service URL; repeat to ensemble");
  run->add_option("--path", f.remote.path);
  run->add_option("--timeout-ms", f.remote.timeout_ms);
  run->add_option("--retries", f.remote.retries);
  run->add_option("--prompt-template", f.remote.prompt_template);
  run->add_option("--max-tokens", f.remote.max_tokens);
  run->add_option("--temperature", f.remote.temperature);
}

int DoRun(RunFlags& f) {
  bench::RunConfig config;
  config.corpus_path = f.corpus;
  config.output_dir = f.output;
  config.backend = bench::ParsePolicyBackend(f.backend);
  config.sample_budget = f.sample_budget;
  config.repetitions = f.repetitions;
  config.workers = f.workers;
  config.seed = f.seed;
  config.search = f.search;
  config.search.ucb_variant = ParseUcbVariant(f.ucb_variant);
  config.search.reward.recipe = ParseEstimationRecipe(f.recipe);
  config.env.dedup_goals = !f.no_dedup;
  config.stochastic = f.stochastic;
  for (const auto& url : f.endpoints) {
    RemotePolicyConfig r = f.remote;
    r.endpoint = url;
    config.remote.push_back(r);
  }
  if (config.backend == bench::PolicyBackend::kRemote && config.remote.empty()) {
    config.remote.push_back(f.remote);
  }

  bench::BenchReport report = bench::RunBenchmark(config);
  std::cout << bench::RenderTable(report);
  const auto& agg = report.aggregate;
  if (agg.total_count > 0 && agg.errored_count == agg.total_count) {
    std::cerr << "sgprove: policy backend failed on every task\n";
    return kExitBackend;
  }
  return 0;
}

int DoCompare(const std::string& a, const std::string& b) {
  auto cmp = bench::CompareRuns(bench::ReadReportFile(a),
                                bench::ReadReportFile(b));
  std::cout << cmp.Summary();
  return 0;
}

int DoGenCorpus(std::uint64_t seed, int count, int min_depth, int max_depth,
                const std::string& output) {
  auto tasks = propcalc::GenerateCorpus(seed, count, {min_depth, max_depth});
  if (output.empty() || output == "-") {
    propcalc::WriteCorpus(std::cout, tasks);
  } else {
    propcalc::WriteCorpusFile(output, tasks);
  }
  return 0;
}

void PrintProof(const std::string& id,
                const std::optional<std::vector<std::string>>& proof) {
  std::cout << id << ": ";
  if (!proof) {
    std::cout << "no proof within bound\n";
    return;
  }
  for (std::size_t i = 0; i < proof->size(); ++i) {
    std::cout << (i == 0 ? "" : " ; ") << (*proof)[i];
  }
  std::cout << "\n";
}

int DoOracle(const std::string& corpus, const std::vector<std::string>& hyps,
             const std::string& target, int bound) {
  if (!corpus.empty()) {
    for (const auto& task : propcalc::ReadCorpusFile(corpus)) {
      PrintProof(task.id, propcalc::OracleSolve(task, bound));
    }
    return 0;
  }
  if (target.empty()) {
    throw std::invalid_argument("oracle needs --corpus or --target");
  }
  propcalc::Task task{"task", {}, propcalc::ParseFormula(target), -1};
  for (const auto& h : hyps) {
    auto colon = h.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("hypothesis must read 'label : formula': " +
                                  h);
    }
    std::string label = CLI::detail::trim_copy(h.substr(0, colon));
    task.hypotheses.emplace(label,
                            propcalc::ParseFormula(h.substr(colon + 1)));
  }
  PrintProof(task.id, propcalc::OracleSolve(task, bound));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjecture-aware tree search over a propositional calculus"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI or TOML file; flags given on the "
                                 "command line take precedence");

  RunFlags run_flags;
  AddRun(app, run_flags);

  std::string report_a, report_b;
  auto* compare = app.add_subcommand("compare", "Diff two report.json files");
  compare->add_option("report_a", report_a)->required();
  compare->add_option("report_b", report_b)->required();

  std::uint64_t gen_seed = 0;
  int gen_count = 100, gen_min = 1, gen_max = 5;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen-corpus", "Sample oracle-certified tasks");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--count", gen_count);
  gen->add_option("--min-depth", gen_min);
  gen->add_option("--max-depth", gen_max);
  gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

  std::string oracle_corpus, oracle_target;
  std::vector<std::string> oracle_hyps;
  int oracle_bound = 6;
  auto* oracle = app.add_subcommand("oracle", "Shortest conjecture-free proof");
  oracle->add_option("--corpus", oracle_corpus);
  oracle->add_option("--hyp", oracle_hyps, "'label : formula', repeatable");
  oracle->add_option("--target", oracle_target);
  oracle->add_option("--bound", oracle_bound)
      ->check(CLI::Range(0, propcalc::kMaxOracleDepth));

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("run")) return DoRun(run_flags);
    if (compare->parsed()) return DoCompare(report_a, report_b);
    if (gen->parsed()) {
      return DoGenCorpus(gen_seed, gen_count, gen_min, gen_max, gen_output);
    }
    if (oracle->parsed()) {
      return DoOracle(oracle_corpus, oracle_hyps, oracle_target, oracle_bound);
    }
  } catch (const propcalc::CorpusError& e) {
    std::cerr << "sgprove: corpus error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bench::CorpusMismatch& e) {
    std::cerr << "sgprove: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const propcalc::ParseError& e) {
    std::cerr << "sgprove: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sgprove: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "sgprove: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
