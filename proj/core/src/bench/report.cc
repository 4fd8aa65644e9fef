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

#include "sgmcts/bench/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sgmcts/propcalc/checker.h"
#include "sgmcts/search/mcts.h"

namespace sgmcts::bench {

std::string_view ToString(TaskOutcome o) {
  switch (o) {
    case TaskOutcome::kProved:
      return "Proved";
    case TaskOutcome::kBudgetExhausted:
      return "BudgetExhausted";
    case TaskOutcome::kErrored:
      return "Errored";
  }
  return "?";
}

TaskOutcome ParseTaskOutcome(std::string_view text) {
  for (auto o : {TaskOutcome::kProved, TaskOutcome::kBudgetExhausted,
                 TaskOutcome::kErrored}) {
    if (ToString(o) == text) return o;
  }
  throw std::invalid_argument("unknown outcome: " + std::string(text));
}

std::string Aggregate::pass_at_k() const {
  return std::to_string(solved_count) + "/" + std::to_string(total_count);
}

Aggregate Tally(const std::vector<TaskRecord>& records) {
  Aggregate a;
  a.total_count = static_cast<int>(records.size());
  for (const auto& r : records) {
    if (r.outcome == TaskOutcome::kProved) ++a.solved_count;
    if (r.outcome == TaskOutcome::kErrored) ++a.errored_count;
  }
  return a;
}

nlohmann::ordered_json ToJson(const BenchReport& report,
                              bool include_wall_time) {
  nlohmann::ordered_json out;
  out["config"] = report.config;
  nlohmann::ordered_json tasks = nlohmann::ordered_json::array();
  for (const auto& r : report.tasks) {
    nlohmann::ordered_json t;
    t["task_id"] = r.task_id;
    t["outcome"] = ToString(r.outcome);
    t["iterations"] = r.iterations;
    t["samples_used"] = r.samples_used;
    t["proof_length"] = r.proof_length;
    t["distinct_correct_proofs"] = r.distinct_correct_proofs;
    t["proof"] = r.proof;
    if (!r.error.empty()) t["error"] = r.error;
    tasks.push_back(std::move(t));
  }
  out["tasks"] = std::move(tasks);
  nlohmann::ordered_json agg;
  agg["solved_count"] = report.aggregate.solved_count;
  agg["total_count"] = report.aggregate.total_count;
  agg["errored_count"] = report.aggregate.errored_count;
  agg["pass_at_k"] = report.aggregate.pass_at_k();
  if (include_wall_time) agg["wall_time_s"] = report.aggregate.wall_time_s;
  out["aggregate"] = std::move(agg);
  return out;
}

BenchReport ReportFromJson(const nlohmann::json& j) {
  BenchReport report;
  report.config = j.value("config", nlohmann::ordered_json::object());
  for (const auto& t : j.at("tasks")) {
    TaskRecord r;
    r.task_id = t.at("task_id").get<std::string>();
    r.outcome = ParseTaskOutcome(t.at("outcome").get<std::string>());
    r.iterations = t.value("iterations", std::int64_t{0});
    r.samples_used = t.value("samples_used", std::int64_t{0});
    r.proof_length = t.value("proof_length", 0);
    r.distinct_correct_proofs = t.value("distinct_correct_proofs", 0);
    r.proof = t.value("proof", std::vector<Action>{});
    r.error = t.value("error", std::string{});
    report.tasks.push_back(std::move(r));
  }
  report.aggregate = Tally(report.tasks);
  if (j.contains("aggregate")) {
    report.aggregate.wall_time_s =
        j["aggregate"].value("wall_time_s", 0.0);
  }
  return report;
}

BenchReport ReadReportFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report " + path.string());
  return ReportFromJson(nlohmann::json::parse(in));
}

std::string RenderTable(const BenchReport& report) {
  std::size_t width = 7;
  for (const auto& r : report.tasks) width = std::max(width, r.task_id.size());
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %-15s %10s %10s %6s %8s\n",
                static_cast<int>(width), "task", "outcome", "iterations",
                "samples", "length", "distinct");
  out << line;
  for (const auto& r : report.tasks) {
    std::snprintf(line, sizeof line, "%-*s  %-15s %10lld %10lld %6d %8d\n",
                  static_cast<int>(width), r.task_id.c_str(),
                  std::string(ToString(r.outcome)).c_str(),
                  static_cast<long long>(r.iterations),
                  static_cast<long long>(r.samples_used), r.proof_length,
                  r.distinct_correct_proofs);
    out << line;
  }
  out << "solved " << report.aggregate.pass_at_k();
  if (report.aggregate.errored_count > 0) {
    out << " (" << report.aggregate.errored_count << " errored)";
  }
  out << '\n';
  return out.str();
}

RunComparison CompareRuns(const BenchReport& a, const BenchReport& b) {
  std::map<std::string, bool> solved_a;
  std::map<std::string, bool> solved_b;
  for (const auto& r : a.tasks) {
    solved_a[r.task_id] = r.outcome == TaskOutcome::kProved;
  }
  for (const auto& r : b.tasks) {
    solved_b[r.task_id] = r.outcome == TaskOutcome::kProved;
  }
  if (solved_a.size() != a.tasks.size() || solved_b.size() != b.tasks.size()) {
    throw CorpusMismatch("duplicate task ids in report");
  }
  if (solved_a.size() != solved_b.size() ||
      !std::equal(solved_a.begin(), solved_a.end(), solved_b.begin(),
                  [](const auto& x, const auto& y) {
                    return x.first == y.first;
                  })) {
    throw CorpusMismatch("reports cover different task sets");
  }
  RunComparison c;
  c.total = static_cast<int>(solved_a.size());
  for (const auto& [id, sa] : solved_a) {
    bool sb = solved_b.at(id);
    c.solved_a += sa;
    c.solved_b += sb;
    if (sa != sb) {
      c.per_task.push_back({id, sa, sb});
      (sa ? c.only_a : c.only_b).push_back(id);
    }
  }
  c.delta = c.solved_b - c.solved_a;
  return c;
}

std::string RunComparison::Summary() const {
  std::ostringstream out;
  out << "a: " << solved_a << "/" << total << "  b: " << solved_b << "/"
      << total << "  delta: " << (delta >= 0 ? "+" : "") << delta << '\n';
  for (const auto& id : only_a) out << "  only a: " << id << '\n';
  for (const auto& id : only_b) out << "  only b: " << id << '\n';
  return out.str();
}

int CountDistinctProofs(const propcalc::Task& task,
                        const std::vector<std::vector<Action>>& scripts) {
  std::set<std::vector<std::string>> distinct;
  for (const auto& script : scripts) {
    if (!propcalc::CheckProof(task, script)) continue;
    std::vector<std::string> key;
    for (const auto& a : script) key.push_back(NormalizeAction(a));
    distinct.insert(std::move(key));
  }
  return static_cast<int>(distinct.size());
}

std::vector<std::vector<Action>> ProofsFromTrace(std::istream& trace) {
  struct Edge {
    std::int64_t parent;
    Action action;
  };
  std::map<std::int64_t, Edge> edges;
  std::vector<std::int64_t> terminals;
  std::string line;
  while (std::getline(trace, line)) {
    if (line.empty()) continue;
    auto record = nlohmann::json::parse(line);
    if (record["child"].is_null()) continue;
    auto child = record["child"].get<std::int64_t>();
    auto parent = record["selected_path"].back().get<std::int64_t>();
    edges[child] = Edge{parent, record["action_text"].get<std::string>()};
    std::string terminal = std::to_string(child) + ":Terminal";
    for (const auto& change : record["status_changes"]) {
      if (change.get<std::string>() == terminal) terminals.push_back(child);
    }
  }
  std::vector<std::vector<Action>> proofs;
  for (auto node : terminals) {
    std::vector<Action> script;
    for (auto it = edges.find(node); it != edges.end();
         it = edges.find(it->second.parent)) {
      script.push_back(it->second.action);
    }
    std::reverse(script.begin(), script.end());
    proofs.push_back(std::move(script));
  }
  return proofs;
}

int CountDistinctProofs(const propcalc::Task& task,
                        const std::vector<std::filesystem::path>& traces) {
  std::vector<std::vector<Action>> scripts;
  for (const auto& path : traces) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace " + path.string());
    for (auto& p : ProofsFromTrace(in)) scripts.push_back(std::move(p));
  }
  return CountDistinctProofs(task, scripts);
}

}  // namespace sgmcts::bench
