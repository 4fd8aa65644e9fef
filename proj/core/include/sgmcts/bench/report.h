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

#ifndef SGMCTS_BENCH_REPORT_H_
#define SGMCTS_BENCH_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgmcts/propcalc/environment.h"
#include "sgmcts/sgmdp/environment.h"

namespace sgmcts::bench {

enum class TaskOutcome { kProved, kBudgetExhausted, kErrored };

std::string_view ToString(TaskOutcome o);
TaskOutcome ParseTaskOutcome(std::string_view text);

struct TaskRecord {
  std::string task_id;
  TaskOutcome outcome = TaskOutcome::kBudgetExhausted;
  std::int64_t iterations = 0;
  std::int64_t samples_used = 0;
  int proof_length = 0;  // 0 unless proved
  int distinct_correct_proofs = 0;
  std::vector<Action> proof;
  std::string error;
};

struct Aggregate {
  int solved_count = 0;
  int total_count = 0;
  int errored_count = 0;
  double wall_time_s = 0.0;

  // "solved/total", e.g. "26/658".
  std::string pass_at_k() const;
};

struct BenchReport {
  nlohmann::ordered_json config;  // echo of the run configuration
  std::vector<TaskRecord> tasks;
  Aggregate aggregate;
};

// Recomputes the aggregate counts from the per-task records.
Aggregate Tally(const std::vector<TaskRecord>& records);

// Structured form. Wall time is included only on request.
nlohmann::ordered_json ToJson(const BenchReport& report,
                              bool include_wall_time = false);
BenchReport ReportFromJson(const nlohmann::json& j);
BenchReport ReadReportFile(const std::filesystem::path& path);

// Fixed-width table, one row per task plus a totals line.
std::string RenderTable(const BenchReport& report);

class CorpusMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TaskDelta {
  std::string task_id;
  bool solved_a = false;
  bool solved_b = false;
};

struct RunComparison {
  int solved_a = 0;
  int solved_b = 0;
  int total = 0;
  int delta = 0;  // solved_b - solved_a
  std::vector<std::string> only_a;  // solved by a but not b
  std::vector<std::string> only_b;
  std::vector<TaskDelta> per_task;  // tasks whose status differs

  std::string Summary() const;
};

// Both reports must cover the same task ids. Throws CorpusMismatch otherwise.
RunComparison CompareRuns(const BenchReport& a, const BenchReport& b);

// Number of distinct checker-verified scripts, after whitespace
// normalization of each action.
int CountDistinctProofs(const propcalc::Task& task,
                        const std::vector<std::vector<Action>>& scripts);

// Scripts of every terminal node recorded in a search trace.
std::vector<std::vector<Action>> ProofsFromTrace(std::istream& trace);

// Same as above across a set of trace files (one per repetition).
int CountDistinctProofs(const propcalc::Task& task,
                        const std::vector<std::filesystem::path>& traces);

}  // namespace sgmcts::bench

#endif  // SGMCTS_BENCH_REPORT_H_
