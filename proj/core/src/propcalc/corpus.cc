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

#include "sgmcts/propcalc/corpus.h"

#include <fstream>
#include <random>
#include <set>

#include "sgmcts/propcalc/oracle.h"

namespace sgmcts::propcalc {

namespace {

constexpr int kAttemptsPerTask = 20000;

class TaskSampler {
 public:
  explicit TaskSampler(std::uint64_t seed) : rng_(seed) {}

  Task Sample() {
    int atoms = Uniform(2, 4);
    Formula target = RandomFormula(atoms, Uniform(1, 3));
    std::vector<Formula> parts = Subformulas(target);
    Hypotheses hyps;
    int n = Uniform(1, 3);
    for (int i = 0; i < n; ++i) {
      hyps.emplace(i == 0 ? "h" : "h" + std::to_string(i),
                   RandomSupport(atoms, parts));
    }
    return Task{"", std::move(hyps), std::move(target), -1};
  }

 private:
  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Formula RandomAtom(int atoms) {
    return Formula::Atom(static_cast<char>('A' + Uniform(0, atoms - 1)));
  }

  Formula RandomFormula(int atoms, int depth) {
    if (depth == 0) return RandomAtom(atoms);
    Formula lhs = RandomFormula(atoms, Uniform(0, depth - 1));
    Formula rhs = RandomFormula(atoms, depth - 1);
    if (Uniform(0, 1) == 1) std::swap(lhs, rhs);
    switch (Uniform(0, 2)) {
      case 0:
        return Formula::And(lhs, rhs);
      case 1:
        return Formula::Or(lhs, rhs);
      default:
        return Formula::Implies(lhs, rhs);
    }
  }

  // A hypothesis assembled from pieces of the target.
  Formula RandomSupport(int atoms, const std::vector<Formula>& parts) {
    auto pick = [&] {
      return parts[static_cast<std::size_t>(
          Uniform(0, static_cast<int>(parts.size()) - 1))];
    };
    switch (Uniform(0, 4)) {
      case 0:
        return pick();
      case 1:
        return Formula::And(pick(), pick());
      case 2:
        return Formula::Implies(RandomFormula(atoms, Uniform(0, 1)), pick());
      case 3:
        return Formula::Or(pick(), pick());
      default:
        return Formula::And(pick(), RandomFormula(atoms, Uniform(0, 1)));
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Task> GenerateCorpus(std::uint64_t seed, int count,
                                 const DifficultyProfile& profile) {
  if (profile.min_depth < 1 || profile.max_depth < profile.min_depth ||
      profile.max_depth > kMaxOracleDepth) {
    throw std::invalid_argument("invalid difficulty profile");
  }
  std::vector<Task> tasks;
  if (count <= 0) return tasks;

  const int strata = profile.max_depth - profile.min_depth + 1;
  std::vector<int> wanted(static_cast<std::size_t>(strata), count / strata);
  for (int i = 0; i < count % strata; ++i) ++wanted[static_cast<std::size_t>(i)];
  std::vector<std::vector<Task>> buckets(static_cast<std::size_t>(strata));

  TaskSampler sampler(seed);
  std::set<std::string> seen;
  int remaining = count;
  for (long attempt = 0; remaining > 0; ++attempt) {
    if (attempt > static_cast<long>(kAttemptsPerTask) * count) {
      throw std::runtime_error("corpus generation did not converge");
    }
    Task task = sampler.Sample();
    std::string key = ToString(Sequent{"", task.hypotheses, task.target});
    if (!seen.insert(key).second) continue;
    auto proof = OracleSolve(task, profile.max_depth);
    if (!proof) continue;
    int depth = static_cast<int>(proof->size());
    if (depth < profile.min_depth) continue;
    auto& bucket = buckets[static_cast<std::size_t>(depth - profile.min_depth)];
    if (static_cast<int>(bucket.size()) >=
        wanted[static_cast<std::size_t>(depth - profile.min_depth)]) {
      continue;
    }
    task.oracle_depth = depth;
    bucket.push_back(std::move(task));
    --remaining;
  }

  for (auto& bucket : buckets) {
    for (auto& task : bucket) {
      task.id = "s" + std::to_string(seed) + "-" +
                std::to_string(tasks.size());
      tasks.push_back(std::move(task));
    }
  }
  return tasks;
}

nlohmann::ordered_json ToJson(const Task& task) {
  nlohmann::ordered_json record;
  record["id"] = task.id;
  nlohmann::ordered_json hyps = nlohmann::ordered_json::object();
  for (const auto& [label, f] : task.hypotheses) hyps[label] = f.ToString();
  record["hypotheses"] = std::move(hyps);
  record["target"] = task.target.ToString();
  record["oracle_depth"] = task.oracle_depth;
  return record;
}

Task TaskFromJson(const nlohmann::json& record) {
  try {
    Hypotheses hyps;
    if (!record.is_object() || !record.at("hypotheses").is_object()) {
      throw CorpusError("hypotheses must be an object");
    }
    for (const auto& [label, text] : record.at("hypotheses").items()) {
      if (!IsBindableLabel(label)) {
        throw CorpusError("invalid hypothesis label: " + label);
      }
      hyps.emplace(label, ParseFormula(text.get<std::string>()));
    }
    return Task{record.at("id").get<std::string>(), std::move(hyps),
                ParseFormula(record.at("target").get<std::string>()),
                record.value("oracle_depth", -1)};
  } catch (const ParseError& e) {
    throw CorpusError(std::string("bad formula: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("bad task record: ") + e.what());
  }
}

void WriteCorpus(std::ostream& out, const std::vector<Task>& tasks) {
  for (const auto& task : tasks) out << ToJson(task).dump() << '\n';
}

std::vector<Task> ReadCorpus(std::istream& in) {
  std::vector<Task> tasks;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      tasks.push_back(TaskFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw CorpusError("line " + std::to_string(line_number) + ": " +
                        e.what());
    } catch (const CorpusError& e) {
      throw CorpusError("line " + std::to_string(line_number) + ": " +
                        e.what());
    }
  }
  return tasks;
}

std::vector<Task> ReadCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus " + path);
  return ReadCorpus(in);
}

void WriteCorpusFile(const std::string& path, const std::vector<Task>& tasks) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WriteCorpus(out, tasks);
}

}  // namespace sgmcts::propcalc
