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

#ifndef SGMCTS_POLICY_REMOTE_H_
#define SGMCTS_POLICY_REMOTE_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgmcts/policy/policy.h"
#include "sgmcts/sgmdp/environment.h"

namespace sgmcts {

// One completion service. Wire protocol (JSON over HTTP POST to `path`):
//   request   {"prompt": str, "max_tokens": int, "temperature": float,
//              "seed": uint64}
//   response  {"text": str}
// Only the first line of "text" is used as the candidate action.
struct RemotePolicyConfig {
  std::string endpoint = "http://127.0.0.1:8000";
  std::string path = "/generate";
  int timeout_ms = 30000;
  std::string prompt_template =
      "Proof state:\n{state}\nCurrent goal:\n{goal}\nNext tactic:";
  int max_tokens = 64;
  double temperature = 1.0;
  int retries = 2;

  void Validate() const;
};

nlohmann::ordered_json ToJson(const RemotePolicyConfig& config);
RemotePolicyConfig RemotePolicyConfigFromJson(const nlohmann::json& j);

std::string RenderPrompt(const std::string& prompt_template,
                         const std::string& state, const std::string& goal);

// Issues completion requests, round-robin over `endpoints` by request index.
// Requests run concurrently (at most `max_in_flight` at once) and results
// are returned in request order. Safe to share between threads.
class RemoteClient {
 public:
  explicit RemoteClient(std::vector<RemotePolicyConfig> endpoints,
                        int max_in_flight = 8);

  // k candidates; malformed or empty completions come back as "". Throws
  // PolicyFailure if every request failed after its retries.
  std::vector<Action> Complete(const std::string& state_text,
                               const std::string& goal_text, int k,
                               Rng& rng) const;

  const std::vector<RemotePolicyConfig>& endpoints() const {
    return endpoints_;
  }

 private:
  struct Reply {
    bool ok = false;
    int attempts = 0;
    std::string text;
    std::string error;
  };
  Reply Request(const RemotePolicyConfig& config, const std::string& prompt,
                std::uint64_t seed) const;

  std::vector<RemotePolicyConfig> endpoints_;
  int max_in_flight_;
};

template <Environment E>
class RemotePolicy : public Policy<E> {
 public:
  RemotePolicy(const E& env, const RemoteClient& client)
      : env_(env), client_(client) {}

  std::vector<Action> SampleCandidates(const typename E::State& state,
                                       const typename E::Goal& top, int k,
                                       Rng& rng) override {
    if (k <= 0) return {};
    return client_.Complete(env_.format_state(state), env_.format_goal(top),
                            k, rng);
  }
  DeterminismClass determinism() const override {
    return DeterminismClass::kExternal;
  }

 private:
  const E& env_;
  const RemoteClient& client_;
};

}  // namespace sgmcts

#endif  // SGMCTS_POLICY_REMOTE_H_
