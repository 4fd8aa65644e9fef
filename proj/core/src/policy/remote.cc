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

#include "sgmcts/policy/remote.h"

#include <chrono>
#include <future>
#include <stdexcept>

#include "httplib.h"

namespace sgmcts {

void RemotePolicyConfig::Validate() const {
  if (timeout_ms <= 0) throw std::invalid_argument("timeout must be > 0");
  if (retries < 0) throw std::invalid_argument("retries must be >= 0");
  if (max_tokens <= 0) throw std::invalid_argument("max_tokens must be > 0");
  if (endpoint.empty()) throw std::invalid_argument("endpoint is empty");
}

nlohmann::ordered_json ToJson(const RemotePolicyConfig& c) {
  return {{"endpoint", c.endpoint},     {"path", c.path},
          {"timeout_ms", c.timeout_ms}, {"prompt_template", c.prompt_template},
          {"max_tokens", c.max_tokens}, {"temperature", c.temperature},
          {"retries", c.retries}};
}

RemotePolicyConfig RemotePolicyConfigFromJson(const nlohmann::json& j) {
  RemotePolicyConfig c;
  c.endpoint = j.value("endpoint", c.endpoint);
  c.path = j.value("path", c.path);
  c.timeout_ms = j.value("timeout_ms", c.timeout_ms);
  c.prompt_template = j.value("prompt_template", c.prompt_template);
  c.max_tokens = j.value("max_tokens", c.max_tokens);
  c.temperature = j.value("temperature", c.temperature);
  c.retries = j.value("retries", c.retries);
  c.Validate();
  return c;
}

std::string RenderPrompt(const std::string& prompt_template,
                         const std::string& state, const std::string& goal) {
  std::string out;
  for (std::size_t i = 0; i < prompt_template.size();) {
    if (prompt_template.compare(i, 7, "{state}") == 0) {
      out += state;
      i += 7;
    } else if (prompt_template.compare(i, 6, "{goal}") == 0) {
      out += goal;
      i += 6;
    } else {
      out.push_back(prompt_template[i++]);
    }
  }
  return out;
}

RemoteClient::RemoteClient(std::vector<RemotePolicyConfig> endpoints,
                           int max_in_flight)
    : endpoints_(std::move(endpoints)), max_in_flight_(max_in_flight) {
  if (endpoints_.empty()) throw std::invalid_argument("no endpoints");
  if (max_in_flight_ < 1) throw std::invalid_argument("max_in_flight < 1");
  for (const auto& e : endpoints_) e.Validate();
}

RemoteClient::Reply RemoteClient::Request(const RemotePolicyConfig& config,
                                          const std::string& prompt,
                                          std::uint64_t seed) const {
  nlohmann::json body = {{"prompt", prompt},
                         {"max_tokens", config.max_tokens},
                         {"temperature", config.temperature},
                         {"seed", seed}};
  const std::string payload = body.dump();
  const auto timeout = std::chrono::milliseconds(config.timeout_ms);

  Reply reply;
  for (int attempt = 0; attempt <= config.retries; ++attempt) {
    ++reply.attempts;
    httplib::Client client(config.endpoint);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    auto res = client.Post(config.path, payload, "application/json");
    if (!res) {
      reply.error = httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      reply.error = "HTTP " + std::to_string(res->status);
      continue;
    }
    reply.ok = true;
    auto parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_object() && parsed.contains("text") &&
        parsed["text"].is_string()) {
      std::string text = parsed["text"].get<std::string>();
      reply.text = text.substr(0, text.find('\n'));
      if (!reply.text.empty() && reply.text.back() == '\r') {
        reply.text.pop_back();
      }
    }
    return reply;
  }
  return reply;
}

std::vector<Action> RemoteClient::Complete(const std::string& state_text,
                                           const std::string& goal_text, int k,
                                           Rng& rng) const {
  std::vector<Action> out;
  if (k <= 0) return out;
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < k; ++i) seeds.push_back(rng());

  std::vector<Reply> replies(static_cast<std::size_t>(k));
  for (int start = 0; start < k; start += max_in_flight_) {
    int stop = std::min(k, start + max_in_flight_);
    std::vector<std::future<Reply>> inflight;
    for (int i = start; i < stop; ++i) {
      const auto& config =
          endpoints_[static_cast<std::size_t>(i) % endpoints_.size()];
      inflight.push_back(std::async(
          std::launch::async, [this, &config, &state_text, &goal_text,
                               seed = seeds[static_cast<std::size_t>(i)]] {
            return Request(config,
                           RenderPrompt(config.prompt_template, state_text,
                                        goal_text),
                           seed);
          }));
    }
    for (int i = start; i < stop; ++i) {
      replies[static_cast<std::size_t>(i)] =
          inflight[static_cast<std::size_t>(i - start)].get();
    }
  }

  int attempts = 0;
  bool any_ok = false;
  std::string last_error;
  for (auto& r : replies) {
    attempts += r.attempts;
    any_ok = any_ok || r.ok;
    if (!r.ok) last_error = r.error;
    out.push_back(r.ok ? std::move(r.text) : std::string());
  }
  if (!any_ok) {
    throw PolicyFailure("completion service unavailable: " + last_error,
                        attempts);
  }
  return out;
}

}  // namespace sgmcts
