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

#include "sgmcts/propcalc/checker.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "sgmcts/propcalc/environment.h"
#include "sgmcts/propcalc/formula.h"
#include "sgmcts/propcalc/tactic.h"

namespace sgmcts::propcalc {

namespace {

using Hyp = std::pair<std::string, Formula>;

struct Obligation {
  std::vector<Hyp> hyps;
  Formula goal;
};

// One entry of the replayed goal stack. A conjecture frame stays unopened
// until the first tactic addresses it.
struct Frame {
  std::string label;  // empty for the theorem itself
  Formula statement;
  bool opened = false;
  std::vector<Obligation> obligations;  // last = active
};

const Formula* Lookup(const std::vector<Hyp>& hyps, const std::string& label) {
  for (const auto& [l, f] : hyps) {
    if (l == label) return &f;
  }
  return nullptr;
}

bool Mentions(const std::vector<Hyp>& hyps, const std::string& label) {
  return std::any_of(hyps.begin(), hyps.end(), [&](const Hyp& h) {
    return h.first == label ||
           (h.first.size() > label.size() && h.first[label.size()] == '.' &&
            h.first.compare(0, label.size(), label) == 0);
  });
}

void Drop(std::vector<Hyp>& hyps, const std::string& label) {
  hyps.erase(std::remove_if(hyps.begin(), hyps.end(),
                            [&](const Hyp& h) { return h.first == label; }),
             hyps.end());
}

class Replay {
 public:
  explicit Replay(const Task& task) {
    Frame root{"", task.target, true, {}};
    Obligation first{{}, task.target};
    for (const auto& [label, f] : task.hypotheses) first.hyps.emplace_back(label, f);
    root.obligations.push_back(std::move(first));
    frames_.push_back(std::move(root));
  }

  bool done() const { return frames_.empty(); }

  bool Step(const std::string& text) {
    if (frames_.empty()) return false;
    auto tactic = ParseTactic(text);
    if (!tactic) return false;
    if (tactic->kind == TacticKind::kHave) return Propose(*tactic);

    Frame& top = frames_.back();
    if (!top.opened && !Open(top)) return false;
    Obligation current = top.obligations.back();
    auto pieces = Decompose(current, *tactic);
    if (!pieces) return false;
    top.obligations.pop_back();
    for (auto& p : *pieces) top.obligations.push_back(std::move(p));
    if (top.obligations.empty()) Close();
    return true;
  }

 private:
  // Obligation below the top frame that an unopened conjecture starts from.
  Obligation* Anchor() {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      if (it->opened && !it->obligations.empty()) return &it->obligations.back();
    }
    return nullptr;
  }

  bool Open(Frame& frame) {
    Obligation* anchor = Anchor();
    if (anchor == nullptr || Mentions(anchor->hyps, frame.label)) return false;
    frame.obligations.push_back(Obligation{anchor->hyps, frame.statement});
    frame.opened = true;
    return true;
  }

  bool Propose(const Tactic& tactic) {
    const std::string& label = tactic.label;
    Frame& top = frames_.back();
    const std::vector<Hyp>* scope = nullptr;
    if (top.opened) {
      scope = &top.obligations.back().hyps;
    } else if (Obligation* anchor = Anchor()) {
      scope = &anchor->hyps;
    }
    if (scope == nullptr || Mentions(*scope, label) ||
        std::find(proven_.begin(), proven_.end(), label) != proven_.end()) {
      return false;
    }
    for (const auto& f : frames_) {
      if (f.label == label) return false;
    }
    frames_.push_back(Frame{label, *tactic.formula, false, {}});
    return true;
  }

  void Close() {
    Frame finished = std::move(frames_.back());
    frames_.pop_back();
    if (finished.label.empty()) return;
    proven_.push_back(finished.label);
    if (Obligation* anchor = Anchor()) {
      anchor->hyps.emplace_back(finished.label, finished.statement);
    }
  }

  // New obligations for `o` under `t`, listed with the active one last.
  static std::optional<std::vector<Obligation>> Decompose(const Obligation& o,
                                                          const Tactic& t) {
    const Formula& g = o.goal;
    const Formula* h = t.label.empty() ? nullptr : Lookup(o.hyps, t.label);
    switch (t.kind) {
      case TacticKind::kExact:
        if (h != nullptr && *h == g) return std::vector<Obligation>{};
        return std::nullopt;
      case TacticKind::kIntro: {
        if (g.connective() != Connective::kImplies || h != nullptr) {
          return std::nullopt;
        }
        Obligation next{o.hyps, g.rhs()};
        next.hyps.emplace_back(t.label, g.lhs());
        return std::vector<Obligation>{next};
      }
      case TacticKind::kApply:
        if (h == nullptr || h->connective() != Connective::kImplies ||
            h->rhs() != g) {
          return std::nullopt;
        }
        return std::vector<Obligation>{Obligation{o.hyps, h->lhs()}};
      case TacticKind::kSplit:
        if (g.connective() != Connective::kAnd) return std::nullopt;
        return std::vector<Obligation>{Obligation{o.hyps, g.rhs()},
                                       Obligation{o.hyps, g.lhs()}};
      case TacticKind::kLeft:
        if (g.connective() != Connective::kOr) return std::nullopt;
        return std::vector<Obligation>{Obligation{o.hyps, g.lhs()}};
      case TacticKind::kRight:
        if (g.connective() != Connective::kOr) return std::nullopt;
        return std::vector<Obligation>{Obligation{o.hyps, g.rhs()}};
      case TacticKind::kCases: {
        if (h == nullptr) return std::nullopt;
        std::string l = t.label + ".l";
        std::string r = t.label + ".r";
        if (Lookup(o.hyps, l) != nullptr || Lookup(o.hyps, r) != nullptr) {
          return std::nullopt;
        }
        Formula parts = *h;
        std::vector<Hyp> rest = o.hyps;
        Drop(rest, t.label);
        if (parts.connective() == Connective::kAnd) {
          Obligation next{rest, g};
          next.hyps.emplace_back(l, parts.lhs());
          next.hyps.emplace_back(r, parts.rhs());
          return std::vector<Obligation>{next};
        }
        if (parts.connective() == Connective::kOr) {
          Obligation first{rest, g};
          first.hyps.emplace_back(l, parts.lhs());
          Obligation second{rest, g};
          second.hyps.emplace_back(r, parts.rhs());
          return std::vector<Obligation>{second, first};
        }
        return std::nullopt;
      }
      case TacticKind::kHave:
        break;
    }
    return std::nullopt;
  }

  std::vector<Frame> frames_;
  std::vector<std::string> proven_;
};

}  // namespace

bool CheckProof(const Task& task, const std::vector<std::string>& script) {
  Replay replay(task);
  for (const auto& text : script) {
    if (!replay.Step(text)) return false;
  }
  return replay.done();
}

}  // namespace sgmcts::propcalc
