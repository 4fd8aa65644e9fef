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

#include "sgmcts/propcalc/tactic.h"

#include <cctype>
#include <sstream>

namespace sgmcts::propcalc {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

const Formula* Find(const Hypotheses& hyps, const std::string& label) {
  auto it = hyps.find(label);
  return it == hyps.end() ? nullptr : &it->second;
}

}  // namespace

std::string ToString(const Sequent& s) {
  std::string out;
  bool first = true;
  for (const auto& [label, f] : s.hyps) {
    if (!first) out += ", ";
    first = false;
    out += label + " : " + f.ToString();
  }
  if (!first) out += " ";
  out += "⊢ " + s.target.ToString();
  return out;
}

std::string Tactic::ToString() const {
  switch (kind) {
    case TacticKind::kExact:
      return "exact " + label;
    case TacticKind::kIntro:
      return "intro " + label;
    case TacticKind::kApply:
      return "apply " + label;
    case TacticKind::kSplit:
      return "split";
    case TacticKind::kLeft:
      return "left";
    case TacticKind::kRight:
      return "right";
    case TacticKind::kCases:
      return "cases " + label;
    case TacticKind::kHave:
      return "have " + label + " : " + formula->ToString();
  }
  return {};
}

bool IsBindableLabel(std::string_view label) {
  if (label.empty() || label.front() < 'a' || label.front() > 'z') return false;
  for (char c : label) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) {
      return false;
    }
  }
  return true;
}

bool IsReferenceLabel(std::string_view label) {
  auto dot = label.find('.');
  if (!IsBindableLabel(label.substr(0, dot))) return false;
  while (dot != std::string_view::npos) {
    label.remove_prefix(dot);
    if (label.size() < 2 || (label[1] != 'l' && label[1] != 'r')) return false;
    label.remove_prefix(2);
    if (label.empty()) return true;
    if (label.front() != '.') return false;
    dot = 0;
  }
  return true;
}

std::optional<Tactic> ParseTactic(std::string_view text) {
  text = Trim(text);
  if (text.substr(0, 5) == "have " || text.substr(0, 5) == "have\t") {
    std::string_view rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    std::string label(Trim(rest.substr(0, colon)));
    if (!IsBindableLabel(label)) return std::nullopt;
    try {
      return Tactic{TacticKind::kHave, label,
                    ParseFormula(rest.substr(colon + 1))};
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  auto words = Words(text);
  if (words.size() == 1) {
    if (words[0] == "split") return Tactic{TacticKind::kSplit, {}, {}};
    if (words[0] == "left") return Tactic{TacticKind::kLeft, {}, {}};
    if (words[0] == "right") return Tactic{TacticKind::kRight, {}, {}};
    return std::nullopt;
  }
  if (words.size() != 2) return std::nullopt;
  const std::string& head = words[0];
  const std::string& label = words[1];
  if (head == "intro") {
    if (!IsBindableLabel(label)) return std::nullopt;
    return Tactic{TacticKind::kIntro, label, {}};
  }
  if (!IsReferenceLabel(label)) return std::nullopt;
  if (head == "exact") return Tactic{TacticKind::kExact, label, {}};
  if (head == "apply") return Tactic{TacticKind::kApply, label, {}};
  if (head == "cases") return Tactic{TacticKind::kCases, label, {}};
  return std::nullopt;
}

std::optional<std::vector<Sequent>> ApplyToSequent(const Sequent& sequent,
                                                   const Tactic& tactic) {
  const Formula& target = sequent.target;
  switch (tactic.kind) {
    case TacticKind::kExact: {
      const Formula* h = Find(sequent.hyps, tactic.label);
      if (h == nullptr || *h != target) return std::nullopt;
      return std::vector<Sequent>{};
    }
    case TacticKind::kIntro: {
      if (target.connective() != Connective::kImplies) return std::nullopt;
      if (sequent.hyps.contains(tactic.label)) return std::nullopt;
      Sequent next = sequent;
      next.hyps.emplace(tactic.label, target.lhs());
      next.target = target.rhs();
      return std::vector<Sequent>{std::move(next)};
    }
    case TacticKind::kApply: {
      const Formula* h = Find(sequent.hyps, tactic.label);
      if (h == nullptr || h->connective() != Connective::kImplies ||
          h->rhs() != target) {
        return std::nullopt;
      }
      Sequent next = sequent;
      next.target = h->lhs();
      return std::vector<Sequent>{std::move(next)};
    }
    case TacticKind::kSplit: {
      if (target.connective() != Connective::kAnd) return std::nullopt;
      Sequent first = sequent;
      first.target = target.lhs();
      Sequent second = sequent;
      second.target = target.rhs();
      return std::vector<Sequent>{std::move(second), std::move(first)};
    }
    case TacticKind::kLeft:
    case TacticKind::kRight: {
      if (target.connective() != Connective::kOr) return std::nullopt;
      Sequent next = sequent;
      next.target =
          tactic.kind == TacticKind::kLeft ? target.lhs() : target.rhs();
      return std::vector<Sequent>{std::move(next)};
    }
    case TacticKind::kCases: {
      const Formula* h = Find(sequent.hyps, tactic.label);
      if (h == nullptr) return std::nullopt;
      const std::string l = tactic.label + ".l";
      const std::string r = tactic.label + ".r";
      if (sequent.hyps.contains(l) || sequent.hyps.contains(r)) {
        return std::nullopt;
      }
      Formula split = *h;
      Sequent base = sequent;
      base.hyps.erase(tactic.label);
      if (split.connective() == Connective::kAnd) {
        base.hyps.emplace(l, split.lhs());
        base.hyps.emplace(r, split.rhs());
        return std::vector<Sequent>{std::move(base)};
      }
      if (split.connective() == Connective::kOr) {
        Sequent left = base;
        left.hyps.emplace(l, split.lhs());
        Sequent right = std::move(base);
        right.hyps.emplace(r, split.rhs());
        return std::vector<Sequent>{std::move(right), std::move(left)};
      }
      return std::nullopt;
    }
    case TacticKind::kHave:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string FreshLabel(const Hypotheses& hyps, std::string_view stem) {
  for (int i = 0;; ++i) {
    std::string candidate(stem);
    if (i > 0) candidate += std::to_string(i);
    auto it = hyps.lower_bound(candidate);
    bool taken = false;
    if (it != hyps.end()) {
      const std::string& k = it->first;
      taken = k == candidate || (k.size() > candidate.size() &&
                                 k.compare(0, candidate.size(), candidate) == 0 &&
                                 k[candidate.size()] == '.');
    }
    if (!taken) return candidate;
  }
}

std::vector<Tactic> ApplicableTactics(const Sequent& sequent) {
  std::vector<Tactic> out;
  const Formula& target = sequent.target;
  for (const auto& [label, f] : sequent.hyps) {
    if (f == target) out.push_back({TacticKind::kExact, label, {}});
  }
  if (target.connective() == Connective::kImplies) {
    out.push_back({TacticKind::kIntro, FreshLabel(sequent.hyps, "h"), {}});
  }
  for (const auto& [label, f] : sequent.hyps) {
    if (f.connective() == Connective::kImplies && f.rhs() == target) {
      out.push_back({TacticKind::kApply, label, {}});
    }
  }
  if (target.connective() == Connective::kAnd) {
    out.push_back({TacticKind::kSplit, {}, {}});
  }
  if (target.connective() == Connective::kOr) {
    out.push_back({TacticKind::kLeft, {}, {}});
    out.push_back({TacticKind::kRight, {}, {}});
  }
  for (const auto& [label, f] : sequent.hyps) {
    if ((f.connective() == Connective::kAnd ||
         f.connective() == Connective::kOr) &&
        !sequent.hyps.contains(label + ".l") &&
        !sequent.hyps.contains(label + ".r")) {
      out.push_back({TacticKind::kCases, label, {}});
    }
  }
  return out;
}

}  // namespace sgmcts::propcalc
