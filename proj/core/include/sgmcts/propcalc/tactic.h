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

#ifndef SGMCTS_PROPCALC_TACTIC_H_
#define SGMCTS_PROPCALC_TACTIC_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgmcts/propcalc/formula.h"

namespace sgmcts::propcalc {

using Hypotheses = std::map<std::string, Formula>;

// One natural-deduction obligation `hyps ⊢ target`. `owner` names the goal the
// sequent belongs to: empty for the root theorem, the conjecture label
// otherwise.
struct Sequent {
  std::string owner;
  Hypotheses hyps;
  Formula target;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string ToString(const Sequent& s);

enum class TacticKind {
  kExact,
  kIntro,
  kApply,
  kSplit,
  kLeft,
  kRight,
  kCases,
  kHave,
};

struct Tactic {
  TacticKind kind;
  std::string label;               // empty for split/left/right
  std::optional<Formula> formula;  // `have` only

  std::string ToString() const;
};

// Parses one tactic. Whitespace is normalized; anything that is not one of
// the eight tactic shapes (including an empty string) yields nullopt.
std::optional<Tactic> ParseTactic(std::string_view text);

// Labels introduced by `intro`/`have`: [a-z][a-z0-9_]*.
bool IsBindableLabel(std::string_view label);
// Labels that may be referenced: bindable labels with `.l`/`.r` suffixes,
// which `cases` produces.
bool IsReferenceLabel(std::string_view label);

// Effect of a primitive tactic on a single sequent: the sequents replacing it,
// listed bottom to top. Empty means the sequent was closed. nullopt means the
// tactic does not apply. `have` never applies here.
std::optional<std::vector<Sequent>> ApplyToSequent(const Sequent& sequent,
                                                   const Tactic& tactic);

// Smallest of h, h1, h2, ... that neither names a hypothesis nor prefixes a
// `cases`-generated one.
std::string FreshLabel(const Hypotheses& hyps, std::string_view stem);

// Every primitive tactic applicable to `sequent`, in canonical order: exact
// (label order), intro, apply (label order), split, left, right, cases
// (label order).
std::vector<Tactic> ApplicableTactics(const Sequent& sequent);

}  // namespace sgmcts::propcalc

#endif  // SGMCTS_PROPCALC_TACTIC_H_
