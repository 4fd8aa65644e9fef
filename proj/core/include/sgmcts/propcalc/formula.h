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

#ifndef SGMCTS_PROPCALC_FORMULA_H_
#define SGMCTS_PROPCALC_FORMULA_H_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgmcts::propcalc {

enum class Connective { kAtom, kNot, kAnd, kOr, kImplies };

// Immutable propositional formula over the atoms A..Z. Copies share the
// underlying tree.
//
// Text form: atoms are single capital letters, negation is a prefix `¬`,
// and every binary connective is wrapped in parentheses:
//   A   ¬A   (A ∧ B)   (A ∨ B)   (A → B)   ((A ∧ B) → ¬C)
// The parser additionally accepts the ASCII spellings `~`, `&`, `|`, `->`,
// and tolerates omitted parentheses with the usual precedence
// (¬ > ∧ > ∨ > →, implication associating to the right). ToString() always
// emits the canonical fully parenthesized form, so
// ParseFormula(f.ToString()) == f for every formula.
class Formula {
 public:
  static Formula Atom(char name);
  static Formula Not(Formula operand);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);

  Connective connective() const { return node_->connective; }
  bool is_atom() const { return connective() == Connective::kAtom; }
  char atom() const { return node_->atom; }
  // Operand of ¬, or the left side of a binary connective.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }

  // Height of the syntax tree; atoms have depth 0.
  int depth() const { return node_->depth; }

  std::string ToString() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }
  // Structural total order (used for canonical orderings).
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective connective;
    char atom = 0;
    int depth = 0;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Binary(Connective c, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column);
  // 1-based column, counted in code points.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

Formula ParseFormula(std::string_view text);

// Subformulas in pre-order, including `f` itself.
std::vector<Formula> Subformulas(const Formula& f);

}  // namespace sgmcts::propcalc

#endif  // SGMCTS_PROPCALC_FORMULA_H_
