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

#include "sgmcts/propcalc/formula.h"

#include <algorithm>
#include <tuple>

namespace sgmcts::propcalc {

Formula Formula::Atom(char name) {
  if (name < 'A' || name > 'Z') {
    throw std::invalid_argument(std::string("atom out of range: ") + name);
  }
  return Formula(std::make_shared<const Node>(
      Node{Connective::kAtom, name, 0, {}}));
}

Formula Formula::Not(Formula operand) {
  int depth = operand.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::kNot, 0, depth, {std::move(operand)}}));
}

Formula Formula::Binary(Connective c, Formula lhs, Formula rhs) {
  int depth = std::max(lhs.depth(), rhs.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{c, 0, depth, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::And(Formula lhs, Formula rhs) {
  return Binary(Connective::kAnd, std::move(lhs), std::move(rhs));
}
Formula Formula::Or(Formula lhs, Formula rhs) {
  return Binary(Connective::kOr, std::move(lhs), std::move(rhs));
}
Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Binary(Connective::kImplies, std::move(lhs), std::move(rhs));
}

namespace {

const char* Symbol(Connective c) {
  switch (c) {
    case Connective::kAnd:
      return "∧";
    case Connective::kOr:
      return "∨";
    case Connective::kImplies:
      return "→";
    case Connective::kNot:
      return "¬";
    case Connective::kAtom:
      break;
  }
  return "";
}

void Print(const Formula& f, std::string& out) {
  switch (f.connective()) {
    case Connective::kAtom:
      out.push_back(f.atom());
      return;
    case Connective::kNot:
      out += Symbol(Connective::kNot);
      Print(f.lhs(), out);
      return;
    default:
      out.push_back('(');
      Print(f.lhs(), out);
      out.push_back(' ');
      out += Symbol(f.connective());
      out.push_back(' ');
      Print(f.rhs(), out);
      out.push_back(')');
  }
}

int Compare(const Formula& a, const Formula& b) {
  if (a.connective() != b.connective()) {
    return a.connective() < b.connective() ? -1 : 1;
  }
  switch (a.connective()) {
    case Connective::kAtom:
      return a.atom() == b.atom() ? 0 : (a.atom() < b.atom() ? -1 : 1);
    case Connective::kNot:
      return Compare(a.lhs(), b.lhs());
    default: {
      int c = Compare(a.lhs(), b.lhs());
      return c != 0 ? c : Compare(a.rhs(), b.rhs());
    }
  }
}

enum class TokenKind { kAtom, kNot, kAnd, kOr, kImplies, kLParen, kRParen,
                       kEnd };

struct Token {
  TokenKind kind;
  char atom = 0;
  std::size_t column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) { Tokenize(text); }

  Formula ParseAll() {
    Formula f = ParseImplication();
    if (Peek().kind != TokenKind::kEnd) {
      throw ParseError("unexpected token", Peek().column);
    }
    return f;
  }

 private:
  void Tokenize(std::string_view text) {
    std::size_t column = 1;
    std::size_t i = 0;
    auto starts = [&](std::string_view s) {
      return text.substr(i, s.size()) == s;
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i;
        ++column;
        continue;
      }
      Token t{TokenKind::kEnd, 0, column};
      std::size_t width = 1;
      if (c >= 'A' && c <= 'Z') {
        t.kind = TokenKind::kAtom;
        t.atom = c;
      } else if (c == '(') {
        t.kind = TokenKind::kLParen;
      } else if (c == ')') {
        t.kind = TokenKind::kRParen;
      } else if (c == '&') {
        t.kind = TokenKind::kAnd;
      } else if (c == '|') {
        t.kind = TokenKind::kOr;
      } else if (c == '~') {
        t.kind = TokenKind::kNot;
      } else if (starts("->")) {
        t.kind = TokenKind::kImplies;
        width = 2;
        column += 1;
      } else if (starts("∧")) {
        t.kind = TokenKind::kAnd;
        width = 3;
      } else if (starts("∨")) {
        t.kind = TokenKind::kOr;
        width = 3;
      } else if (starts("→")) {
        t.kind = TokenKind::kImplies;
        width = 3;
      } else if (starts("¬")) {
        t.kind = TokenKind::kNot;
        width = 2;
      } else {
        throw ParseError(std::string("unexpected character"), column);
      }
      tokens_.push_back(t);
      i += width;
      ++column;
    }
    tokens_.push_back(Token{TokenKind::kEnd, 0, column});
  }

  const Token& Peek() const { return tokens_[pos_]; }
  Token Next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  Formula ParseImplication() {
    Formula lhs = ParseDisjunction();
    if (Peek().kind == TokenKind::kImplies) {
      Next();
      return Formula::Implies(std::move(lhs), ParseImplication());
    }
    return lhs;
  }

  Formula ParseDisjunction() {
    Formula lhs = ParseConjunction();
    while (Peek().kind == TokenKind::kOr) {
      Next();
      lhs = Formula::Or(std::move(lhs), ParseConjunction());
    }
    return lhs;
  }

  Formula ParseConjunction() {
    Formula lhs = ParseUnary();
    while (Peek().kind == TokenKind::kAnd) {
      Next();
      lhs = Formula::And(std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  Formula ParseUnary() {
    Token t = Next();
    switch (t.kind) {
      case TokenKind::kNot:
        return Formula::Not(ParseUnary());
      case TokenKind::kAtom:
        return Formula::Atom(t.atom);
      case TokenKind::kLParen: {
        Formula inner = ParseImplication();
        if (Peek().kind != TokenKind::kRParen) {
          throw ParseError("expected ')'", Peek().column);
        }
        Next();
        return inner;
      }
      case TokenKind::kEnd:
        throw ParseError("unexpected end of input", t.column);
      default:
        throw ParseError("expected a formula", t.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void CollectSubformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  switch (f.connective()) {
    case Connective::kAtom:
      return;
    case Connective::kNot:
      CollectSubformulas(f.lhs(), out);
      return;
    default:
      CollectSubformulas(f.lhs(), out);
      CollectSubformulas(f.rhs(), out);
  }
}

}  // namespace

std::string Formula::ToString() const {
  std::string out;
  Print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.depth() != b.depth()) return false;
  return Compare(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) {
  return Compare(a, b) < 0;
}

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error(message + " at column " + std::to_string(column)),
      column_(column) {}

Formula ParseFormula(std::string_view text) { return Parser(text).ParseAll(); }

std::vector<Formula> Subformulas(const Formula& f) {
  std::vector<Formula> out;
  CollectSubformulas(f, out);
  return out;
}

}  // namespace sgmcts::propcalc
