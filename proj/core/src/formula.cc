// Copyright 2026 The qbfgames Authors
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

#include "qbfgames/formula.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "qbfgames/errors.h"

namespace qbfgames {

// ---------------------------------------------------------------------------
// Assignment

Assignment Assignment::FromBools(std::span<const bool> values) {
  Assignment a(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    a.Assign(static_cast<Var>(i), values[i]);
  }
  return a;
}

bool Assignment::ValueOf(Var v) const {
  switch (values_.at(v)) {
    case TernaryValue::kTrue:
      return true;
    case TernaryValue::kFalse:
      return false;
    case TernaryValue::kUnassigned:
      break;
  }
  throw UnassignedVariableError(v);
}

std::size_t Assignment::LowestUnassigned() const {
  auto it = std::find(values_.begin(), values_.end(), TernaryValue::kUnassigned);
  return static_cast<std::size_t>(it - values_.begin());
}

void Assignment::Assign(Var v, bool value) {
  if (v >= values_.size()) {
    throw InvalidInputError("variable x" + std::to_string(v) +
                            " is out of range");
  }
  if (values_[v] != TernaryValue::kUnassigned) {
    throw InvalidInputError("variable x" + std::to_string(v) +
                            " is already assigned");
  }
  values_[v] = FromBool(value);
  ++assigned_count_;
}

Assignment Assignment::With(Var v, bool value) const {
  Assignment copy = *this;
  copy.Assign(v, value);
  return copy;
}

// ---------------------------------------------------------------------------
// Formula construction

Formula::Formula() : Formula(Constant(true)) {}

Formula Formula::Constant(bool value) {
  static const Formula kTrue(
      std::make_shared<const Node>(Node{Kind::kConst, true, 0, {}}));
  static const Formula kFalse(
      std::make_shared<const Node>(Node{Kind::kConst, false, 0, {}}));
  return value ? kTrue : kFalse;
}

Formula Formula::Literal(Var var, bool negated) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kLiteral, negated, var, {}}));
}

Formula Formula::Not(Formula child) {
  if (child.is_literal() && !child.negated()) {
    return Literal(child.var(), true);
  }
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNot, false, 0, {std::move(child)}}));
}

Formula Formula::And(std::vector<Formula> children) {
  if (children.empty()) return Constant(true);
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAnd, false, 0, std::move(children)}));
}

Formula Formula::Or(std::vector<Formula> children) {
  if (children.empty()) return Constant(false);
  return Formula(std::make_shared<const Node>(
      Node{Kind::kOr, false, 0, std::move(children)}));
}

std::size_t Formula::size() const {
  std::size_t total = 1;
  for (const Formula& c : children()) total += c.size();
  return total;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kConst:
      return a.const_value() == b.const_value();
    case Formula::Kind::kLiteral:
      return a.var() == b.var() && a.negated() == b.negated();
    default:
      return a.children() == b.children();
  }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t num_vars)
      : text_(text), num_vars_(num_vars) {}

  Formula ParseTop() {
    SkipSpace();
    Formula f = ParseOne();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      Advance();
    }
  }

  static bool IsWordChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view ReadWord() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsWordChar(text_[pos_])) Advance();
    return text_.substr(start, pos_ - start);
  }

  Formula ParseVariable(std::string_view word, std::size_t line,
                        std::size_t column) {
    if (word.size() < 2 || word[0] != 'x') {
      throw ParseError("unknown token '" + std::string(word) + "'", line,
                       column);
    }
    std::uint64_t index = 0;
    for (char c : word.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("malformed variable '" + std::string(word) + "'",
                         line, column);
      }
      index = index * 10 + static_cast<std::uint64_t>(c - '0');
      if (index > std::numeric_limits<Var>::max()) {
        throw VariableRangeError(
            "variable index in '" + std::string(word) + "' is too large", line,
            column);
      }
    }
    if (index >= num_vars_) {
      throw VariableRangeError("variable " + std::string(word) +
                                   " is out of range for " +
                                   std::to_string(num_vars_) + " variables",
                               line, column);
    }
    return Formula::Literal(static_cast<Var>(index));
  }

  Formula ParseOne() {
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (text_[pos_] == ')') Fail("unexpected ')'");
    if (text_[pos_] != '(') {
      std::string_view word = ReadWord();
      if (word.empty()) {
        Fail(std::string("unexpected character '") + text_[pos_] + "'");
      }
      if (word == "true") return Formula::Constant(true);
      if (word == "false") return Formula::Constant(false);
      return ParseVariable(word, line, column);
    }

    Advance();  // '('
    SkipSpace();
    const std::size_t op_line = line_;
    const std::size_t op_column = column_;
    std::string_view op = ReadWord();
    std::vector<Formula> children;
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) {
        Fail("unexpected end of input, expected ')'");
      }
      if (text_[pos_] == ')') break;
      children.push_back(ParseOne());
    }
    Advance();  // ')'

    if (op == "not") {
      if (children.size() != 1) {
        throw ParseError("'not' takes exactly one operand", op_line, op_column);
      }
      return Formula::Not(std::move(children[0]));
    }
    if (op == "and" || op == "or") {
      if (children.empty()) {
        throw ParseError("'" + std::string(op) + "' needs at least one operand",
                         op_line, op_column);
      }
      return op == "and" ? Formula::And(std::move(children))
                         : Formula::Or(std::move(children));
    }
    throw ParseError("unknown connective '" + std::string(op) + "'", op_line,
                     op_column);
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

void AppendText(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      out += f.const_value() ? "true" : "false";
      return;
    case Formula::Kind::kLiteral:
      if (f.negated()) out += "(not ";
      out += 'x';
      out += std::to_string(f.var());
      if (f.negated()) out += ')';
      return;
    case Formula::Kind::kNot:
      out += "(not ";
      break;
    case Formula::Kind::kAnd:
      out += "(and";
      break;
    case Formula::Kind::kOr:
      out += "(or";
      break;
  }
  bool first = true;
  for (const Formula& c : f.children()) {
    if (!first || f.kind() != Formula::Kind::kNot) out += ' ';
    first = false;
    AppendText(c, out);
  }
  out += ')';
}

}  // namespace

Formula ParseFormula(std::string_view text, std::size_t num_vars) {
  return Parser(text, num_vars).ParseTop();
}

std::string ToText(const Formula& f) {
  std::string out;
  AppendText(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

TernaryValue ValueIn(const Assignment& a, Var v) {
  return v < a.size() ? a[v] : TernaryValue::kUnassigned;
}

Formula SimplifyJunction(const Formula& f, const Assignment& a) {
  const bool is_and = f.kind() == Formula::Kind::kAnd;
  // The absorbing constant: false for And, true for Or.
  const bool absorbing = !is_and;
  std::vector<Formula> kept;
  kept.reserve(f.children().size());
  for (const Formula& child : f.children()) {
    Formula s = Simplify(child, a);
    if (s.is_const()) {
      if (s.const_value() == absorbing) return s;
      continue;
    }
    if (s.kind() == f.kind()) {
      kept.insert(kept.end(), s.children().begin(), s.children().end());
    } else {
      kept.push_back(std::move(s));
    }
  }
  if (kept.size() == 1) return kept.front();
  return is_and ? Formula::And(std::move(kept)) : Formula::Or(std::move(kept));
}

}  // namespace

Formula Simplify(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      return f;
    case Formula::Kind::kLiteral: {
      TernaryValue v = ValueIn(a, f.var());
      if (v == TernaryValue::kUnassigned) return f;
      return Formula::Constant((v == TernaryValue::kTrue) != f.negated());
    }
    case Formula::Kind::kNot: {
      Formula c = Simplify(f.children().front(), a);
      if (c.is_const()) return Formula::Constant(!c.const_value());
      if (c.is_literal()) return Formula::Literal(c.var(), !c.negated());
      if (c.kind() == Formula::Kind::kNot) return c.children().front();
      return Formula::Not(std::move(c));
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return SimplifyJunction(f, a);
  }
  return f;
}

bool Evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      return f.const_value();
    case Formula::Kind::kLiteral: {
      TernaryValue v = ValueIn(a, f.var());
      if (v == TernaryValue::kUnassigned) throw UnassignedVariableError(f.var());
      return (v == TernaryValue::kTrue) != f.negated();
    }
    case Formula::Kind::kNot:
      return !Evaluate(f.children().front(), a);
    case Formula::Kind::kAnd: {
      // No short-circuit, so an unassigned variable anywhere is reported.
      bool result = true;
      for (const Formula& c : f.children()) result = Evaluate(c, a) && result;
      return result;
    }
    case Formula::Kind::kOr: {
      bool result = false;
      for (const Formula& c : f.children()) result = Evaluate(c, a) || result;
      return result;
    }
  }
  return false;
}

namespace {

// Shared recursion for both predicates: `target` is the blatant value asked
// about (false for BlatantlyFalse).
bool Blatant(const Formula& f, const Assignment& a, bool target) {
  switch (f.kind()) {
    case Formula::Kind::kConst:
      return f.const_value() == target;
    case Formula::Kind::kLiteral: {
      TernaryValue v = ValueIn(a, f.var());
      if (v == TernaryValue::kUnassigned) return false;
      return ((v == TernaryValue::kTrue) != f.negated()) == target;
    }
    case Formula::Kind::kNot:
      return Blatant(f.children().front(), a, !target);
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      // And is blatantly false with one blatantly false child and blatantly
      // true only when all children are; Or is the dual.
      const bool needs_all = (f.kind() == Formula::Kind::kAnd) == target;
      const auto& cs = f.children();
      auto pred = [&](const Formula& c) { return Blatant(c, a, target); };
      return needs_all ? std::all_of(cs.begin(), cs.end(), pred)
                       : std::any_of(cs.begin(), cs.end(), pred);
    }
  }
  return false;
}

void CollectVariables(const Formula& f, std::set<Var>& out) {
  if (f.is_literal()) {
    out.insert(f.var());
    return;
  }
  for (const Formula& c : f.children()) CollectVariables(c, out);
}

Formula SortChildren(const Formula& f) {
  if (f.kind() != Formula::Kind::kAnd && f.kind() != Formula::Kind::kOr) {
    if (f.kind() == Formula::Kind::kNot) {
      return Formula::Not(SortChildren(f.children().front()));
    }
    return f;
  }
  std::vector<std::pair<std::string, Formula>> keyed;
  for (const Formula& c : f.children()) {
    Formula sorted = SortChildren(c);
    keyed.emplace_back(ToText(sorted), sorted);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Formula> children;
  for (auto& [text, c] : keyed) children.push_back(std::move(c));
  return f.kind() == Formula::Kind::kAnd ? Formula::And(std::move(children))
                                         : Formula::Or(std::move(children));
}

}  // namespace

bool BlatantlyFalse(const Formula& f, const Assignment& a) {
  return Blatant(f, a, false);
}

bool BlatantlyTrue(const Formula& f, const Assignment& a) {
  return Blatant(f, a, true);
}

std::set<Var> FreeVariables(const Formula& f) {
  std::set<Var> vars;
  CollectVariables(f, vars);
  return vars;
}

std::size_t VariableBound(const Formula& f) {
  std::set<Var> vars = FreeVariables(f);
  return vars.empty() ? 0 : static_cast<std::size_t>(*vars.rbegin()) + 1;
}

Formula Canonicalize(const Formula& f) {
  return SortChildren(Simplify(f, Assignment()));
}

}  // namespace qbfgames
