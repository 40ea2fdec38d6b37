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

// Boolean formulas over indexed variables x0, x1, ... and the partial
// assignments the games are played on.
//
// Formulas are immutable trees of n-ary And/Or, Not, literals and constants.
// Subtrees are reference counted and may be shared, so copying a Formula is
// cheap and values can be handed to concurrent solver workers freely.

#ifndef QBFGAMES_FORMULA_H_
#define QBFGAMES_FORMULA_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbfgames {

using Var = std::uint32_t;

enum class TernaryValue : std::uint8_t { kUnassigned = 0, kFalse = 1, kTrue = 2 };

inline TernaryValue FromBool(bool b) {
  return b ? TernaryValue::kTrue : TernaryValue::kFalse;
}

// Per-variable ternary state. Variables only ever go from unassigned to
// assigned; Assign() on an occupied variable throws.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_vars)
      : values_(num_vars, TernaryValue::kUnassigned) {}

  // Fully assigned from a vector of booleans.
  static Assignment FromBools(std::span<const bool> values);

  std::size_t size() const { return values_.size(); }
  std::size_t assigned_count() const { return assigned_count_; }

  TernaryValue operator[](Var v) const { return values_.at(v); }
  bool IsAssigned(Var v) const {
    return values_.at(v) != TernaryValue::kUnassigned;
  }
  // Requires IsAssigned(v).
  bool ValueOf(Var v) const;

  // Lowest unassigned index, or size() when fully assigned.
  std::size_t LowestUnassigned() const;

  void Assign(Var v, bool value);
  Assignment With(Var v, bool value) const;

  std::span<const TernaryValue> values() const { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<TernaryValue> values_;
  std::size_t assigned_count_ = 0;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { kConst, kLiteral, kNot, kAnd, kOr };

  // Const(true).
  Formula();

  static Formula Constant(bool value);
  static Formula Literal(Var var, bool negated = false);
  // Not of a positive literal folds into the negated literal; every other
  // child is wrapped in a Not node.
  static Formula Not(Formula child);
  // An empty conjunction is Const(true), an empty disjunction Const(false).
  static Formula And(std::vector<Formula> children);
  static Formula Or(std::vector<Formula> children);

  Kind kind() const { return node_->kind; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_literal() const { return kind() == Kind::kLiteral; }

  // kConst only.
  bool const_value() const { return node_->value; }
  // kLiteral only.
  Var var() const { return node_->var; }
  bool negated() const { return node_->value; }
  // kNot has one child; kAnd / kOr have at least one.
  const std::vector<Formula>& children() const { return node_->children; }

  // Number of nodes in the tree.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    bool value = false;
    Var var = 0;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Parses the parenthesized prefix grammar:
//   formula := "x" N | "(not " formula ")" | "(and " formula+ ")"
//            | "(or " formula+ ")" | "true" | "false"
// Whitespace between tokens is insignificant. "(not xN)" parses directly to a
// negated literal. Throws ParseError on malformed text and
// VariableRangeError when an index is >= num_vars.
Formula ParseFormula(std::string_view text, std::size_t num_vars);

// Inverse of ParseFormula; ParseFormula(ToText(f), n) == f structurally.
std::string ToText(const Formula& f);

// Partial evaluation under `a`: assigned variables become constants, constant
// children are dropped or short-circuit, nested same-kind connectives are
// flattened, single-child connectives are unwrapped and double negations
// removed. The result mentions only unassigned variables or is a constant.
Formula Simplify(const Formula& f, const Assignment& a);

// Throws UnassignedVariableError if any variable occurring in f is unassigned.
bool Evaluate(const Formula& f, const Assignment& a);

// Syntactic falsity: a false literal, Const(false), Not of a blatantly true
// subformula, an Or whose children are all blatantly false, or an And with a
// blatantly false child. Literals on unassigned variables are neither
// blatantly false nor blatantly true.
bool BlatantlyFalse(const Formula& f, const Assignment& a);
bool BlatantlyTrue(const Formula& f, const Assignment& a);

std::set<Var> FreeVariables(const Formula& f);

// Largest variable index in f plus one; 0 for variable-free formulas.
std::size_t VariableBound(const Formula& f);

// Order-insensitive normal form used to compare formulas "up to flattening
// and ordering": simplified under the empty assignment, then And/Or children
// sorted by their text.
Formula Canonicalize(const Formula& f);

}  // namespace qbfgames

#endif  // QBFGAMES_FORMULA_H_
