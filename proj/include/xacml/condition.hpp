// Copyright 2026 The xacml-logic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A three-valued condition language: strong Kleene connectives over fact
// atoms and comparisons, with free variables closed existentially over the
// constants of the request.

#ifndef XACML_CONDITION_HPP_
#define XACML_CONDITION_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xacml/attribute.hpp"
#include "xacml/decision.hpp"

namespace xacml {

// Identifier starting with an uppercase letter.
struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using AtomArg = std::variant<Constant, Variable>;

// f(arg): the value v such that the request has the fact f(arg, v).
struct FunctionApp {
  std::string function;
  AtomArg arg;
  friend bool operator==(const FunctionApp&, const FunctionApp&) = default;
};

using Operand = std::variant<Constant, Variable, FunctionApp>;

enum class CmpOp : std::uint8_t { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view to_string(CmpOp op);  // "=", "!=", "<", "<=", ">", ">="

class ConditionExpr {
 public:
  enum class Kind : std::uint8_t { kTrue, kFalse, kAtom, kCompare, kNot, kAnd, kOr };

  // The empty condition.
  ConditionExpr();

  static ConditionExpr truth();
  static ConditionExpr falsity();
  // Throws ModelError(kBadTerm) for an empty predicate or argument list.
  static ConditionExpr atom(std::string predicate, std::vector<AtomArg> args);
  static ConditionExpr compare(Operand lhs, CmpOp op, Operand rhs);
  static ConditionExpr negate(ConditionExpr child);
  // Throw ModelError(kArity) for fewer than two children.
  static ConditionExpr conj(std::vector<ConditionExpr> children);
  static ConditionExpr disj(std::vector<ConditionExpr> children);

  Kind kind() const;

  // kAtom
  const std::string& predicate() const;
  const std::vector<AtomArg>& atom_args() const;
  // kCompare
  const Operand& lhs() const;
  CmpOp op() const;
  const Operand& rhs() const;
  // kNot (one child), kAnd / kOr (two or more)
  const std::vector<ConditionExpr>& children() const;

  friend bool operator==(const ConditionExpr& a, const ConditionExpr& b);

 private:
  struct Node;
  explicit ConditionExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

using Binding = std::map<std::string, Constant>;

// Variables occurring anywhere in the expression.
std::set<std::string> free_variables(const ConditionExpr& c);

// Every variable used in a comparison must also occur in an atom. Throws
// ModelError(kRangeRestriction).
void check_range_restriction(const ConditionExpr& c);

// Ground evaluation under one binding. Type-mismatched comparisons evaluate
// to Indeterminate and append a note to `notes` when given. Throws
// UnboundVariable when the binding misses a variable.
Decision3 kleene_eval(const ConditionExpr& c, const Binding& b,
                      const Request& q, std::vector<std::string>* notes = nullptr);

// Top if some binding of the free variables to request constants yields
// Top, else Indeterminate if some binding does, else Bottom.
Decision3 eval_condition(const ConditionExpr& c, const Request& q,
                         std::vector<std::string>* notes = nullptr);

}  // namespace xacml

#endif  // XACML_CONDITION_HPP_
