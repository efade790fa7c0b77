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

#include "xacml/condition.hpp"

#include <algorithm>
#include <optional>

#include "xacml/errors.hpp"

namespace xacml {

struct ConditionExpr::Node {
  Kind kind = Kind::kTrue;
  std::string predicate;
  std::vector<AtomArg> args;
  Operand lhs;
  CmpOp op = CmpOp::kEq;
  Operand rhs;
  std::vector<ConditionExpr> children;
};

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::kEq:
      return "=";
    case CmpOp::kNe:
      return "!=";
    case CmpOp::kLt:
      return "<";
    case CmpOp::kLe:
      return "<=";
    case CmpOp::kGt:
      return ">";
    case CmpOp::kGe:
      return ">=";
  }
  return "?";
}

ConditionExpr::ConditionExpr() : ConditionExpr(truth()) {}

ConditionExpr::ConditionExpr(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

ConditionExpr ConditionExpr::truth() {
  static const auto node = [] {
    Node n;
    n.kind = Kind::kTrue;
    return std::make_shared<const Node>(std::move(n));
  }();
  return ConditionExpr(node);
}

ConditionExpr ConditionExpr::falsity() {
  static const auto node = [] {
    Node n;
    n.kind = Kind::kFalse;
    return std::make_shared<const Node>(std::move(n));
  }();
  return ConditionExpr(node);
}

ConditionExpr ConditionExpr::atom(std::string predicate,
                                  std::vector<AtomArg> args) {
  if (predicate.empty() || args.empty())
    throw ModelError(ModelError::Kind::kBadTerm,
                     "atom '" + predicate + "' needs a name and arguments");
  Node n;
  n.kind = Kind::kAtom;
  n.predicate = std::move(predicate);
  n.args = std::move(args);
  return ConditionExpr(std::make_shared<const Node>(std::move(n)));
}

ConditionExpr ConditionExpr::compare(Operand lhs, CmpOp op, Operand rhs) {
  Node n;
  n.kind = Kind::kCompare;
  n.lhs = std::move(lhs);
  n.op = op;
  n.rhs = std::move(rhs);
  return ConditionExpr(std::make_shared<const Node>(std::move(n)));
}

ConditionExpr ConditionExpr::negate(ConditionExpr child) {
  Node n;
  n.kind = Kind::kNot;
  n.children.push_back(std::move(child));
  return ConditionExpr(std::make_shared<const Node>(std::move(n)));
}

namespace {

void require_two(const std::vector<ConditionExpr>& children, const char* what) {
  if (children.size() < 2)
    throw ModelError(ModelError::Kind::kArity,
                     std::string(what) + " needs at least two operands");
}

}  // namespace

ConditionExpr ConditionExpr::conj(std::vector<ConditionExpr> children) {
  require_two(children, "conjunction");
  Node n;
  n.kind = Kind::kAnd;
  n.children = std::move(children);
  return ConditionExpr(std::make_shared<const Node>(std::move(n)));
}

ConditionExpr ConditionExpr::disj(std::vector<ConditionExpr> children) {
  require_two(children, "disjunction");
  Node n;
  n.kind = Kind::kOr;
  n.children = std::move(children);
  return ConditionExpr(std::make_shared<const Node>(std::move(n)));
}

ConditionExpr::Kind ConditionExpr::kind() const { return node_->kind; }
const std::string& ConditionExpr::predicate() const { return node_->predicate; }
const std::vector<AtomArg>& ConditionExpr::atom_args() const {
  return node_->args;
}
const Operand& ConditionExpr::lhs() const { return node_->lhs; }
CmpOp ConditionExpr::op() const { return node_->op; }
const Operand& ConditionExpr::rhs() const { return node_->rhs; }
const std::vector<ConditionExpr>& ConditionExpr::children() const {
  return node_->children;
}

bool operator==(const ConditionExpr& a, const ConditionExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ConditionExpr::Kind::kTrue:
    case ConditionExpr::Kind::kFalse:
      return true;
    case ConditionExpr::Kind::kAtom:
      return x.predicate == y.predicate && x.args == y.args;
    case ConditionExpr::Kind::kCompare:
      return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
    case ConditionExpr::Kind::kNot:
    case ConditionExpr::Kind::kAnd:
    case ConditionExpr::Kind::kOr:
      return x.children == y.children;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Variables

namespace {

void add_var(const AtomArg& a, std::set<std::string>& out) {
  if (const auto* v = std::get_if<Variable>(&a)) out.insert(v->name);
}

void add_var(const Operand& o, std::set<std::string>& out) {
  if (const auto* v = std::get_if<Variable>(&o)) out.insert(v->name);
  if (const auto* f = std::get_if<FunctionApp>(&o)) add_var(f->arg, out);
}

void collect(const ConditionExpr& c, std::set<std::string>& atom_vars,
             std::set<std::string>& compare_vars) {
  switch (c.kind()) {
    case ConditionExpr::Kind::kTrue:
    case ConditionExpr::Kind::kFalse:
      return;
    case ConditionExpr::Kind::kAtom:
      for (const AtomArg& a : c.atom_args()) add_var(a, atom_vars);
      return;
    case ConditionExpr::Kind::kCompare:
      add_var(c.lhs(), compare_vars);
      add_var(c.rhs(), compare_vars);
      return;
    case ConditionExpr::Kind::kNot:
    case ConditionExpr::Kind::kAnd:
    case ConditionExpr::Kind::kOr:
      for (const ConditionExpr& child : c.children())
        collect(child, atom_vars, compare_vars);
      return;
  }
}

}  // namespace

std::set<std::string> free_variables(const ConditionExpr& c) {
  std::set<std::string> atom_vars, compare_vars;
  collect(c, atom_vars, compare_vars);
  atom_vars.insert(compare_vars.begin(), compare_vars.end());
  return atom_vars;
}

void check_range_restriction(const ConditionExpr& c) {
  std::set<std::string> atom_vars, compare_vars;
  collect(c, atom_vars, compare_vars);
  for (const std::string& v : compare_vars) {
    if (!atom_vars.contains(v))
      throw ModelError(ModelError::Kind::kRangeRestriction,
                       "variable " + v +
                           " is compared but does not occur in any atom");
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

const Constant& lookup(const Variable& v, const Binding& b) {
  auto it = b.find(v.name);
  if (it == b.end()) throw UnboundVariable("variable " + v.name + " is unbound");
  return it->second;
}

Constant ground(const AtomArg& a, const Binding& b) {
  if (const auto* c = std::get_if<Constant>(&a)) return *c;
  return lookup(std::get<Variable>(a), b);
}

void note(std::vector<std::string>* notes, std::string text) {
  if (notes == nullptr) return;
  if (std::find(notes->begin(), notes->end(), text) == notes->end())
    notes->push_back(std::move(text));
}

// Value of an operand, or nullopt when it cannot be determined (erroneous,
// missing or ambiguous function fact).
std::optional<Constant> resolve(const Operand& o, const Binding& b,
                                const Request& q,
                                std::vector<std::string>* notes) {
  if (const auto* c = std::get_if<Constant>(&o)) return *c;
  if (const auto* v = std::get_if<Variable>(&o)) return lookup(*v, b);
  const auto& f = std::get<FunctionApp>(o);
  const Constant key = ground(f.arg, b);
  const std::string shown = f.function + "(" + to_display(key) + ")";
  for (const AttributeTerm& t : q.error_attributes()) {
    if (t.name() == f.function && t.args().size() == 2 && t.args()[0] == key) {
      note(notes, shown + " is erroneous");
      return std::nullopt;
    }
  }
  std::optional<Constant> value;
  for (const AttributeTerm& t : q.facts()) {
    if (t.name() != f.function || t.args().size() != 2 || t.args()[0] != key)
      continue;
    if (value && *value != t.args()[1]) {
      note(notes, shown + " has several values");
      return std::nullopt;
    }
    value = t.args()[1];
  }
  if (!value) note(notes, shown + " has no value");
  return value;
}

Decision3 from_bool(bool b) { return b ? Decision3::kTop : Decision3::kBottom; }

template <typename T>
bool apply(CmpOp op, const T& a, const T& b) {
  switch (op) {
    case CmpOp::kEq:
      return a == b;
    case CmpOp::kNe:
      return a != b;
    case CmpOp::kLt:
      return a < b;
    case CmpOp::kLe:
      return a <= b;
    case CmpOp::kGt:
      return a > b;
    case CmpOp::kGe:
      return a >= b;
  }
  return false;
}

Decision3 eval_compare(const ConditionExpr& c, const Binding& b,
                       const Request& q, std::vector<std::string>* notes) {
  const auto lhs = resolve(c.lhs(), b, q, notes);
  const auto rhs = resolve(c.rhs(), b, q, notes);
  if (!lhs || !rhs) return Decision3::kIndet;
  if (lhs->is_number() != rhs->is_number()) {
    note(notes, "type mismatch: " + to_display(*lhs) + " " +
                    std::string(to_string(c.op())) + " " + to_display(*rhs));
    return Decision3::kIndet;
  }
  if (lhs->is_number()) return from_bool(apply(c.op(), lhs->number(), rhs->number()));
  return from_bool(apply(c.op(), lhs->text(), rhs->text()));
}

}  // namespace

Decision3 kleene_eval(const ConditionExpr& c, const Binding& b,
                      const Request& q, std::vector<std::string>* notes) {
  switch (c.kind()) {
    case ConditionExpr::Kind::kTrue:
      return Decision3::kTop;
    case ConditionExpr::Kind::kFalse:
      return Decision3::kBottom;
    case ConditionExpr::Kind::kAtom: {
      std::vector<Constant> args;
      args.reserve(c.atom_args().size());
      for (const AtomArg& a : c.atom_args()) args.push_back(ground(a, b));
      const AttributeTerm t(c.predicate(), std::move(args));
      if (q.is_error(t)) return Decision3::kIndet;
      return from_bool(q.has_fact(t));
    }
    case ConditionExpr::Kind::kCompare:
      return eval_compare(c, b, q, notes);
    case ConditionExpr::Kind::kNot:
      switch (kleene_eval(c.children().front(), b, q, notes)) {
        case Decision3::kTop:
          return Decision3::kBottom;
        case Decision3::kBottom:
          return Decision3::kTop;
        case Decision3::kIndet:
          return Decision3::kIndet;
      }
      return Decision3::kIndet;
    case ConditionExpr::Kind::kAnd: {
      std::vector<Decision3> values;
      for (const ConditionExpr& child : c.children())
        values.push_back(kleene_eval(child, b, q, notes));
      return glb3(values);
    }
    case ConditionExpr::Kind::kOr: {
      std::vector<Decision3> values;
      for (const ConditionExpr& child : c.children())
        values.push_back(kleene_eval(child, b, q, notes));
      return lub3(values);
    }
  }
  return Decision3::kIndet;
}

Decision3 eval_condition(const ConditionExpr& c, const Request& q,
                         std::vector<std::string>* notes) {
  const std::set<std::string> vars_set = free_variables(c);
  const std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  const std::vector<Constant>& domain = q.constants();
  if (vars.empty()) return kleene_eval(c, Binding{}, q, notes);
  if (domain.empty()) return Decision3::kBottom;

  std::vector<std::size_t> digits(vars.size(), 0);
  Binding binding;
  for (const std::string& v : vars) binding[v] = domain.front();
  Decision3 best = Decision3::kBottom;
  while (true) {
    best = std::max(best, kleene_eval(c, binding, q, notes));
    if (best == Decision3::kTop) return best;
    std::size_t pos = vars.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < domain.size()) {
        binding[vars[pos]] = domain[digits[pos]];
        advanced = true;
        break;
      }
      digits[pos] = 0;
      binding[vars[pos]] = domain.front();
    }
    if (!advanced) return best;
  }
}

}  // namespace xacml
