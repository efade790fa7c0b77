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

#include "xacml/policy.hpp"

#include "xacml/errors.hpp"

namespace xacml {

Match::Match(AttributeTerm term) : term_(std::move(term)) {
  if (!term_.category())
    throw ModelError(ModelError::Kind::kBadTerm,
                     to_display(term_) + " is not a category match");
}

Target::Target(std::vector<AnyOf> any_of) : any_of_(std::move(any_of)) {
  if (any_of_->empty())
    throw ModelError(ModelError::Kind::kArity, "target needs at least one AnyOf");
  for (const AnyOf& e : *any_of_) {
    if (e.all_of.empty())
      throw ModelError(ModelError::Kind::kArity, "AnyOf needs at least one AllOf");
    for (const AllOf& a : e.all_of)
      if (a.matches.empty())
        throw ModelError(ModelError::Kind::kArity,
                         "AllOf needs at least one Match");
  }
}

std::span<const AnyOf> Target::any_of() const {
  if (!any_of_) return {};
  return *any_of_;
}

Rule::Rule(std::string name, Effect effect, Target target,
           ConditionExpr condition, SourceSpan span)
    : name_(std::move(name)),
      effect_(effect),
      target_(std::move(target)),
      condition_(std::move(condition)),
      span_(span) {
  check_range_restriction(condition_);
}

Policy::Policy(std::string name, Target target, std::vector<Rule> rules,
               CombinerId combiner, SourceSpan span)
    : name_(std::move(name)),
      target_(std::move(target)),
      rules_(std::move(rules)),
      combiner_(combiner),
      span_(span) {
  if (rules_.empty())
    throw ModelError(ModelError::Kind::kArity,
                     "policy " + name_ + " needs at least one rule");
}

PolicySet::PolicySet(std::string name, Target target,
                     std::vector<PolicyNode> children, CombinerId combiner,
                     SourceSpan span)
    : name_(std::move(name)),
      target_(std::move(target)),
      children_(std::move(children)),
      combiner_(combiner),
      span_(span) {
  for (const PolicyNode& c : children_) {
    if (c.is_policy() != children_.front().is_policy())
      throw ModelError(ModelError::Kind::kMixedChildren,
                       "policy set " + name_ +
                           " mixes Policy and PolicySet children");
  }
}

bool operator==(const PolicySet& a, const PolicySet& b) {
  return a.name_ == b.name_ && a.target_ == b.target_ &&
         a.children_ == b.children_ && a.combiner_ == b.combiner_;
}

const std::string& PolicyNode::name() const {
  return is_policy() ? policy().name() : policy_set().name();
}

// ---------------------------------------------------------------------------

Decision3 eval_match(const Match& m, const Request& q) {
  if (q.is_error(m.term())) return Decision3::kIndet;
  return q.has_fact(m.term()) ? Decision3::kTop : Decision3::kBottom;
}

Decision3 eval_target(const Target& t, const Request& q) {
  if (t.is_null()) return Decision3::kTop;
  std::vector<Decision3> any_values;
  for (const AnyOf& e : t.any_of()) {
    std::vector<Decision3> all_values;
    for (const AllOf& a : e.all_of) {
      std::vector<Decision3> match_values;
      for (const Match& m : a.matches) match_values.push_back(eval_match(m, q));
      all_values.push_back(glb3(match_values));
    }
    any_values.push_back(lub3(all_values));
  }
  return glb3(any_values);
}

Decision6 rule_value_by_cases(Decision3 target, Decision3 condition, Effect e) {
  const bool permit = e == Effect::kPermit;
  if (target == Decision3::kTop && condition == Decision3::kTop)
    return permit ? Decision6::kPermit : Decision6::kDeny;
  if ((target == Decision3::kTop && condition == Decision3::kBottom) ||
      target == Decision3::kBottom)
    return Decision6::kNotApplicable;
  return permit ? Decision6::kIndetP : Decision6::kIndetD;
}

Decision6 rule_value_composed(Decision3 target, Decision3 condition, Effect e) {
  return sigma(arrow(target, condition), e);
}

namespace {

struct Evaluator {
  const Request& q;
  EvalTrace* trace;
  std::vector<std::size_t> path;

  TraceRecord* open(NodeKind kind, const std::string& name) {
    if (trace == nullptr) return nullptr;
    trace->records.push_back(TraceRecord{path, kind, name, Decision3::kBottom,
                                         std::nullopt, std::nullopt, {},
                                         Decision6::kNotApplicable, {}});
    return &trace->records.back();
  }

  // Records are addressed by index: pushing children may reallocate.
  std::size_t index_of_last() const { return trace->records.size() - 1; }

  Decision6 rule(const Rule& r) {
    std::vector<std::string> notes;
    const Decision3 t = eval_target(r.target(), q);
    const Decision3 c =
        eval_condition(r.condition(), q, trace ? &notes : nullptr);
    const Decision6 result = rule_value_composed(t, c, r.effect());
    if (TraceRecord* rec = open(NodeKind::kRule, r.name())) {
      rec->target = t;
      rec->condition = c;
      rec->result = result;
      rec->notes = std::move(notes);
    }
    return result;
  }

  template <typename Children, typename EvalChild>
  Decision6 node(NodeKind kind, const std::string& name, const Target& target,
                 CombinerId combiner, const Children& children,
                 EvalChild&& eval_child) {
    const Decision3 t = eval_target(target, q);
    std::size_t slot = 0;
    if (open(kind, name)) slot = index_of_last();
    std::vector<Decision6> inputs;
    inputs.reserve(children.size());
    for (std::size_t i = 0; i < children.size(); ++i) {
      path.push_back(i);
      inputs.push_back(eval_child(children[i]));
      path.pop_back();
    }
    const Decision6 result = combine_node(t, inputs, combiner);
    if (trace != nullptr) {
      TraceRecord& rec = trace->records[slot];
      rec.target = t;
      rec.combiner = combiner;
      rec.inputs = std::move(inputs);
      rec.result = result;
    }
    return result;
  }

  Decision6 policy(const Policy& p) {
    return node(NodeKind::kPolicy, p.name(), p.target(), p.combiner(),
                p.rules(), [this](const Rule& r) { return rule(r); });
  }

  Decision6 policy_set(const PolicySet& ps) {
    return node(NodeKind::kPolicySet, ps.name(), ps.target(), ps.combiner(),
                ps.children(),
                [this](const PolicyNode& n) { return any(n); });
  }

  Decision6 any(const PolicyNode& n) {
    return n.is_policy() ? policy(n.policy()) : policy_set(n.policy_set());
  }
};

}  // namespace

Decision6 eval_rule(const Rule& r, const Request& q) {
  return Evaluator{q, nullptr, {}}.rule(r);
}

Decision6 weaken_to_indeterminate(Decision6 v) {
  switch (v) {
    case Decision6::kPermit:
      return Decision6::kIndetP;
    case Decision6::kDeny:
      return Decision6::kIndetD;
    case Decision6::kIndetP:
    case Decision6::kIndetD:
    case Decision6::kIndetDP:
      return v;
    case Decision6::kNotApplicable:
      break;
  }
  throw InvalidInput("NotApplicable cannot be weakened to an indeterminate");
}

Decision6 combine_node(Decision3 target, std::span<const Decision6> inputs,
                       CombinerId combiner) {
  const Decision6 combined = supports(combiner, Encoding::kV6)
                                 ? combine(combiner, inputs)
                                 : combine_via_pairs(combiner, inputs);
  if (target == Decision3::kIndet && combined != Decision6::kNotApplicable)
    return weaken_to_indeterminate(combined);
  if (target == Decision3::kBottom) return Decision6::kNotApplicable;
  if (target == Decision3::kTop) {
    bool all_na = true;
    for (Decision6 x : inputs) all_na = all_na && x == Decision6::kNotApplicable;
    if (all_na) return Decision6::kNotApplicable;
  }
  return combined;
}

Decision6 eval_policy(const Policy& p, const Request& q) {
  return Evaluator{q, nullptr, {}}.policy(p);
}

Decision6 eval_policyset(const PolicySet& ps, const Request& q) {
  return Evaluator{q, nullptr, {}}.policy_set(ps);
}

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::kPolicySet:
      return "policyset";
    case NodeKind::kPolicy:
      return "policy";
    case NodeKind::kRule:
      return "rule";
  }
  return "?";
}

EvalResult evaluate(const PolicyNode& root, const Request& q, bool with_trace) {
  EvalResult out{Decision6::kNotApplicable, std::nullopt};
  if (with_trace) out.trace.emplace();
  Evaluator ev{q, with_trace ? &*out.trace : nullptr, {}};
  out.decision = ev.any(root);
  return out;
}

}  // namespace xacml
