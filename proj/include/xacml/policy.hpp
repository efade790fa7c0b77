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

// Policy AST (PolicySet / Policy / Rule with targets and conditions) and its
// evaluation to six-valued decisions.

#ifndef XACML_POLICY_HPP_
#define XACML_POLICY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "xacml/attribute.hpp"
#include "xacml/combiner.hpp"
#include "xacml/condition.hpp"
#include "xacml/decision.hpp"

namespace xacml {

// Location of a parsed node in its source text. Not part of node equality.
struct SourceSpan {
  std::size_t start = 0;  // byte offsets, start <= end
  std::size_t end = 0;
  std::size_t line = 0;  // 1-based; 0 for nodes built in code
  std::size_t column = 0;
};

// Φ(α) with Φ one of the four categories.
class Match {
 public:
  // Throws ModelError(kBadTerm) unless `term` is a category term.
  explicit Match(AttributeTerm term);
  const AttributeTerm& term() const { return term_; }
  friend bool operator==(const Match&, const Match&) = default;

 private:
  AttributeTerm term_;
};

// Conjunction of matches (m >= 1).
struct AllOf {
  std::vector<Match> matches;
  friend bool operator==(const AllOf&, const AllOf&) = default;
};

// Disjunction of AllOfs (m >= 1).
struct AnyOf {
  std::vector<AllOf> all_of;
  friend bool operator==(const AnyOf&, const AnyOf&) = default;
};

// Null, or a conjunction of AnyOfs (m >= 1 at every level).
class Target {
 public:
  Target() = default;  // Null
  // Throws ModelError(kArity) when any level is empty.
  explicit Target(std::vector<AnyOf> any_of);

  static Target null() { return Target(); }

  bool is_null() const { return !any_of_.has_value(); }
  // Empty for the Null target.
  std::span<const AnyOf> any_of() const;

  friend bool operator==(const Target&, const Target&) = default;

 private:
  std::optional<std::vector<AnyOf>> any_of_;
};

class Rule {
 public:
  // Throws ModelError(kRangeRestriction) for an ill-formed condition.
  Rule(std::string name, Effect effect, Target target,
       ConditionExpr condition = ConditionExpr::truth(), SourceSpan span = {});

  const std::string& name() const { return name_; }
  Effect effect() const { return effect_; }
  const Target& target() const { return target_; }
  const ConditionExpr& condition() const { return condition_; }
  const SourceSpan& span() const { return span_; }

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.name_ == b.name_ && a.effect_ == b.effect_ &&
           a.target_ == b.target_ && a.condition_ == b.condition_;
  }

 private:
  std::string name_;
  Effect effect_;
  Target target_;
  ConditionExpr condition_;
  SourceSpan span_;
};

class Policy {
 public:
  // Throws ModelError(kArity) without rules.
  Policy(std::string name, Target target, std::vector<Rule> rules,
         CombinerId combiner, SourceSpan span = {});

  const std::string& name() const { return name_; }
  const Target& target() const { return target_; }
  const std::vector<Rule>& rules() const { return rules_; }
  CombinerId combiner() const { return combiner_; }
  const SourceSpan& span() const { return span_; }

  friend bool operator==(const Policy& a, const Policy& b) {
    return a.name_ == b.name_ && a.target_ == b.target_ &&
           a.rules_ == b.rules_ && a.combiner_ == b.combiner_;
  }

 private:
  std::string name_;
  Target target_;
  std::vector<Rule> rules_;
  CombinerId combiner_;
  SourceSpan span_;
};

class PolicyNode;

class PolicySet {
 public:
  // Throws ModelError(kMixedChildren) unless the children are all Policies
  // or all PolicySets. An empty child list is allowed.
  PolicySet(std::string name, Target target, std::vector<PolicyNode> children,
            CombinerId combiner, SourceSpan span = {});

  const std::string& name() const { return name_; }
  const Target& target() const { return target_; }
  const std::vector<PolicyNode>& children() const { return children_; }
  CombinerId combiner() const { return combiner_; }
  const SourceSpan& span() const { return span_; }

  friend bool operator==(const PolicySet& a, const PolicySet& b);

 private:
  std::string name_;
  Target target_;
  std::vector<PolicyNode> children_;
  CombinerId combiner_;
  SourceSpan span_;
};

// A Policy or a PolicySet.
class PolicyNode {
 public:
  PolicyNode(Policy p) : node_(std::move(p)) {}  // NOLINT
  PolicyNode(PolicySet ps) : node_(std::move(ps)) {}  // NOLINT

  bool is_policy() const { return std::holds_alternative<Policy>(node_); }
  const Policy& policy() const { return std::get<Policy>(node_); }
  const PolicySet& policy_set() const { return std::get<PolicySet>(node_); }
  const std::string& name() const;

  friend bool operator==(const PolicyNode&, const PolicyNode&) = default;

 private:
  std::variant<Policy, PolicySet> node_;
};

// ---------------------------------------------------------------------------
// Evaluation

Decision3 eval_match(const Match& m, const Request& q);
// Null → Top; otherwise ⨅ over AnyOfs of ⨆ over AllOfs of ⨅ over matches.
Decision3 eval_target(const Target& t, const Request& q);

// Rule value by the explicit case analysis on (target, condition).
Decision6 rule_value_by_cases(Decision3 target, Decision3 condition, Effect e);
// Rule value as σ(target ⤳ condition, e).
Decision6 rule_value_composed(Decision3 target, Decision3 condition, Effect e);

Decision6 eval_rule(const Rule& r, const Request& q);

// ⊤p→Ip, ⊤d→Id, indeterminates unchanged. Throws InvalidInput for ⊥.
Decision6 weaken_to_indeterminate(Decision6 v);

// Shared case analysis for Policy and PolicySet given the node's target
// value, its children's decisions in document order and its combiner.
Decision6 combine_node(Decision3 target, std::span<const Decision6> inputs,
                       CombinerId combiner);

Decision6 eval_policy(const Policy& p, const Request& q);
Decision6 eval_policyset(const PolicySet& ps, const Request& q);

enum class NodeKind : std::uint8_t { kPolicySet, kPolicy, kRule };

std::string_view to_string(NodeKind k);

struct TraceRecord {
  std::vector<std::size_t> path;  // child indices from the root
  NodeKind kind;
  std::string name;
  Decision3 target;
  std::optional<Decision3> condition;  // rules only
  std::optional<CombinerId> combiner;  // policies and sets only
  std::vector<Decision6> inputs;       // combiner inputs in document order
  Decision6 result;
  std::vector<std::string> notes;
};

// Preorder: every node precedes its children.
struct EvalTrace {
  std::vector<TraceRecord> records;
};

struct EvalResult {
  Decision6 decision;
  std::optional<EvalTrace> trace;
};

EvalResult evaluate(const PolicyNode& root, const Request& q,
                    bool with_trace = false);

}  // namespace xacml

#endif  // XACML_POLICY_HPP_
