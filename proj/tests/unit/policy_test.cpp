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

#include <gtest/gtest.h>

#include <array>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "support/oracles.hpp"

namespace xacml {
namespace {

using D3 = Decision3;
using D6 = Decision6;

Constant c(const char* s) { return Constant(s); }

AttributeTerm term(std::string name, std::initializer_list<Constant> args) {
  return AttributeTerm(std::move(name), std::vector<Constant>(args));
}

Match m(const char* category, const char* value) {
  return Match(term(category, {c(value)}));
}

// Flat conjunction of single matches.
Target all_of(std::initializer_list<Match> ms) {
  std::vector<AnyOf> any;
  for (const Match& x : ms) any.push_back(AnyOf{{AllOf{{x}}}});
  return Target(std::move(any));
}

// Target whose value is exactly `v` against error_request().
Target target_with(D3 v) {
  switch (v) {
    case D3::kTop:
      return all_of({m("subject", "doctor")});
    case D3::kIndet:
      return all_of({m("resource", "db")});
  case D3::kBottom:
      break;
  }
  return all_of({m("subject", "nurse")});
}

ConditionExpr condition_with(D3 v) {
  const Variable x{"X"};
  switch (v) {
    case D3::kTop:
      return ConditionExpr::atom("doctor", {c("id"), x});
    case D3::kIndet:
      return ConditionExpr::atom("flag", {c("on")});
    case D3::kBottom:
      break;
  }
  return ConditionExpr::falsity();
}

Request error_request() {
  return Request({term("subject", {c("doctor")}), term("doctor", {c("id"), c("d")})},
                 {term("resource", {c("db")}), term("flag", {c("on")})});
}

Rule rule_with(D3 t, D3 cond, Effect e, std::string name = "r") {
  return Rule(std::move(name), e, target_with(t), condition_with(cond));
}

TEST(AttributeTest, ConstructionChecks) {
  EXPECT_THROW(AttributeTerm("", {c("x")}), ModelError);
  EXPECT_THROW(AttributeTerm("subject", {}), ModelError);
  EXPECT_EQ(term("subject", {c("x")}).category(), Category::kSubject);
  EXPECT_FALSE(term("subject", {c("x"), c("y")}).category());
  EXPECT_FALSE(term("doctor", {c("id")}).category());
  EXPECT_THROW(Match(term("doctor", {c("id")})), ModelError);
}

TEST(AttributeTest, RequestInvariants) {
  try {
    Request({}, {});
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kEmptyRequest);
  }
  try {
    Request({term("a", {c("x")})}, {term("a", {c("x")})});
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kRequestConflict);
  }
  const Request q({term("doctor", {c("id"), c("d")}), term("age", {c("d"), Constant(3.0)})});
  EXPECT_EQ(q.constants(),
            (std::vector<Constant>{c("d"), c("id"), Constant(3.0)}));
}

TEST(MatchTest, Examples) {
  const Request q({term("subject", {c("doctor")}), term("action", {c("read")})},
                  {term("resource", {c("db")})});
  EXPECT_EQ(eval_match(m("subject", "doctor"), q), D3::kTop);
  EXPECT_EQ(eval_match(m("action", "write"), q), D3::kBottom);
  EXPECT_EQ(eval_match(m("resource", "db"), q), D3::kIndet);
}

TEST(TargetTest, Examples) {
  const Request q({term("subject", {c("patient")}), term("action", {c("read")})});
  EXPECT_EQ(eval_target(Target::null(), q), D3::kTop);
  EXPECT_EQ(eval_target(all_of({m("subject", "patient"), m("action", "read")}), q),
            D3::kTop);
  const Target rp3({AnyOf{{AllOf{{m("subject", "doctor")}}, AllOf{{m("subject", "nurse")}}}},
                    AnyOf{{AllOf{{m("action", "read")}}}}});
  const Request nurse({term("subject", {c("nurse")}), term("action", {c("read")})});
  EXPECT_EQ(eval_target(rp3, nurse), D3::kTop);
  EXPECT_EQ(eval_target(rp3, q), D3::kBottom);
}

TEST(TargetTest, ArityEnforced) {
  EXPECT_THROW(Target(std::vector<AnyOf>{}), ModelError);
  EXPECT_THROW(Target({AnyOf{}}), ModelError);
  EXPECT_THROW(Target({AnyOf{{AllOf{}}}}), ModelError);
}

TEST(TargetTest, MonotoneInMatchOutcomes) {
  // Matches a, b, c over three slots; each slot's outcome is driven by
  // whether its term is absent, an error, or a fact.
  const std::vector<Match> ms = {m("subject", "a"), m("action", "b"), m("resource", "c")};
  const Target t({AnyOf{{AllOf{{ms[0], ms[1]}}, AllOf{{ms[2]}}}}, AnyOf{{AllOf{{ms[1]}}}}});
  auto request_for = [&](const std::array<D3, 3>& v) {
    std::set<AttributeTerm> facts = {term("environment", {c("x")})}, errors;
    for (std::size_t i = 0; i < 3; ++i) {
      if (v[i] == D3::kTop) facts.insert(ms[i].term());
      if (v[i] == D3::kIndet) errors.insert(ms[i].term());
    }
    return Request(facts, errors);
  };
  for (D3 a : kAllDecision3)
    for (D3 b : kAllDecision3)
      for (D3 d : kAllDecision3) {
        const std::array<D3, 3> base = {a, b, d};
        const D3 before = eval_target(t, request_for(base));
        for (std::size_t i = 0; i < 3; ++i) {
          if (base[i] == D3::kTop) continue;
          std::array<D3, 3> up = base;
          up[i] = static_cast<D3>(static_cast<int>(up[i]) + 1);
          EXPECT_LE(before, eval_target(t, request_for(up)));
        }
      }
}

TEST(RuleTest, Examples) {
  const Request q = error_request();
  EXPECT_EQ(eval_rule(rule_with(D3::kTop, D3::kTop, Effect::kPermit), q), D6::kPermit);
  EXPECT_EQ(eval_rule(rule_with(D3::kTop, D3::kBottom, Effect::kDeny), q),
            D6::kNotApplicable);
  EXPECT_EQ(eval_rule(rule_with(D3::kTop, D3::kIndet, Effect::kDeny), q), D6::kIndetD);
  // Target Bottom with an erring condition: both the case analysis and
  // σ(T ⤳ C) give NotApplicable.
  EXPECT_EQ(eval_rule(rule_with(D3::kBottom, D3::kIndet, Effect::kPermit), q),
            D6::kNotApplicable);
}

TEST(RuleTest, HelpersProduceIntendedValues) {
  const Request q = error_request();
  for (D3 v : kAllDecision3) {
    EXPECT_EQ(eval_target(target_with(v), q), v);
    EXPECT_EQ(eval_condition(condition_with(v), q), v);
  }
}

TEST(RuleTest, CaseAnalysisEqualsComposedForm) {
  for (D3 t : kAllDecision3)
    for (D3 cnd : kAllDecision3)
      for (Effect e : kAllEffects)
        EXPECT_EQ(rule_value_by_cases(t, cnd, e), rule_value_composed(t, cnd, e));
}

TEST(RuleTest, PrintedTableRowsOtherThanSix) {
  // Row 6 of the printed table (⊥, I → I_*) contradicts both its own
  // T ⤳ C column and σ's definition; the acceptance suite reports it.
  for (std::size_t i = 0; i < oracle::kRuleTable.size(); ++i) {
    const oracle::RuleTableRow& row = oracle::kRuleTable[i];
    EXPECT_EQ(arrow(row.target, row.condition), row.arrow);
    if (i == 5) continue;
    for (Effect e : kAllEffects) {
      EXPECT_EQ(sigma(row.arrow, e), oracle::instantiate(row.sigma, e));
      EXPECT_EQ(rule_value_composed(row.target, row.condition, e),
                oracle::instantiate(row.rule, e));
    }
  }
}

TEST(WeakenTest, Examples) {
  EXPECT_EQ(weaken_to_indeterminate(D6::kPermit), D6::kIndetP);
  EXPECT_EQ(weaken_to_indeterminate(D6::kDeny), D6::kIndetD);
  EXPECT_EQ(weaken_to_indeterminate(D6::kIndetDP), D6::kIndetDP);
  EXPECT_EQ(weaken_to_indeterminate(D6::kIndetP), D6::kIndetP);
  EXPECT_THROW(weaken_to_indeterminate(D6::kNotApplicable), InvalidInput);
}

TEST(PolicyTest, Examples) {
  const Request q = error_request();
  const Policy p1("p", target_with(D3::kTop),
                  {rule_with(D3::kBottom, D3::kTop, Effect::kPermit, "a"),
                   rule_with(D3::kTop, D3::kTop, Effect::kDeny, "b")},
                  CombinerId::kDenyOverrides);
  EXPECT_EQ(eval_policy(p1, q), D6::kDeny);

  const Policy p2("p", target_with(D3::kBottom),
                  {rule_with(D3::kTop, D3::kTop, Effect::kPermit)},
                  CombinerId::kPermitOverrides);
  EXPECT_EQ(eval_policy(p2, q), D6::kNotApplicable);

  const Policy p3("p", target_with(D3::kIndet),
                  {rule_with(D3::kTop, D3::kTop, Effect::kPermit)},
                  CombinerId::kPermitOverrides);
  EXPECT_EQ(eval_policy(p3, q), weaken_to_indeterminate(D6::kPermit));
  EXPECT_EQ(eval_policy(p3, q), D6::kIndetP);

  // Indeterminate target over all-⊥ rules falls to the otherwise branch.
  const Policy p4("p", target_with(D3::kIndet),
                  {rule_with(D3::kBottom, D3::kTop, Effect::kPermit)},
                  CombinerId::kPermitOverrides);
  EXPECT_EQ(eval_policy(p4, q), D6::kNotApplicable);
}

TEST(PolicyTest, NeedsARule) {
  try {
    Policy("p", Target::null(), {}, CombinerId::kPermitOverrides);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kArity);
  }
}

TEST(PolicyTest, AllPermitRunsThroughPairs) {
  const Request q = error_request();
  const Policy all("p", Target::null(),
                   {rule_with(D3::kTop, D3::kTop, Effect::kPermit, "a"),
                    rule_with(D3::kTop, D3::kTop, Effect::kPermit, "b")},
                   CombinerId::kAllPermit);
  EXPECT_EQ(eval_policy(all, q), D6::kPermit);
  const Policy mixed("p", Target::null(),
                     {rule_with(D3::kTop, D3::kTop, Effect::kPermit, "a"),
                      rule_with(D3::kTop, D3::kIndet, Effect::kPermit, "b")},
                     CombinerId::kAllPermit);
  EXPECT_EQ(eval_policy(mixed, q), D6::kDeny);
}

Policy policy_yielding(D6 v) {
  const Effect e = (v == D6::kDeny || v == D6::kIndetD) ? Effect::kDeny : Effect::kPermit;
  const D3 t = v == D6::kNotApplicable ? D3::kBottom : D3::kTop;
  const D3 cnd = is_indeterminate(v) ? D3::kIndet : D3::kTop;
  return Policy("p", Target::null(), {rule_with(t, cnd, e)},
                CombinerId::kFirstApplicable);
}

TEST(PolicySetTest, Examples) {
  const Request q = error_request();
  const PolicySet s1("s", target_with(D3::kTop),
                     {policy_yielding(D6::kNotApplicable), policy_yielding(D6::kPermit)},
                     CombinerId::kPermitOverrides);
  EXPECT_EQ(eval_policyset(s1, q), D6::kPermit);

  for (CombinerId id : kStandardCombiners) {
    const PolicySet empty("s", target_with(D3::kTop), {}, id);
    EXPECT_EQ(eval_policyset(empty, q), D6::kNotApplicable);
  }

  const PolicySet s3("s", target_with(D3::kIndet),
                     {policy_yielding(D6::kDeny), policy_yielding(D6::kDeny)},
                     CombinerId::kOnlyOneApplicable);
  EXPECT_EQ(eval_policyset(s3, q), D6::kIndetD);
}

TEST(PolicySetTest, ChildrenMustBeHomogeneous) {
  const PolicySet inner("inner", Target::null(), {}, CombinerId::kPermitOverrides);
  try {
    PolicySet("s", Target::null(), {policy_yielding(D6::kPermit), inner},
              CombinerId::kPermitOverrides);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelError::Kind::kMixedChildren);
  }
}

TEST(CombineNodeTest, CaseAnalysis) {
  const std::vector<D6> all_na = {D6::kNotApplicable, D6::kNotApplicable};
  const std::vector<D6> permit = {D6::kPermit};
  EXPECT_EQ(combine_node(D3::kTop, all_na, CombinerId::kDenyOverrides),
            D6::kNotApplicable);
  EXPECT_EQ(combine_node(D3::kBottom, permit, CombinerId::kDenyOverrides),
            D6::kNotApplicable);
  EXPECT_EQ(combine_node(D3::kIndet, permit, CombinerId::kDenyOverrides),
            D6::kIndetP);
  EXPECT_EQ(combine_node(D3::kTop, permit, CombinerId::kDenyOverrides), D6::kPermit);
}

TEST(EvaluateTest, SingleRuleDefaults) {
  const Policy p("p", Target::null(), {Rule("r", Effect::kPermit, Target::null())},
                 CombinerId::kPermitOverrides);
  EXPECT_EQ(evaluate(p, error_request()).decision, D6::kPermit);
  EXPECT_FALSE(evaluate(p, error_request()).trace);
}

TEST(EvaluateTest, TraceIsConsistent) {
  const Request q = error_request();
  const PolicySet root(
      "root", Target::null(),
      {PolicySet("a", target_with(D3::kIndet),
                 {policy_yielding(D6::kPermit), policy_yielding(D6::kIndetD)},
                 CombinerId::kDenyOverrides),
       PolicySet("b", Target::null(), {policy_yielding(D6::kNotApplicable)},
                 CombinerId::kFirstApplicable)},
      CombinerId::kPermitOverrides);
  const EvalResult r = evaluate(root, q, true);
  const EvalResult again = evaluate(root, q, true);
  EXPECT_EQ(r.decision, again.decision);
  ASSERT_TRUE(r.trace);
  const auto& recs = r.trace->records;
  ASSERT_EQ(recs.size(), 1u + 1u + 2 * 2u + 1u + 2u);
  EXPECT_TRUE(recs.front().path.empty());
  EXPECT_EQ(recs.front().result, r.decision);
  EXPECT_EQ(eval_policyset(root, q), r.decision);
  for (const TraceRecord& rec : recs) {
    if (rec.kind == NodeKind::kRule) {
      ASSERT_TRUE(rec.condition);
      EXPECT_FALSE(rec.combiner);
      EXPECT_EQ(rule_value_composed(rec.target, *rec.condition,
                                    rec.result == D6::kDeny || rec.result == D6::kIndetD
                                        ? Effect::kDeny
                                        : Effect::kPermit),
                rec.result);
      continue;
    }
    ASSERT_TRUE(rec.combiner);
    EXPECT_EQ(combine_node(rec.target, rec.inputs, *rec.combiner), rec.result);
  }
  EXPECT_EQ(recs[1].path, (std::vector<std::size_t>{0}));
  EXPECT_EQ(recs[2].path, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(recs[3].path, (std::vector<std::size_t>{0, 0, 0}));
}

}  // namespace
}  // namespace xacml
