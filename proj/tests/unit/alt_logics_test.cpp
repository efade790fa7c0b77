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

#include "xacml/alt_logics.hpp"

#include <gtest/gtest.h>

#include "xacml/combiner.hpp"

namespace xacml {
namespace {

using B = Belnap;
using D6 = Decision6;

// Belnap values as (evidence for, evidence against).
struct Evidence {
  bool t;
  bool f;
};

Evidence ev(B x) {
  switch (x) {
    case B::kNone:
      return {false, false};
    case B::kTrue:
      return {true, false};
    case B::kFalse:
      return {false, true};
    case B::kConflict:
      break;
  }
  return {true, true};
}

B from(Evidence e) {
  if (e.t && e.f) return B::kConflict;
  if (e.t) return B::kTrue;
  if (e.f) return B::kFalse;
  return B::kNone;
}

bool leq_k(B a, B b) {
  return (!ev(a).t || ev(b).t) && (!ev(a).f || ev(b).f);
}
bool leq_t(B a, B b) {
  return (!ev(a).t || ev(b).t) && (!ev(b).f || ev(a).f);
}

DSet ds(std::uint8_t bits) { return DSet(bits); }
constexpr std::uint8_t P = DSet::kP, D = DSet::kD, NA = DSet::kNa;

TEST(BelnapTest, OpsExamples) {
  EXPECT_EQ(belnap_ops(B::kTrue, B::kFalse).join_k, B::kConflict);
  EXPECT_EQ(belnap_ops(B::kTrue, B::kFalse).meet_k, B::kNone);
  EXPECT_EQ(belnap_ops(B::kFalse, B::kNone).join_t, B::kNone);
  EXPECT_EQ(to_string(B::kTrue), "tt");
  EXPECT_EQ(to_string(B::kFalse), "ff");
  EXPECT_EQ(to_string(B::kConflict), "TT");
  EXPECT_EQ(to_string(B::kNone), "NN");
}

TEST(BelnapTest, OpsAreLatticeOperationsOfTheTwoOrders) {
  for (B a : kAllBelnap)
    for (B b : kAllBelnap) {
      const BelnapOps o = belnap_ops(a, b);
      for (B c : kAllBelnap) {
        // join is the least upper bound, meet the greatest lower bound.
        if (leq_k(a, c) && leq_k(b, c)) EXPECT_TRUE(leq_k(o.join_k, c));
        if (leq_k(c, a) && leq_k(c, b)) EXPECT_TRUE(leq_k(c, o.meet_k));
        if (leq_t(a, c) && leq_t(b, c)) EXPECT_TRUE(leq_t(o.join_t, c));
        if (leq_t(c, a) && leq_t(c, b)) EXPECT_TRUE(leq_t(c, o.meet_t));
        EXPECT_EQ(belnap_join_k(belnap_join_k(a, b), c),
                  belnap_join_k(a, belnap_join_k(b, c)));
        EXPECT_EQ(belnap_meet_t(belnap_meet_t(a, b), c),
                  belnap_meet_t(a, belnap_meet_t(b, c)));
      }
      EXPECT_TRUE(leq_k(a, o.join_k) && leq_k(b, o.join_k));
      EXPECT_TRUE(leq_k(o.meet_k, a) && leq_k(o.meet_k, b));
      EXPECT_TRUE(leq_t(a, o.join_t) && leq_t(b, o.join_t));
      EXPECT_TRUE(leq_t(o.meet_t, a) && leq_t(o.meet_t, b));
      EXPECT_EQ(o.join_k, belnap_join_k(b, a));
      EXPECT_EQ(o.join_t, belnap_join_t(b, a));
    }
}

TEST(BelnapTest, Negation) {
  EXPECT_EQ(belnap_negate(B::kTrue), B::kFalse);
  EXPECT_EQ(belnap_negate(B::kConflict), B::kConflict);
  EXPECT_EQ(belnap_negate(B::kNone), B::kNone);
  for (B a : kAllBelnap) {
    EXPECT_EQ(belnap_negate(belnap_negate(a)), a);
    EXPECT_EQ(belnap_negate(a), from({ev(a).f, ev(a).t}));
  }
}

TEST(BelnapTest, Overwrite) {
  EXPECT_EQ(belnap_overwrite(B::kConflict, B::kConflict, B::kFalse), B::kFalse);
  EXPECT_EQ(belnap_overwrite(B::kTrue, B::kConflict, B::kFalse), B::kTrue);
  EXPECT_EQ(belnap_overwrite(B::kNone, B::kNone, B::kTrue), B::kTrue);
  for (B x : kAllBelnap)
    for (B y : kAllBelnap)
      EXPECT_EQ(belnap_priority(x, y), belnap_overwrite(x, B::kNone, y));
}

TEST(BelnapTest, CombineExamples) {
  EXPECT_EQ(belnap_combine(CombinerId::kPermitOverrides, B::kTrue, B::kConflict),
            B::kFalse);
  EXPECT_EQ(belnap_combine(CombinerId::kFirstApplicable, B::kNone, B::kTrue), B::kTrue);
  EXPECT_EQ(belnap_combine(CombinerId::kOnlyOneApplicable, B::kTrue, B::kNone),
            B::kTrue);
  EXPECT_THROW(belnap_combine(CombinerId::kDenyOverrides, B::kTrue, B::kTrue),
               UnsupportedCombiner);
  EXPECT_THROW(belnap_combine(CombinerId::kAllPermit, B::kTrue, B::kTrue),
               UnsupportedCombiner);
}

TEST(BelnapTest, DiscrepancyWitness) {
  const B b = belnap_combine(CombinerId::kPermitOverrides, B::kTrue, B::kConflict);
  const std::vector<D6> s = {D6::kPermit, D6::kIndetDP};
  EXPECT_EQ(b, B::kFalse);
  EXPECT_NE(b, map_v6(combine_po_v6(s)).belnap);
}

TEST(DAlgebraTest, OpsExamples) {
  EXPECT_EQ(dalg_otimes(ds(P), ds(P)), DSet::full());
  EXPECT_EQ(dalg_oplus(ds(P), ds(D)), ds(P | D));
  EXPECT_EQ(dalg_odot(DSet::full(), ds(P | D)), ds(P | D));
  EXPECT_EQ(dalg_otimes(ds(P), ds(D)), DSet::empty());
  EXPECT_EQ(dalg_neg(ds(P)), ds(D | NA));
  const DAlgOps o = dalg_ops(ds(P | NA), ds(NA));
  EXPECT_EQ(o.neg, ds(D));
  EXPECT_EQ(o.ominus, ds(P));
}

TEST(DAlgebraTest, Rendering) {
  EXPECT_EQ(to_string(DSet::full()), "{p,d,na}");
  EXPECT_EQ(to_string(DSet::empty()), "{}");
  EXPECT_EQ(to_string(ds(D | P)), "{p,d}");
}

TEST(DAlgebraTest, PermitOverridesExamples) {
  EXPECT_EQ(dalg_permit_overrides(ds(P | NA), ds(D)), ds(P | D));
  EXPECT_EQ(dalg_permit_overrides(ds(P), ds(D)), ds(P));
  EXPECT_EQ(dalg_permit_overrides(ds(NA), ds(NA)), ds(NA));
}

TEST(DAlgebraTest, PermitSurvives) {
  for (DSet y : kAllDSets)
    EXPECT_TRUE(dalg_permit_overrides(ds(P), y).contains(P)) << to_string(y);
}

TEST(DAlgebraTest, AxiomsHold) {
  const AxiomReport r = dalg_axiom_check();
  EXPECT_TRUE(r.holds());
  std::size_t pairs = 0, triples = 0;
  for (const AxiomResult& a : r.axioms) {
    EXPECT_EQ(a.violations, 0u) << "axiom " << a.axiom;
    EXPECT_GT(a.cases, 0u);
    pairs += a.cases == 64;
    triples += a.cases == 512;
  }
  EXPECT_GE(pairs, 1u);
  EXPECT_EQ(triples, 1u);
}

TEST(MapV6Test, Table) {
  EXPECT_EQ(map_v6(D6::kIndetP).belnap, B::kConflict);
  EXPECT_EQ(map_v6(D6::kIndetP).dalg, ds(P | NA));
  EXPECT_EQ(map_v6(D6::kDeny).belnap, B::kFalse);
  EXPECT_EQ(map_v6(D6::kDeny).dalg, ds(D));
  EXPECT_EQ(map_v6(D6::kNotApplicable).belnap, B::kNone);
  EXPECT_EQ(map_v6(D6::kNotApplicable).dalg, ds(NA));
  EXPECT_EQ(map_v6(D6::kPermit).belnap, B::kTrue);
  EXPECT_EQ(map_v6(D6::kPermit).dalg, ds(P));
  EXPECT_EQ(map_v6(D6::kIndetD).dalg, ds(D | NA));
  EXPECT_EQ(map_v6(D6::kIndetDP).dalg, DSet::full());
}

TEST(CompareTest, IndetPermitAgainstDenyRow) {
  const ComparisonRow row = compare_logics(D6::kIndetP, D6::kDeny);
  EXPECT_EQ(row.belnap, B::kFalse);
  EXPECT_EQ(row.dalg, ds(P | D));
  EXPECT_EQ(row.v6, D6::kIndetDP);
  EXPECT_EQ(row.pair, PairValue(Third::kHalf, Third::kHalf));
  EXPECT_TRUE(row.belnap_diverges);
  EXPECT_TRUE(row.dalg_diverges);
  EXPECT_FALSE(row.pair_diverges);
}

TEST(CompareTest, AgreementRows) {
  const ComparisonRow permit = compare_logics(D6::kPermit, D6::kNotApplicable);
  EXPECT_EQ(permit.belnap, B::kTrue);
  EXPECT_EQ(permit.dalg, ds(P));
  EXPECT_EQ(permit.v6, D6::kPermit);
  EXPECT_EQ(permit.pair, PairValue(Third::kZero, Third::kOne));
  EXPECT_FALSE(permit.belnap_diverges || permit.dalg_diverges || permit.pair_diverges);

  const ComparisonRow none = compare_logics(D6::kNotApplicable, D6::kNotApplicable);
  EXPECT_EQ(none.belnap, B::kNone);
  EXPECT_EQ(none.dalg, ds(NA));
  EXPECT_EQ(none.v6, D6::kNotApplicable);
  EXPECT_EQ(none.pair, PairValue());
  EXPECT_FALSE(none.belnap_diverges || none.dalg_diverges || none.pair_diverges);
}

}  // namespace
}  // namespace xacml
