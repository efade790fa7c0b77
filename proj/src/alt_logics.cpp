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

#include <array>
#include <string>

#include "xacml/errors.hpp"

namespace xacml {

namespace {

// Belnap values as (evidence for, evidence against).
struct Evidence {
  bool for_;
  bool against;
};

constexpr Evidence evidence(Belnap v) {
  switch (v) {
    case Belnap::kNone:
      return {false, false};
    case Belnap::kTrue:
      return {true, false};
    case Belnap::kFalse:
      return {false, true};
    case Belnap::kConflict:
      break;
  }
  return {true, true};
}

constexpr Belnap from_evidence(bool for_, bool against) {
  if (for_ && against) return Belnap::kConflict;
  if (for_) return Belnap::kTrue;
  if (against) return Belnap::kFalse;
  return Belnap::kNone;
}

}  // namespace

std::string_view to_string(Belnap v) {
  switch (v) {
    case Belnap::kNone:
      return "NN";
    case Belnap::kTrue:
      return "tt";
    case Belnap::kFalse:
      return "ff";
    case Belnap::kConflict:
      return "TT";
  }
  return "?";
}

Belnap belnap_join_k(Belnap a, Belnap b) {
  const Evidence x = evidence(a), y = evidence(b);
  return from_evidence(x.for_ || y.for_, x.against || y.against);
}

Belnap belnap_meet_k(Belnap a, Belnap b) {
  const Evidence x = evidence(a), y = evidence(b);
  return from_evidence(x.for_ && y.for_, x.against && y.against);
}

Belnap belnap_join_t(Belnap a, Belnap b) {
  const Evidence x = evidence(a), y = evidence(b);
  return from_evidence(x.for_ || y.for_, x.against && y.against);
}

Belnap belnap_meet_t(Belnap a, Belnap b) {
  const Evidence x = evidence(a), y = evidence(b);
  return from_evidence(x.for_ && y.for_, x.against || y.against);
}

BelnapOps belnap_ops(Belnap a, Belnap b) {
  return {belnap_join_k(a, b), belnap_meet_k(a, b), belnap_join_t(a, b),
          belnap_meet_t(a, b)};
}

Belnap belnap_negate(Belnap a) {
  const Evidence x = evidence(a);
  return from_evidence(x.against, x.for_);
}

Belnap belnap_overwrite(Belnap x, Belnap y, Belnap z) { return x != y ? x : z; }

Belnap belnap_priority(Belnap x, Belnap y) {
  return belnap_overwrite(x, Belnap::kNone, y);
}

Belnap belnap_combine(CombinerId id, Belnap p, Belnap q) {
  switch (id) {
    case CombinerId::kPermitOverrides:
      return belnap_overwrite(belnap_join_k(p, q), Belnap::kConflict,
                              Belnap::kFalse);
    case CombinerId::kFirstApplicable:
      return belnap_priority(p, q);
    case CombinerId::kOnlyOneApplicable:
      return belnap_join_k(
          belnap_join_k(p, q),
          belnap_meet_k(belnap_join_k(p, belnap_negate(p)),
                        belnap_join_k(q, belnap_negate(q))));
    case CombinerId::kDenyOverrides:
    case CombinerId::kAllPermit:
      break;
  }
  throw UnsupportedCombiner(std::string(to_token(id)) +
                            " has no Belnap encoding");
}

// ---------------------------------------------------------------------------

std::string to_string(DSet x) {
  std::string out = "{";
  auto add = [&](std::uint8_t member, const char* name) {
    if (!x.contains(member)) return;
    if (out.size() > 1) out += ',';
    out += name;
  };
  add(DSet::kP, "p");
  add(DSet::kD, "d");
  add(DSet::kNa, "na");
  out += '}';
  return out;
}

DSet dalg_neg(DSet x) { return DSet(static_cast<std::uint8_t>(~x.bits())); }
DSet dalg_oplus(DSet x, DSet y) {
  return DSet(static_cast<std::uint8_t>(x.bits() | y.bits()));
}
DSet dalg_otimes(DSet x, DSet y) {
  return x == y ? dalg_neg(DSet::empty()) : DSet::empty();
}
DSet dalg_odot(DSet x, DSet y) {
  return dalg_neg(dalg_oplus(dalg_neg(x), dalg_neg(y)));
}
DSet dalg_ominus(DSet x, DSet y) { return dalg_odot(x, dalg_neg(y)); }

DAlgOps dalg_ops(DSet x, DSet y) {
  return {dalg_neg(x), dalg_oplus(x, y), dalg_otimes(x, y), dalg_odot(x, y),
          dalg_ominus(x, y)};
}

DSet dalg_permit_overrides(DSet x, DSet y) {
  const DSet p(DSet::kP);
  const DSet na(DSet::kNa);
  const DSet d_na(DSet::kD | DSet::kNa);
  const DSet zero = DSet::empty();

  const DSet first = dalg_oplus(x, y);
  const DSet second =
      dalg_odot(dalg_oplus(dalg_otimes(x, p), dalg_otimes(y, p)), d_na);
  const DSet third = dalg_odot(
      dalg_odot(dalg_neg(dalg_otimes(dalg_odot(x, y), na)), na),
      dalg_neg(dalg_oplus(dalg_otimes(x, zero), dalg_otimes(y, zero))));
  return dalg_ominus(dalg_ominus(first, second), third);
}

AxiomReport dalg_axiom_check() {
  AxiomReport report{};
  for (int i = 0; i < 7; ++i) report.axioms[i].axiom = i + 1;
  auto check = [&](int axiom, bool ok) {
    AxiomResult& r = report.axioms[axiom - 1];
    ++r.cases;
    if (!ok) ++r.violations;
  };
  const DSet zero = DSet::empty();
  const DSet top = dalg_neg(zero);

  for (DSet x : kAllDSets) {
    check(3, dalg_oplus(x, zero) == x);
    check(4, dalg_neg(dalg_neg(x)) == x);
    check(5, dalg_oplus(x, top) == top);
    for (DSet y : kAllDSets) {
      check(1, dalg_oplus(x, y) == dalg_oplus(y, x));
      check(6, dalg_oplus(dalg_neg(dalg_oplus(dalg_neg(x), y)), y) ==
                   dalg_oplus(dalg_neg(dalg_oplus(dalg_neg(y), x)), x));
      check(7, dalg_otimes(x, y) == (x == y ? top : zero));
      for (DSet z : kAllDSets)
        check(2, dalg_oplus(dalg_oplus(x, y), z) ==
                     dalg_oplus(x, dalg_oplus(y, z)));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

AltValues map_v6(Decision6 x) {
  switch (x) {
    case Decision6::kPermit:
      return {Belnap::kTrue, DSet(DSet::kP)};
    case Decision6::kDeny:
      return {Belnap::kFalse, DSet(DSet::kD)};
    case Decision6::kNotApplicable:
      return {Belnap::kNone, DSet(DSet::kNa)};
    case Decision6::kIndetP:
      return {Belnap::kConflict, DSet(DSet::kP | DSet::kNa)};
    case Decision6::kIndetD:
      return {Belnap::kConflict, DSet(DSet::kD | DSet::kNa)};
    case Decision6::kIndetDP:
      break;
  }
  return {Belnap::kConflict, DSet::full()};
}

ComparisonRow compare_logics(Decision6 lhs, Decision6 rhs) {
  const AltValues a = map_v6(lhs);
  const AltValues b = map_v6(rhs);
  const std::array<Decision6, 2> v6_inputs = {lhs, rhs};
  const std::array<PairValue, 2> pair_inputs = {delta(lhs), delta(rhs)};

  ComparisonRow row{};
  row.lhs = lhs;
  row.rhs = rhs;
  row.belnap = belnap_combine(CombinerId::kPermitOverrides, a.belnap, b.belnap);
  row.dalg = dalg_permit_overrides(a.dalg, b.dalg);
  row.v6 = combine_po_v6(v6_inputs);
  row.pair = combine_po_pair(pair_inputs);

  const AltValues expected = map_v6(row.v6);
  row.belnap_diverges = row.belnap != expected.belnap;
  row.dalg_diverges = row.dalg != expected.dalg;
  row.pair_diverges = row.pair != delta(row.v6);
  return row;
}

}  // namespace xacml
