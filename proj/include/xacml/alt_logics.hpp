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

// Two rival semantics for policy combination: Belnap's four-valued
// bilattice with the PBel combiner encodings, and the D-algebra over
// subsets of {p, d, na}. Both exist to be compared against the V6 results.

#ifndef XACML_ALT_LOGICS_HPP_
#define XACML_ALT_LOGICS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "xacml/combiner.hpp"
#include "xacml/decision.hpp"

namespace xacml {

// ---------------------------------------------------------------------------
// Belnap

enum class Belnap : std::uint8_t {
  kNone,      // ⊥⊥, no information
  kTrue,      // tt
  kFalse,     // ff
  kConflict,  // ⊤⊤, both
};

inline constexpr std::array<Belnap, 4> kAllBelnap = {
    Belnap::kNone, Belnap::kTrue, Belnap::kFalse, Belnap::kConflict};

std::string_view to_string(Belnap v);  // "NN", "tt", "ff", "TT"

struct BelnapOps {
  Belnap join_k;  // ⊕B
  Belnap meet_k;  // ⊗B
  Belnap join_t;  // ∨
  Belnap meet_t;  // ∧
};

BelnapOps belnap_ops(Belnap a, Belnap b);
Belnap belnap_join_k(Belnap a, Belnap b);
Belnap belnap_meet_k(Belnap a, Belnap b);
Belnap belnap_join_t(Belnap a, Belnap b);
Belnap belnap_meet_t(Belnap a, Belnap b);

// Swaps tt and ff; fixes ⊤⊤ and ⊥⊥.
Belnap belnap_negate(Belnap a);

// x[y ↦ z]: x unless x = y, then z.
Belnap belnap_overwrite(Belnap x, Belnap y, Belnap z);
// x > y, i.e. x[⊥⊥ ↦ y].
Belnap belnap_priority(Belnap x, Belnap y);

// p-o: (p ⊕ q)[⊤⊤ ↦ ff]; f-a: p > q;
// o-1-a: (p ⊕ q) ⊕ ((p ⊕ ¬p) ⊗ (q ⊕ ¬q)).
// Throws UnsupportedCombiner for d-o and all-permit.
Belnap belnap_combine(CombinerId id, Belnap p, Belnap q);

// ---------------------------------------------------------------------------
// D-algebra

// A subset of {p, d, na}.
class DSet {
 public:
  static constexpr std::uint8_t kP = 1;
  static constexpr std::uint8_t kD = 2;
  static constexpr std::uint8_t kNa = 4;

  constexpr DSet() = default;  // ∅, the algebra's 0
  constexpr explicit DSet(std::uint8_t bits) : bits_(bits & 7u) {}

  static constexpr DSet empty() { return DSet(); }
  static constexpr DSet full() { return DSet(kP | kD | kNa); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool contains(std::uint8_t member) const {
    return (bits_ & member) != 0;
  }

  friend constexpr bool operator==(DSet, DSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr std::array<DSet, 8> kAllDSets = {
    DSet(0), DSet(1), DSet(2), DSet(3), DSet(4), DSet(5), DSet(6), DSet(7)};

std::string to_string(DSet x);  // "{p,d,na}" in that member order; "{}"

DSet dalg_neg(DSet x);                // complement
DSet dalg_oplus(DSet x, DSet y);      // union
DSet dalg_otimes(DSet x, DSet y);     // ¬0 if x = y, else 0
DSet dalg_odot(DSet x, DSet y);       // ¬(¬x ⊕ ¬y)
DSet dalg_ominus(DSet x, DSet y);     // x ⊙ ¬y

struct DAlgOps {
  DSet neg;
  DSet oplus;
  DSet otimes;
  DSet odot;
  DSet ominus;
};

DAlgOps dalg_ops(DSet x, DSet y);

// f_po, with the ⊖ chain evaluated left to right.
DSet dalg_permit_overrides(DSet x, DSet y);

struct AxiomResult {
  int axiom;                // 1..7
  std::size_t cases = 0;    // assignments checked
  std::size_t violations = 0;
};

struct AxiomReport {
  std::array<AxiomResult, 7> axioms;
  bool holds() const {
    for (const AxiomResult& a : axioms)
      if (a.violations != 0) return false;
    return true;
  }
};

// Checks axioms 1-7 over the whole carrier.
AxiomReport dalg_axiom_check();

// ---------------------------------------------------------------------------
// Cross-logic comparison

struct AltValues {
  Belnap belnap;
  DSet dalg;
};

// Indeterminates map to ⊤⊤ in Belnap.
AltValues map_v6(Decision6 x);

struct ComparisonRow {
  Decision6 lhs;
  Decision6 rhs;
  Belnap belnap;
  DSet dalg;
  Decision6 v6;
  PairValue pair;
  // Set when the logic's result differs from the V6 result mapped into it.
  bool belnap_diverges;
  bool dalg_diverges;
  bool pair_diverges;
};

// Permit-overrides over two inputs in all four logics.
ComparisonRow compare_logics(Decision6 lhs, Decision6 rhs);

}  // namespace xacml

#endif  // XACML_ALT_LOGICS_HPP_
