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

// Decision value domains: the three-valued lattice used for matches,
// targets and conditions, the six-valued policy decisions, and the
// [deny,permit] pairwise encoding (six legal pairs, nine in the extended
// form), together with the primitive operators everything else is built on.

#ifndef XACML_DECISION_HPP_
#define XACML_DECISION_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xacml/errors.hpp"

namespace xacml {

// Match / target / condition value. Enumerators are declared in lattice
// order, so the built-in comparison is the lattice order.
enum class Decision3 : std::uint8_t { kBottom = 0, kIndet = 1, kTop = 2 };

enum class Effect : std::uint8_t { kDeny, kPermit };

// Six-valued policy decision. The declaration order is the fixed
// enumeration order used by exhaustive checks; it is not a lattice order.
enum class Decision6 : std::uint8_t {
  kNotApplicable = 0,  // ⊥
  kIndetD = 1,         // I_d
  kIndetP = 2,         // I_p
  kIndetDP = 3,        // I_dp
  kDeny = 4,           // ⊤_d
  kPermit = 5,         // ⊤_p
};

inline constexpr std::array<Decision3, 3> kAllDecision3 = {
    Decision3::kBottom, Decision3::kIndet, Decision3::kTop};

inline constexpr std::array<Decision6, 6> kAllDecision6 = {
    Decision6::kNotApplicable, Decision6::kIndetD, Decision6::kIndetP,
    Decision6::kIndetDP,       Decision6::kDeny,   Decision6::kPermit};

inline constexpr std::array<Effect, 2> kAllEffects = {Effect::kDeny,
                                                      Effect::kPermit};

constexpr std::size_t index_of(Decision6 d) {
  return static_cast<std::size_t>(d);
}

constexpr bool is_applicable(Decision6 d) {
  return d == Decision6::kDeny || d == Decision6::kPermit;
}
constexpr bool is_indeterminate(Decision6 d) {
  return d == Decision6::kIndetD || d == Decision6::kIndetP ||
         d == Decision6::kIndetDP;
}

std::string_view to_string(Decision3 v);
std::string_view to_string(Effect e);
// Canonical names: "Permit", "Deny", "NotApplicable", "Indeterminate{P}",
// "Indeterminate{D}", "Indeterminate{DP}".
std::string_view to_string(Decision6 d);
std::optional<Decision6> parse_decision6(std::string_view name);

// ---------------------------------------------------------------------------
// Three-valued lattice

Decision3 glb3(std::span<const Decision3> values);  // ⨅∅ = Top
Decision3 lub3(std::span<const Decision3> values);  // ⨆∅ = Bottom
inline Decision3 glb3(std::initializer_list<Decision3> values) {
  return glb3(std::span<const Decision3>(values.begin(), values.size()));
}
inline Decision3 lub3(std::initializer_list<Decision3> values) {
  return lub3(std::span<const Decision3>(values.begin(), values.size()));
}

// f ⤳ g: g when f is Top, f otherwise.
constexpr Decision3 arrow(Decision3 f, Decision3 g) {
  return f == Decision3::kTop ? g : f;
}

// Lifts a three-valued rule outcome to V6, subscripting with the effect.
constexpr Decision6 sigma(Decision3 x, Effect e) {
  switch (x) {
    case Decision3::kBottom:
      return Decision6::kNotApplicable;
    case Decision3::kTop:
      return e == Effect::kPermit ? Decision6::kPermit : Decision6::kDeny;
    case Decision3::kIndet:
      break;
  }
  return e == Effect::kPermit ? Decision6::kIndetP : Decision6::kIndetD;
}

// ---------------------------------------------------------------------------
// Pairwise policy values

// A pair component: exactly 0, 1/2 or 1, ordered 0 < 1/2 < 1.
enum class Third : std::uint8_t { kZero = 0, kHalf = 1, kOne = 2 };

inline constexpr std::array<Third, 3> kAllThirds = {Third::kZero, Third::kHalf,
                                                    Third::kOne};

std::string_view to_string(Third t);  // "0", "1/2", "1"

// Any of the nine [deny,permit] pairs.
struct PairValue9 {
  Third deny = Third::kZero;
  Third permit = Third::kZero;

  friend constexpr bool operator==(PairValue9, PairValue9) = default;
};

std::string to_string(PairValue9 v);  // "[d,p]"

inline constexpr std::array<PairValue9, 9> kAllPairValue9 = [] {
  std::array<PairValue9, 9> out{};
  std::size_t i = 0;
  for (Third d : kAllThirds)
    for (Third p : kAllThirds) out[i++] = PairValue9{d, p};
  return out;
}();

constexpr bool is_legal_pair(Third deny, Third permit) {
  // The six legal pairs are exactly those with at most one component equal
  // to 1 and, when one is 1, the other 0.
  if (deny == Third::kOne) return permit == Third::kZero;
  if (permit == Third::kOne) return deny == Third::kZero;
  return true;
}

// One of the six legal pairwise policy values.
class PairValue {
 public:
  constexpr PairValue() = default;  // [0,0]

  // Throws InvalidPair for the three extended-only pairs.
  constexpr PairValue(Third deny, Third permit) : deny_(deny), permit_(permit) {
    if (!is_legal_pair(deny, permit))
      throw InvalidPair("pair " + to_string(PairValue9{deny, permit}) +
                        " is not a pairwise policy value");
  }

  static constexpr std::optional<PairValue> make(Third deny, Third permit) {
    if (!is_legal_pair(deny, permit)) return std::nullopt;
    return PairValue(deny, permit);
  }

  // Narrowing from the extended set; throws InvalidPair when illegal.
  static constexpr PairValue narrow(PairValue9 v) {
    return PairValue(v.deny, v.permit);
  }

  constexpr Third deny() const { return deny_; }
  constexpr Third permit() const { return permit_; }

  constexpr operator PairValue9() const { return PairValue9{deny_, permit_}; }

  friend constexpr bool operator==(PairValue, PairValue) = default;

 private:
  Third deny_ = Third::kZero;
  Third permit_ = Third::kZero;
};

std::string to_string(PairValue v);

constexpr Third d(PairValue9 v) { return v.deny; }
constexpr Third p(PairValue9 v) { return v.permit; }

// δ : V6 → P.
constexpr PairValue delta(Decision6 x) {
  switch (x) {
    case Decision6::kNotApplicable:
      return PairValue(Third::kZero, Third::kZero);
    case Decision6::kIndetD:
      return PairValue(Third::kHalf, Third::kZero);
    case Decision6::kIndetP:
      return PairValue(Third::kZero, Third::kHalf);
    case Decision6::kIndetDP:
      return PairValue(Third::kHalf, Third::kHalf);
    case Decision6::kDeny:
      return PairValue(Third::kOne, Third::kZero);
    case Decision6::kPermit:
      break;
  }
  return PairValue(Third::kZero, Third::kOne);
}

std::vector<PairValue> delta_seq(std::span<const Decision6> s);

constexpr Decision6 delta_inverse(PairValue v) {
  for (Decision6 x : kAllDecision6)
    if (delta(x) == v) return x;
  // Unreachable: delta is a bijection onto the six legal pairs.
  return Decision6::kNotApplicable;
}

inline constexpr std::array<PairValue, 6> kAllPairValues = [] {
  std::array<PairValue, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = delta(kAllDecision6[i]);
  return out;
}();

// Componentwise order ⊑P under 0 ≤ 1/2 ≤ 1.
constexpr bool leq_pair(PairValue9 a, PairValue9 b) {
  return a.deny <= b.deny && a.permit <= b.permit;
}

// Componentwise max; empty input gives [0,0].
PairValue9 max_pair(std::span<const PairValue9> s);
// Componentwise min; empty input gives [1,1].
PairValue9 min_pair(std::span<const PairValue9> s);
PairValue9 max_pair(std::span<const PairValue> s);
PairValue9 min_pair(std::span<const PairValue> s);
inline PairValue9 max_pair(std::initializer_list<PairValue9> s) {
  return max_pair(std::span<const PairValue9>(s.begin(), s.size()));
}
inline PairValue9 min_pair(std::initializer_list<PairValue9> s) {
  return min_pair(std::span<const PairValue9>(s.begin(), s.size()));
}

// Join and meet of the nine-valued lattice ([0,0] bottom, [1,1] top).
inline PairValue9 join9(PairValue9 a, PairValue9 b) { return max_pair({a, b}); }
inline PairValue9 meet9(PairValue9 a, PairValue9 b) { return min_pair({a, b}); }

// ---------------------------------------------------------------------------
// The three six-element lattices over V6 used by the overriding and
// only-one-applicable combiners.

enum class LatticeOrder : std::uint8_t {
  kPermitOverrides,
  kDenyOverrides,
  kOnlyOneApplicable,
};

inline constexpr std::array<LatticeOrder, 3> kAllLatticeOrders = {
    LatticeOrder::kPermitOverrides, LatticeOrder::kDenyOverrides,
    LatticeOrder::kOnlyOneApplicable};

using Cover = std::pair<Decision6, Decision6>;  // (lower, upper)

// Hasse diagram cover edges, transcribed.
std::span<const Cover> covers(LatticeOrder order);
// Reflexive-transitive closure of the covers.
bool leq_order(LatticeOrder order, Decision6 a, Decision6 b);
// Binary join from the transcribed join table.
Decision6 join_order(LatticeOrder order, Decision6 a, Decision6 b);
// Least upper bound of a collection; ⊥ for the empty collection.
Decision6 lub_order(LatticeOrder order, std::span<const Decision6> s);
inline Decision6 lub_order(LatticeOrder order,
                           std::initializer_list<Decision6> s) {
  return lub_order(order, std::span<const Decision6>(s.begin(), s.size()));
}

}  // namespace xacml

#endif  // XACML_DECISION_HPP_
