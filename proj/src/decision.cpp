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

#include "xacml/decision.hpp"

#include <algorithm>

namespace xacml {

std::string_view to_string(Decision3 v) {
  switch (v) {
    case Decision3::kBottom:
      return "Bottom";
    case Decision3::kIndet:
      return "Indeterminate";
    case Decision3::kTop:
      return "Top";
  }
  return "?";
}

std::string_view to_string(Effect e) {
  return e == Effect::kPermit ? "permit" : "deny";
}

std::string_view to_string(Decision6 d) {
  switch (d) {
    case Decision6::kNotApplicable:
      return "NotApplicable";
    case Decision6::kIndetD:
      return "Indeterminate{D}";
    case Decision6::kIndetP:
      return "Indeterminate{P}";
    case Decision6::kIndetDP:
      return "Indeterminate{DP}";
    case Decision6::kDeny:
      return "Deny";
    case Decision6::kPermit:
      return "Permit";
  }
  return "?";
}

std::optional<Decision6> parse_decision6(std::string_view name) {
  for (Decision6 d : kAllDecision6)
    if (to_string(d) == name) return d;
  return std::nullopt;
}

Decision3 glb3(std::span<const Decision3> values) {
  Decision3 out = Decision3::kTop;
  for (Decision3 v : values) out = std::min(out, v);
  return out;
}

Decision3 lub3(std::span<const Decision3> values) {
  Decision3 out = Decision3::kBottom;
  for (Decision3 v : values) out = std::max(out, v);
  return out;
}

std::string_view to_string(Third t) {
  switch (t) {
    case Third::kZero:
      return "0";
    case Third::kHalf:
      return "1/2";
    case Third::kOne:
      return "1";
  }
  return "?";
}

std::string to_string(PairValue9 v) {
  std::string out = "[";
  out += to_string(v.deny);
  out += ',';
  out += to_string(v.permit);
  out += ']';
  return out;
}

std::string to_string(PairValue v) { return to_string(PairValue9(v)); }

std::vector<PairValue> delta_seq(std::span<const Decision6> s) {
  std::vector<PairValue> out;
  out.reserve(s.size());
  for (Decision6 x : s) out.push_back(delta(x));
  return out;
}

namespace {

template <typename T>
PairValue9 componentwise(std::span<const T> s, PairValue9 init, bool take_max) {
  PairValue9 out = init;
  for (const T& item : s) {
    const PairValue9 v(item);
    if (take_max) {
      out.deny = std::max(out.deny, v.deny);
      out.permit = std::max(out.permit, v.permit);
    } else {
      out.deny = std::min(out.deny, v.deny);
      out.permit = std::min(out.permit, v.permit);
    }
  }
  return out;
}

constexpr PairValue9 kBottom9{Third::kZero, Third::kZero};
constexpr PairValue9 kTop9{Third::kOne, Third::kOne};

}  // namespace

PairValue9 max_pair(std::span<const PairValue9> s) {
  return componentwise(s, kBottom9, true);
}
PairValue9 min_pair(std::span<const PairValue9> s) {
  return componentwise(s, kTop9, false);
}
PairValue9 max_pair(std::span<const PairValue> s) {
  return componentwise(s, kBottom9, true);
}
PairValue9 min_pair(std::span<const PairValue> s) {
  return componentwise(s, kTop9, false);
}

// ---------------------------------------------------------------------------
// Six-element lattices

namespace {

using D = Decision6;
constexpr D kNA = D::kNotApplicable;
constexpr D kId = D::kIndetD;
constexpr D kIp = D::kIndetP;
constexpr D kIdp = D::kIndetDP;
constexpr D kTd = D::kDeny;
constexpr D kTp = D::kPermit;

// Permit-overrides: ⊥ < Ip < Idp;  ⊥ < Id < ⊤d < Idp;  Idp < ⊤p.
constexpr std::array<Cover, 6> kPoCovers = {{
    {kNA, kIp}, {kNA, kId}, {kId, kTd}, {kIp, kIdp}, {kTd, kIdp}, {kIdp, kTp},
}};
// Deny-overrides: ⊥ < Id < Idp;  ⊥ < Ip < ⊤p < Idp;  Idp < ⊤d.
constexpr std::array<Cover, 6> kDoCovers = {{
    {kNA, kId}, {kNA, kIp}, {kIp, kTp}, {kId, kIdp}, {kTp, kIdp}, {kIdp, kTd},
}};
// Only-one-applicable: ⊥ < ⊤d < Id < Idp;  ⊥ < ⊤p < Ip < Idp.
constexpr std::array<Cover, 6> kO1aCovers = {{
    {kNA, kTd}, {kTd, kId}, {kId, kIdp}, {kNA, kTp}, {kTp, kIp}, {kIp, kIdp},
}};

using JoinTable = std::array<std::array<D, 6>, 6>;

// Rows and columns in enumeration order ⊥, Id, Ip, Idp, ⊤d, ⊤p.
constexpr JoinTable kPoJoin = {{
    {kNA, kId, kIp, kIdp, kTd, kTp},
    {kId, kId, kIdp, kIdp, kTd, kTp},
    {kIp, kIdp, kIp, kIdp, kIdp, kTp},
    {kIdp, kIdp, kIdp, kIdp, kIdp, kTp},
    {kTd, kTd, kIdp, kIdp, kTd, kTp},
    {kTp, kTp, kTp, kTp, kTp, kTp},
}};
constexpr JoinTable kDoJoin = {{
    {kNA, kId, kIp, kIdp, kTd, kTp},
    {kId, kId, kIdp, kIdp, kTd, kIdp},
    {kIp, kIdp, kIp, kIdp, kTd, kTp},
    {kIdp, kIdp, kIdp, kIdp, kTd, kIdp},
    {kTd, kTd, kTd, kTd, kTd, kTd},
    {kTp, kIdp, kTp, kIdp, kTd, kTp},
}};
constexpr JoinTable kO1aJoin = {{
    {kNA, kId, kIp, kIdp, kTd, kTp},
    {kId, kId, kIdp, kIdp, kId, kIdp},
    {kIp, kIdp, kIp, kIdp, kIdp, kIp},
    {kIdp, kIdp, kIdp, kIdp, kIdp, kIdp},
    {kTd, kId, kIdp, kIdp, kTd, kIdp},
    {kTp, kIdp, kIp, kIdp, kIdp, kTp},
}};

using Relation = std::array<std::array<bool, 6>, 6>;

constexpr Relation closure_of(std::span<const Cover> edges) {
  Relation r{};
  for (std::size_t i = 0; i < 6; ++i) r[i][i] = true;
  for (const Cover& c : edges) r[index_of(c.first)][index_of(c.second)] = true;
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

constexpr Relation kPoLeq = closure_of(kPoCovers);
constexpr Relation kDoLeq = closure_of(kDoCovers);
constexpr Relation kO1aLeq = closure_of(kO1aCovers);

const JoinTable& join_table(LatticeOrder order) {
  switch (order) {
    case LatticeOrder::kPermitOverrides:
      return kPoJoin;
    case LatticeOrder::kDenyOverrides:
      return kDoJoin;
    case LatticeOrder::kOnlyOneApplicable:
      break;
  }
  return kO1aJoin;
}

const Relation& leq_relation(LatticeOrder order) {
  switch (order) {
    case LatticeOrder::kPermitOverrides:
      return kPoLeq;
    case LatticeOrder::kDenyOverrides:
      return kDoLeq;
    case LatticeOrder::kOnlyOneApplicable:
      break;
  }
  return kO1aLeq;
}

}  // namespace

std::span<const Cover> covers(LatticeOrder order) {
  switch (order) {
    case LatticeOrder::kPermitOverrides:
      return kPoCovers;
    case LatticeOrder::kDenyOverrides:
      return kDoCovers;
    case LatticeOrder::kOnlyOneApplicable:
      break;
  }
  return kO1aCovers;
}

bool leq_order(LatticeOrder order, Decision6 a, Decision6 b) {
  return leq_relation(order)[index_of(a)][index_of(b)];
}

Decision6 join_order(LatticeOrder order, Decision6 a, Decision6 b) {
  return join_table(order)[index_of(a)][index_of(b)];
}

Decision6 lub_order(LatticeOrder order, std::span<const Decision6> s) {
  const JoinTable& table = join_table(order);
  Decision6 out = Decision6::kNotApplicable;
  for (Decision6 x : s) out = table[index_of(out)][index_of(x)];
  return out;
}

}  // namespace xacml
