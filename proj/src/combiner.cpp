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

#include "xacml/combiner.hpp"

#include <algorithm>
#include <string>

namespace xacml {

namespace {

constexpr PairValue kNotApplicablePair(Third::kZero, Third::kZero);
constexpr PairValue kPermitPair(Third::kZero, Third::kOne);
constexpr PairValue kDenyPair(Third::kOne, Third::kZero);
constexpr PairValue kIndetDPair(Third::kHalf, Third::kZero);
constexpr PairValue kIndetPPair(Third::kZero, Third::kHalf);
constexpr PairValue kIndetDPPair(Third::kHalf, Third::kHalf);

}  // namespace

std::string_view to_token(CombinerId id) {
  switch (id) {
    case CombinerId::kPermitOverrides:
      return "p-o";
    case CombinerId::kDenyOverrides:
      return "d-o";
    case CombinerId::kFirstApplicable:
      return "f-a";
    case CombinerId::kOnlyOneApplicable:
      return "o-1-a";
    case CombinerId::kAllPermit:
      return "all-permit";
  }
  return "?";
}

std::optional<CombinerId> parse_combiner_token(std::string_view token) {
  for (CombinerId id :
       {CombinerId::kPermitOverrides, CombinerId::kDenyOverrides,
        CombinerId::kFirstApplicable, CombinerId::kOnlyOneApplicable,
        CombinerId::kAllPermit}) {
    if (to_token(id) == token) return id;
  }
  return std::nullopt;
}

CombinerId combiner_from_token(std::string_view token) {
  if (auto id = parse_combiner_token(token)) return *id;
  throw UnknownCombiner("unknown combining algorithm '" + std::string(token) +
                        "'");
}

// ---------------------------------------------------------------------------
// V6 formulations

Decision6 combine_po_v6(std::span<const Decision6> s) {
  return lub_order(LatticeOrder::kPermitOverrides, s);
}

Decision6 combine_do_v6(std::span<const Decision6> s) {
  return lub_order(LatticeOrder::kDenyOverrides, s);
}

Decision6 combine_fa_v6(std::span<const Decision6> s) {
  for (Decision6 x : s)
    if (x != Decision6::kNotApplicable) return x;
  return Decision6::kNotApplicable;
}

Decision6 combine_o1a_v6(std::span<const Decision6> s) {
  // The "two applicable" cases count positions in the sequence, not
  // distinct values.
  auto only = [&](Decision6 applicable) {
    std::size_t hits = 0;
    for (Decision6 x : s) {
      if (x == applicable)
        ++hits;
      else if (x != Decision6::kNotApplicable)
        return false;
    }
    return hits >= 2;
  };
  if (only(Decision6::kDeny)) return Decision6::kIndetD;
  if (only(Decision6::kPermit)) return Decision6::kIndetP;
  return lub_order(LatticeOrder::kOnlyOneApplicable, s);
}

// ---------------------------------------------------------------------------
// Pairwise formulations

PairValue combine_po_pair(std::span<const PairValue> s) {
  const PairValue9 m = max_pair(s);
  if (m.permit == Third::kOne) return kPermitPair;
  if (m.permit == Third::kHalf && m.deny >= Third::kHalf) return kIndetDPPair;
  return PairValue::narrow(m);
}

PairValue combine_do_pair(std::span<const PairValue> s) {
  const PairValue9 m = max_pair(s);
  if (m.deny == Third::kOne) return kDenyPair;
  if (m.deny == Third::kHalf && m.permit >= Third::kHalf) return kIndetDPPair;
  return PairValue::narrow(m);
}

PairValue combine_fa_pair(std::span<const PairValue> s) {
  for (PairValue x : s)
    if (x != kNotApplicablePair) return x;
  return kNotApplicablePair;
}

PairValue combine_o1a_pair(std::span<const PairValue> s) {
  const PairValue9 m = max_pair(s);
  if (m.deny >= Third::kHalf && m.permit >= Third::kHalf) return kIndetDPPair;
  auto at_least_two = [&](auto component) {
    return std::count_if(s.begin(), s.end(), [&](PairValue x) {
             return component(x) >= Third::kHalf;
           }) >= 2;
  };
  if (m.deny >= Third::kHalf && m.permit == Third::kZero &&
      at_least_two([](PairValue x) { return x.deny(); }))
    return kIndetDPair;
  if (m.permit >= Third::kHalf && m.deny == Third::kZero &&
      at_least_two([](PairValue x) { return x.permit(); }))
    return kIndetPPair;
  return PairValue::narrow(m);
}

PairValue combine_all_permit(std::span<const PairValue> s) {
  const PairValue9 permit = kPermitPair;
  if (min_pair(s) == permit && max_pair(s) == permit) return kPermitPair;
  return kDenyPair;
}

// ---------------------------------------------------------------------------
// Registry

CombinerImpl standard_impl(CombinerId id) {
  switch (id) {
    case CombinerId::kPermitOverrides:
      return {&combine_po_v6, &combine_po_pair};
    case CombinerId::kDenyOverrides:
      return {&combine_do_v6, &combine_do_pair};
    case CombinerId::kFirstApplicable:
      return {&combine_fa_v6, &combine_fa_pair};
    case CombinerId::kOnlyOneApplicable:
      return {&combine_o1a_v6, &combine_o1a_pair};
    case CombinerId::kAllPermit:
      return {nullptr, &combine_all_permit};
  }
  throw UnknownCombiner("unknown combining algorithm id " +
                        std::to_string(static_cast<int>(id)));
}

bool supports(CombinerId id, Encoding encoding) {
  const CombinerImpl impl = standard_impl(id);
  return encoding == Encoding::kV6 ? impl.v6 != nullptr : impl.pair != nullptr;
}

Decision6 combine(CombinerId id, std::span<const Decision6> s) {
  const CombinerImpl impl = standard_impl(id);
  if (impl.v6 == nullptr)
    throw EncodingUnsupported(std::string(to_token(id)) +
                              " is only defined over pairwise values");
  return impl.v6(s);
}

PairValue combine(CombinerId id, std::span<const PairValue> s) {
  return standard_impl(id).pair(s);
}

Decision6 combine_via_pairs(CombinerId id, std::span<const Decision6> s) {
  const std::vector<PairValue> pairs = delta_seq(s);
  return delta_inverse(combine(id, std::span<const PairValue>(pairs)));
}

// ---------------------------------------------------------------------------
// Equivalence

std::uint64_t sequence_count(std::size_t max_length) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t n = 0; n <= max_length; ++n) {
    total += power;
    power *= kAllDecision6.size();
  }
  return total;
}

EquivalenceReport check_equivalence(CombinerId id, std::size_t max_length) {
  return check_equivalence(id, max_length, standard_impl(id));
}

EquivalenceReport check_equivalence(CombinerId id, std::size_t max_length,
                                    const CombinerImpl& impl) {
  if (impl.v6 == nullptr || impl.pair == nullptr)
    throw InvalidInput("equivalence needs both encodings of " +
                       std::string(to_token(id)));
  EquivalenceReport report{id, max_length, 0, {}};
  std::vector<PairValue> pairs;
  for_each_sequence(max_length, [&](std::span<const Decision6> seq) {
    ++report.sequences_checked;
    pairs.clear();
    for (Decision6 x : seq) pairs.push_back(delta(x));
    const Decision6 lhs = impl.v6(seq);
    const PairValue rhs = impl.pair(pairs);
    if (delta(lhs) != rhs)
      report.counterexamples.push_back(
          {std::vector<Decision6>(seq.begin(), seq.end()), lhs, rhs});
  });
  return report;
}

}  // namespace xacml
