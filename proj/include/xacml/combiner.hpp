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

// Combining algorithms in both encodings: the lattice formulation over V6
// and the pairwise formulation over [deny,permit] values. The two are tied
// together by check_equivalence, which enumerates every input sequence up
// to a length bound and compares δ(⊕V6(S)) with ⊕P(δ(S)).

#ifndef XACML_COMBINER_HPP_
#define XACML_COMBINER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "xacml/decision.hpp"

namespace xacml {

enum class CombinerId : std::uint8_t {
  kPermitOverrides,
  kDenyOverrides,
  kFirstApplicable,
  kOnlyOneApplicable,
  kAllPermit,
};

inline constexpr std::array<CombinerId, 4> kStandardCombiners = {
    CombinerId::kPermitOverrides, CombinerId::kDenyOverrides,
    CombinerId::kFirstApplicable, CombinerId::kOnlyOneApplicable};

enum class Encoding : std::uint8_t { kV6, kPair };

// "p-o", "d-o", "f-a", "o-1-a", "all-permit".
std::string_view to_token(CombinerId id);
std::optional<CombinerId> parse_combiner_token(std::string_view token);
// Throws UnknownCombiner.
CombinerId combiner_from_token(std::string_view token);

Decision6 combine_po_v6(std::span<const Decision6> s);
PairValue combine_po_pair(std::span<const PairValue> s);
Decision6 combine_do_v6(std::span<const Decision6> s);
PairValue combine_do_pair(std::span<const PairValue> s);
Decision6 combine_fa_v6(std::span<const Decision6> s);
PairValue combine_fa_pair(std::span<const PairValue> s);
Decision6 combine_o1a_v6(std::span<const Decision6> s);
PairValue combine_o1a_pair(std::span<const PairValue> s);
// Permit iff every element is [0,1]; deny otherwise, including for the
// empty sequence.
PairValue combine_all_permit(std::span<const PairValue> s);

using V6Combiner = Decision6 (*)(std::span<const Decision6>);
using PairCombiner = PairValue (*)(std::span<const PairValue>);

// One registry entry. `v6` is null when the algorithm is only defined in the
// pairwise encoding.
struct CombinerImpl {
  V6Combiner v6 = nullptr;
  PairCombiner pair = nullptr;
};

CombinerImpl standard_impl(CombinerId id);

bool supports(CombinerId id, Encoding encoding);

// Registry dispatch. The V6 overload throws EncodingUnsupported for
// all-permit.
Decision6 combine(CombinerId id, std::span<const Decision6> s);
PairValue combine(CombinerId id, std::span<const PairValue> s);

// Combines V6 inputs by round-tripping through the pairwise encoding. This
// is how the evaluator runs pair-only algorithms such as all-permit.
Decision6 combine_via_pairs(CombinerId id, std::span<const Decision6> s);

struct Counterexample {
  std::vector<Decision6> input;
  Decision6 v6_result;
  PairValue pair_result;
};

struct EquivalenceReport {
  CombinerId algorithm;
  std::size_t max_length = 0;
  std::uint64_t sequences_checked = 0;
  std::vector<Counterexample> counterexamples;

  bool holds() const { return counterexamples.empty(); }
};

// Σ_{n=0..max_length} 6^n.
std::uint64_t sequence_count(std::size_t max_length);

// Enumerates every sequence over V6 of length 0..max_length, shortest first
// and lexicographically within a length (⊥ < Id < Ip < Idp < ⊤d < ⊤p).
// Throws InvalidInput for all-permit.
EquivalenceReport check_equivalence(CombinerId id, std::size_t max_length);
EquivalenceReport check_equivalence(CombinerId id, std::size_t max_length,
                                    const CombinerImpl& impl);

// Calls `visit` for each sequence in the order check_equivalence uses.
template <typename Visitor>
void for_each_sequence(std::size_t max_length, Visitor&& visit) {
  std::vector<Decision6> seq;
  for (std::size_t n = 0; n <= max_length; ++n) {
    std::vector<std::size_t> digits(n, 0);
    seq.assign(n, kAllDecision6[0]);
    while (true) {
      visit(std::span<const Decision6>(seq));
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < kAllDecision6.size()) {
          seq[pos] = kAllDecision6[digits[pos]];
          break;
        }
        digits[pos] = 0;
        seq[pos] = kAllDecision6[0];
        if (pos == 0) {
          pos = n + 1;  // wrapped: done with this length
          break;
        }
      }
      if (n == 0 || pos == n + 1) break;
    }
  }
}

}  // namespace xacml

#endif  // XACML_COMBINER_HPP_
