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

// Text formats: the policy and request DSL, canonical policy serialization,
// trace rendering, and DOT export of the decision lattices.
//
// Policy grammar (whitespace and `#` line comments are insignificant):
//
//   node      := policyset | policy
//   policyset := "policyset" NAME "{" "target" ":" target ";"
//                "combiner" ":" COMBINER ";" "children" ":" "[" nodes? "]" ";"? "}"
//   policy    := "policy" NAME "{" "target" ":" target ";"
//                "combiner" ":" COMBINER ";" "rules" ":" "[" rules? "]" ";"? "}"
//   rule      := "rule" NAME "{" "effect" ":" ("permit" | "deny") ";"
//                "target" ":" target ";" "condition" ":" cond ";"? "}"
//   target    := "null" | anyof ("/\" anyof)*
//   anyof     := match | "(" allof ("\/" allof)* ")"
//   allof     := match ("/\" match)* | "(" match ("/\" match)* ")"
//   match     := CATEGORY "(" constant ")"
//   cond      := or ("," or)*            # comma is a loose conjunction
//   or        := and ("\/" and)*
//   and       := unary ("/\" unary)*
//   unary     := "not" unary | "true" | "false" | "(" cond ")"
//              | IDENT "(" arg ("," arg)* ")"          # atom
//              | operand CMP operand                   # = != < <= > >=
//   operand   := constant | VARIABLE | IDENT "(" arg ")"
//
// Requests are `{ term, ..., error:term, ... }`.

#ifndef XACML_TEXTIO_HPP_
#define XACML_TEXTIO_HPP_

#include <span>
#include <string>
#include <string_view>

#include "xacml/errors.hpp"
#include "xacml/policy.hpp"

namespace xacml {

class ParseError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kArity,
    kUnknownCombiner,
    kEmptyRequest,
    kMixedChildren,
    kRangeRestriction,
    kRequestConflict,
    kBadTerm,
  };

  ParseError(Kind kind, const std::string& message, SourceSpan span);

  Kind kind() const noexcept { return kind_; }
  const SourceSpan& span() const noexcept { return span_; }
  // Message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Kind kind_;
  SourceSpan span_;
  std::string message_;
};

std::string_view to_string(ParseError::Kind k);

PolicyNode parse_policy(std::string_view text);
Request parse_request(std::string_view text);

// Canonical, newline-terminated form; parse_policy inverts it.
std::string serialize_policy(const PolicyNode& node);
std::string serialize_target(const Target& t);
std::string serialize_condition(const ConditionExpr& c);
std::string serialize_request(const Request& q);

// Names accepted by emit_lattice_dot.
std::span<const std::string_view> lattice_names();

// Hasse diagram as a DOT digraph, edges pointing from lower to upper
// elements. Throws UnknownLattice.
std::string emit_lattice_dot(std::string_view name);

// One line per node, indented by depth.
std::string format_trace_text(const EvalTrace& trace);
// One JSON object per line with a fixed key order.
std::string format_trace_structured(const EvalTrace& trace);

}  // namespace xacml

#endif  // XACML_TEXTIO_HPP_
