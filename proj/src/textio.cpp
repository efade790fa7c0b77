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

#include "xacml/textio.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>

#include "json.hpp"
#include "xacml/alt_logics.hpp"

namespace xacml {

ParseError::ParseError(Kind kind, const std::string& message, SourceSpan span)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
            ": " + message),
      kind_(kind),
      span_(span),
      message_(message) {}

std::string_view to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::kSyntax:
      return "SyntaxError";
    case ParseError::Kind::kArity:
      return "ArityError";
    case ParseError::Kind::kUnknownCombiner:
      return "UnknownCombiner";
    case ParseError::Kind::kEmptyRequest:
      return "EmptyRequest";
    case ParseError::Kind::kMixedChildren:
      return "MixedChildren";
    case ParseError::Kind::kRangeRestriction:
      return "RangeRestriction";
    case ParseError::Kind::kRequestConflict:
      return "RequestConflict";
    case ParseError::Kind::kBadTerm:
      return "BadTerm";
  }
  return "?";
}

namespace {

ParseError::Kind kind_of(ModelError::Kind k) {
  switch (k) {
    case ModelError::Kind::kArity:
      return ParseError::Kind::kArity;
    case ModelError::Kind::kMixedChildren:
      return ParseError::Kind::kMixedChildren;
    case ModelError::Kind::kRangeRestriction:
      return ParseError::Kind::kRangeRestriction;
    case ModelError::Kind::kEmptyRequest:
      return ParseError::Kind::kEmptyRequest;
    case ModelError::Kind::kRequestConflict:
      return ParseError::Kind::kRequestConflict;
    case ModelError::Kind::kBadTerm:
      break;
  }
  return ParseError::Kind::kBadTerm;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_keyword(std::string_view s) {
  return s == "true" || s == "false" || s == "not" || s == "null";
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  PolicyNode document() {
    PolicyNode node = policy_node();
    skip_ws();
    if (!at_end()) fail("unexpected text after the policy");
    return node;
  }

  Request request() {
    skip_ws();
    const std::size_t start = pos_;
    expect("{");
    std::set<AttributeTerm> facts, errors;
    skip_ws();
    if (!peek_is("}")) {
      do {
        skip_ws();
        const std::size_t term_start = pos_;
        bool is_error = false;
        if (src_.substr(pos_, 6) == "error:") {
          pos_ += 6;
          is_error = true;
        }
        AttributeTerm t = ground_term(term_start);
        if (is_error && facts.contains(t))
          fail_at(ParseError::Kind::kRequestConflict, term_start,
                  to_display(t) + " is both a fact and an error attribute");
        if (!is_error && errors.contains(t))
          fail_at(ParseError::Kind::kRequestConflict, term_start,
                  to_display(t) + " is both a fact and an error attribute");
        (is_error ? errors : facts).insert(std::move(t));
      } while (accept(","));
    }
    expect("}");
    skip_ws();
    if (!at_end()) fail("unexpected text after the request");
    try {
      return Request(std::move(facts), std::move(errors));
    } catch (const ModelError& e) {
      throw ParseError(kind_of(e.kind()), e.what(), span_from(start));
    }
  }

 private:
  // -- scanning -------------------------------------------------------------

  bool at_end() const { return pos_ >= src_.size(); }

  void skip_ws() {
    while (!at_end()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (!at_end() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek_is(std::string_view lit) {
    skip_ws();
    return src_.substr(pos_, lit.size()) == lit;
  }

  bool accept(std::string_view lit) {
    if (!peek_is(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::optional<std::string_view> peek_ident() {
    skip_ws();
    if (at_end() || !is_ident_start(src_[pos_])) return std::nullopt;
    std::size_t end = pos_;
    while (end < src_.size() && is_ident_char(src_[end])) ++end;
    return src_.substr(pos_, end - pos_);
  }

  std::string ident(const char* what) {
    auto id = peek_ident();
    if (!id) fail(std::string("expected ") + what);
    pos_ += id->size();
    return std::string(*id);
  }

  bool accept_keyword(std::string_view word) {
    auto id = peek_ident();
    if (!id || *id != word) return false;
    pos_ += id->size();
    return true;
  }

  void expect_keyword(std::string_view word) {
    if (!accept_keyword(word)) fail("expected '" + std::string(word) + "'");
  }

  void field(std::string_view name) {
    expect_keyword(name);
    expect(":");
  }

  // Field separator; the separator after the last field is optional.
  void end_field() { expect(";"); }
  void end_last_field() {
    accept(";");
    expect("}");
  }

  std::optional<Constant> number() {
    skip_ws();
    std::size_t end = pos_;
    if (end < src_.size() && src_[end] == '-') ++end;
    if (end >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[end])))
      return std::nullopt;
    while (end < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.'))
      ++end;
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      ++end;
      if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end])))
        ++end;
    }
    double value = 0;
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
      fail("malformed number");
    pos_ = end;
    return Constant(value);
  }

  std::optional<Constant> quoted() {
    if (!peek_is("\"")) return std::nullopt;
    const std::size_t start = pos_;
    ++pos_;
    std::string out;
    while (true) {
      if (at_end()) fail_at(ParseError::Kind::kSyntax, start, "unterminated string");
      const char c = src_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail_at(ParseError::Kind::kSyntax, start, "unterminated string");
        const char e = src_[pos_++];
        if (e == 'n')
          out += '\n';
        else if (e == '"' || e == '\\')
          out += e;
        else
          fail_at(ParseError::Kind::kSyntax, pos_ - 2, "unknown escape");
      } else {
        out += c;
      }
    }
    return Constant(std::move(out));
  }

  // Number, quoted string or identifier (always a constant here).
  Constant constant() {
    if (auto n = number()) return *n;
    if (auto s = quoted()) return *s;
    if (peek_ident()) return Constant(ident("a constant"));
    fail("expected a constant");
  }

  // name(const, ...) with no variables; used by requests.
  AttributeTerm ground_term(std::size_t start) {
    std::string name = ident("an attribute name");
    expect("(");
    std::vector<Constant> args;
    do {
      args.push_back(constant());
    } while (accept(","));
    expect(")");
    try {
      return AttributeTerm(std::move(name), std::move(args));
    } catch (const ModelError& e) {
      throw ParseError(kind_of(e.kind()), e.what(), span_from(start));
    }
  }

  // -- locations ------------------------------------------------------------

  SourceSpan span_between(std::size_t start, std::size_t end) const {
    SourceSpan s;
    s.start = std::min(start, src_.size());
    s.end = std::max(s.start, std::min(end, src_.size()));
    s.line = 1;
    s.column = 1;
    for (std::size_t i = 0; i < s.start; ++i) {
      if (src_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  SourceSpan span_from(std::size_t start) const {
    return span_between(start, pos_);
  }

  [[noreturn]] void fail_at(ParseError::Kind kind, std::size_t at,
                            const std::string& message) const {
    // Keep the span inside the input even at end of file.
    std::size_t start = at;
    if (!src_.empty() && start >= src_.size()) start = src_.size() - 1;
    throw ParseError(kind, message, span_between(start, start + (src_.empty() ? 0 : 1)));
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_ws();
    std::string found = at_end() ? "end of input"
                                 : "'" + std::string(1, src_[pos_]) + "'";
    fail_at(ParseError::Kind::kSyntax, pos_, message + ", found " + found);
  }

  template <typename Build>
  auto construct(std::size_t start, Build&& build) {
    try {
      return build(span_from(start));
    } catch (const ModelError& e) {
      throw ParseError(kind_of(e.kind()), e.what(), span_from(start));
    }
  }

  // -- policies -------------------------------------------------------------

  PolicyNode policy_node() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept_keyword("policyset")) return policy_set(start);
    if (accept_keyword("policy")) return policy(start);
    fail("expected 'policyset' or 'policy'");
  }

  CombinerId combiner() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '-'))
      ++end;
    if (end == start) fail("expected a combining algorithm");
    const std::string_view token = src_.substr(start, end - start);
    pos_ = end;
    auto id = parse_combiner_token(token);
    if (!id)
      throw ParseError(ParseError::Kind::kUnknownCombiner,
                       "unknown combining algorithm '" + std::string(token) + "'",
                       span_from(start));
    return *id;
  }

  PolicyNode policy_set(std::size_t start) {
    std::string name = ident("a policy set name");
    expect("{");
    field("target");
    Target t = target();
    end_field();
    field("combiner");
    const CombinerId comb = combiner();
    end_field();
    field("children");
    expect("[");
    std::vector<PolicyNode> children;
    if (!peek_is("]")) {
      do {
        children.push_back(policy_node());
      } while (accept(","));
    }
    expect("]");
    end_last_field();
    return construct(start, [&](SourceSpan span) {
      return PolicySet(std::move(name), std::move(t), std::move(children), comb,
                       span);
    });
  }

  PolicyNode policy(std::size_t start) {
    std::string name = ident("a policy name");
    expect("{");
    field("target");
    Target t = target();
    end_field();
    field("combiner");
    const CombinerId comb = combiner();
    end_field();
    field("rules");
    expect("[");
    std::vector<Rule> rules;
    if (!peek_is("]")) {
      do {
        rules.push_back(rule());
      } while (accept(","));
    }
    expect("]");
    end_last_field();
    return construct(start, [&](SourceSpan span) {
      return Policy(std::move(name), std::move(t), std::move(rules), comb, span);
    });
  }

  Rule rule() {
    skip_ws();
    const std::size_t start = pos_;
    expect_keyword("rule");
    std::string name = ident("a rule name");
    expect("{");
    field("effect");
    Effect effect;
    if (accept_keyword("permit"))
      effect = Effect::kPermit;
    else if (accept_keyword("deny"))
      effect = Effect::kDeny;
    else
      fail("expected 'permit' or 'deny'");
    end_field();
    field("target");
    Target t = target();
    end_field();
    field("condition");
    ConditionExpr c = condition();
    end_last_field();
    return construct(start, [&](SourceSpan span) {
      return Rule(std::move(name), effect, std::move(t), std::move(c), span);
    });
  }

  // -- targets --------------------------------------------------------------

  Target target() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept_keyword("null")) return Target::null();
    std::vector<AnyOf> any;
    do {
      any.push_back(any_of());
    } while (accept("/\\"));
    return construct(start, [&](SourceSpan) { return Target(std::move(any)); });
  }

  AnyOf any_of() {
    if (!accept("(")) return AnyOf{{AllOf{{match()}}}};
    AnyOf out;
    do {
      out.all_of.push_back(all_of());
    } while (accept("\\/"));
    expect(")");
    return out;
  }

  AllOf all_of() {
    const bool grouped = accept("(");
    AllOf out;
    do {
      out.matches.push_back(match());
    } while (accept("/\\"));
    if (grouped) expect(")");
    return out;
  }

  Match match() {
    skip_ws();
    const std::size_t start = pos_;
    auto id = peek_ident();
    if (!id || !parse_category(*id))
      fail("expected subject, action, resource or environment");
    std::string name = ident("a category");
    expect("(");
    Constant value = constant();
    expect(")");
    return construct(start, [&](SourceSpan) {
      return Match(AttributeTerm(std::move(name), {std::move(value)}));
    });
  }

  // -- conditions -----------------------------------------------------------

  ConditionExpr condition() {
    skip_ws();
    const std::size_t start = pos_;
    std::vector<ConditionExpr> parts;
    do {
      parts.push_back(disjunction());
    } while (accept(","));
    if (parts.size() == 1) return parts.front();
    return construct(start, [&](SourceSpan) {
      return ConditionExpr::conj(std::move(parts));
    });
  }

  ConditionExpr disjunction() {
    std::vector<ConditionExpr> parts;
    do {
      parts.push_back(conjunction());
    } while (accept("\\/"));
    if (parts.size() == 1) return parts.front();
    return ConditionExpr::disj(std::move(parts));
  }

  ConditionExpr conjunction() {
    std::vector<ConditionExpr> parts;
    do {
      parts.push_back(unary());
    } while (accept("/\\"));
    if (parts.size() == 1) return parts.front();
    return ConditionExpr::conj(std::move(parts));
  }

  ConditionExpr unary() {
    if (accept_keyword("not")) return ConditionExpr::negate(unary());
    if (accept_keyword("true")) return ConditionExpr::truth();
    if (accept_keyword("false")) return ConditionExpr::falsity();
    if (accept("(")) {
      ConditionExpr inner = condition();
      expect(")");
      return inner;
    }
    skip_ws();
    const std::size_t start = pos_;
    auto id = peek_ident();
    if (id && !std::isupper(static_cast<unsigned char>((*id)[0]))) {
      // Atom or function application: look past the identifier.
      const std::size_t after = pos_ + id->size();
      std::size_t k = after;
      while (k < src_.size() && std::isspace(static_cast<unsigned char>(src_[k]))) ++k;
      if (k < src_.size() && src_[k] == '(') {
        std::string name = ident("a predicate");
        expect("(");
        std::vector<AtomArg> args;
        do {
          args.push_back(atom_arg());
        } while (accept(","));
        expect(")");
        if (auto op = comparison_op()) {
          if (args.size() != 1)
            fail_at(ParseError::Kind::kSyntax, start,
                    "a function application takes exactly one argument");
          Operand lhs = FunctionApp{std::move(name), std::move(args.front())};
          return ConditionExpr::compare(std::move(lhs), *op, operand());
        }
        return construct(start, [&](SourceSpan) {
          return ConditionExpr::atom(std::move(name), std::move(args));
        });
      }
    }
    Operand lhs = operand();
    auto op = comparison_op();
    if (!op) fail("expected a comparison operator");
    return ConditionExpr::compare(std::move(lhs), *op, operand());
  }

  std::optional<CmpOp> comparison_op() {
    if (accept("<=")) return CmpOp::kLe;
    if (accept(">=")) return CmpOp::kGe;
    if (accept("!=")) return CmpOp::kNe;
    if (accept("=")) return CmpOp::kEq;
    if (accept("<")) return CmpOp::kLt;
    if (accept(">")) return CmpOp::kGt;
    return std::nullopt;
  }

  AtomArg atom_arg() {
    if (auto n = number()) return *n;
    if (auto s = quoted()) return *s;
    auto id = peek_ident();
    if (!id) fail("expected a constant or variable");
    if (is_keyword(*id)) fail("keyword '" + std::string(*id) + "' used as a term");
    std::string name = ident("a term");
    if (std::isupper(static_cast<unsigned char>(name[0])))
      return Variable{std::move(name)};
    return Constant(std::move(name));
  }

  Operand operand() {
    skip_ws();
    auto id = peek_ident();
    if (id && !std::isupper(static_cast<unsigned char>((*id)[0])) &&
        !is_keyword(*id)) {
      std::size_t k = pos_ + id->size();
      while (k < src_.size() && std::isspace(static_cast<unsigned char>(src_[k]))) ++k;
      if (k < src_.size() && src_[k] == '(') {
        std::string fn = ident("a function");
        expect("(");
        AtomArg arg = atom_arg();
        expect(")");
        return FunctionApp{std::move(fn), std::move(arg)};
      }
    }
    AtomArg a = atom_arg();
    if (auto* v = std::get_if<Variable>(&a)) return *v;
    return std::get<Constant>(a);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Serializer

std::string escape_constant(const Constant& c) {
  if (c.is_number()) return to_display(c);
  const std::string& s = c.text();
  bool plain = !s.empty() && (std::islower(static_cast<unsigned char>(s[0])) || s[0] == '_') &&
               !is_keyword(s);
  for (char ch : s) plain = plain && is_ident_char(ch);
  if (plain) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
      out += ch;
    } else if (ch == '\n') {
      out += "\\n";
    } else {
      out += ch;
    }
  }
  out += '"';
  return out;
}

std::string serialize_arg(const AtomArg& a) {
  if (const auto* v = std::get_if<Variable>(&a)) return v->name;
  return escape_constant(std::get<Constant>(a));
}

std::string serialize_operand(const Operand& o) {
  if (const auto* v = std::get_if<Variable>(&o)) return v->name;
  if (const auto* c = std::get_if<Constant>(&o)) return escape_constant(*c);
  const auto& f = std::get<FunctionApp>(o);
  return f.function + "(" + serialize_arg(f.arg) + ")";
}

std::string serialize_match(const Match& m) {
  return m.term().name() + "(" + escape_constant(m.term().args().front()) + ")";
}

std::string join_matches(const AllOf& a) {
  std::string out;
  for (std::size_t i = 0; i < a.matches.size(); ++i) {
    if (i > 0) out += " /\\ ";
    out += serialize_match(a.matches[i]);
  }
  return out;
}

bool is_connective(const ConditionExpr& c) {
  return c.kind() == ConditionExpr::Kind::kAnd ||
         c.kind() == ConditionExpr::Kind::kOr;
}

void indent(std::string& out, int depth) { out.append(2 * depth, ' '); }

void serialize_rule(const Rule& r, int depth, std::string& out) {
  indent(out, depth);
  out += "rule " + r.name() + " {\n";
  indent(out, depth + 1);
  out += "effect: " + std::string(to_string(r.effect())) + ";\n";
  indent(out, depth + 1);
  out += "target: " + serialize_target(r.target()) + ";\n";
  indent(out, depth + 1);
  out += "condition: " + serialize_condition(r.condition()) + "\n";
  indent(out, depth);
  out += "}";
}

void serialize_node(const PolicyNode& n, int depth, std::string& out) {
  const bool is_policy = n.is_policy();
  const Target& t = is_policy ? n.policy().target() : n.policy_set().target();
  const CombinerId comb =
      is_policy ? n.policy().combiner() : n.policy_set().combiner();
  indent(out, depth);
  out += (is_policy ? "policy " : "policyset ") + n.name() + " {\n";
  indent(out, depth + 1);
  out += "target: " + serialize_target(t) + ";\n";
  indent(out, depth + 1);
  out += "combiner: " + std::string(to_token(comb)) + ";\n";
  indent(out, depth + 1);
  out += is_policy ? "rules: [" : "children: [";
  const std::size_t count =
      is_policy ? n.policy().rules().size() : n.policy_set().children().size();
  if (count == 0) {
    out += "]\n";
  } else {
    out += "\n";
    for (std::size_t i = 0; i < count; ++i) {
      if (is_policy)
        serialize_rule(n.policy().rules()[i], depth + 2, out);
      else
        serialize_node(n.policy_set().children()[i], depth + 2, out);
      out += i + 1 < count ? ",\n" : "\n";
    }
    indent(out, depth + 1);
    out += "]\n";
  }
  indent(out, depth);
  out += "}";
}

}  // namespace

PolicyNode parse_policy(std::string_view text) { return Parser(text).document(); }

Request parse_request(std::string_view text) { return Parser(text).request(); }

std::string serialize_target(const Target& t) {
  if (t.is_null()) return "null";
  std::string out;
  bool first = true;
  for (const AnyOf& e : t.any_of()) {
    if (!first) out += " /\\ ";
    first = false;
    if (e.all_of.size() == 1 && e.all_of.front().matches.size() == 1) {
      out += serialize_match(e.all_of.front().matches.front());
      continue;
    }
    out += '(';
    for (std::size_t i = 0; i < e.all_of.size(); ++i) {
      if (i > 0) out += " \\/ ";
      const AllOf& a = e.all_of[i];
      const bool group = e.all_of.size() > 1 && a.matches.size() > 1;
      if (group) out += '(';
      out += join_matches(a);
      if (group) out += ')';
    }
    out += ')';
  }
  return out;
}

std::string serialize_condition(const ConditionExpr& c) {
  switch (c.kind()) {
    case ConditionExpr::Kind::kTrue:
      return "true";
    case ConditionExpr::Kind::kFalse:
      return "false";
    case ConditionExpr::Kind::kAtom: {
      std::string out = c.predicate() + "(";
      for (std::size_t i = 0; i < c.atom_args().size(); ++i) {
        if (i > 0) out += ", ";
        out += serialize_arg(c.atom_args()[i]);
      }
      return out + ")";
    }
    case ConditionExpr::Kind::kCompare:
      return serialize_operand(c.lhs()) + " " + std::string(to_string(c.op())) +
             " " + serialize_operand(c.rhs());
    case ConditionExpr::Kind::kNot: {
      const ConditionExpr& child = c.children().front();
      const bool group = is_connective(child) ||
                         child.kind() == ConditionExpr::Kind::kCompare;
      const std::string inner = serialize_condition(child);
      return group ? "not (" + inner + ")" : "not " + inner;
    }
    case ConditionExpr::Kind::kAnd:
    case ConditionExpr::Kind::kOr: {
      const char* sep =
          c.kind() == ConditionExpr::Kind::kAnd ? " /\\ " : " \\/ ";
      std::string out;
      for (std::size_t i = 0; i < c.children().size(); ++i) {
        if (i > 0) out += sep;
        const ConditionExpr& child = c.children()[i];
        if (is_connective(child))
          out += "(" + serialize_condition(child) + ")";
        else
          out += serialize_condition(child);
      }
      return out;
    }
  }
  return "true";
}

std::string serialize_policy(const PolicyNode& node) {
  std::string out;
  serialize_node(node, 0, out);
  out += '\n';
  return out;
}

std::string serialize_request(const Request& q) {
  std::string out = "{ ";
  bool first = true;
  auto term = [&](const AttributeTerm& t, bool error) {
    if (!first) out += ", ";
    first = false;
    if (error) out += "error:";
    out += t.name() + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i > 0) out += ",";
      out += escape_constant(t.args()[i]);
    }
    out += ")";
  };
  for (const AttributeTerm& t : q.facts()) term(t, false);
  for (const AttributeTerm& t : q.error_attributes()) term(t, true);
  out += " }\n";
  return out;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

constexpr std::array<std::string_view, 8> kLatticeNames = {
    "l3", "po", "do", "o1a", "pair6", "pair9", "belnap-k", "belnap-t"};

struct FinitePoset {
  std::vector<std::string> labels;
  std::function<bool(std::size_t, std::size_t)> leq;
};

FinitePoset v6_poset(LatticeOrder order) {
  FinitePoset p;
  for (Decision6 x : kAllDecision6) p.labels.emplace_back(to_string(x));
  p.leq = [order](std::size_t a, std::size_t b) {
    return leq_order(order, kAllDecision6[a], kAllDecision6[b]);
  };
  return p;
}

template <std::size_t N>
FinitePoset pair_poset(const std::array<PairValue9, N>& items) {
  FinitePoset p;
  for (PairValue9 v : items) p.labels.push_back(to_string(v));
  p.leq = [items](std::size_t a, std::size_t b) {
    return leq_pair(items[a], items[b]);
  };
  return p;
}

FinitePoset belnap_poset(bool knowledge) {
  FinitePoset p;
  for (Belnap v : kAllBelnap) p.labels.emplace_back(to_string(v));
  p.leq = [knowledge](std::size_t a, std::size_t b) {
    const Belnap x = kAllBelnap[a], y = kAllBelnap[b];
    return (knowledge ? belnap_join_k(x, y) : belnap_join_t(x, y)) == y;
  };
  return p;
}

FinitePoset poset_named(std::string_view name) {
  if (name == "l3") {
    FinitePoset p;
    for (Decision3 v : kAllDecision3) p.labels.emplace_back(to_string(v));
    p.leq = [](std::size_t a, std::size_t b) {
      return kAllDecision3[a] <= kAllDecision3[b];
    };
    return p;
  }
  if (name == "po") return v6_poset(LatticeOrder::kPermitOverrides);
  if (name == "do") return v6_poset(LatticeOrder::kDenyOverrides);
  if (name == "o1a") return v6_poset(LatticeOrder::kOnlyOneApplicable);
  if (name == "pair6") {
    std::array<PairValue9, 6> items{};
    for (std::size_t i = 0; i < 6; ++i) items[i] = kAllPairValues[i];
    return pair_poset(items);
  }
  if (name == "pair9") return pair_poset(kAllPairValue9);
  if (name == "belnap-k") return belnap_poset(true);
  if (name == "belnap-t") return belnap_poset(false);
  throw UnknownLattice("unknown lattice '" + std::string(name) + "'");
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::span<const std::string_view> lattice_names() { return kLatticeNames; }

std::string emit_lattice_dot(std::string_view name) {
  const FinitePoset p = poset_named(name);
  const std::size_t n = p.labels.size();
  auto lt = [&](std::size_t a, std::size_t b) { return a != b && p.leq(a, b); };
  std::string out = "digraph " + quote(std::string(name)) + " {\n";
  out += "  rankdir=BT;\n";
  for (const std::string& label : p.labels) out += "  " + quote(label) + ";\n";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (lt(a, c) && lt(c, b)) cover = false;
      if (cover)
        out += "  " + quote(p.labels[a]) + " -> " + quote(p.labels[b]) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Traces

namespace {

std::string path_string(const std::vector<std::size_t>& path) {
  if (path.empty()) return "/";
  std::string out;
  for (std::size_t i : path) out += "/" + std::to_string(i);
  return out;
}

}  // namespace

std::string format_trace_text(const EvalTrace& trace) {
  std::string out;
  for (const TraceRecord& r : trace.records) {
    indent(out, static_cast<int>(r.path.size()));
    out += path_string(r.path) + " " + std::string(to_string(r.kind)) + " " +
           r.name + ": target=" + std::string(to_string(r.target));
    if (r.condition)
      out += " condition=" + std::string(to_string(*r.condition));
    if (r.combiner) {
      out += " combiner=" + std::string(to_token(*r.combiner)) + " inputs=<";
      for (std::size_t i = 0; i < r.inputs.size(); ++i) {
        if (i > 0) out += ",";
        out += to_string(r.inputs[i]);
      }
      out += ">";
    }
    out += " result=" + std::string(to_string(r.result)) + "\n";
    for (const std::string& n : r.notes) {
      indent(out, static_cast<int>(r.path.size()) + 1);
      out += "note: " + n + "\n";
    }
  }
  return out;
}

std::string format_trace_structured(const EvalTrace& trace) {
  std::string out;
  for (const TraceRecord& r : trace.records) {
    nlohmann::ordered_json j;
    j["path"] = path_string(r.path);
    j["kind"] = to_string(r.kind);
    j["name"] = r.name;
    j["target"] = to_string(r.target);
    j["condition"] = r.condition ? nlohmann::ordered_json(to_string(*r.condition))
                                 : nlohmann::ordered_json(nullptr);
    j["combiner"] = r.combiner ? nlohmann::ordered_json(to_token(*r.combiner))
                               : nlohmann::ordered_json(nullptr);
    auto inputs = nlohmann::ordered_json::array();
    for (Decision6 d : r.inputs) inputs.push_back(to_string(d));
    j["inputs"] = std::move(inputs);
    j["result"] = to_string(r.result);
    j["notes"] = r.notes;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace xacml
