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

// Attribute terms and requests.

#ifndef XACML_ATTRIBUTE_HPP_
#define XACML_ATTRIBUTE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xacml {

// A string or numeric attribute value.
class Constant {
 public:
  Constant() = default;
  explicit Constant(std::string text) : value_(std::move(text)) {}
  explicit Constant(const char* text) : value_(std::string(text)) {}
  explicit Constant(double number) : value_(number) {}

  bool is_number() const { return std::holds_alternative<double>(value_); }
  double number() const { return std::get<double>(value_); }
  const std::string& text() const { return std::get<std::string>(value_); }

  // Numbers sort before strings.
  friend bool operator==(const Constant&, const Constant&) = default;
  friend bool operator<(const Constant& a, const Constant& b) {
    return a.value_ < b.value_;
  }

 private:
  std::variant<std::string, double> value_;
};

// Human-readable form (numbers in shortest round-trip form, strings raw).
std::string to_display(const Constant& c);

enum class Category : std::uint8_t { kSubject, kAction, kResource, kEnvironment };

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

// Φ(α) or a fact predicate applied to constants, e.g. doctor(id,d).
class AttributeTerm {
 public:
  // Throws ModelError(kBadTerm) for an empty name or no arguments.
  AttributeTerm(std::string name, std::vector<Constant> args);

  const std::string& name() const { return name_; }
  const std::vector<Constant>& args() const { return args_; }

  // Set when the term is a category match Φ(α) (one of the four category
  // names with exactly one argument).
  std::optional<Category> category() const;

  friend bool operator==(const AttributeTerm&, const AttributeTerm&) = default;
  friend bool operator<(const AttributeTerm& a, const AttributeTerm& b) {
    if (a.name_ != b.name_) return a.name_ < b.name_;
    return a.args_ < b.args_;
  }

 private:
  std::string name_;
  std::vector<Constant> args_;
};

std::string to_display(const AttributeTerm& t);

// The request: facts plus the attributes whose evaluation errs.
class Request {
 public:
  // Throws ModelError(kEmptyRequest) without facts and
  // ModelError(kRequestConflict) when a term is in both sets.
  explicit Request(std::set<AttributeTerm> facts,
                   std::set<AttributeTerm> error_attributes = {});

  const std::set<AttributeTerm>& facts() const { return facts_; }
  const std::set<AttributeTerm>& error_attributes() const { return errors_; }

  bool has_fact(const AttributeTerm& t) const { return facts_.contains(t); }
  bool is_error(const AttributeTerm& t) const { return errors_.contains(t); }

  // Every constant occurring in the facts, sorted and deduplicated.
  const std::vector<Constant>& constants() const { return constants_; }

  friend bool operator==(const Request& a, const Request& b) {
    return a.facts_ == b.facts_ && a.errors_ == b.errors_;
  }

 private:
  std::set<AttributeTerm> facts_;
  std::set<AttributeTerm> errors_;
  std::vector<Constant> constants_;
};

}  // namespace xacml

#endif  // XACML_ATTRIBUTE_HPP_
