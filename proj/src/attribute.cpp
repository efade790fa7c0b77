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

#include "xacml/attribute.hpp"

#include <array>
#include <charconv>

#include "xacml/errors.hpp"

namespace xacml {

std::string to_display(const Constant& c) {
  if (!c.is_number()) return c.text();
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), c.number());
  return std::string(buf.data(), end);
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kSubject:
      return "subject";
    case Category::kAction:
      return "action";
    case Category::kResource:
      return "resource";
    case Category::kEnvironment:
      return "environment";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view name) {
  for (Category c : {Category::kSubject, Category::kAction, Category::kResource,
                     Category::kEnvironment})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

AttributeTerm::AttributeTerm(std::string name, std::vector<Constant> args)
    : name_(std::move(name)), args_(std::move(args)) {
  if (name_.empty())
    throw ModelError(ModelError::Kind::kBadTerm, "attribute term without a name");
  if (args_.empty())
    throw ModelError(ModelError::Kind::kBadTerm,
                     "attribute term '" + name_ + "' needs at least one argument");
}

std::optional<Category> AttributeTerm::category() const {
  if (args_.size() != 1) return std::nullopt;
  return parse_category(name_);
}

std::string to_display(const AttributeTerm& t) {
  std::string out = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i > 0) out += ',';
    out += to_display(t.args()[i]);
  }
  out += ')';
  return out;
}

Request::Request(std::set<AttributeTerm> facts,
                 std::set<AttributeTerm> error_attributes)
    : facts_(std::move(facts)), errors_(std::move(error_attributes)) {
  if (facts_.empty())
    throw ModelError(ModelError::Kind::kEmptyRequest,
                     "a request needs at least one fact");
  for (const AttributeTerm& t : errors_) {
    if (facts_.contains(t))
      throw ModelError(ModelError::Kind::kRequestConflict,
                       to_display(t) + " is both a fact and an error attribute");
  }
  std::set<Constant> seen;
  for (const AttributeTerm& t : facts_)
    for (const Constant& c : t.args()) seen.insert(c);
  constants_.assign(seen.begin(), seen.end());
}

}  // namespace xacml
