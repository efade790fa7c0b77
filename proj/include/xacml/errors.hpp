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

#ifndef XACML_ERRORS_HPP_
#define XACML_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xacml {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A [deny,permit] pair outside the six legal pairwise policy values.
class InvalidPair : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnknownCombiner : public Error {
 public:
  using Error::Error;
};

// A combiner was requested in an encoding it is not defined for.
class EncodingUnsupported : public Error {
 public:
  using Error::Error;
};

// A combiner has no encoding in one of the alternative logics.
class UnsupportedCombiner : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class UnknownLattice : public Error {
 public:
  using Error::Error;
};

// Structural invariant of the policy model or request violated at
// construction time.
class ModelError : public Error {
 public:
  enum class Kind {
    kArity,             // a list below its minimum length
    kMixedChildren,     // PolicySet with both Policy and PolicySet children
    kRangeRestriction,  // comparison variable not bound by any atom
    kEmptyRequest,
    kRequestConflict,   // term both a fact and an error attribute
    kBadTerm,           // malformed attribute term
  };

  ModelError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace xacml

#endif  // XACML_ERRORS_HPP_
