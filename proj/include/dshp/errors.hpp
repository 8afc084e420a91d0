// Copyright 2026 The DSHP Authors
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

#ifndef DSHP_ERRORS_HPP_
#define DSHP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dshp {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance, graph or parameter set violates its invariants.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed instance, solution or graph text.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A solution breaks a structural constraint of the model. constraint() names
// it, e.g. "x_i + y_ij ≤ 1".
class InfeasibleSolution : public Error {
 public:
  InfeasibleSolution(std::string constraint, const std::string& detail)
      : Error(constraint + ": " + detail), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// The instance is valid but outside the domain an algorithm accepts
// (wrong number of distinct values, negative prices).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// Exactly one distinct value; every feasible plan has the same objective.
class DegenerateValues : public DomainMismatch {
 public:
  using DomainMismatch::DomainMismatch;
};

// Enumeration size cap exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dshp

#endif  // DSHP_ERRORS_HPP_
