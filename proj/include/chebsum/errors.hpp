// Copyright 2026 The chebsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHEBSUM_ERRORS_HPP
#define CHEBSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chebsum {

// Exact division by a zero rational or Gaussian rational.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// An argument lies outside the region where an operation is defined
// (modulus condition, the z = 1 singularity, a singular boundary angle).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument within 1e-8 of a pole of the Gamma function.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two routes to a value that must agree exactly did not. Always a bug.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chebsum

#endif  // CHEBSUM_ERRORS_HPP
