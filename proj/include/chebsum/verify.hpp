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

#ifndef CHEBSUM_VERIFY_HPP
#define CHEBSUM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chebsum/exactnum.hpp"

namespace chebsum::verify {

struct CaseFailure {
  std::string descriptor;
  std::string expected;
  std::string actual;
  // "exact" or "approx(<tolerance>)"
  std::string exactness;
};

struct VerifyReport {
  std::string suite;
  int cases_run = 0;
  int exact_cases = 0;
  int approx_cases = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

// Unset fields take each suite's own default.
struct Bounds {
  std::optional<int> n_max;
  std::optional<int> s_max;
  std::optional<double> eps;
  std::uint64_t seed = 20240611;
};

inline constexpr int kBoundCap = 200;

// Canonical suite names in run order.
const std::vector<std::string>& suite_names();

// Maps an alias to its canonical name; empty when unknown. "all" maps to
// itself.
std::optional<std::string> resolve_suite(const std::string& name);

// Throws std::invalid_argument for unknown suites or bounds above kBoundCap.
VerifyReport run_suite(const std::string& name, const Bounds& bounds);

// Runs every suite on worker threads; reports come back in suite_names()
// order regardless of completion order.
std::vector<VerifyReport> run_all(const Bounds& bounds);

}  // namespace chebsum::verify

#endif  // CHEBSUM_VERIFY_HPP
