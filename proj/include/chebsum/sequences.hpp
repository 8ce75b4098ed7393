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

#ifndef CHEBSUM_SEQUENCES_HPP
#define CHEBSUM_SEQUENCES_HPP

#include <string>
#include <vector>

#include "chebsum/exactnum.hpp"

namespace chebsum {

enum class SequenceTag { kFibonacci, kLucas, kPell, kPhiSection };

// One of the integer sequences. PhiSection(k) is the k-section
// F_{Nk} / F_k; PhiSection(1) is the Fibonacci sequence.
struct SequenceKind {
  SequenceTag tag = SequenceTag::kFibonacci;
  int k = 1;

  static SequenceKind fibonacci() { return {SequenceTag::kFibonacci, 1}; }
  static SequenceKind lucas() { return {SequenceTag::kLucas, 1}; }
  static SequenceKind pell() { return {SequenceTag::kPell, 1}; }
  // Throws std::invalid_argument for k < 1.
  static SequenceKind phi_section(int k);

  std::string name() const;
  friend bool operator==(const SequenceKind&, const SequenceKind&) = default;
};

// s-fold convolution of a sequence with itself, term N (1-based).
struct ConvolvedId {
  SequenceKind kind;
  int n = 1;
  int s = 0;
};

// F_n with F_0 = 0, n >= 0.
BigInt fibonacci(int n);
BigInt lucas_for(int k);

// Term N >= 1 by the defining two-term recurrence.
BigInt base_term(SequenceKind kind, int n);

// k-section through its binomial sum in powers of L_k.
BigInt phi_explicit(int n, int k);

// All convolved terms a_N^{(s)} for N <= n_max and s <= s_max, filled once by
// a_N^{(s)} = sum_{j<N} a_{j+1} a_{N-j}^{(s-1)}. Read-only afterwards, so a
// filled table may be shared between threads.
class ConvolutionTable {
 public:
  ConvolutionTable(SequenceKind kind, int n_max, int s_max);

  const BigInt& at(int n, int s) const;
  int n_max() const { return n_max_; }
  int s_max() const { return s_max_; }
  SequenceKind kind() const { return kind_; }

 private:
  SequenceKind kind_;
  int n_max_;
  int s_max_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[s][n - 1]
};

BigInt convolved_term(const ConvolvedId& id);

// Point at which P_{N,s} reproduces the convolved sequence: i/2 (Fibonacci),
// i (Pell), i L_k / 2 (odd k) or L_k / 2 (even k). Lucas has none and throws
// std::invalid_argument.
GaussianRational chebyshev_argument(SequenceKind kind);

// Whether the (-i)^{N-1} phase multiplies P_{N,s}(chebyshev_argument).
bool chebyshev_phase_applies(SequenceKind kind);

// The same term read off a Chebyshev derivative:
// phase * P_{N,s}(chebyshev_argument(kind)). Throws IdentityViolation if the
// result is not a real integer.
BigInt convolved_via_chebyshev(const ConvolvedId& id);

}  // namespace chebsum

#endif  // CHEBSUM_SEQUENCES_HPP
