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

#ifndef CHEBSUM_CHEBPOLY_HPP
#define CHEBSUM_CHEBPOLY_HPP

#include <string>
#include <vector>

#include "chebsum/exactnum.hpp"

namespace chebsum {

// Dense polynomial with big-integer coefficients, coefficient k multiplying
// z^k. Trailing zeros are trimmed, so the zero polynomial has no coefficients
// and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  // Zero beyond the stored range.
  BigInt coefficient(int k) const;
  BigInt leading() const { return is_zero() ? BigInt(0) : c_.back(); }

  // p(-z)
  IntPolynomial reflected() const;

  GaussianRational evaluate(const GaussianRational& z) const;
  ComplexDouble evaluate(ComplexDouble z) const;
  BigInt evaluate(const BigInt& z) const;

  // "16z^4-12z^2+1" in descending degree.
  std::string to_string(const std::string& var = "z") const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& k);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& k) { return a *= k; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// P_{N,s}(z) = U_{N+s-1}^{(s)}(z) / (2^s s!); N >= 1, s >= 0.
struct ScaledDerivativeId {
  int n = 1;
  int s = 0;
};

// Chebyshev polynomial of the second kind from its explicit binomial sum.
// Negative degrees follow U_{-N} = -U_{N-2}, so U_{-1} = 0.
IntPolynomial u_poly(int n);

// Coefficient of (-1)^j z^{N-1-2j} in P_{N,s}:
// C(N-1+s-j, j) C(N-1+s-2j, s) 2^{N-1-2j}.
BigInt scaled_deriv_coefficient(int n, int s, int j);

// P_{N,s} built directly from scaled_deriv_coefficient. Degree exactly N-1.
// Throws std::invalid_argument for N < 1 or s < 0.
IntPolynomial scaled_deriv_poly(ScaledDerivativeId id);

// s-fold formal derivative.
IntPolynomial symbolic_derivative(const IntPolynomial& p, int s);

GaussianRational eval_exact(const IntPolynomial& p, const GaussianRational& z);

// Gegenbauer C_n^{(alpha)} for integer alpha >= 1, which coincides with
// P_{n+1, alpha-1}.
IntPolynomial gegenbauer_poly(int n, int alpha);

// U_{n}(x) in floating point by the three-term recurrence, any integer n.
ComplexDouble u_value(int n, ComplexDouble x);

}  // namespace chebsum

#endif  // CHEBSUM_CHEBPOLY_HPP
