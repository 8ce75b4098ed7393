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

#ifndef CHEBSUM_SERIES_HPP
#define CHEBSUM_SERIES_HPP

#include <string>
#include <utility>

#include "chebsum/chebpoly.hpp"
#include "chebsum/exactnum.hpp"
#include "chebsum/formal_series.hpp"

namespace chebsum {

// Weight attached to term s: z^s (convergent for |z| < 1) or z^{-s}
// (convergent for |z| > 1).
enum class Direction { kPosPower, kNegPower };

std::string to_string(Direction d);

// Truncated sum_{s=0}^{truncation} z^{+-s} P_{N,s}(z).
struct SeriesQuery {
  int n = 1;
  GaussianRational z;
  Direction direction = Direction::kPosPower;
  int truncation = 0;
};

// Exact partial sum. Throws DomainError when |z| is on the wrong side of 1
// (checked as an exact comparison of |z|^2 with 1).
GaussianRational partial_sum(const SeriesQuery& q);
ComplexDouble partial_sum(int n, ComplexDouble z, Direction direction, int truncation);

// The finite rational sums over j that the series converge to. Defined for
// every z != 1; that value is also the analytic continuation used on
// |z| = 1. Throws DomainError at z = 1.
GaussianRational closed_form_rational(int n, const GaussianRational& z, Direction direction);
ComplexDouble closed_form_rational(int n, ComplexDouble z, Direction direction);

// The same limits written through U_{N-1} of a square-root argument:
//   kPosPower: w^{-(N+1)} U_{N-1}(z / w),   w = sqrt(1 - z)
//   kNegPower: v^{N+1} U_{N-1}(z v),        v = sqrt(z / (z - 1))
// Principal square roots; flip_branch negates the root. Throws DomainError at
// z = 1 and, for kNegPower, at z = 0.
ComplexDouble closed_form_surd(int n, ComplexDouble z, Direction direction, bool flip_branch = false);

// Closed form as numerator / (1-z)^pole_order (kPosPower) or
// numerator / (z-1)^pole_order (kNegPower), common factors cancelled.
struct RationalFunction {
  IntPolynomial numerator;
  int pole_order = 0;
  Direction direction = Direction::kPosPower;

  GaussianRational evaluate(const GaussianRational& z) const;
  // Content and power of z pulled out front: "4z(2z^2+z-1)/(1-z)^4".
  std::string to_string() const;
};

RationalFunction closed_form_symbolic(int n, Direction direction);

// sum_s (i/2)^s F_N^{(s)}, exact.
GaussianRational fib_conv_sum(int n);

// sum_s (2/L_k)^s Phi_{N,k}^{(s)} for even k, sum_s (-2i/L_k)^s
// Phi_{N,k}^{(s)} for odd k >= 3. Throws DomainError for k = 1, where the
// series diverges.
GaussianRational phi_conv_sum(int n, int k);
// Same sums from the square-root closed form in floating point.
ComplexDouble phi_conv_sum_surd(int n, int k);

// (-i)^{N-1} (1 - z0)^{(N+1)/2} sum_s z0^s P_{N,s}(z0) with
// z0 = (1 + i sqrt(15)) / 8, summed until the tail bound is below 1e-13.
ComplexDouble fib_from_boundary(int n);

// Power-series expansion of the kPosPower closed form up to z^order.
FormalSeries expand_closed_form(int n, int order);
// sum_s z^s P_{N,s}(z) regrouped by powers of z up to z^order.
FormalSeries collect_series_lhs(int n, int order);

// Checks that z / (1 - 2tz + z^2)^{s+1} at t = i has z^N coefficient
// i^{N-1} P_N^{(s)}, and that z / (1 - 2z - z^2)^{s+1} has z^N coefficient
// P_N^{(s)}, for N <= k_max and s <= s_max. Throws std::invalid_argument
// past kMaxGfOrder.
inline constexpr int kMaxGfOrder = 400;
bool pell_gf_check(int k_max, int s_max = 4);

// Smallest S with sum_{s>S} C(N-1+s, s) growth q^s < eps, exact arithmetic.
int tail_terms_needed(int n, const BigRational& ratio, const BigRational& growth, double eps);
// Pure |z|^s majorant for kPosPower: growth = (1 + 2 mod_z)^{N-1}.
int tail_terms_needed(int n, const BigRational& mod_z, double eps);
// Certified truncation for a query point in either direction.
int tail_terms_needed(int n, const GaussianRational& z, Direction direction, double eps);

// Rationals lo <= |z| <= hi; exact when |z|^2 is a rational square.
std::pair<BigRational, BigRational> modulus_bounds(const GaussianRational& z, int bits = 64);

// sum_s (1/2)^s C_N^{(1+s)}(1/2), computed as the closed form at z = 1/2,
// next to the rational value of 2^{(N+2)/2} sin((N+1)pi/4) / sin(pi/4).
struct MagicValue {
  GaussianRational series_value;
  BigRational closed_value;
};
MagicValue magic_value(int n);

}  // namespace chebsum

#endif  // CHEBSUM_SERIES_HPP
