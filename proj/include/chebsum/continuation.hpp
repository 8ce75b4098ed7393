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

#ifndef CHEBSUM_CONTINUATION_HPP
#define CHEBSUM_CONTINUATION_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chebsum/exactnum.hpp"
#include "chebsum/series.hpp"

namespace chebsum {

// z = e^{it} on the unit circle with t stored as an exact multiple of pi,
// normalised into (0, 2). t = 0 (z = 1) is the singular point and rejected.
class BoundaryPoint {
 public:
  // t = turns_of_pi * pi. Throws DomainError when t is a multiple of 2 pi.
  explicit BoundaryPoint(const BigRational& turns_of_pi);

  const BigRational& turns_of_pi() const { return turns_; }
  double t() const;
  // i, -1 or -i for t in {pi/2, pi, 3pi/2}; empty elsewhere.
  std::optional<GaussianRational> exact_z() const;
  ComplexDouble z() const;

 private:
  BigRational turns_;
};

enum class Exactness { kExact, kApprox };

// A regularized (analytically continued) sum together with how it was
// obtained. error_bound is zero for exact values.
struct RegularizedValue {
  std::variant<GaussianRational, ComplexDouble> value;
  Exactness exactness = Exactness::kExact;
  double error_bound = 0.0;
  std::string provenance;
  // |closed form - trigonometric form| / max(1, |value|); NaN when no
  // trigonometric cross-evaluation exists for the point.
  double trig_discrepancy = 0.0;

  ComplexDouble as_complex() const;
  const GaussianRational& exact() const { return std::get<GaussianRational>(value); }
};

// The e^{it} closed forms written with 2 sin(t/2) and half-angle phases.
ComplexDouble boundary_trig_form(int n, double t, Direction direction);

// Value of the rational closed form at z = e^{it}: exact at i, -1 and -i,
// floating point (square-root form) elsewhere; cross-checked against
// boundary_trig_form. Throws DomainError at t = 0.
RegularizedValue boundary_sum(int n, const BoundaryPoint& p, Direction direction);

// Same for an arbitrary exact point with |z|^2 == 1 and z != 1, e.g.
// 3/5+4/5*i. Throws DomainError otherwise.
RegularizedValue regularized_sum(int n, const GaussianRational& z, Direction direction);
// Floating point variant; |z| must be within 1e-12 of 1.
RegularizedValue regularized_sum(int n, ComplexDouble z, Direction direction);

// sum_s i^s P_N^{(s)}, exact, with the trigonometric cross-check.
RegularizedValue pell_regularized(int n);
ComplexDouble pell_trig_form(int n);

// e^{-(2N-1) pi i / 3} * (closed form at e^{i pi / 3}); approximates P_N.
ComplexDouble pell_from_angle(int n);

// P_{N,s}(+-1) by polynomial evaluation, checked against
// sign^{N-1} C(N+2s, N-1) and against vandermonde_sum. Throws
// IdentityViolation on any mismatch.
BigInt scaled_deriv_at_unit(int n, int s, int sign);
// sum_j C(N+s-1-j, N-1-j) C(s+j, j)
BigInt vandermonde_sum(int n, int s);

// Regularized sum_s (-1)^s C(N+2s, N-1), from the z^-s closed form at -1.
BigRational binom_alternating(int n);
// 0 for N = 0 mod 4, otherwise (-1)^{floor(N/4)} / 2^{floor((N+1)/2)}.
BigRational binom_alternating_piecewise(int n);

enum class EulerWeight { kAlternatingReal, kImaginaryUnit };

inline constexpr int kMaxEulerPower = 40;

// Regularized sum_s w^s s^p for w = -1 or i, obtained by triangular
// elimination against the regularized sums of P_{N,s}(w) for N <= p + 1.
GaussianRational euler_power_sum(int p, EulerWeight weight);
// All of p = 0..p_max in one elimination.
std::vector<GaussianRational> euler_power_sums(int p_max, EulerWeight weight);

// sum_s (r w)^s s^p for |r| < 1, evaluated exactly through the Eulerian
// polynomial form x A_p(x) / (1 - x)^{p+1}.
GaussianRational abel_partial(int p, EulerWeight weight, const BigRational& r);
// Quadratic extrapolation to r = 1 from the three radii.
ComplexDouble abel_estimate(int p, EulerWeight weight,
                            const std::array<BigRational, 3>& radii = {BigRational(9, 10), BigRational(19, 20),
                                                                       BigRational(99, 100)});

// Gamma(z) 2^{-z/2} sin(z pi / 4). Throws PoleError at poles of Gamma.
ComplexDouble gamma_regularized(ComplexDouble z);

}  // namespace chebsum

#endif  // CHEBSUM_CONTINUATION_HPP
