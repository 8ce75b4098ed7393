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

#include "chebsum/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chebsum/chebpoly.hpp"
#include "chebsum/errors.hpp"

namespace chebsum {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_n(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": N must be >= 1");
}

std::string provenance_for(Direction direction, bool exact) {
  std::string s = exact ? "rational closed form" : "square-root closed form";
  s += direction == Direction::kPosPower ? ", z^s weights" : ", z^-s weights";
  return s + ", continued to |z| = 1";
}

double relative_gap(ComplexDouble a, ComplexDouble b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

// Angle of a unit-modulus point in (0, 2 pi).
double boundary_angle(ComplexDouble z) {
  double t = std::atan2(z.imag(), z.real());
  if (t <= 0.0) t += 2.0 * kPi;
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// BoundaryPoint

BoundaryPoint::BoundaryPoint(const BigRational& turns_of_pi) {
  // turns mod 2, into [0, 2)
  BigInt q;
  const BigInt twice_den = turns_of_pi.den() * 2;
  mpz_fdiv_q(q.get_mpz_t(), turns_of_pi.num().get_mpz_t(), twice_den.get_mpz_t());
  turns_ = turns_of_pi - BigRational(q * 2);
  if (turns_.is_zero()) throw DomainError("boundary point z = 1 is the singular point of the closed form");
}

double BoundaryPoint::t() const { return turns_.to_double() * kPi; }

std::optional<GaussianRational> BoundaryPoint::exact_z() const {
  if (turns_ == BigRational(1, 2)) return GaussianRational::i();
  if (turns_ == BigRational(1)) return GaussianRational(-1);
  if (turns_ == BigRational(3, 2)) return -GaussianRational::i();
  return std::nullopt;
}

ComplexDouble BoundaryPoint::z() const {
  const double x = turns_.to_double();
  return {cos_pi(x), sin_pi(x)};
}

ComplexDouble RegularizedValue::as_complex() const {
  if (const auto* g = std::get_if<GaussianRational>(&value)) return g->to_complex();
  return std::get<ComplexDouble>(value);
}

// ---------------------------------------------------------------------------
// Boundary sums

ComplexDouble boundary_trig_form(int n, double t, Direction direction) {
  require_positive_n(n, "boundary_trig_form");
  const double chord = 2.0 * std::sin(t / 2.0);
  if (!(chord > 0.0)) throw DomainError("boundary_trig_form: t must lie in (0, 2 pi)");
  const double scale = std::pow(chord, -(n + 1) / 2.0);
  const double sign = direction == Direction::kPosPower ? -1.0 : 1.0;
  const ComplexDouble phase = std::polar(1.0, sign * (t - kPi) * (n + 1) / 4.0);
  const double arg_angle = direction == Direction::kPosPower ? (3.0 * t + kPi) / 4.0 : (5.0 * t - kPi) / 4.0;
  const ComplexDouble x = std::polar(1.0 / std::sqrt(chord), arg_angle);
  return scale * phase * u_value(n - 1, x);
}

RegularizedValue regularized_sum(int n, const GaussianRational& z, Direction direction) {
  require_positive_n(n, "regularized_sum");
  if (z.norm() != BigRational(1)) throw DomainError("regularized sum needs |z| = 1, got " + z.to_string());
  if (z == GaussianRational(1)) throw DomainError("z = 1 is the singular point of the closed form");
  RegularizedValue out;
  out.value = closed_form_rational(n, z, direction);
  out.exactness = Exactness::kExact;
  out.provenance = provenance_for(direction, true);
  const ComplexDouble trig = boundary_trig_form(n, boundary_angle(z.to_complex()), direction);
  out.trig_discrepancy = relative_gap(out.as_complex(), trig);
  return out;
}

RegularizedValue regularized_sum(int n, ComplexDouble z, Direction direction) {
  require_positive_n(n, "regularized_sum");
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw DomainError("regularized sum needs |z| = 1");
  if (std::abs(z - 1.0) < 1e-12) throw DomainError("z = 1 is the singular point of the closed form");
  RegularizedValue out;
  const ComplexDouble v = closed_form_surd(n, z, direction);
  out.value = v;
  out.exactness = Exactness::kApprox;
  out.provenance = provenance_for(direction, false);
  const ComplexDouble trig = boundary_trig_form(n, boundary_angle(z), direction);
  out.trig_discrepancy = relative_gap(v, trig);
  out.error_bound = std::max(std::abs(v - trig), 64.0 * 2.220446049250313e-16 * std::abs(v));
  return out;
}

RegularizedValue boundary_sum(int n, const BoundaryPoint& p, Direction direction) {
  require_positive_n(n, "boundary_sum");
  if (const auto exact = p.exact_z()) return regularized_sum(n, *exact, direction);
  RegularizedValue out;
  const ComplexDouble v = closed_form_surd(n, p.z(), direction);
  out.value = v;
  out.exactness = Exactness::kApprox;
  out.provenance = provenance_for(direction, false);
  const ComplexDouble trig = boundary_trig_form(n, p.t(), direction);
  out.trig_discrepancy = relative_gap(v, trig);
  out.error_bound = std::max(std::abs(v - trig), 64.0 * 2.220446049250313e-16 * std::abs(v));
  return out;
}

ComplexDouble pell_trig_form(int n) {
  require_positive_n(n, "pell_trig_form");
  const double scale = std::pow(2.0, -(n + 1) / 4.0);
  const ComplexDouble phase = std::polar(1.0, (5.0 - 3.0 * n) * kPi / 8.0);
  const ComplexDouble x = std::polar(std::pow(2.0, -0.25), 5.0 * kPi / 8.0);
  return scale * phase * u_value(n - 1, x);
}

RegularizedValue pell_regularized(int n) {
  require_positive_n(n, "pell_regularized");
  RegularizedValue out;
  const GaussianRational value = gauss_pow(-GaussianRational::i(), n - 1) *
                                 closed_form_rational(n, GaussianRational::i(), Direction::kPosPower);
  out.value = value;
  out.exactness = Exactness::kExact;
  out.provenance = "(-i)^(N-1) x " + provenance_for(Direction::kPosPower, true) + " at z = i";
  out.trig_discrepancy = relative_gap(value.to_complex(), pell_trig_form(n));
  return out;
}

ComplexDouble pell_from_angle(int n) {
  require_positive_n(n, "pell_from_angle");
  const BoundaryPoint third(BigRational(1, 3));
  const ComplexDouble sum = closed_form_surd(n, third.z(), Direction::kPosPower);
  const double turns = -(2.0 * n - 1.0) / 3.0;
  return ComplexDouble(cos_pi(turns), sin_pi(turns)) * sum;
}

// ---------------------------------------------------------------------------
// Values at +-1

BigInt vandermonde_sum(int n, int s) {
  require_positive_n(n, "vandermonde_sum");
  BigInt sum = 0;
  for (int j = 0; j <= n - 1; ++j) sum += binomial(n + s - 1 - j, n - 1 - j) * binomial(s + j, j);
  return sum;
}

BigInt scaled_deriv_at_unit(int n, int s, int sign) {
  require_positive_n(n, "scaled_deriv_at_unit");
  if (s < 0) throw std::invalid_argument("scaled_deriv_at_unit: s must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("scaled_deriv_at_unit: sign must be +1 or -1");
  const BigInt evaluated = scaled_deriv_poly({n, s}).evaluate(BigInt(sign));
  const BigInt unsigned_closed = binomial(n + 2 * s, n - 1);
  const BigInt closed = (sign < 0 && (n - 1) % 2 == 1) ? BigInt(-unsigned_closed) : unsigned_closed;
  const BigInt counted = vandermonde_sum(n, s);
  const std::string where = "N=" + std::to_string(n) + " s=" + std::to_string(s) + " sign=" + std::to_string(sign);
  if (evaluated != closed) {
    throw IdentityViolation("P_{N,s}(+-1) " + where + ": evaluated " + evaluated.get_str() + ", binomial " +
                            closed.get_str());
  }
  if (counted != unsigned_closed) {
    throw IdentityViolation("Vandermonde sum " + where + ": " + counted.get_str() + " vs " +
                            unsigned_closed.get_str());
  }
  return evaluated;
}

BigRational binom_alternating(int n) {
  require_positive_n(n, "binom_alternating");
  const GaussianRational v = closed_form_rational(n, GaussianRational(-1), Direction::kNegPower);
  if (!v.is_real()) throw IdentityViolation("closed form at z = -1 is not real");
  return (n - 1) % 2 == 0 ? v.re() : -v.re();
}

BigRational binom_alternating_piecewise(int n) {
  require_positive_n(n, "binom_alternating_piecewise");
  if (n % 4 == 0) return 0;
  const BigInt sign = ((n / 4) % 2 == 0) ? 1 : -1;
  return BigRational(sign, pow2(static_cast<unsigned long>((n + 1) / 2)));
}

// ---------------------------------------------------------------------------
// Euler power sums

namespace {

GaussianRational weight_point(EulerWeight weight) {
  return weight == EulerWeight::kAlternatingReal ? GaussianRational(-1) : GaussianRational::i();
}

// Coefficients c_p with P_{N,s}(w) = sum_p c_p s^p, as a polynomial in s.
std::vector<GaussianRational> polynomial_in_order(int n, const GaussianRational& w) {
  std::vector<GaussianRational> out(static_cast<std::size_t>(n));
  for (int j = 0; 2 * j <= n - 1; ++j) {
    const int m = n - 1 - j;
    // C(s + m, m) = prod_{l=1..m} (s + l) / m!
    std::vector<BigRational> rising{BigRational(1)};
    for (int l = 1; l <= m; ++l) {
      std::vector<BigRational> next(rising.size() + 1);
      for (std::size_t d = 0; d < rising.size(); ++d) {
        next[d] += rising[d] * BigRational(l);
        next[d + 1] += rising[d];
      }
      rising = std::move(next);
    }
    BigInt c = binomial(n - 1 - j, j) * pow2(static_cast<unsigned long>(n - 1 - 2 * j));
    if (j % 2 == 1) c = -c;
    const GaussianRational scale =
        GaussianRational(BigRational(c, factorial(static_cast<unsigned long>(m)))) * gauss_pow(w, n - 1 - 2 * j);
    for (std::size_t d = 0; d < rising.size(); ++d) out[d] += scale * GaussianRational(rising[d]);
  }
  return out;
}

}  // namespace

std::vector<GaussianRational> euler_power_sums(int p_max, EulerWeight weight) {
  if (p_max < 0 || p_max > kMaxEulerPower) {
    throw std::invalid_argument("euler_power_sums: p must lie in [0, " + std::to_string(kMaxEulerPower) + "]");
  }
  const GaussianRational w = weight_point(weight);
  std::vector<GaussianRational> sums;
  for (int n = 1; n <= p_max + 1; ++n) {
    const auto c = polynomial_in_order(n, w);
    GaussianRational rhs = closed_form_rational(n, w, Direction::kPosPower);
    for (int p = 0; p < n - 1; ++p) rhs -= c[static_cast<std::size_t>(p)] * sums[static_cast<std::size_t>(p)];
    sums.push_back(rhs / c.back());
  }
  return sums;
}

GaussianRational euler_power_sum(int p, EulerWeight weight) { return euler_power_sums(p, weight).back(); }

GaussianRational abel_partial(int p, EulerWeight weight, const BigRational& r) {
  if (p < 0) throw std::invalid_argument("abel_partial: negative power");
  if (r.abs() >= BigRational(1)) throw DomainError("abel_partial: need |r| < 1");
  const GaussianRational x = weight_point(weight) * GaussianRational(r);
  const GaussianRational one(1);
  if (p == 0) return one / (one - x);
  // Eulerian numbers E(p, k), k = 0..p-1.
  std::vector<BigInt> eulerian{1};
  for (int q = 2; q <= p; ++q) {
    std::vector<BigInt> next(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) {
      BigInt v = 0;
      if (k < q - 1) v += eulerian[static_cast<std::size_t>(k)] * (k + 1);
      if (k >= 1) v += eulerian[static_cast<std::size_t>(k - 1)] * (q - k);
      next[static_cast<std::size_t>(k)] = v;
    }
    eulerian = std::move(next);
  }
  GaussianRational poly;
  for (auto it = eulerian.rbegin(); it != eulerian.rend(); ++it) poly = poly * x + GaussianRational(BigRational(*it));
  return x * poly / gauss_pow(one - x, p + 1);
}

ComplexDouble abel_estimate(int p, EulerWeight weight, const std::array<BigRational, 3>& radii) {
  // Lagrange interpolation in h = 1 - r, evaluated at h = 0.
  std::array<double, 3> h{};
  std::array<ComplexDouble, 3> f{};
  for (std::size_t k = 0; k < 3; ++k) {
    h[k] = (BigRational(1) - radii[k]).to_double();
    f[k] = abel_partial(p, weight, radii[k]).to_complex();
  }
  ComplexDouble estimate = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    double basis = 1.0;
    for (std::size_t b = 0; b < 3; ++b) {
      if (a != b) basis *= -h[b] / (h[a] - h[b]);
    }
    estimate += basis * f[a];
  }
  return estimate;
}

// ---------------------------------------------------------------------------
// Gamma continuation

ComplexDouble gamma_regularized(ComplexDouble z) {
  const ComplexDouble g = complex_gamma(z);
  const ComplexDouble two_pow = std::exp(-z * (std::numbers::ln2 / 2.0));
  return g * two_pow * sin_pi(z / 4.0);
}

}  // namespace chebsum
