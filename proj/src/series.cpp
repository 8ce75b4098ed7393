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

#include "chebsum/series.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chebsum/errors.hpp"
#include "chebsum/sequences.hpp"

namespace chebsum {

namespace {

void require_positive_n(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": N must be >= 1");
}

GaussianRational power(const GaussianRational& z, long e) { return gauss_pow(z, e); }

ComplexDouble power(ComplexDouble z, long e) {
  if (e < 0) return 1.0 / power(z, -e);
  ComplexDouble r = 1.0;
  for (long k = 0; k < e; ++k) r *= z;
  return r;
}

bool is_one(const GaussianRational& z) { return z == GaussianRational(1); }
bool is_one(ComplexDouble z) { return z == ComplexDouble(1.0, 0.0); }

template <typename Scalar>
Scalar closed_form_impl(int n, const Scalar& z, Direction direction) {
  require_positive_n(n, "closed_form_rational");
  if (is_one(z)) throw DomainError("closed form has a pole at z = 1");
  const Scalar one(1);
  Scalar sum(0);
  for (int j = 0; 2 * j <= n - 1; ++j) {
    const BigInt c = binomial(n - 1 - j, j) * pow2(static_cast<unsigned long>(n - 1 - 2 * j));
    Scalar coeff;
    if constexpr (std::is_same_v<Scalar, GaussianRational>) {
      coeff = GaussianRational(BigRational(j % 2 == 0 ? c : BigInt(-c)));
    } else {
      coeff = BigRational(c).to_double() * (j % 2 == 0 ? 1.0 : -1.0);
    }
    if (direction == Direction::kPosPower) {
      sum += coeff * power(z, n - 1 - 2 * j) / power(one - z, n - j);
    } else {
      sum += coeff * power(z, 2 * n - 1 - 3 * j) / power(z - one, n - j);
    }
  }
  return sum;
}

// Exact (|z|^2 vs 1) domain check for an exact query.
void check_modulus(const GaussianRational& z, Direction direction) {
  const auto c = z.norm() <=> BigRational(1);
  if (direction == Direction::kPosPower && c >= 0) {
    throw DomainError("z^s weights need |z| < 1, got z = " + z.to_string());
  }
  if (direction == Direction::kNegPower && c <= 0) {
    throw DomainError("z^-s weights need |z| > 1, got z = " + z.to_string());
  }
}

BigInt isqrt(const BigInt& x) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const BigInt& x) { return mpz_perfect_square_p(x.get_mpz_t()) != 0; }

}  // namespace

std::string to_string(Direction d) { return d == Direction::kPosPower ? "pos" : "neg"; }

GaussianRational partial_sum(const SeriesQuery& q) {
  require_positive_n(q.n, "partial_sum");
  if (q.truncation < 0) throw std::invalid_argument("partial_sum: negative truncation");
  check_modulus(q.z, q.direction);
  const GaussianRational step = q.direction == Direction::kPosPower ? q.z : q.z.reciprocal();
  GaussianRational weight(1);
  GaussianRational sum;
  for (int s = 0; s <= q.truncation; ++s) {
    sum += weight * scaled_deriv_poly({q.n, s}).evaluate(q.z);
    weight *= step;
  }
  return sum;
}

ComplexDouble partial_sum(int n, ComplexDouble z, Direction direction, int truncation) {
  require_positive_n(n, "partial_sum");
  const double m = std::abs(z);
  if ((direction == Direction::kPosPower && !(m < 1.0)) || (direction == Direction::kNegPower && !(m > 1.0))) {
    throw DomainError("partial_sum: modulus condition violated");
  }
  const ComplexDouble step = direction == Direction::kPosPower ? z : 1.0 / z;
  ComplexDouble weight = 1.0, sum = 0.0;
  for (int s = 0; s <= truncation; ++s) {
    sum += weight * scaled_deriv_poly({n, s}).evaluate(z);
    weight *= step;
  }
  return sum;
}

GaussianRational closed_form_rational(int n, const GaussianRational& z, Direction direction) {
  return closed_form_impl(n, z, direction);
}

ComplexDouble closed_form_rational(int n, ComplexDouble z, Direction direction) {
  return closed_form_impl(n, z, direction);
}

ComplexDouble closed_form_surd(int n, ComplexDouble z, Direction direction, bool flip_branch) {
  require_positive_n(n, "closed_form_surd");
  if (is_one(z)) throw DomainError("closed form has a pole at z = 1");
  const double sign = flip_branch ? -1.0 : 1.0;
  if (direction == Direction::kPosPower) {
    const ComplexDouble w = sign * std::sqrt(1.0 - z);
    return power(w, -(n + 1)) * u_value(n - 1, z / w);
  }
  if (z == ComplexDouble(0.0, 0.0)) throw DomainError("z^-s closed form undefined at z = 0");
  const ComplexDouble v = sign * std::sqrt(z / (z - 1.0));
  return power(v, n + 1) * u_value(n - 1, z * v);
}

// ---------------------------------------------------------------------------
// Symbolic closed form

GaussianRational RationalFunction::evaluate(const GaussianRational& z) const {
  const GaussianRational base = direction == Direction::kPosPower ? GaussianRational(1) - z : z - GaussianRational(1);
  return numerator.evaluate(z) / gauss_pow(base, pole_order);
}

std::string RationalFunction::to_string() const {
  std::ostringstream os;
  if (numerator.is_zero()) {
    os << "0";
  } else {
    const auto& c = numerator.coefficients();
    BigInt content = 0;
    int low = -1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (low < 0) low = static_cast<int>(k);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c[k].get_mpz_t());
    }
    std::vector<BigInt> rest(c.begin() + low, c.end());
    for (auto& r : rest) r /= content;
    const IntPolynomial reduced(std::move(rest));

    std::string prefix = content == 1 ? "" : content.get_str();
    if (low == 1) prefix += "z";
    if (low >= 2) prefix += "z^" + std::to_string(low);

    if (reduced.degree() == 0) {
      const bool negative = reduced.leading() < 0;
      os << (negative ? "-" : "") << (prefix.empty() ? "1" : prefix);
    } else {
      os << prefix << '(' << reduced.to_string() << ')';
    }
  }
  if (pole_order > 0) {
    os << (direction == Direction::kPosPower ? "/(1-z)" : "/(z-1)");
    if (pole_order > 1) os << '^' << pole_order;
  }
  return os.str();
}

RationalFunction closed_form_symbolic(int n, Direction direction) {
  require_positive_n(n, "closed_form_symbolic");
  // (1 - z) for kPosPower, (z - 1) for kNegPower.
  const IntPolynomial base = direction == Direction::kPosPower ? IntPolynomial({BigInt(1), BigInt(-1)})
                                                               : IntPolynomial({BigInt(-1), BigInt(1)});
  IntPolynomial num;
  for (int j = 0; 2 * j <= n - 1; ++j) {
    BigInt c = binomial(n - 1 - j, j) * pow2(static_cast<unsigned long>(n - 1 - 2 * j));
    if (j % 2 == 1) c = -c;
    const int zdeg = direction == Direction::kPosPower ? n - 1 - 2 * j : 2 * n - 1 - 3 * j;
    IntPolynomial term = IntPolynomial::monomial(c, zdeg);
    for (int k = 0; k < j; ++k) term = term * base;
    num += term;
  }
  RationalFunction f{num, n, direction};
  // Cancel common factors of the pole: (1-z) | num iff num(1) == 0.
  while (f.pole_order > 0 && !f.numerator.is_zero() && f.numerator.evaluate(BigInt(1)) == 0) {
    // Synthetic division by (z - 1).
    const auto& c = f.numerator.coefficients();
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
      carry += c[k];
      q[k - 1] = carry;
    }
    IntPolynomial quotient(std::move(q));
    f.numerator = direction == Direction::kPosPower ? -quotient : quotient;
    --f.pole_order;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Sequence sums

GaussianRational fib_conv_sum(int n) {
  require_positive_n(n, "fib_conv_sum");
  const GaussianRational half_i(BigRational(0), BigRational(1, 2));
  return gauss_pow(-GaussianRational::i(), n - 1) * closed_form_rational(n, half_i, Direction::kPosPower);
}

GaussianRational phi_conv_sum(int n, int k) {
  require_positive_n(n, "phi_conv_sum");
  if (k < 2) throw DomainError("phi_conv_sum: k = 1 gives |2/L_1| = 2 and a divergent series");
  const GaussianRational z = chebyshev_argument(SequenceKind::phi_section(k));
  GaussianRational value = closed_form_rational(n, z, Direction::kNegPower);
  if (k % 2 == 1) value *= gauss_pow(-GaussianRational::i(), n - 1);
  return value;
}

ComplexDouble phi_conv_sum_surd(int n, int k) {
  require_positive_n(n, "phi_conv_sum_surd");
  if (k < 2) throw DomainError("phi_conv_sum_surd: k must be >= 2");
  const double lk = BigRational(lucas_for(k)).to_double();
  if (k % 2 == 0) {
    const double ratio = lk / (lk - 2.0);
    return std::pow(ratio, (n + 1) / 2.0) * u_value(n - 1, ComplexDouble(lk / 2.0 * std::sqrt(ratio)));
  }
  const ComplexDouble i(0.0, 1.0);
  const ComplexDouble v = std::sqrt(lk / (lk + 2.0 * i));
  return power(-i, n - 1) * power(v, n + 1) * u_value(n - 1, i * (lk / 2.0) * v);
}

ComplexDouble fib_from_boundary(int n) {
  require_positive_n(n, "fib_from_boundary");
  const ComplexDouble z0(1.0 / 8.0, std::sqrt(15.0) / 8.0);
  const int terms = tail_terms_needed(n, BigRational(1, 2), 1e-13);
  const ComplexDouble sum = partial_sum(n, z0, Direction::kPosPower, terms);
  const ComplexDouble w = std::sqrt(1.0 - z0);
  return power(ComplexDouble(0.0, -1.0), n - 1) * power(w, n + 1) * sum;
}

// ---------------------------------------------------------------------------
// Formal expansions

FormalSeries expand_closed_form(int n, int order) {
  require_positive_n(n, "expand_closed_form");
  const FormalSeries one_minus_z({GaussianRational(1), GaussianRational(-1)}, order);
  FormalSeries sum(order);
  for (int j = 0; 2 * j <= n - 1; ++j) {
    BigInt c = binomial(n - 1 - j, j) * pow2(static_cast<unsigned long>(n - 1 - 2 * j));
    if (j % 2 == 1) c = -c;
    sum += FormalSeries::monomial(GaussianRational(BigRational(c)), n - 1 - 2 * j, order) *
           one_minus_z.pow(-(n - j));
  }
  return sum;
}

FormalSeries collect_series_lhs(int n, int order) {
  require_positive_n(n, "collect_series_lhs");
  std::vector<GaussianRational> c(static_cast<std::size_t>(order) + 1);
  for (int s = 0; s <= order; ++s) {
    const IntPolynomial p = scaled_deriv_poly({n, s});
    for (int d = 0; d <= p.degree() && s + d <= order; ++d) {
      c[static_cast<std::size_t>(s + d)] += GaussianRational(BigRational(p.coefficient(d)));
    }
  }
  return FormalSeries(std::move(c), order);
}

bool pell_gf_check(int k_max, int s_max) {
  if (k_max < 1 || k_max > kMaxGfOrder) throw std::invalid_argument("pell_gf_check: K out of range");
  if (s_max < 0) throw std::invalid_argument("pell_gf_check: negative s_max");
  const ConvolutionTable pell(SequenceKind::pell(), k_max, s_max);
  const GaussianRational i = GaussianRational::i();
  const FormalSeries z = FormalSeries::monomial(GaussianRational(1), 1, k_max);
  // 1 - 2tz + z^2 at t = i, and the Pell denominator 1 - 2z - z^2.
  const FormalSeries cheb({GaussianRational(1), GaussianRational(-2) * i, GaussianRational(1)}, k_max);
  const FormalSeries pell_den({GaussianRational(1), GaussianRational(-2), GaussianRational(-1)}, k_max);
  for (int s = 0; s <= s_max; ++s) {
    const FormalSeries g = z * cheb.pow(-(s + 1));
    const FormalSeries p = z * pell_den.pow(-(s + 1));
    if (!g.coefficient(0).is_zero() || !p.coefficient(0).is_zero()) return false;
    for (int n = 1; n <= k_max; ++n) {
      const GaussianRational expected = gauss_pow(i, n - 1) * GaussianRational(BigRational(pell.at(n, s)));
      if (g.coefficient(n) != expected) return false;
      if (p.coefficient(n) != GaussianRational(BigRational(pell.at(n, s)))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Truncation bounds

int tail_terms_needed(int n, const BigRational& ratio, const BigRational& growth, double eps) {
  require_positive_n(n, "tail_terms_needed");
  if (ratio <= BigRational(0) || ratio >= BigRational(1)) {
    throw std::invalid_argument("tail_terms_needed: ratio must lie in (0, 1)");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("tail_terms_needed: eps must be positive");
  const BigRational target = BigRational::from_double(eps);
  // sum_{s>=0} C(N-1+s, s) q^s = (1 - q)^{-N}
  BigRational tail = (BigRational(1) - ratio).pow(-n);
  BigRational term(1);
  for (int s = 0;; ++s) {
    if (s > 0) term *= ratio * BigRational(n - 1 + s, s);
    tail -= term;
    if (growth * tail < target) return s;
  }
}

int tail_terms_needed(int n, const BigRational& mod_z, double eps) {
  const BigRational growth = (BigRational(1) + BigRational(2) * mod_z).pow(n - 1);
  return tail_terms_needed(n, mod_z, growth, eps);
}

std::pair<BigRational, BigRational> modulus_bounds(const GaussianRational& z, int bits) {
  const BigRational norm = z.norm();
  if (is_square(norm.num()) && is_square(norm.den())) {
    const BigRational exact(isqrt(norm.num()), isqrt(norm.den()));
    return {exact, exact};
  }
  const BigInt scale = pow2(static_cast<unsigned long>(bits));
  const BigInt root = isqrt(BigInt(norm.num() * scale * scale / norm.den()));
  return {BigRational(root, scale), BigRational(root + 1, scale)};
}

int tail_terms_needed(int n, const GaussianRational& z, Direction direction, double eps) {
  check_modulus(z, direction);
  for (int bits = 64;; bits *= 2) {
    const auto [lo, hi] = modulus_bounds(z, bits);
    if (direction == Direction::kPosPower) {
      if (hi < BigRational(1)) return tail_terms_needed(n, hi, eps);
    } else if (lo > BigRational(1)) {
      const BigRational growth = (BigRational(1) + BigRational(2) * hi).pow(n - 1);
      return tail_terms_needed(n, lo.reciprocal(), growth, eps);
    }
  }
}

MagicValue magic_value(int n) {
  if (n < 0) throw std::invalid_argument("magic_value: N must be >= 0");
  MagicValue out;
  out.series_value = closed_form_rational(n + 1, GaussianRational(BigRational(1, 2)), Direction::kPosPower);
  // sqrt(2) sin(m pi / 4) for m mod 8, in units of 1 (odd m) or sqrt(2) (even m).
  static constexpr int kSinTable[8] = {0, 1, 1, 1, 0, -1, -1, -1};
  const int m = n + 1;
  const int sign = kSinTable[m % 8];
  // m odd: 2^{(N+2)/2} * (+-1) with N even; m even: 2^{(N+2)/2} * sqrt(2) * {0, +-1}.
  const unsigned long e = (m % 2 == 1) ? static_cast<unsigned long>((n + 2) / 2) : static_cast<unsigned long>((n + 3) / 2);
  out.closed_value = BigRational(pow2(e) * sign);
  return out;
}

}  // namespace chebsum
