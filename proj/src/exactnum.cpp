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

#include "chebsum/exactnum.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebsum/errors.hpp"

namespace chebsum {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("from_double: non-finite value");
  BigRational r;
  r.v_ = mpq_class(d);
  return r;
}

BigRational BigRational::abs() const {
  BigRational r;
  r.v_ = ::abs(v_);
  return r;
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return BigRational(den(), num());
}

BigRational BigRational::pow(long e) const {
  if (e < 0) return reciprocal().pow(-e);
  const auto ue = static_cast<unsigned long>(e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ue);
  return BigRational(n, d);
}

double BigRational::to_double() const {
  if (is_zero()) return 0.0;
  BigInt a = ::abs(num());
  BigInt b = den();
  const long d = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  // Pick the shift that puts floor(a * 2^shift / b) in [2^52, 2^53).
  long shift = 53 - d;
  BigInt m, r;
  for (;;) {
    BigInt sa = a, sb = b;
    if (shift >= 0) {
      mpz_mul_2exp(sa.get_mpz_t(), sa.get_mpz_t(), static_cast<unsigned long>(shift));
    } else {
      mpz_mul_2exp(sb.get_mpz_t(), sb.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), sa.get_mpz_t(), sb.get_mpz_t());
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 53) {
      --shift;
      continue;
    }
    const int half = cmp(BigInt(2 * r), sb);
    if (half > 0 || (half == 0 && mpz_odd_p(m.get_mpz_t()))) ++m;
    break;
  }
  const double v = std::ldexp(m.get_d(), static_cast<int>(-shift));
  return sign() < 0 ? -v : v;
}

std::string BigRational::to_string() const { return v_.get_str(); }

BigRational BigRational::operator-() const {
  BigRational r;
  r.v_ = -v_;
  return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  v_ += o.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  v_ -= o.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  v_ *= o.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  const BigRational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.reciprocal();
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  const BigRational mag = im_.abs();
  imag = mag == BigRational(1) ? "i" : mag.to_string() + "*i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

namespace {

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw std::invalid_argument("malformed exact literal '" + std::string(text) + "': " + why);
}

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) bad_literal(whole, "missing digits");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_literal(whole, std::string("unexpected '") + c + "'");
  }
  return BigInt(std::string(s));
}

// Unsigned "a", "a/b" or "(a/b)" with an optional sign inside the parentheses.
BigRational parse_magnitude(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
  }
  const auto slash = s.find('/');
  BigRational r = slash == std::string_view::npos
                      ? BigRational(parse_digits(s, whole))
                      : BigRational(parse_digits(s.substr(0, slash), whole),
                                    parse_digits(s.substr(slash + 1), whole));
  return negative ? -r : r;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) bad_literal(text, "empty");
  if (s.find('.') != std::string::npos) bad_literal(text, "decimal point in exact literal");

  // Split at top-level signs.
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t k = start; k <= s.size(); ++k) {
    const char c = k < s.size() ? s[k] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) bad_literal(text, "unbalanced parentheses");
    if (c == '\0' || (depth == 0 && (c == '+' || c == '-') && k > start)) {
      terms.emplace_back(negative, s.substr(start, k - start));
      if (c != '\0') {
        negative = c == '-';
        start = k + 1;
      }
    }
  }
  if (depth != 0) bad_literal(text, "unbalanced parentheses");
  if (terms.size() > 2) bad_literal(text, "too many terms");

  GaussianRational out;
  bool seen_re = false, seen_im = false;
  for (auto& [neg, term] : terms) {
    if (term.empty()) bad_literal(text, "empty term");
    std::string_view t = term;
    BigRational value;
    bool imaginary = false;
    if (t.front() == 'i') {
      imaginary = true;
      t.remove_prefix(1);
      if (t.empty()) {
        value = 1;
      } else if (t.front() == '/') {
        value = BigRational(1) / parse_magnitude(t.substr(1), text);
      } else if (t.front() == '*') {
        value = parse_magnitude(t.substr(1), text);
      } else {
        bad_literal(text, "unexpected text after i");
      }
    } else if (t.back() == 'i') {
      imaginary = true;
      t.remove_suffix(1);
      if (!t.empty() && t.back() == '*') t.remove_suffix(1);
      value = parse_magnitude(t, text);
    } else {
      value = parse_magnitude(t, text);
    }
    if (neg) value = -value;
    if (imaginary) {
      if (seen_im) bad_literal(text, "two imaginary parts");
      seen_im = true;
      out.im_ = value;
    } else {
      if (seen_re) bad_literal(text, "two real parts");
      seen_re = true;
      out.re_ = value;
    }
  }
  return out;
}

GaussianRational gauss_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw std::invalid_argument("gauss_arith: unknown operation");
}

GaussianRational gauss_pow(const GaussianRational& a, long e) {
  if (e < 0) return gauss_pow(a.reciprocal(), -e);
  GaussianRational result(1);
  GaussianRational base = a;
  auto ue = static_cast<unsigned long>(e);
  while (ue != 0) {
    if (ue & 1UL) result *= base;
    ue >>= 1;
    if (ue != 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Trigonometry and Gamma

namespace {

// x reduced into [-1, 1] modulo 2.
double reduce_mod2(double x) {
  double y = std::fmod(x, 2.0);
  if (y > 1.0) y -= 2.0;
  if (y < -1.0) y += 2.0;
  return y;
}

}  // namespace

double sin_pi(double x) {
  const double y = reduce_mod2(x);
  if (y > 0.5) return std::sin(std::numbers::pi * (1.0 - y));
  if (y < -0.5) return -std::sin(std::numbers::pi * (1.0 + y));
  return std::sin(std::numbers::pi * y);
}

double cos_pi(double x) { return sin_pi(0.5 - std::fabs(reduce_mod2(x))); }

ComplexDouble sin_pi(ComplexDouble z) {
  const double b = std::numbers::pi * z.imag();
  return {sin_pi(z.real()) * std::cosh(b), cos_pi(z.real()) * std::sinh(b)};
}

ComplexDouble complex_gamma(ComplexDouble z) {
  constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoeffs = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - ComplexDouble(nearest, 0.0)) < 1e-8) {
    throw PoleError("complex_gamma: argument within 1e-8 of the pole at " + std::to_string(nearest));
  }
  if (z.real() < 0.5) {
    return std::numbers::pi / (sin_pi(z) * complex_gamma(1.0 - z));
  }
  z -= 1.0;
  ComplexDouble x = kCoeffs[0];
  for (std::size_t k = 1; k < kCoeffs.size(); ++k) x += kCoeffs[k] / (z + static_cast<double>(k));
  const ComplexDouble t = z + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace chebsum
