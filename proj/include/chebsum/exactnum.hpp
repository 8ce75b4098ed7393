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

#ifndef CHEBSUM_EXACTNUM_HPP
#define CHEBSUM_EXACTNUM_HPP

#include <compare>
#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chebsum {

using BigInt = mpz_class;
using ComplexDouble = std::complex<double>;

// C(n, k) for n >= 0; zero outside 0 <= k <= n. Throws std::invalid_argument
// for negative n.
BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);
BigInt pow2(unsigned long e);

// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);

  // Exact value of a finite double.
  static BigRational from_double(double d);

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational abs() const;
  BigRational reciprocal() const;
  BigRational pow(long e) const;

  // Round-to-nearest-even conversion.
  double to_double() const;
  std::string to_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

// a + b*i with rational a and b. Equality is componentwise.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re, BigRational im = {})  // NOLINT(google-explicit-constructor)
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  // Parses `(a/b)+(c/d)i` and its abbreviations ("-1", "i/2", "3/2*i",
  // "1/2-i"). Rejects decimal points. Throws std::invalid_argument.
  static GaussianRational parse(std::string_view text);

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  // re^2 + im^2
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational reciprocal() const;

  ComplexDouble to_complex() const { return {re_.to_double(), im_.to_double()}; }
  // Canonical "a/b+c/d*i" layout; readable by parse().
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  BigRational re_;
  BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

enum class ArithOp { kAdd, kSub, kMul, kDiv };

// Throws DivisionByZero for kDiv with b == 0.
GaussianRational gauss_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

// Binary exponentiation; negative exponents invert first. Throws
// DivisionByZero for 0 to a negative power.
GaussianRational gauss_pow(const GaussianRational& a, long e);

// sin(pi x) and cos(pi x) with argument reduction done before the multiply
// by pi, so integer and half-integer arguments give exact zeros.
double sin_pi(double x);
double cos_pi(double x);
ComplexDouble sin_pi(ComplexDouble z);

// Gamma function for complex arguments: Lanczos (g = 7, 9 terms) on
// re(z) >= 1/2, reflection below. Throws PoleError within 1e-8 of a
// nonpositive integer.
ComplexDouble complex_gamma(ComplexDouble z);

}  // namespace chebsum

#endif  // CHEBSUM_EXACTNUM_HPP
