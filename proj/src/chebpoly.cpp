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

#include "chebsum/chebpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chebsum {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::reflected() const {
  IntPolynomial r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

GaussianRational IntPolynomial::evaluate(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += GaussianRational(BigRational(*it));
  }
  return acc;
}

ComplexDouble IntPolynomial::evaluate(ComplexDouble z) const {
  ComplexDouble acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + BigRational(*it).to_double();
  return acc;
}

BigInt IntPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t x = 0; x < a.c_.size(); ++x) {
    if (a.c_[x] == 0) continue;
    for (std::size_t y = 0; y < b.c_.size(); ++y) out[x + y] += a.c_[x] * b.c_[y];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial u_poly(int n) {
  if (n == -1) return {};
  if (n < 0) return -u_poly(-n - 2);
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; 2 * j <= n; ++j) {
    BigInt term = binomial(n - j, j) * pow2(static_cast<unsigned long>(n - 2 * j));
    c[static_cast<std::size_t>(n - 2 * j)] = (j % 2 == 0) ? term : BigInt(-term);
  }
  return IntPolynomial(std::move(c));
}

BigInt scaled_deriv_coefficient(int n, int s, int j) {
  if (j < 0 || 2 * j > n - 1) return 0;
  return binomial(n - 1 + s - j, j) * binomial(n - 1 + s - 2 * j, s) *
         pow2(static_cast<unsigned long>(n - 1 - 2 * j));
}

IntPolynomial scaled_deriv_poly(ScaledDerivativeId id) {
  if (id.n < 1 || id.s < 0) {
    throw std::invalid_argument("scaled_deriv_poly: need N >= 1 and s >= 0");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(id.n));
  for (int j = 0; 2 * j <= id.n - 1; ++j) {
    BigInt a = scaled_deriv_coefficient(id.n, id.s, j);
    c[static_cast<std::size_t>(id.n - 1 - 2 * j)] = (j % 2 == 0) ? a : BigInt(-a);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial symbolic_derivative(const IntPolynomial& p, int s) {
  if (s < 0) throw std::invalid_argument("symbolic_derivative: negative order");
  std::vector<BigInt> c = p.coefficients();
  for (int step = 0; step < s && !c.empty(); ++step) {
    for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * static_cast<unsigned long>(k);
    c.pop_back();
  }
  return IntPolynomial(std::move(c));
}

GaussianRational eval_exact(const IntPolynomial& p, const GaussianRational& z) { return p.evaluate(z); }

IntPolynomial gegenbauer_poly(int n, int alpha) {
  if (n < 0 || alpha < 1) throw std::invalid_argument("gegenbauer_poly: need n >= 0 and alpha >= 1");
  return scaled_deriv_poly({n + 1, alpha - 1});
}

ComplexDouble u_value(int n, ComplexDouble x) {
  if (n == -1) return 0.0;
  if (n < 0) return -u_value(-n - 2, x);
  ComplexDouble prev = 1.0;
  if (n == 0) return prev;
  ComplexDouble cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    ComplexDouble next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace chebsum
