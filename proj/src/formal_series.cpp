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

#include "chebsum/formal_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "chebsum/errors.hpp"

namespace chebsum {

FormalSeries::FormalSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("FormalSeries: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

FormalSeries::FormalSeries(std::vector<GaussianRational> coefficients, int order)
    : FormalSeries(order) {
  const std::size_t n = std::min(coefficients.size(), c_.size());
  for (std::size_t k = 0; k < n; ++k) c_[k] = std::move(coefficients[k]);
}

FormalSeries FormalSeries::from_polynomial(const IntPolynomial& p, int order) {
  FormalSeries s(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) {
    s.c_[static_cast<std::size_t>(k)] = GaussianRational(BigRational(p.coefficient(k)));
  }
  return s;
}

FormalSeries FormalSeries::monomial(const GaussianRational& c, int degree, int order) {
  FormalSeries s(order);
  if (degree >= 0 && degree <= order) s.c_[static_cast<std::size_t>(degree)] = c;
  return s;
}

FormalSeries FormalSeries::reciprocal() const {
  if (c_[0].is_zero()) throw DivisionByZero();
  const GaussianRational inv0 = c_[0].reciprocal();
  FormalSeries r(order_);
  r.c_[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    GaussianRational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c_[k].is_zero()) acc += c_[k] * r.c_[n - k];
    }
    r.c_[n] = -acc * inv0;
  }
  return r;
}

FormalSeries FormalSeries::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  FormalSeries result = monomial(GaussianRational(1), 0, order_);
  FormalSeries base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("FormalSeries: order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("FormalSeries: order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const GaussianRational& k) {
  for (auto& c : c_) c *= k;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("FormalSeries: order mismatch");
  FormalSeries r(a.order_);
  for (std::size_t x = 0; x < a.c_.size(); ++x) {
    if (a.c_[x].is_zero()) continue;
    for (std::size_t y = 0; x + y < r.c_.size(); ++y) {
      if (!b.c_[y].is_zero()) r.c_[x + y] += a.c_[x] * b.c_[y];
    }
  }
  return r;
}

}  // namespace chebsum
