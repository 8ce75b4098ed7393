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

#ifndef CHEBSUM_FORMAL_SERIES_HPP
#define CHEBSUM_FORMAL_SERIES_HPP

#include <vector>

#include "chebsum/chebpoly.hpp"
#include "chebsum/exactnum.hpp"

namespace chebsum {

// Power series in z with Gaussian-rational coefficients, truncated after
// z^order. All arithmetic is exact through that order.
class FormalSeries {
 public:
  explicit FormalSeries(int order);
  FormalSeries(std::vector<GaussianRational> coefficients, int order);

  static FormalSeries from_polynomial(const IntPolynomial& p, int order);
  static FormalSeries monomial(const GaussianRational& c, int degree, int order);

  int order() const { return order_; }
  const GaussianRational& coefficient(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<GaussianRational>& coefficients() const { return c_; }

  // Needs a nonzero constant term; throws DivisionByZero otherwise.
  FormalSeries reciprocal() const;
  FormalSeries pow(int e) const;

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  FormalSeries& operator*=(const GaussianRational& k);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(FormalSeries a, const GaussianRational& k) { return a *= k; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  int order_;
  std::vector<GaussianRational> c_;
};

}  // namespace chebsum

#endif  // CHEBSUM_FORMAL_SERIES_HPP
