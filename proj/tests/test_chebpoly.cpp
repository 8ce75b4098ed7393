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

#include <gtest/gtest.h>

#include <cmath>

#include "chebsum/chebpoly.hpp"
#include "oracles.hpp"

namespace chebsum {
namespace {

IntPolynomial from_oracle(const std::vector<BigInt>& c) { return IntPolynomial(c); }

TEST(UPoly, Examples) {
  EXPECT_EQ(u_poly(0).to_string(), "1");
  EXPECT_EQ(u_poly(4).to_string(), "16z^4-12z^2+1");
  EXPECT_EQ(u_poly(4), from_oracle(oracle::u_coeffs(4)));
  EXPECT_EQ(u_poly(-3).to_string(), "-2z");
}

TEST(UPoly, MatchesRecurrenceOracle) {
  for (int n = 0; n <= 60; ++n) ASSERT_EQ(u_poly(n), from_oracle(oracle::u_coeffs(n))) << n;
}

TEST(UPoly, NegativeIndexRule) {
  EXPECT_TRUE(u_poly(-1).is_zero());
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(u_poly(-n), -u_poly(n - 2)) << n;
}

TEST(ScaledDeriv, Examples) {
  EXPECT_EQ(scaled_deriv_poly({2, 3}).to_string(), "8z");
  EXPECT_EQ(scaled_deriv_poly({3, 0}).to_string(), "4z^2-1");
  EXPECT_EQ(scaled_deriv_poly({4, 1}).to_string(), "32z^3-12z");
  EXPECT_EQ(scaled_deriv_poly({4, 1}), from_oracle(oracle::scaled_deriv(4, 1)));
}

TEST(ScaledDeriv, MatchesDifferentiationOracle) {
  for (int n = 1; n <= 25; ++n) {
    for (int s = 0; s <= 25; ++s) {
      IntPolynomial scaled = scaled_deriv_poly({n, s});
      scaled *= pow2(static_cast<unsigned long>(s)) * factorial(static_cast<unsigned long>(s));
      ASSERT_EQ(scaled, from_oracle(oracle::differentiate(oracle::u_coeffs(n + s - 1), s))) << n << " " << s;
      ASSERT_EQ(scaled, symbolic_derivative(u_poly(n + s - 1), s));
    }
  }
}

TEST(ScaledDeriv, Parity) {
  for (int n = 1; n <= 20; ++n) {
    for (int s = 0; s <= 20; ++s) {
      const IntPolynomial p = scaled_deriv_poly({n, s});
      IntPolynomial expected = p;
      if ((n - 1) % 2 == 1) expected = -p;
      ASSERT_EQ(p.reflected(), expected);
    }
  }
}

TEST(ScaledDeriv, LeadingCoefficientAndDegree) {
  for (int n = 1; n <= 20; ++n) {
    for (int s = 0; s <= 20; ++s) {
      const IntPolynomial p = scaled_deriv_poly({n, s});
      ASSERT_EQ(p.degree(), n - 1);
      ASSERT_EQ(p.leading(), binomial(n - 1 + s, s) * pow2(static_cast<unsigned long>(n - 1)));
    }
  }
}

TEST(ScaledDeriv, CoefficientFormula) {
  EXPECT_EQ(scaled_deriv_coefficient(3, 2, 0), 24);
  EXPECT_EQ(scaled_deriv_coefficient(3, 2, 1), 3);
  EXPECT_EQ(scaled_deriv_coefficient(3, 2, 2), 0);
}

TEST(SymbolicDerivative, Examples) {
  EXPECT_EQ(symbolic_derivative(u_poly(4), 1).to_string(), "64z^3-24z");
  EXPECT_EQ(symbolic_derivative(u_poly(4), 0), u_poly(4));
  EXPECT_TRUE(symbolic_derivative(u_poly(1), 2).is_zero());
}

TEST(SymbolicDerivative, VanishesBelowOrder) {
  for (int s = 1; s <= 15; ++s) {
    for (int j = 0; j < s; ++j) ASSERT_TRUE(symbolic_derivative(u_poly(j), s).is_zero());
  }
}

TEST(EvalExact, Examples) {
  EXPECT_EQ(eval_exact(u_poly(4), GaussianRational::parse("i/2")), GaussianRational(5));
  EXPECT_EQ(eval_exact(IntPolynomial{}, GaussianRational::parse("3+i")), GaussianRational(0));
  EXPECT_EQ(eval_exact(u_poly(2), GaussianRational::i()), GaussianRational(-5));
}

TEST(EvalExact, AgreesWithHorner) {
  const GaussianRational z = GaussianRational::parse("2/3-5/7*i");
  for (int n = 1; n <= 12; ++n) {
    for (int s = 0; s <= 12; ++s) {
      ASSERT_EQ(eval_exact(scaled_deriv_poly({n, s}), z), oracle::horner(oracle::scaled_deriv(n, s), z));
    }
  }
}

TEST(UValue, MatchesPolynomial) {
  const ComplexDouble x(0.3, -0.8);
  for (int n = -5; n <= 30; ++n) {
    const ComplexDouble poly = u_poly(n).evaluate(x);
    ASSERT_LE(std::abs(u_value(n, x) - poly), 1e-9 * std::max(1.0, std::abs(poly))) << n;
  }
}

TEST(Gegenbauer, Examples) {
  for (int a = 1; a <= 5; ++a) EXPECT_EQ(gegenbauer_poly(0, a).to_string(), "1");
  EXPECT_EQ(gegenbauer_poly(1, 3).to_string(), "6z");
  EXPECT_EQ(gegenbauer_poly(2, 1).to_string(), "4z^2-1");
}

TEST(Gegenbauer, ThreeTermRecurrence) {
  // n C_n = 2z(n + a - 1) C_{n-1} - (n + 2a - 2) C_{n-2}
  const IntPolynomial two_z = IntPolynomial::monomial(2, 1);
  for (int a = 1; a <= 6; ++a) {
    for (int n = 2; n <= 15; ++n) {
      IntPolynomial lhs = gegenbauer_poly(n, a);
      lhs *= BigInt(n);
      IntPolynomial first = two_z * gegenbauer_poly(n - 1, a);
      first *= BigInt(n + a - 1);
      IntPolynomial second = gegenbauer_poly(n - 2, a);
      second *= BigInt(n + 2 * a - 2);
      ASSERT_EQ(lhs, first - second) << n << " " << a;
    }
  }
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial p = u_poly(3), q = u_poly(2);
  EXPECT_EQ((p + q) - q, p);
  EXPECT_EQ((p * q).degree(), 5);
  EXPECT_EQ((p * q).evaluate(BigInt(3)), p.evaluate(BigInt(3)) * q.evaluate(BigInt(3)));
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
}

}  // namespace
}  // namespace chebsum
