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
#include <random>

#include "chebsum/errors.hpp"
#include "chebsum/formal_series.hpp"
#include "chebsum/sequences.hpp"
#include "chebsum/series.hpp"
#include "oracles.hpp"

namespace chebsum {
namespace {

GaussianRational gr(const char* s) { return GaussianRational::parse(s); }
constexpr Direction kPos = Direction::kPosPower;
constexpr Direction kNeg = Direction::kNegPower;

// Sum of weight^s * P_{N,s}(z) for s = 0..terms, with P from the
// differentiation oracle.
GaussianRational termwise(int n, const GaussianRational& z, const GaussianRational& weight, int terms) {
  GaussianRational sum, w(1);
  for (int s = 0; s <= terms; ++s) {
    sum += w * oracle::horner(oracle::scaled_deriv(n, s), z);
    w *= weight;
  }
  return sum;
}

TEST(PartialSum, Examples) {
  EXPECT_EQ(partial_sum({1, gr("1/2"), kPos, 10}), GaussianRational(BigRational(2) - BigRational(1, 1024)));
  EXPECT_EQ(partial_sum({2, gr("i/2"), kPos, 0}), GaussianRational::i());
  EXPECT_EQ(partial_sum({3, gr("2"), kNeg, 2}), GaussianRational(BigRational(245, 4)));
  EXPECT_EQ(partial_sum({3, gr("2"), kNeg, 2}), termwise(3, gr("2"), gr("1/2"), 2));
}

TEST(PartialSum, MatchesTermwiseOracle) {
  const GaussianRational z = gr("1/3+1/4*i");
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(partial_sum({n, z, kPos, 12}), termwise(n, z, z, 12));
  const GaussianRational w = gr("-3/2+i");
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(partial_sum({n, w, kNeg, 12}), termwise(n, w, w.reciprocal(), 12));
}

TEST(PartialSum, RejectsModulusViolation) {
  EXPECT_THROW(partial_sum({2, gr("1"), kPos, 3}), DomainError);
  EXPECT_THROW(partial_sum({2, gr("3/5+4/5*i"), kPos, 3}), DomainError);
  EXPECT_THROW(partial_sum({2, gr("1/2"), kNeg, 3}), DomainError);
}

TEST(PartialSum, FloatAgreesWithExact) {
  const GaussianRational z = gr("1/5-2/5*i");
  for (int n = 1; n <= 8; ++n) {
    const ComplexDouble exact = partial_sum({n, z, kPos, 30}).to_complex();
    EXPECT_LT(std::abs(partial_sum(n, z.to_complex(), kPos, 30) - exact), 1e-12 * std::abs(exact));
  }
}

TEST(ClosedFormRational, Examples) {
  EXPECT_EQ(closed_form_rational(3, gr("1/2"), kPos), GaussianRational(4));
  EXPECT_EQ(closed_form_rational(1, gr("3"), kNeg), GaussianRational(BigRational(3, 2)));
  EXPECT_EQ(closed_form_rational(4, gr("2"), kNeg), GaussianRational(960));
  EXPECT_EQ(closed_form_rational(2, gr("2"), kNeg), GaussianRational(16));
  EXPECT_THROW(closed_form_rational(3, gr("1"), kPos), DomainError);
  EXPECT_THROW(closed_form_rational(3, gr("1"), kNeg), DomainError);
}

TEST(ClosedFormRational, NegativeSideViaReciprocalArgument) {
  // sum_s z^{-s} P_{N,s}(z) = sum_j (-1)^j C(N-1-j, j) (2z)^{N-1-2j} (1 - 1/z)^{-(N-j)}
  for (const char* lit : {"2", "-3", "3/2+i", "5*i", "-7/4-2*i"}) {
    const GaussianRational z = gr(lit);
    const GaussianRational w = GaussianRational(1) - z.reciprocal();
    for (int n = 1; n <= 12; ++n) {
      GaussianRational expected;
      for (int j = 0; 2 * j <= n - 1; ++j) {
        GaussianRational term = oracle::power(GaussianRational(2) * z, n - 1 - 2 * j) *
                                oracle::power(w.reciprocal(), n - j) * GaussianRational(BigRational(binomial(n - 1 - j, j)));
        expected += j % 2 == 0 ? term : -term;
      }
      ASSERT_EQ(closed_form_rational(n, z, kNeg), expected) << lit << " " << n;
    }
  }
}

TEST(ClosedFormRational, CertifiedAgainstPartialSums) {
  const double eps = std::ldexp(1.0, -40);
  const BigRational eps_sq = BigRational::from_double(eps) * BigRational::from_double(eps);
  for (const char* lit : {"1/2", "-1/2", "i/2", "1/4+1/4*i", "3/8"}) {
    for (int n = 1; n <= 12; ++n) {
      const GaussianRational z = gr(lit);
      const int terms = tail_terms_needed(n, z, kPos, eps);
      ASSERT_LT((partial_sum({n, z, kPos, terms}) - closed_form_rational(n, z, kPos)).norm(), eps_sq);
    }
  }
  for (const char* lit : {"2", "-2", "2*i", "3/2", "3/2+3/2*i"}) {
    for (int n = 1; n <= 12; ++n) {
      const GaussianRational z = gr(lit);
      const int terms = tail_terms_needed(n, z, kNeg, eps);
      ASSERT_LT((partial_sum({n, z, kNeg, terms}) - closed_form_rational(n, z, kNeg)).norm(), eps_sq);
    }
  }
}

TEST(ClosedFormSurd, Examples) {
  EXPECT_NEAR(closed_form_surd(2, 0.25, kPos).real(), 0.5 / 0.5625, 1e-14);
  for (const ComplexDouble z : {ComplexDouble(0.3, 0.4), ComplexDouble(-0.9, 0.0), ComplexDouble(0.0, -0.5)}) {
    EXPECT_LT(std::abs(closed_form_surd(1, z, kPos) - 1.0 / (1.0 - z)), 1e-14);
  }
  const GaussianRational half_i = gr("i/2");
  EXPECT_LT(std::abs(closed_form_surd(3, half_i.to_complex(), kPos) - closed_form_rational(3, half_i, kPos).to_complex()),
            1e-12);
}

TEST(ClosedFormSurd, AgreesWithRationalAndBranchFlip) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586), inner(0.05, 0.95), outer(1.05, 4.0);
  for (int t = 0; t < 50; ++t) {
    const ComplexDouble zp = std::polar(inner(rng), angle(rng)), zn = std::polar(outer(rng), angle(rng));
    for (int n = 1; n <= 12; ++n) {
      for (const auto& [z, d] : {std::pair{zp, kPos}, std::pair{zn, kNeg}}) {
        const ComplexDouble rational = closed_form_rational(n, z, d), surd = closed_form_surd(n, z, d);
        ASSERT_LE(std::abs(surd - rational), 1e-10 * std::abs(rational));
        ASSERT_LE(std::abs(closed_form_surd(n, z, d, true) - surd), 1e-12 * std::abs(surd));
      }
    }
  }
}

TEST(ClosedFormSurd, Poles) {
  EXPECT_THROW(closed_form_surd(2, 1.0, kPos), DomainError);
  EXPECT_THROW(closed_form_surd(2, 0.0, kNeg), DomainError);
}

TEST(Symbolic, TableForms) {
  EXPECT_EQ(closed_form_symbolic(1, kPos).to_string(), "1/(1-z)");
  EXPECT_EQ(closed_form_symbolic(2, kPos).to_string(), "2z/(1-z)^2");
  EXPECT_EQ(closed_form_symbolic(3, kPos).to_string(), "(4z^2+z-1)/(1-z)^3");
  EXPECT_EQ(closed_form_symbolic(4, kPos).to_string(), "4z(2z^2+z-1)/(1-z)^4");
  EXPECT_EQ(closed_form_symbolic(1, kNeg).to_string(), "z/(z-1)");
  EXPECT_EQ(closed_form_symbolic(2, kNeg).to_string(), "2z^3/(z-1)^2");
  EXPECT_EQ(closed_form_symbolic(3, kNeg).to_string(), "z^2(4z^3-z+1)/(z-1)^3");
  EXPECT_EQ(closed_form_symbolic(4, kNeg).to_string(), "4z^4(2z^3-z+1)/(z-1)^4");
}

TEST(Symbolic, EvaluatesLikeClosedForm) {
  for (int n = 1; n <= 15; ++n) {
    for (const char* lit : {"1/3", "-2/5+i", "7/2*i"}) {
      const GaussianRational z = gr(lit);
      EXPECT_EQ(closed_form_symbolic(n, kPos).evaluate(z), closed_form_rational(n, z, kPos));
      EXPECT_EQ(closed_form_symbolic(n, kNeg).evaluate(z), closed_form_rational(n, z, kNeg));
    }
  }
}

TEST(FibConvSum, Examples) {
  EXPECT_EQ(fib_conv_sum(1), gr("4/5+2/5*i"));
  EXPECT_EQ(fib_conv_sum(2), gr("12/25+16/25*i"));
  EXPECT_EQ(fib_conv_sum(4), gr("16/625") * gr("3+79*i"));
}

TEST(PhiConvSum, Examples) {
  EXPECT_EQ(phi_conv_sum(1, 2), GaussianRational(3));
  EXPECT_EQ(phi_conv_sum(1, 3), gr("4/5-2/5*i"));
  EXPECT_EQ(phi_conv_sum(2, 2), GaussianRational(27));
  EXPECT_THROW(phi_conv_sum(1, 1), DomainError);
}

TEST(PhiConvSum, TermwiseOracleEvenK) {
  // Even k: weights (2/L_k)^s against convolved k-section numbers.
  for (int k = 2; k <= 6; k += 2) {
    const BigRational ratio(BigInt(2), lucas_for(k));
    for (int n = 1; n <= 4; ++n) {
      const int terms = 400;
      const auto base = [&] {
        std::vector<BigInt> b;
        for (int m = 1; m <= n; ++m) b.push_back(base_term(SequenceKind::phi_section(k), m));
        return b;
      }();
      double sum = 0.0;
      for (int s = 0; s <= terms; ++s) {
        sum += (BigRational(oracle::convolve_power(base, s)[static_cast<std::size_t>(n - 1)]) * ratio.pow(s)).to_double();
      }
      EXPECT_NEAR(phi_conv_sum(n, k).re().to_double() / sum, 1.0, 1e-10) << k << " " << n;
    }
  }
}

TEST(PhiConvSum, SurdAgrees) {
  for (int k = 2; k <= 8; ++k) {
    for (int n = 1; n <= 8; ++n) {
      const ComplexDouble exact = phi_conv_sum(n, k).to_complex();
      EXPECT_LT(std::abs(phi_conv_sum_surd(n, k) - exact), 1e-10 * std::abs(exact));
    }
  }
}

TEST(FibFromBoundary, Examples) {
  EXPECT_NEAR(fib_from_boundary(1).real(), 1.0, 1e-9);
  EXPECT_NEAR(fib_from_boundary(5).real(), 5.0, 1e-9);
  EXPECT_NEAR(fib_from_boundary(10).real(), 55.0, 1e-7);
  EXPECT_NEAR(fib_from_boundary(10).imag(), 0.0, 1e-7);
}

TEST(FormalSeries, ExpansionExamples) {
  const FormalSeries one = expand_closed_form(1, 20);
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(one.coefficient(m), GaussianRational(1));
  const FormalSeries two = expand_closed_form(2, 20);
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(two.coefficient(m), GaussianRational(2 * m));
}

TEST(FormalSeries, ExpansionMatchesIndependentDivision) {
  // (4z^2 + z - 1) / (1 - z)^3 by coefficient recursion c_m = a_m + 3c_{m-1} - 3c_{m-2} + c_{m-3}.
  const std::vector<long> numer = {-1, 1, 4};
  std::vector<BigInt> c;
  for (int m = 0; m <= 40; ++m) {
    BigInt v = m < 3 ? BigInt(numer[static_cast<std::size_t>(m)]) : BigInt(0);
    if (m >= 1) v += 3 * c[static_cast<std::size_t>(m - 1)];
    if (m >= 2) v -= 3 * c[static_cast<std::size_t>(m - 2)];
    if (m >= 3) v += c[static_cast<std::size_t>(m - 3)];
    c.push_back(v);
  }
  const FormalSeries three = expand_closed_form(3, 40);
  const FormalSeries lhs = collect_series_lhs(3, 40);
  for (int m = 0; m <= 40; ++m) {
    ASSERT_EQ(three.coefficient(m), GaussianRational(BigRational(c[static_cast<std::size_t>(m)])));
    ASSERT_EQ(lhs.coefficient(m), three.coefficient(m));
  }
}

TEST(FormalSeries, LeftSideEqualsExpansion) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(collect_series_lhs(n, 40), expand_closed_form(n, 40)) << n;
}

TEST(FormalSeries, Arithmetic) {
  FormalSeries one_minus_z(10);
  one_minus_z += FormalSeries::monomial(GaussianRational(1), 0, 10);
  one_minus_z -= FormalSeries::monomial(GaussianRational(1), 1, 10);
  const FormalSeries geo = one_minus_z.reciprocal();
  for (int m = 0; m <= 10; ++m) EXPECT_EQ(geo.coefficient(m), GaussianRational(1));
  EXPECT_EQ(one_minus_z.pow(-2), geo * geo);
  EXPECT_EQ(geo * one_minus_z, FormalSeries::monomial(GaussianRational(1), 0, 10));
  EXPECT_THROW(FormalSeries::monomial(GaussianRational(1), 1, 10).reciprocal(), DivisionByZero);
}

TEST(PellGf, Examples) {
  EXPECT_TRUE(pell_gf_check(6, 0));
  EXPECT_TRUE(pell_gf_check(5, 1));
  EXPECT_TRUE(pell_gf_check(1, 4));
  EXPECT_TRUE(pell_gf_check(8, 4));
}

TEST(TailTerms, Examples) {
  // The tail after S is 2^{-S}; strict inequality needs S = 21.
  EXPECT_EQ(tail_terms_needed(1, BigRational(1, 2), std::ldexp(1.0, -20)), 21);
  const int s = tail_terms_needed(2, BigRational(1, 2), 1e-9);
  EXPECT_LE(s, 64);
  EXPECT_EQ(tail_terms_needed(1, BigRational(1, 2), 2.0), 0);
  EXPECT_EQ(tail_terms_needed(3, BigRational(1, 3), 10.0), 0);
  EXPECT_EQ(tail_terms_needed(3, BigRational(1, 3), 5.0), 1);
}

TEST(TailTerms, BoundDominatesActualTail) {
  for (int n = 1; n <= 8; ++n) {
    for (const char* lit : {"1/2", "-2/3*i", "1/3+1/3*i"}) {
      const GaussianRational z = gr(lit);
      const int terms = tail_terms_needed(n, z, kPos, 1e-6);
      const ComplexDouble limit = closed_form_rational(n, z, kPos).to_complex();
      EXPECT_LT(std::abs(partial_sum({n, z, kPos, terms}).to_complex() - limit), 1e-6);
    }
  }
}

TEST(TailTerms, CoefficientMajorant) {
  // |P_{N,s}(z)| <= C(N-1+s, s)(1+2|z|)^{N-1} rests on C(m-j, j) <= C(m, 2j).
  for (long m = 0; m <= 60; ++m) {
    for (long j = 0; 2 * j <= m; ++j) ASSERT_LE(binomial(m - j, j), binomial(m, 2 * j));
  }
}

TEST(ModulusBounds, BracketsModulus) {
  for (const char* lit : {"3/5+4/5*i", "1/2", "1/3+1/7*i", "-2+i"}) {
    const GaussianRational z = gr(lit);
    const auto [lo, hi] = modulus_bounds(z);
    EXPECT_LE(lo * lo, z.norm());
    EXPECT_GE(hi * hi, z.norm());
  }
  const auto [lo, hi] = modulus_bounds(gr("3/5+4/5*i"));
  EXPECT_EQ(lo, BigRational(1));
  EXPECT_EQ(hi, BigRational(1));
}

TEST(MagicValue, Examples) {
  EXPECT_EQ(magic_value(0).series_value, GaussianRational(2));
  EXPECT_EQ(magic_value(1).series_value, GaussianRational(4));
  EXPECT_EQ(magic_value(3).series_value, GaussianRational(0));
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(magic_value(n).series_value, GaussianRational(magic_value(n).closed_value));
}

}  // namespace
}  // namespace chebsum
