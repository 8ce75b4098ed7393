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

#include "chebsum/errors.hpp"
#include "chebsum/sequences.hpp"
#include "oracles.hpp"

namespace chebsum {
namespace {

std::vector<BigInt> base_list(SequenceKind kind, int n) {
  switch (kind.tag) {
    case SequenceTag::kFibonacci:
      return oracle::linear_recurrence(1, 1, 1, 1, n);
    case SequenceTag::kLucas:
      return oracle::linear_recurrence(1, 3, 1, 1, n);
    case SequenceTag::kPell:
      return oracle::linear_recurrence(1, 2, 2, 1, n);
    case SequenceTag::kPhiSection: {
      const auto fib = oracle::fibonacci_list(n * kind.k);
      std::vector<BigInt> out;
      for (int m = 1; m <= n; ++m) out.push_back(fib[static_cast<std::size_t>(m * kind.k - 1)] / fib[static_cast<std::size_t>(kind.k - 1)]);
      return out;
    }
  }
  return {};
}

TEST(BaseTerm, Examples) {
  const std::vector<long> fib = {1, 1, 2, 3, 5, 8};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(base_term(SequenceKind::fibonacci(), n), fib[static_cast<std::size_t>(n - 1)]);
  EXPECT_EQ(base_term(SequenceKind::lucas(), 2), 3);
  EXPECT_EQ(base_term(SequenceKind::phi_section(2), 3), 8);
  EXPECT_EQ(base_term(SequenceKind::pell(), 6), 70);
}

TEST(BaseTerm, MatchesRecurrenceOracles) {
  for (const SequenceKind kind : {SequenceKind::fibonacci(), SequenceKind::lucas(), SequenceKind::pell()}) {
    const auto ref = base_list(kind, 40);
    for (int n = 1; n <= 40; ++n) ASSERT_EQ(base_term(kind, n), ref[static_cast<std::size_t>(n - 1)]) << kind.name();
  }
}

TEST(LucasFor, Examples) {
  EXPECT_EQ(lucas_for(1), 1);
  EXPECT_EQ(lucas_for(4), 7);
  EXPECT_EQ(lucas_for(6), 18);
}

TEST(PhiExplicit, Examples) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(phi_explicit(1, k), 1);
    EXPECT_EQ(phi_explicit(2, k), lucas_for(k));
  }
  EXPECT_EQ(phi_explicit(4, 3), 72);
}

TEST(PhiExplicit, AgreesWithQuotientAndRecurrence) {
  for (int k = 1; k <= 10; ++k) {
    const auto ref = base_list(SequenceKind::phi_section(k), 20);
    for (int n = 1; n <= 20; ++n) {
      ASSERT_EQ(phi_explicit(n, k), ref[static_cast<std::size_t>(n - 1)]);
      ASSERT_EQ(base_term(SequenceKind::phi_section(k), n), ref[static_cast<std::size_t>(n - 1)]);
    }
  }
}

TEST(PhiSection, KOneAliasesFibonacci) {
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(base_term(SequenceKind::phi_section(1), n), fibonacci(n));
}

TEST(ConvolvedTerm, Examples) {
  EXPECT_EQ(convolved_term({SequenceKind::fibonacci(), 3, 2}), 9);
  EXPECT_EQ(convolved_term({SequenceKind::pell(), 2, 3}), 8);
  EXPECT_EQ(convolved_term({SequenceKind::phi_section(2), 3, 1}), 25);
  EXPECT_EQ(convolved_term({SequenceKind::fibonacci(), 4, 1}), 10);
}

TEST(ConvolvedTerm, MatchesConvolutionOracle) {
  for (const SequenceKind kind : {SequenceKind::fibonacci(), SequenceKind::pell(), SequenceKind::phi_section(3)}) {
    const auto base = base_list(kind, 15);
    for (int s = 0; s <= 8; ++s) {
      const auto ref = oracle::convolve_power(base, s);
      for (int n = 1; n <= 15; ++n) ASSERT_EQ(convolved_term({kind, n, s}), ref[static_cast<std::size_t>(n - 1)]);
    }
  }
}

TEST(ConvolvedTerm, FirstOrderIsSquareOfGeneratingFunction) {
  // Coefficient of z^{N+1} in (sum F_m z^m)^2 is sum_{j} F_{j+1} F_{N-j}.
  const auto fib = oracle::fibonacci_list(30);
  for (int n = 1; n <= 29; ++n) {
    BigInt coeff = 0;
    for (int a = 1; a <= n; ++a) coeff += fib[static_cast<std::size_t>(a - 1)] * fib[static_cast<std::size_t>(n - a)];
    ASSERT_EQ(convolved_term({SequenceKind::fibonacci(), n, 1}), coeff);
  }
}

TEST(ConvolvedTerm, PrintedClosedForms) {
  for (long s = 0; s <= 40; ++s) {
    const SequenceKind fib = SequenceKind::fibonacci(), pell = SequenceKind::pell();
    const int si = static_cast<int>(s);
    ASSERT_EQ(convolved_term({fib, 1, si}), 1);
    ASSERT_EQ(convolved_term({fib, 2, si}), s + 1);
    ASSERT_EQ(2 * convolved_term({fib, 3, si}), (s + 1) * (s + 4));
    ASSERT_EQ(24 * convolved_term({fib, 5, si}), BigInt(s + 1) * (s + 2) * (s + 4) * (s + 15));
    ASSERT_EQ(convolved_term({pell, 1, si}), 1);
    ASSERT_EQ(convolved_term({pell, 2, si}), 2 * (s + 1));
    ASSERT_EQ(6 * convolved_term({pell, 5, si}), BigInt(s + 1) * (s + 2) * (4 * s * s + 40 * s + 87));
    for (int k = 1; k <= 8; ++k) {
      const BigInt l = lucas_for(k);
      const long sign = k % 2 == 0 ? 1 : -1;
      const SequenceKind phi = SequenceKind::phi_section(k);
      ASSERT_EQ(2 * convolved_term({phi, 3, si}), BigInt((s + 1) * (s + 2)) * l * l - 2 * (s + 1) * sign);
      ASSERT_EQ(6 * convolved_term({phi, 4, si}),
                BigInt((s + 1) * (s + 2) * (s + 3)) * l * l * l - 6 * BigInt((s + 1) * (s + 2) * sign) * l);
    }
  }
}

TEST(ConvolvedViaChebyshev, Examples) {
  EXPECT_EQ(convolved_via_chebyshev({SequenceKind::fibonacci(), 5, 0}), 5);
  EXPECT_EQ(convolved_via_chebyshev({SequenceKind::pell(), 3, 0}), 5);
  EXPECT_EQ(convolved_via_chebyshev({SequenceKind::fibonacci(), 4, 1}), 10);
}

TEST(ConvolvedViaChebyshev, ArgumentsAndPhase) {
  EXPECT_EQ(chebyshev_argument(SequenceKind::fibonacci()), GaussianRational::parse("i/2"));
  EXPECT_EQ(chebyshev_argument(SequenceKind::pell()), GaussianRational::i());
  EXPECT_EQ(chebyshev_argument(SequenceKind::phi_section(3)), GaussianRational::parse("2*i"));
  EXPECT_EQ(chebyshev_argument(SequenceKind::phi_section(2)), GaussianRational::parse("3/2"));
  EXPECT_TRUE(chebyshev_phase_applies(SequenceKind::phi_section(5)));
  EXPECT_FALSE(chebyshev_phase_applies(SequenceKind::phi_section(4)));
}

TEST(ConvolvedViaChebyshev, IdentitySweep) {
  for (const SequenceKind kind : {SequenceKind::fibonacci(), SequenceKind::pell()}) {
    for (int n = 1; n <= 20; ++n) {
      for (int s = 0; s <= 20; ++s) ASSERT_EQ(convolved_via_chebyshev({kind, n, s}), convolved_term({kind, n, s}));
    }
  }
  for (int k = 1; k <= 8; ++k) {
    for (int n = 1; n <= 15; ++n) {
      for (int s = 0; s <= 15; ++s) {
        const ConvolvedId id{SequenceKind::phi_section(k), n, s};
        ASSERT_EQ(convolved_via_chebyshev(id), convolved_term(id));
      }
    }
  }
}

TEST(ConvolutionTable, ReadOnlyLookups) {
  const ConvolutionTable table(SequenceKind::pell(), 10, 10);
  for (int n = 1; n <= 10; ++n) {
    for (int s = 0; s <= 10; ++s) EXPECT_EQ(table.at(n, s), convolved_term({SequenceKind::pell(), n, s}));
  }
  EXPECT_THROW((void)table.at(11, 0), std::out_of_range);
}

}  // namespace
}  // namespace chebsum
