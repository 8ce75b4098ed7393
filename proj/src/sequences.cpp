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

#include "chebsum/sequences.hpp"

#include <stdexcept>
#include <string>

#include "chebsum/chebpoly.hpp"
#include "chebsum/errors.hpp"

namespace chebsum {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
}

}  // namespace

SequenceKind SequenceKind::phi_section(int k) {
  if (k < 1) throw std::invalid_argument("phi_section: k must be >= 1");
  return {SequenceTag::kPhiSection, k};
}

std::string SequenceKind::name() const {
  switch (tag) {
    case SequenceTag::kFibonacci: return "fibonacci";
    case SequenceTag::kLucas: return "lucas";
    case SequenceTag::kPell: return "pell";
    case SequenceTag::kPhiSection: return "phi(k=" + std::to_string(k) + ")";
  }
  return "unknown";
}

BigInt fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: negative index");
  BigInt r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt lucas_for(int k) {
  require_positive(k, "lucas_for");
  return base_term(SequenceKind::lucas(), k);
}

BigInt base_term(SequenceKind kind, int n) {
  require_positive(n, "base_term");
  BigInt x1 = 1, x2, a = 1, b = 1;  // x_{N+2} = a x_{N+1} + b x_N
  switch (kind.tag) {
    case SequenceTag::kFibonacci: x2 = 1; break;
    case SequenceTag::kLucas: x2 = 3; break;
    case SequenceTag::kPell:
      x2 = 2;
      a = 2;
      break;
    case SequenceTag::kPhiSection:
      require_positive(kind.k, "base_term");
      a = lucas_for(kind.k);
      x2 = a;
      b = (kind.k % 2 == 0) ? -1 : 1;
      break;
  }
  if (n == 1) return x1;
  for (int m = 2; m < n; ++m) {
    BigInt next = a * x2 + b * x1;
    x1 = std::move(x2);
    x2 = std::move(next);
  }
  return x2;
}

BigInt phi_explicit(int n, int k) {
  require_positive(n, "phi_explicit");
  require_positive(k, "phi_explicit");
  const BigInt lk = lucas_for(k);
  BigInt sum = 0;
  for (int j = 0; 2 * j <= n - 1; ++j) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), lk.get_mpz_t(), static_cast<unsigned long>(n - 1 - 2 * j));
    BigInt term = binomial(n - 1 - j, j) * p;
    const bool negative = ((k - 1) % 2 == 1) && (j % 2 == 1);
    sum += negative ? BigInt(-term) : term;
  }
  return sum;
}

ConvolutionTable::ConvolutionTable(SequenceKind kind, int n_max, int s_max)
    : kind_(kind), n_max_(n_max), s_max_(s_max) {
  require_positive(n_max, "ConvolutionTable");
  if (s_max < 0) throw std::invalid_argument("ConvolutionTable: s_max must be >= 0");
  const auto width = static_cast<std::size_t>(n_max);
  rows_.assign(static_cast<std::size_t>(s_max) + 1, std::vector<BigInt>(width));
  for (int n = 1; n <= n_max; ++n) rows_[0][static_cast<std::size_t>(n - 1)] = base_term(kind, n);
  const auto& base = rows_[0];
  for (std::size_t s = 1; s < rows_.size(); ++s) {
    const auto& prev = rows_[s - 1];
    auto& row = rows_[s];
    for (std::size_t n = 1; n <= width; ++n) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += base[j] * prev[n - j - 1];
      row[n - 1] = std::move(acc);
    }
  }
}

const BigInt& ConvolutionTable::at(int n, int s) const {
  if (n < 1 || n > n_max_ || s < 0 || s > s_max_) throw std::out_of_range("ConvolutionTable::at");
  return rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n - 1)];
}

BigInt convolved_term(const ConvolvedId& id) {
  require_positive(id.n, "convolved_term");
  if (id.s < 0) throw std::invalid_argument("convolved_term: s must be >= 0");
  return ConvolutionTable(id.kind, id.n, id.s).at(id.n, id.s);
}

GaussianRational chebyshev_argument(SequenceKind kind) {
  switch (kind.tag) {
    case SequenceTag::kFibonacci: return {BigRational(0), BigRational(1, 2)};
    case SequenceTag::kPell: return GaussianRational::i();
    case SequenceTag::kPhiSection: {
      const BigRational half_lk(lucas_for(kind.k), 2);
      if (kind.k % 2 == 1) return {BigRational(0), half_lk};
      return {half_lk};
    }
    case SequenceTag::kLucas: break;
  }
  throw std::invalid_argument("chebyshev_argument: no Chebyshev representation for " + kind.name());
}

bool chebyshev_phase_applies(SequenceKind kind) {
  return kind.tag != SequenceTag::kPhiSection || kind.k % 2 == 1;
}

BigInt convolved_via_chebyshev(const ConvolvedId& id) {
  require_positive(id.n, "convolved_via_chebyshev");
  if (id.s < 0) throw std::invalid_argument("convolved_via_chebyshev: s must be >= 0");
  const GaussianRational z = chebyshev_argument(id.kind);
  GaussianRational value = scaled_deriv_poly({id.n, id.s}).evaluate(z);
  if (chebyshev_phase_applies(id.kind)) value *= gauss_pow(-GaussianRational::i(), id.n - 1);
  if (!value.is_real() || !value.re().is_integer()) {
    throw IdentityViolation("convolved_via_chebyshev: " + id.kind.name() + " N=" + std::to_string(id.n) +
                            " s=" + std::to_string(id.s) + " gave non-integer " + value.to_string());
  }
  return value.re().num();
}

}  // namespace chebsum
