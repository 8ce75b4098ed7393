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

#include "chebsum/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "chebsum/chebpoly.hpp"
#include "chebsum/continuation.hpp"
#include "chebsum/sequences.hpp"
#include "chebsum/series.hpp"

namespace chebsum::verify {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string fmt(ComplexDouble z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "*i";
  return os.str();
}

std::string fmt(const BigInt& v) { return v.get_str(); }
std::string fmt(const BigRational& v) { return v.to_string(); }
std::string fmt(const GaussianRational& v) { return v.to_string(); }

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  template <typename T>
  void exact(const std::string& what, const T& expected, const std::type_identity_t<T>& actual) {
    ++report_.cases_run;
    ++report_.exact_cases;
    if (!(expected == actual)) report_.failures.push_back({what, fmt(expected), fmt(actual), "exact"});
  }

  // |actual - expected| <= tol * (relative ? max(|expected|, tiny) : 1)
  void close(const std::string& what, ComplexDouble expected, ComplexDouble actual, double tol, bool relative) {
    ++report_.cases_run;
    ++report_.approx_cases;
    const double gap = std::abs(actual - expected);
    const double scale = relative ? std::abs(expected) : 1.0;
    if (!(gap <= tol * scale)) {
      report_.failures.push_back({what, fmt(expected), fmt(actual),
                                  std::string(relative ? "approx(rel " : "approx(abs ") + fmt(tol) + ")"});
    }
  }

  void truth(const std::string& what, bool ok, const std::string& detail = "") {
    ++report_.cases_run;
    ++report_.exact_cases;
    if (!ok) report_.failures.push_back({what, "true", detail.empty() ? "false" : detail, "exact"});
  }

  // Runs body, turning an escaped exception into a failed case.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.cases_run;
      report_.failures.push_back({what, "no exception", e.what(), "exact"});
    }
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string tag(int n) { return "N=" + std::to_string(n); }
std::string tag(int n, int s) { return "N=" + std::to_string(n) + " s=" + std::to_string(s); }

GaussianRational gr(const char* literal) { return GaussianRational::parse(literal); }

int bound(const std::optional<int>& v, int fallback) {
  const int b = v.value_or(fallback);
  if (b < 0 || b > kBoundCap) throw std::invalid_argument("bound " + std::to_string(b) + " outside [0, 200]");
  return b;
}

// ---------------------------------------------------------------------------

VerifyReport coefficients(const Bounds& b) {
  Recorder r("coefficients");
  const int n_max = bound(b.n_max, 20), s_max = bound(b.s_max, 60);
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 0; s <= s_max; ++s) {
      for (int j = 0; 2 * j <= n - 1; ++j) {
        const BigInt lhs = scaled_deriv_coefficient(n, s, j);
        const BigInt rhs = binomial(n - 1 - j, j) * binomial(n - 1 - j + s, s) * pow2(static_cast<unsigned long>(n - 1 - 2 * j));
        r.exact(tag(n, s) + " j=" + std::to_string(j), rhs, lhs);
      }
    }
  }
  return r.take();
}

const std::vector<GaussianRational>& pos_points() {
  static const std::vector<GaussianRational> pts = {gr("1/2"), gr("-1/2"), gr("i/2"), gr("-i/2"), gr("1/4+1/4*i"), gr("3/8")};
  return pts;
}

const std::vector<GaussianRational>& neg_points() {
  static const std::vector<GaussianRational> pts = {gr("2"), gr("-2"), gr("2*i"), gr("3/2"), gr("3/2+3/2*i")};
  return pts;
}

VerifyReport convergent_sums(const Bounds& b) {
  Recorder r("convergent-sums");
  const int n_max = bound(b.n_max, 12);
  const double eps = b.eps.value_or(std::ldexp(1.0, -40));
  const BigRational eps_q = BigRational::from_double(eps);
  for (const Direction dir : {Direction::kPosPower, Direction::kNegPower}) {
    const auto& pts = dir == Direction::kPosPower ? pos_points() : neg_points();
    for (const auto& z : pts) {
      for (int n = 1; n <= n_max; ++n) {
        const std::string what = tag(n) + " z=" + z.to_string() + " " + to_string(dir);
        r.guarded(what, [&] {
          const int terms = tail_terms_needed(n, z, dir, eps);
          const GaussianRational gap = partial_sum({n, z, dir, terms}) - closed_form_rational(n, z, dir);
          r.truth(what + " S*=" + std::to_string(terms), gap.norm() < eps_q * eps_q,
                  "|gap|^2 = " + gap.norm().to_string());
        });
      }
    }
  }
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    const FormalSeries lhs = collect_series_lhs(n, 40);
    const FormalSeries rhs = expand_closed_form(n, 40);
    r.truth(tag(n) + " formal expansion to z^40", lhs == rhs);
  }
  for (int n = 0; n <= 40; ++n) {
    const MagicValue m = magic_value(n);
    r.exact("magic value " + tag(n), GaussianRational(m.closed_value), m.series_value);
  }
  r.note("magic value: the weight is read as (1/2)^s, the closed form at z = 1/2");
  return r.take();
}

VerifyReport surd_forms(const Bounds& b) {
  Recorder r("surd-forms");
  const int n_max = bound(b.n_max, 12);
  std::mt19937_64 rng(b.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> inner(0.05, 0.95), outer(1.05, 4.0);
  for (int k = 0; k < 50; ++k) {
    for (const Direction dir : {Direction::kPosPower, Direction::kNegPower}) {
      const ComplexDouble z = std::polar(dir == Direction::kPosPower ? inner(rng) : outer(rng), angle(rng));
      for (int n = 1; n <= n_max; ++n) {
        const std::string what = tag(n) + " z=" + fmt(z) + " " + to_string(dir);
        const ComplexDouble rational = closed_form_rational(n, z, dir);
        const ComplexDouble surd = closed_form_surd(n, z, dir);
        r.close(what + " surd vs rational", rational, surd, 1e-10, true);
        r.close(what + " branch flip", surd, closed_form_surd(n, z, dir, true), 1e-12, true);
      }
    }
  }
  return r.take();
}

VerifyReport fibonacci_sums(const Bounds& b) {
  Recorder r("fibonacci-sums");
  const std::vector<GaussianRational> printed = {
      gr("4/5") * gr("1+i/2"), gr("4/25") * gr("3+4*i"), gr("4/125") * gr("19+42*i"),
      gr("16/625") * gr("3+79*i"), gr("64/3125") * gr("-39+1159/8*i")};
  for (int n = 1; n <= 5; ++n) r.exact("closed form " + tag(n), printed[static_cast<std::size_t>(n - 1)], fib_conv_sum(n));
  const int n_max = bound(b.n_max, 10);
  const ConvolutionTable fib(SequenceKind::fibonacci(), std::max(n_max, 1), 400);
  const GaussianRational half_i = gr("i/2");
  for (int n = 1; n <= n_max; ++n) {
    const int terms = tail_terms_needed(n, half_i, Direction::kPosPower, 1e-10);
    GaussianRational sum, weight(1);
    for (int s = 0; s <= terms; ++s) {
      sum += weight * GaussianRational(BigRational(fib.at(n, s)));
      weight *= half_i;
    }
    r.close("partial sum " + tag(n) + " S=" + std::to_string(terms), fib_conv_sum(n).to_complex(), sum.to_complex(),
            1e-9, false);
  }
  return r.take();
}

VerifyReport section_sums(const Bounds& b) {
  Recorder r("section-sums");
  const int n_max = std::min(bound(b.n_max, 6), 12);
  for (int k = 2; k <= 8; ++k) {
    const SequenceKind kind = SequenceKind::phi_section(k);
    const GaussianRational z = chebyshev_argument(kind);
    const int terms = tail_terms_needed(n_max, z, Direction::kNegPower, 1e-12);
    const ConvolutionTable table(kind, n_max, terms);
    const GaussianRational step = z.reciprocal();
    for (int n = 1; n <= n_max; ++n) {
      const std::string what = "k=" + std::to_string(k) + " " + tag(n);
      const GaussianRational exact = phi_conv_sum(n, k);
      if (k % 2 == 0) r.truth(what + " real for even k", exact.is_real());
      GaussianRational sum, weight(1);
      for (int s = 0; s <= terms; ++s) {
        sum += weight * GaussianRational(BigRational(table.at(n, s)));
        weight *= step;
      }
      // The odd-k weight (-2i/L_k)^s equals z^{-s}, so the same sum covers both.
      r.close(what + " termwise", exact.to_complex(), sum.to_complex(), 1e-9, true);
      r.close(what + " square-root form", exact.to_complex(), phi_conv_sum_surd(n, k), 1e-10, true);
    }
  }
  return r.take();
}

VerifyReport boundary_fibonacci(const Bounds& b) {
  Recorder r("boundary-fibonacci");
  const int n_max = bound(b.n_max, 15);
  for (int n = 1; n <= n_max; ++n) {
    r.close(tag(n), BigRational(fibonacci(n)).to_double(), fib_from_boundary(n), 1e-7, false);
  }
  const std::vector<GaussianRational> pell_known = {gr("1/2+i/2"), gr("i"), gr("-1+3/2*i"), gr("-3+i")};
  for (int n = 1; n <= 4; ++n) {
    r.exact("Pell at i " + tag(n), pell_known[static_cast<std::size_t>(n - 1)], pell_regularized(n).exact());
    r.close("Pell trig form " + tag(n), pell_known[static_cast<std::size_t>(n - 1)].to_complex(), pell_trig_form(n),
            1e-10, false);
  }
  for (int n = 1; n <= 10; ++n) {
    r.close("Pell from e^(i pi/3) " + tag(n), BigRational(base_term(SequenceKind::pell(), n)).to_double(),
            pell_from_angle(n), 1e-8, false);
  }
  return r.take();
}

VerifyReport unit_values(const Bounds& b) {
  Recorder r("unit-values");
  const int n_max = bound(b.n_max, 30), s_max = bound(b.s_max, 30);
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 0; s <= s_max; ++s) {
      for (const int sign : {1, -1}) {
        const std::string what = tag(n, s) + " sign=" + std::to_string(sign);
        r.guarded(what, [&] {
          const BigInt v = scaled_deriv_at_unit(n, s, sign);
          const BigInt expected = binomial(n + 2 * s, n - 1) * ((sign < 0 && (n - 1) % 2 == 1) ? -1 : 1);
          r.exact(what, expected, v);
        });
      }
      r.exact("vandermonde " + tag(n, s), binomial(n + 2 * s, n - 1), vandermonde_sum(n, s));
    }
  }
  return r.take();
}

VerifyReport alternating_binomial(const Bounds& b) {
  Recorder r("alternating-binomial");
  const int n_max = bound(b.n_max, 64);
  for (int n = 1; n <= n_max; ++n) {
    r.exact("closed form vs piecewise " + tag(n), binom_alternating_piecewise(n), binom_alternating(n));
    r.exact("pos vs neg weights at -1 " + tag(n), closed_form_rational(n, GaussianRational(-1), Direction::kNegPower),
            closed_form_rational(n, GaussianRational(-1), Direction::kPosPower));
  }
  const BigRational worked[] = {BigRational(1, 2), BigRational(1, 2), BigRational(1, 4), BigRational(0)};
  for (int n = 1; n <= 4; ++n) r.exact("worked value " + tag(n), worked[n - 1], binom_alternating(n));
  return r.take();
}

VerifyReport euler(const Bounds&) {
  Recorder r("euler");
  const auto alt = euler_power_sums(5, EulerWeight::kAlternatingReal);
  const auto imag = euler_power_sums(5, EulerWeight::kImaginaryUnit);
  const std::vector<GaussianRational> alt_known = {gr("1/2"), gr("-1/4"), gr("0"), gr("1/8")};
  const std::vector<GaussianRational> imag_known = {gr("1/2+i/2"), gr("-1/2"), gr("-i/2"), gr("1")};
  for (std::size_t p = 0; p < 4; ++p) {
    r.exact("(-1)^s s^" + std::to_string(p), alt_known[p], alt[p]);
    r.exact("i^s s^" + std::to_string(p), imag_known[p], imag[p]);
  }
  for (int p = 0; p <= 5; ++p) {
    const auto up = static_cast<std::size_t>(p);
    r.close("Abel (-1)^s s^" + std::to_string(p), alt[up].to_complex(),
            abel_estimate(p, EulerWeight::kAlternatingReal), 1e-4, false);
    r.close("Abel i^s s^" + std::to_string(p), imag[up].to_complex(), abel_estimate(p, EulerWeight::kImaginaryUnit),
            1e-4, false);
  }
  r.note("Abel estimates extrapolate quadratically from r = 0.90, 0.95, 0.99");
  return r.take();
}

VerifyReport gamma(const Bounds&) {
  Recorder r("gamma");
  for (int n = 1; n <= 12; ++n) {
    const double expected = (BigRational(factorial(static_cast<unsigned long>(n - 1))) * binom_alternating(n)).to_double();
    r.close("Gamma form " + tag(n), expected, gamma_regularized(static_cast<double>(n)), 1e-11, true);
  }
  for (double x = -4.5; x <= 6.0 + 1e-9; x += 0.25) {
    for (double y = -4.0; y <= 4.0 + 1e-9; y += 0.5) {
      const ComplexDouble z(x, y);
      if (y == 0.0 && x <= 0.0 && std::abs(x - std::round(x)) < 1e-3) continue;
      r.close("recurrence z=" + fmt(z), z * complex_gamma(z), complex_gamma(z + 1.0), 1e-11, true);
    }
  }
  return r.take();
}

VerifyReport sequences(const Bounds& b) {
  Recorder r("sequences");
  const int n_max = bound(b.n_max, 20), s_max = bound(b.s_max, 20);
  for (const SequenceKind kind : {SequenceKind::fibonacci(), SequenceKind::pell()}) {
    const ConvolutionTable table(kind, std::max(n_max, 1), s_max);
    for (int n = 1; n <= n_max; ++n) {
      for (int s = 0; s <= s_max; ++s) {
        const std::string what = kind.name() + " " + tag(n, s);
        r.guarded(what, [&] { r.exact(what, table.at(n, s), convolved_via_chebyshev({kind, n, s})); });
      }
    }
  }
  const int phi_n = std::min(n_max, 15), phi_s = std::min(s_max, 15);
  for (int k = 1; k <= 8; ++k) {
    const SequenceKind kind = SequenceKind::phi_section(k);
    const ConvolutionTable table(kind, std::max(phi_n, 1), phi_s);
    for (int n = 1; n <= phi_n; ++n) {
      for (int s = 0; s <= phi_s; ++s) {
        const std::string what = kind.name() + " " + tag(n, s);
        r.guarded(what, [&] { r.exact(what, table.at(n, s), convolved_via_chebyshev({kind, n, s})); });
      }
    }
  }
  for (int k = 1; k <= 10; ++k) {
    for (int n = 1; n <= 20; ++n) {
      const BigInt quotient = fibonacci(n * k) / fibonacci(k);
      const std::string what = "phi k=" + std::to_string(k) + " " + tag(n);
      r.exact(what + " recurrence", quotient, base_term(SequenceKind::phi_section(k), n));
      r.exact(what + " explicit", quotient, phi_explicit(n, k));
    }
  }
  const ConvolutionTable fib(SequenceKind::fibonacci(), 5, 40), pell(SequenceKind::pell(), 5, 40);
  for (long s = 0; s <= 40; ++s) {
    const int si = static_cast<int>(s);
    const std::string at = " s=" + std::to_string(s);
    r.exact("F_2" + at, BigInt(s + 1), fib.at(2, si));
    r.exact("F_3" + at, BigInt((s + 1) * (s + 4)), BigInt(2 * fib.at(3, si)));
    r.exact("F_5" + at, BigInt(BigInt(s + 1) * (s + 2) * (s + 4) * (s + 15)), BigInt(24 * fib.at(5, si)));
    r.exact("P_2" + at, BigInt(2 * (s + 1)), pell.at(2, si));
    r.exact("P_5" + at, BigInt(BigInt(s + 1) * (s + 2) * (4 * s * s + 40 * s + 87)), BigInt(6 * pell.at(5, si)));
  }
  for (int k = 1; k <= 8; ++k) {
    const ConvolutionTable phi(SequenceKind::phi_section(k), 4, 40);
    const BigInt l = lucas_for(k);
    const long sign = k % 2 == 0 ? 1 : -1;
    for (long s = 0; s <= 40; ++s) {
      const int si = static_cast<int>(s);
      const std::string at = " k=" + std::to_string(k) + " s=" + std::to_string(s);
      r.exact("Phi_3" + at, BigInt(BigInt((s + 1) * (s + 2)) * l * l - 2 * (s + 1) * sign), BigInt(2 * phi.at(3, si)));
      r.exact("Phi_4" + at, BigInt(BigInt((s + 1) * (s + 2) * (s + 3)) * l * l * l - 6 * BigInt((s + 1) * (s + 2) * sign) * l),
              BigInt(6 * phi.at(4, si)));
    }
  }
  r.note("third and fourth k-section closed forms are checked with the sign and 1/6 factor implied by the explicit sum");
  r.truth("Pell generating function K=8 s<=4", pell_gf_check(8, 4));
  return r.take();
}

using SuiteFn = VerifyReport (*)(const Bounds&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"coefficients", coefficients},
      {"convergent-sums", convergent_sums},
      {"surd-forms", surd_forms},
      {"fibonacci-sums", fibonacci_sums},
      {"section-sums", section_sums},
      {"boundary-fibonacci", boundary_fibonacci},
      {"unit-values", unit_values},
      {"alternating-binomial", alternating_binomial},
      {"euler", euler},
      {"gamma", gamma},
      {"sequences", sequences},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::optional<std::string> resolve_suite(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"lemma2", "coefficients"},     {"lemma3", "convergent-sums"},   {"thm4", "surd-forms"},
      {"cor1", "fibonacci-sums"},     {"cor2", "section-sums"},        {"cor3", "boundary-fibonacci"},
      {"lemma4", "unit-values"},      {"eq14", "alternating-binomial"}, {"all", "all"},
  };
  if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
  for (const auto& n : suite_names()) {
    if (n == name) return n;
  }
  return std::nullopt;
}

VerifyReport run_suite(const std::string& name, const Bounds& bounds) {
  const auto canonical = resolve_suite(name);
  if (!canonical || *canonical == "all") throw std::invalid_argument("unknown suite '" + name + "'");
  for (const auto& [n, fn] : registry()) {
    if (n == *canonical) {
      const auto start = std::chrono::steady_clock::now();
      VerifyReport report = fn(bounds);
      report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return report;
    }
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<VerifyReport> run_all(const Bounds& bounds) {
  std::vector<std::future<VerifyReport>> pending;
  for (const auto& name : suite_names()) {
    pending.push_back(std::async(std::launch::async, [name, bounds] { return run_suite(name, bounds); }));
  }
  std::vector<VerifyReport> reports;
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace chebsum::verify
