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

// Command-line front end: eval, sum, verify, table.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chebsum/chebpoly.hpp"
#include "chebsum/continuation.hpp"
#include "chebsum/errors.hpp"
#include "chebsum/sequences.hpp"
#include "chebsum/series.hpp"
#include "chebsum/verify.hpp"

namespace {

using namespace chebsum;
using json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

enum class Format { kText, kJson, kCsv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Scalar = std::variant<GaussianRational, ComplexDouble>;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".ni") != std::string::npos) return s;
  const auto e = s.find('e');
  if (e == std::string::npos) return s + ".0";
  return s.insert(e, ".0");
}

std::string format_scalar(const Scalar& v) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return g->to_string();
  const ComplexDouble z = std::get<ComplexDouble>(v);
  if (z.imag() == 0.0) return format_double(z.real());
  const std::string im = format_double(std::abs(z.imag()));
  return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "*i";
}

// Float literal: "x", "x+yi", "x-y*i", "yi". Each component must be a plain
// decimal number.
ComplexDouble parse_float_literal(const std::string& text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw UsageError("empty literal");
  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  int terms = 0;
  while (pos < s.size()) {
    if (++terms > 2) throw UsageError("too many terms in '" + text + "'");
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    std::size_t used = static_cast<std::size_t>(end - begin);
    bool imaginary = false;
    if (used == 0) {
      if (s[pos] == 'i' || s.compare(pos, 2, "+i") == 0 || s.compare(pos, 2, "-i") == 0) {
        v = s[pos] == '-' ? -1.0 : 1.0;
        used = s[pos] == 'i' ? 0 : 1;
      } else {
        throw UsageError("cannot parse '" + text + "'");
      }
    }
    pos += used;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      imaginary = true;
      ++pos;
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw UsageError("cannot parse '" + text + "'");
    (imaginary ? im : re) += v;
  }
  return {re, im};
}

Scalar parse_scalar(const std::string& text) {
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos) return parse_float_literal(text);
  try {
    return GaussianRational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

GaussianRational require_exact(const Scalar& v, const std::string& what) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return *g;
  throw UsageError(what + " needs an exact literal such as 1/2 or (1/2)+(1/3)i");
}

ComplexDouble as_complex(const Scalar& v) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return g->to_complex();
  return std::get<ComplexDouble>(v);
}

std::string exactness_name(const Scalar& v) {
  return std::holds_alternative<GaussianRational>(v) ? "exact" : "approx";
}

SequenceKind parse_kind(const std::string& name, int k) {
  if (name == "fib" || name == "fibonacci") return SequenceKind::fibonacci();
  if (name == "lucas") return SequenceKind::lucas();
  if (name == "pell") return SequenceKind::pell();
  if (name == "phi") {
    if (k < 1) throw UsageError("--kind phi needs -k >= 1");
    return SequenceKind::phi_section(k);
  }
  throw UsageError("unknown sequence kind '" + name + "'");
}

Direction parse_direction(const std::string& name) {
  if (name == "pos") return Direction::kPosPower;
  if (name == "neg") return Direction::kNegPower;
  throw UsageError("direction must be pos or neg");
}

Format default_format() {
  const char* env = std::getenv("CHEBSUM_FORMAT");
  if (env == nullptr) return Format::kText;
  const std::string v = env;
  if (v == "json") return Format::kJson;
  if (v == "csv") return Format::kCsv;
  return Format::kText;
}

struct Globals {
  bool json = false;
  bool csv = false;

  Format format() const {
    if (json) return Format::kJson;
    if (csv) return Format::kCsv;
    return default_format();
  }
};

void emit_value(const Globals& g, const Scalar& v, const std::string& provenance = "", double error_bound = 0.0) {
  if (g.format() == Format::kJson) {
    json out = {{"value", format_scalar(v)}, {"exactness", exactness_name(v)}};
    if (std::holds_alternative<ComplexDouble>(v) && error_bound > 0.0) out["error_bound"] = error_bound;
    if (!provenance.empty()) out["provenance"] = provenance;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << format_scalar(v);
  if (!provenance.empty()) std::cout << " (" << provenance << ")";
  std::cout << "\n";
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string object;
  int n = 1;
  int s = 0;
  int alpha = 1;
  int k = 0;
  std::string kind = "fib";
  std::optional<std::string> z;
};

int run_eval(const Globals& g, const EvalArgs& a) {
  if (a.object == "sequence" || a.object == "convolved") {
    const SequenceKind kind = parse_kind(a.kind, a.k);
    const BigInt v = a.object == "sequence" ? base_term(kind, a.n) : convolved_term({kind, a.n, a.s});
    emit_value(g, GaussianRational(BigRational(v)));
    return kPass;
  }
  IntPolynomial p;
  if (a.object == "upoly") {
    p = u_poly(a.n);
  } else if (a.object == "deriv") {
    p = scaled_deriv_poly({a.n, a.s});
  } else if (a.object == "gegenbauer") {
    p = gegenbauer_poly(a.n, a.alpha);
  } else {
    throw UsageError("unknown object '" + a.object + "'");
  }
  if (!a.z) {
    if (g.format() == Format::kJson) {
      std::cout << json{{"polynomial", p.to_string()}, {"exactness", "exact"}}.dump() << "\n";
    } else {
      std::cout << p.to_string() << "\n";
    }
    return kPass;
  }
  const Scalar z = parse_scalar(*a.z);
  if (const auto* q = std::get_if<GaussianRational>(&z)) {
    emit_value(g, p.evaluate(*q));
  } else {
    emit_value(g, p.evaluate(std::get<ComplexDouble>(z)));
  }
  return kPass;
}

struct SumArgs {
  int n = 1;
  std::string z;
  std::string direction = "pos";
  std::string mode = "closed";
  std::optional<int> terms;
};

std::string weights_label(Direction d) { return d == Direction::kPosPower ? "z^s weights" : "z^-s weights"; }

int run_sum(const Globals& g, const SumArgs& a) {
  if (a.n < 1) throw UsageError("-N must be >= 1");
  const Direction dir = parse_direction(a.direction);
  const Scalar z = parse_scalar(a.z);
  const bool exact = std::holds_alternative<GaussianRational>(z);
  if (a.mode == "partial") {
    if (!a.terms) throw UsageError("partial mode needs -S");
    if (*a.terms < 0) throw UsageError("-S must be >= 0");
    const std::string prov = "partial sum to s = " + std::to_string(*a.terms) + ", " + weights_label(dir);
    if (exact) {
      emit_value(g, partial_sum({a.n, std::get<GaussianRational>(z), dir, *a.terms}), prov);
    } else {
      emit_value(g, partial_sum(a.n, std::get<ComplexDouble>(z), dir, *a.terms), prov);
    }
  } else if (a.mode == "closed") {
    const std::string prov = "rational closed form, " + weights_label(dir);
    if (exact) {
      emit_value(g, closed_form_rational(a.n, std::get<GaussianRational>(z), dir), prov);
    } else {
      emit_value(g, closed_form_rational(a.n, std::get<ComplexDouble>(z), dir), prov);
    }
  } else if (a.mode == "surd") {
    emit_value(g, closed_form_surd(a.n, as_complex(z), dir), "square-root closed form, " + weights_label(dir));
  } else if (a.mode == "regularized") {
    const RegularizedValue v =
        exact ? regularized_sum(a.n, std::get<GaussianRational>(z), dir) : regularized_sum(a.n, as_complex(z), dir);
    const Scalar out = v.exactness == Exactness::kExact ? Scalar(v.exact()) : Scalar(v.as_complex());
    emit_value(g, out, v.provenance, v.error_bound);
  } else {
    throw UsageError("mode must be partial, closed, surd or regularized");
  }
  return kPass;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n_max, s_max;
  std::optional<double> eps;
  std::uint64_t seed = verify::Bounds{}.seed;
};

json report_json(const verify::VerifyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"case", f.descriptor}, {"expected", f.expected}, {"actual", f.actual}, {"exactness", f.exactness}});
  }
  return {{"suite", r.suite},         {"passed", r.passed()},          {"cases_run", r.cases_run},
          {"exact_cases", r.exact_cases}, {"approx_cases", r.approx_cases}, {"failures", failures},
          {"notes", r.notes},         {"seconds", r.seconds}};
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  const auto canonical = verify::resolve_suite(a.suite);
  if (!canonical) throw UsageError("unknown suite '" + a.suite + "'");
  for (const auto& b : {a.n_max, a.s_max}) {
    if (b && (*b < 0 || *b > verify::kBoundCap)) throw UsageError("bounds must lie in [0, 200]");
  }
  if (a.eps && !(*a.eps > 0.0)) throw UsageError("--eps must be positive");
  const verify::Bounds bounds{a.n_max, a.s_max, a.eps, a.seed};
  const std::vector<verify::VerifyReport> reports =
      *canonical == "all" ? verify::run_all(bounds) : std::vector{verify::run_suite(*canonical, bounds)};
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (g.format() == Format::kJson) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    std::cout << json{{"passed", ok}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::printf("%-22s %s  cases=%d exact=%d approx=%d failures=%zu  %.2fs\n", r.suite.c_str(),
                  r.passed() ? "PASS" : "FAIL", r.cases_run, r.exact_cases, r.approx_cases, r.failures.size(),
                  r.seconds);
      for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
      for (const auto& f : r.failures) {
        std::printf("  %s: expected %s, got %s [%s]\n", f.descriptor.c_str(), f.expected.c_str(), f.actual.c_str(),
                    f.exactness.c_str());
      }
    }
  }
  return ok ? kPass : kVerifyFailed;
}

struct TableArgs {
  int table = 1;
  int n_max = 4;
  std::vector<std::string> samples;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int run_table(const Globals& g, const TableArgs& a) {
  if (a.table != 1 && a.table != 2) throw UsageError("--table must be 1 or 2");
  if (a.n_max < 1 || a.n_max > verify::kBoundCap) throw UsageError("--n-max must lie in [1, 200]");
  const Direction dir = a.table == 1 ? Direction::kPosPower : Direction::kNegPower;
  std::vector<GaussianRational> zs;
  for (const auto& text : a.samples) {
    const GaussianRational z = require_exact(parse_scalar(text), "table sample");
    const auto c = z.norm() <=> BigRational(1);
    if (a.table == 1 ? c >= 0 : c <= 0) {
      throw DomainError("sample " + z.to_string() + (a.table == 1 ? " needs |z| < 1" : " needs |z| > 1"));
    }
    zs.push_back(z);
  }
  const Format f = g.format();
  json rows = json::array();
  if (f == Format::kCsv) {
    std::cout << "N,closed_form";
    for (const auto& z : zs) std::cout << "," << csv_field("z=" + z.to_string());
    std::cout << "\n";
  }
  for (int n = 1; n <= a.n_max; ++n) {
    const RationalFunction rf = closed_form_symbolic(n, dir);
    std::vector<std::string> values;
    for (const auto& z : zs) values.push_back(rf.evaluate(z).to_string());
    if (f == Format::kJson) {
      json vals = json::object();
      for (std::size_t i = 0; i < zs.size(); ++i) vals[zs[i].to_string()] = values[i];
      rows.push_back({{"N", n}, {"closed_form", rf.to_string()}, {"values", vals}});
    } else if (f == Format::kCsv) {
      std::cout << n << "," << csv_field(rf.to_string());
      for (const auto& v : values) std::cout << "," << csv_field(v);
      std::cout << "\n";
    } else {
      std::cout << "N=" << n << "  " << rf.to_string();
      for (std::size_t i = 0; i < zs.size(); ++i) std::cout << "  [z=" << zs[i].to_string() << "] " << values[i];
      std::cout << "\n";
    }
  }
  if (f == Format::kJson) std::cout << json{{"table", a.table}, {"rows", rows}}.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sums of order-coupled Chebyshev U derivatives"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output (table)");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial or sequence term");
  eval->add_option("object", ea.object, "upoly | deriv | gegenbauer | sequence | convolved")->required();
  eval->add_option("-N,--n", ea.n, "Index N (degree for upoly and gegenbauer)");
  eval->add_option("-s,--order", ea.s, "Derivative or convolution order");
  eval->add_option("-a,--alpha", ea.alpha, "Gegenbauer parameter");
  eval->add_option("-k", ea.k, "Section index for --kind phi");
  eval->add_option("--kind", ea.kind, "fib | lucas | pell | phi");
  eval->add_option("-z", ea.z, "Evaluation point; omit to print the polynomial");

  SumArgs sa;
  auto* sum = app.add_subcommand("sum", "Sum the series for index N at z");
  sum->add_option("-N,--n", sa.n, "Index N")->required();
  sum->add_option("-z", sa.z, "Point, exact (1/2, i/2) or float (0.25)")->required();
  sum->add_option("-d,--direction", sa.direction, "pos: z^s weights, neg: z^-s weights");
  sum->add_option("-m,--mode", sa.mode, "partial | closed | surd | regularized");
  sum->add_option("-S,--terms", sa.terms, "Last index for partial mode");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run identity verification suites");
  ver->add_option("--suite", va.suite, "Suite name or alias; all runs everything");
  ver->add_option("--n-max", va.n_max, "Upper bound on N");
  ver->add_option("--s-max", va.s_max, "Upper bound on the order");
  ver->add_option("--eps", va.eps, "Truncation tolerance");
  ver->add_option("--seed", va.seed, "Seed for randomized sweeps");

  TableArgs ta;
  auto* tab = app.add_subcommand("table", "Print closed forms for N = 1..n-max");
  tab->add_option("--table", ta.table, "1: z^s weights, 2: z^-s weights");
  tab->add_option("--n-max", ta.n_max, "Last N");
  tab->add_option("-z", ta.samples, "Exact sample points");

  for (auto* sub : {eval, sum, ver, tab}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(g, ea);
    if (sum->parsed()) return run_sum(g, sa);
    if (ver->parsed()) return run_verify(g, va);
    return run_table(g, ta);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const PoleError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const DivisionByZero& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
