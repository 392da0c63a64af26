// lvanish: decides whether L(1, f) = 0 for periodic rational f, exactly, and
// evaluates L(s, f) with certified enclosures.
//
// Exit codes: 0 vanishing/success, 1 nonvanishing, 2 pole at s = 1,
// 64 parse error, 65 precondition violation, 70 internal cross-route
// disagreement or selftest failure.

#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lseries/lseries.hpp"

using namespace lseries;
using nlohmann::ordered_json;

namespace {

constexpr int kExitVanishing = 0;
constexpr int kExitNonvanishing = 1;
constexpr int kExitPole = 2;
constexpr int kExitParse = 64;
constexpr int kExitPrecondition = 65;
constexpr int kExitDisagreement = 70;

// "p/q", "n", or a decimal like "1.25" (converted exactly)
Rational parse_number(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac = text.size() - dot - 1;
  if (frac == 0) return parse_rational(text.substr(0, dot));
  Rational scale(1);
  mpz_ui_pow_ui(scale.get_den_mpz_t(), 10, frac);
  Rational v = parse_rational(digits) * scale;
  v.canonicalize();
  return v;
}

struct Options {
  std::string path;
  long precision = 128;
  std::string route = "both";
  std::string format = "text";
  std::string method = "digamma";
  std::string s_text = "1";
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::uint64_t p = 0;
  int level = 1;
};

void check_precision(long precision) {
  if (precision < 16 || precision > kMaxPrecision) {
    throw std::invalid_argument("--precision must lie in [16, 16384]");
  }
}

int cmd_decide(const Options& opt) {
  const FunctionSpec spec = load_function_spec(opt.path);
  const PeriodicFunction f = spec.to_function();
  check_precision(opt.precision);

  DecisionReport report;
  report.input = spec;
  report.mean = to_string(f.mean());
  report.precision_bits = opt.precision;

  if (!f.has_zero_mean()) {
    report.outcome = Outcome::pole;
    report.exit_code = kExitPole;
  } else {
    bool vanishing = false;
    if (opt.route == "okada" || opt.route == "both") {
      report.okada = decide_vanishing(f);
      vanishing = report.okada->decision;
    }
    if (opt.route == "theorem1" || opt.route == "both") {
      const ProductCriterionResult pc = product_criterion_decide(f, opt.precision);
      report.theorem1_ran = true;
      report.theorem1_vanishing = pc.vanishing;
      if (report.okada) {
        report.theorem1_agrees = (pc.vanishing == report.okada->decision);
        report.okada->route = DecisionRoute::both;
      } else {
        vanishing = pc.vanishing;
      }
    }
    const EvalReport numeric = eval_L1(f, opt.precision);
    report.numeric_midpoint = numeric.value.real().midpoint_string();
    report.numeric_radius = numeric.value.real().radius_string();
    if (report.theorem1_agrees && !*report.theorem1_agrees) {
      report.exit_code = kExitDisagreement;
    } else {
      report.exit_code = vanishing ? kExitVanishing : kExitNonvanishing;
    }
    report.outcome = vanishing ? Outcome::vanishing : Outcome::nonvanishing;
  }

  std::cout << (opt.format == "json" ? decision_report_to_json(report)
                                     : decision_report_to_text(report));
  if (opt.format == "json") std::cout << "\n";
  return report.exit_code;
}

int cmd_kernel(const Options& opt) {
  if (opt.q < 1) throw std::invalid_argument("--q must be >= 1");
  const std::vector<PeriodicFunction> basis = kernel_basis(opt.q);
  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = kSchemaTag;
    doc["command"] = "kernel";
    doc["modulus"] = opt.q;
    doc["dimension"] = basis.size();
    ordered_json rows = ordered_json::array();
    for (const auto& f : basis) {
      ordered_json row = ordered_json::array();
      for (const auto& v : f.values()) row.push_back(to_string(v));
      rows.push_back(std::move(row));
    }
    doc["basis"] = std::move(rows);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "q = " << opt.q << ": vanishing space has dimension " << basis.size() << "\n";
    for (const auto& f : basis) {
      std::cout << "  [";
      for (std::size_t i = 0; i < f.values().size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << to_string(f.values()[i]);
      }
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_eval(const Options& opt) {
  const FunctionSpec spec = load_function_spec(opt.path);
  const PeriodicFunction f = spec.to_function();
  check_precision(opt.precision);
  const Rational s = parse_number(opt.s_text);

  EvalReport report;
  if (s == 1) {
    if (!f.has_zero_mean()) {
      std::cerr << "L(s, f) has a simple pole at s = 1 with residue " << to_string(f.mean())
                << "\n";
      return kExitPole;
    }
    EvalMethod method = EvalMethod::digamma;
    if (opt.method == "hurwitz") method = EvalMethod::hurwitz;
    else if (opt.method == "fourier_log") method = EvalMethod::fourier_log;
    else if (opt.method == "partial_sum") method = EvalMethod::partial_sum;
    else if (opt.method != "digamma") throw std::invalid_argument("unknown --method");
    report = eval_L1(f, opt.precision, method);
  } else {
    report = eval_Ls(f, s, opt.precision);
  }

  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = kSchemaTag;
    doc["command"] = "eval";
    doc["input"] = {{"modulus", spec.modulus}, {"values", spec.values}};
    doc["s"] = opt.s_text;
    doc["method"] = to_string(report.method);
    doc["midpoint"] = report.value.real().midpoint_string();
    doc["radius"] = report.value.real().radius_string();
    doc["imag_midpoint"] = report.value.imag().midpoint_string();
    doc["imag_radius"] = report.value.imag().radius_string();
    doc["precision_bits"] = static_cast<long>(report.precision_bits);
    doc["terms_used"] = report.terms_used;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "L(" << opt.s_text << ", f) = " << report.value.real().to_string() << "\n";
    if (!report.value.imag().contains_zero() || !report.value.imag().is_exact()) {
      std::cout << "imag part    " << report.value.imag().to_string() << "\n";
    }
    std::cout << "method " << to_string(report.method) << ", " << report.precision_bits
              << " bits, " << report.terms_used << " terms\n";
  }
  return 0;
}

int cmd_epsilon(const Options& opt) {
  const Rational value = epsilon_weight(opt.r, opt.p, opt.q);
  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = kSchemaTag;
    doc["command"] = "epsilon";
    doc["q"] = opt.q;
    doc["r"] = opt.r;
    doc["p"] = opt.p;
    doc["value"] = to_string(value);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << to_string(value) << "\n";
  }
  return 0;
}

int cmd_fourier(const Options& opt) {
  const FunctionSpec spec = load_function_spec(opt.path);
  const PeriodicFunction f = spec.to_function();
  const FourierCoefficients F = fourier_transform(f);
  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = kSchemaTag;
    doc["command"] = "fourier";
    doc["input"] = {{"modulus", spec.modulus}, {"values", spec.values}};
    ordered_json rows = ordered_json::array();
    for (const auto& hat : F.hat) {
      ordered_json row = ordered_json::array();
      for (const auto& c : hat.coefficients()) row.push_back(to_string(c));
      rows.push_back(std::move(row));
    }
    doc["coefficients"] = std::move(rows);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (std::int64_t b = 1; b <= f.modulus(); ++b) {
      std::cout << "f^(" << b << ") = " << F.hat[b - 1].to_string() << "\n";
    }
  }
  return 0;
}

int cmd_characters(const Options& opt) {
  if (opt.q < 1) throw std::invalid_argument("--q must be >= 1");
  const UnitGroupStructure& g = unit_group(opt.q);
  const auto chars = enumerate_characters(opt.q);
  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = kSchemaTag;
    doc["command"] = "characters";
    doc["modulus"] = opt.q;
    doc["generators"] = g.generators();
    doc["orders"] = g.orders();
    doc["exponent"] = g.exponent();
    doc["count"] = chars.size();
    ordered_json list = ordered_json::array();
    for (const auto& chi : chars) {
      ordered_json c;
      c["exponents"] = chi.exponents();
      ordered_json values = ordered_json::array();
      for (std::int64_t a = 1; a <= opt.q; ++a) values.push_back(chi(a).to_string());
      c["values"] = std::move(values);
      list.push_back(std::move(c));
    }
    doc["characters"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "(Z/" << opt.q << ")^*: ";
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      if (i) std::cout << " x ";
      std::cout << "<" << g.generators()[i] << ">_" << g.orders()[i];
    }
    if (g.generators().empty()) std::cout << "trivial";
    std::cout << ", " << chars.size() << " characters (values in Q(zeta_" << g.exponent()
              << "))\n";
    for (std::size_t i = 0; i < chars.size(); ++i) {
      std::cout << "chi_" << i << (chars[i].is_principal() ? " (principal)" : "") << ":";
      for (std::int64_t a = 1; a <= opt.q; ++a) {
        std::cout << "  chi(" << a << ")=" << chars[i](a).to_string();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

// zero-mean random rational function (integer entries, balanced last slot)
PeriodicFunction testutil_random(std::int64_t q, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> values;
  Rational sum = 0;
  for (std::int64_t a = 1; a < q; ++a) {
    Rational v(dist(rng));
    sum += v;
    values.push_back(std::move(v));
  }
  values.emplace_back(-sum);
  return PeriodicFunction(q, std::move(values));
}

struct SelftestRunner {
  int failures = 0;
  void run(const std::string& name, bool ok) {
    std::cout << (ok ? "OK   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

int cmd_selftest(const Options& opt) {
  const bool deep = opt.level >= 2;
  std::mt19937_64 rng(20250809);
  SelftestRunner t;

  {
    bool ok = true;
    for (std::int64_t q = 1; q <= (deep ? 60 : 40); ++q) {
      const auto sys = ResidueWeightSystem::build(q);
      ok = ok && sys.weight_total() == Rational(q, static_cast<long>(euler_phi(q)));
      for (std::int64_t r = 1; r <= q && ok; ++r) {
        Rational total = 0;
        for (std::int64_t rho = 1; rho <= q; ++rho) {
          if (sys.weight(rho) == 0) continue;
          long count = 0;
          for (std::int64_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            if ((a * rho - r) % q == 0) ++count;
          }
          total += sys.weight(rho) * count;
        }
        ok = ok && total == 1;
      }
    }
    t.run("residue weights: total q/phi(q) and unit-average identity", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q = 2; q <= (deep ? 30 : 16); ++q) {
      for (const auto& pp : factorize(q)) {
        for (std::int64_t r = 1; r <= q; ++r) {
          const auto ps = epsilon_partial_sum(r, pp.prime, q, 40);
          ok = ok && abs(epsilon_weight(r, pp.prime, q) - ps.partial) <= ps.tail_bound;
        }
      }
    }
    t.run("epsilon truncations stay within their tail bounds", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q = 1; q <= (deep ? 24 : 16); ++q) {
      for (const auto& f : kernel_basis(q)) {
        ok = ok && decide_vanishing(f).decision;
        ok = ok && product_criterion_decide(f, 128).vanishing;
      }
    }
    t.run("kernel vectors vanish on both routes", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q : {4, 6, 8, 9, 12}) {
      const OkadaSystem sys(q);
      for (int i = 0; i < (deep ? 40 : 10); ++i) {
        const auto f = testutil_random(q, rng);
        const bool okada = sys.decide(f).decision;
        ok = ok && okada == product_criterion_decide(f, 128).vanishing;
        ok = ok && sys.log_identity_holds(f);
        const auto [fe, fo] = even_odd_split(f);
        ok = ok && okada == (sys.decide(fe).decision && sys.decide(fo).decision);
        for (std::int64_t a = 1; a <= q; ++a) {
          if (std::gcd(a, q) == 1) ok = ok && okada == sys.decide(dilate(f, a)).decision;
        }
      }
    }
    t.run("random corpus: route agreement, log identity, parity, dilation", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q = 1; q <= (deep ? 24 : 12); ++q) {
      for (int i = 0; i < 3; ++i) {
        const auto f = testutil_random(q, rng);
        ok = ok && fourier_inverse(fourier_transform(f)) == f;
      }
      // norm: prod_{b=1}^{q-1} (1 - zeta^b) = q
      CyclotomicElement prod = CyclotomicElement::one(q);
      for (std::int64_t b = 1; b < q; ++b) {
        prod *= CyclotomicElement::one(q) - CyclotomicElement::zeta_power(q, b);
      }
      Rational value;
      ok = ok && prod.is_rational(&value) && value == q;
    }
    t.run("fourier round trip and cyclotomic norm product", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q = 1; q <= (deep ? 24 : 12); ++q) {
      const auto chars = enumerate_characters(q);
      const std::int64_t expo = unit_group(q).exponent();
      for (std::size_t i = 0; i < chars.size(); ++i) {
        for (std::size_t j = 0; j < chars.size(); ++j) {
          CyclotomicElement sum = CyclotomicElement::zero(expo);
          for (std::int64_t a : unit_group(q).units()) {
            sum += chars[i](a) * chars[j](a).conjugate();
          }
          const auto expect = (i == j) ? CyclotomicElement::from_rational(expo, unit_group(q).phi())
                                       : CyclotomicElement::zero(expo);
          ok = ok && sum == expect;
        }
      }
    }
    t.run("character orthogonality", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q : {4, 6, 8}) {
      for (int i = 0; i < (deep ? 6 : 2); ++i) {
        const auto f = testutil_random(q, rng);
        const auto a = eval_L1(f, 96, EvalMethod::digamma);
        const auto b = eval_L1(f, 96, EvalMethod::fourier_log);
        ok = ok && a.value.overlaps(b.value);
        if (deep) {
          const auto c = eval_L1(f, 96, EvalMethod::hurwitz);
          ok = ok && a.value.overlaps(c.value) && b.value.overlaps(c.value);
        }
      }
    }
    t.run("L(1, f) oracle concordance", ok);
  }
  {
    bool ok = true;
    for (std::int64_t q = 2; q <= (deep ? 200 : 50); ++q) {
      ok = ok && digamma_unit_sum_bound(q, 96).holds;
    }
    for (std::int64_t q = 2; q <= (deep ? 50 : 20); ++q) {
      ok = ok && mobius_log_identity(q, 96).agree;
    }
    t.run("digamma unit-sum bound and mobius log identity", ok);
  }

  std::cout << (t.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return t.failures == 0 ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact vanishing decisions and certified evaluation of L(s, f) for periodic "
               "rational f"};
  app.require_subcommand(1);
  Options opt;

  auto* decide = app.add_subcommand("decide", "decide whether L(1, f) = 0 exactly");
  decide->add_option("path", opt.path, "function spec file (JSON)")->required();
  decide->add_option("--precision", opt.precision, "working precision in bits (default 128)");
  decide->add_option("--route", opt.route, "okada | theorem1 | both (default both)")
      ->check(CLI::IsMember({"okada", "theorem1", "both"}));
  decide->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* kernel = app.add_subcommand("kernel", "basis of the vanishing space for a modulus");
  kernel->add_option("--q", opt.q, "modulus")->required();
  kernel->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate L(s, f) with certified error bounds");
  eval->add_option("path", opt.path, "function spec file (JSON)")->required();
  eval->add_option("--s", opt.s_text, "evaluation point (rational or decimal, default 1)");
  eval->add_option("--precision", opt.precision, "working precision in bits (default 128)");
  eval->add_option("--method", opt.method,
                   "s = 1 only: digamma | hurwitz | fourier_log | partial_sum");
  eval->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* epsilon = app.add_subcommand("epsilon", "Okada weight epsilon(r, p) for r mod q");
  epsilon->add_option("--q", opt.q, "modulus")->required();
  epsilon->add_option("--r", opt.r, "residue, 1 <= r <= q")->required();
  epsilon->add_option("--p", opt.p, "prime divisor of q")->required();
  epsilon->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* fourier = app.add_subcommand("fourier", "exact Fourier coefficients of f");
  fourier->add_option("path", opt.path, "function spec file (JSON)")->required();
  fourier->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* characters = app.add_subcommand("characters", "Dirichlet characters mod q");
  characters->add_option("--q", opt.q, "modulus")->required();
  characters->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--level", opt.level, "1 (fast, default) or 2 (deep)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (decide->parsed()) return cmd_decide(opt);
    if (kernel->parsed()) return cmd_kernel(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (epsilon->parsed()) return cmd_epsilon(opt);
    if (fourier->parsed()) return cmd_fourier(opt);
    if (characters->parsed()) return cmd_characters(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 71;
  }
  return kExitParse;
}
