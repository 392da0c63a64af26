#include "lseries/evaluate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lseries/arith.hpp"
#include "lseries/special.hpp"

namespace lseries {

const char* to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::digamma: return "digamma";
    case EvalMethod::hurwitz: return "hurwitz";
    case EvalMethod::fourier_log: return "fourier_log";
    case EvalMethod::partial_sum: return "partial_sum";
  }
  return "?";
}

namespace {

long ceil_log2(std::int64_t n) {
  long b = 0;
  while ((std::int64_t(1) << b) < n) ++b;
  return b;
}

void require_zero_mean(const PeriodicFunction& f) {
  if (!f.has_zero_mean()) {
    throw std::domain_error("L(1, f) has a pole at s = 1 (residue " + to_string(f.mean()) +
                            ")");
  }
}

// max |sum_{a<=k} f(a)| over one period: bounds all partial sums of f since
// the mean is zero
Rational prefix_bound(const PeriodicFunction& f) {
  Rational run = 0, best = 0;
  for (std::int64_t a = 1; a <= f.modulus(); ++a) {
    run += f(a);
    if (abs(run) > best) best = abs(run);
  }
  return best;
}

// core of L(s, f) shared by eval_Ls and the hurwitz route of eval_L1
Ball ls_core(const PeriodicFunction& f, const Rational& s, mpfr_prec_t wp,
             std::uint64_t* terms) {
  const std::int64_t q = f.modulus();
  Ball acc(wp);
  std::uint64_t total = 0;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (f(a) == 0) continue;
    std::uint64_t used = 0;
    acc += hurwitz_zeta(s, Rational(a, q), wp, &used).mul_rational(f(a));
    total += used;
  }
  // q^{-s} factor
  const Ball qs = (Ball::log_int(static_cast<unsigned long>(q), wp) *
                   Ball::from_rational(-s, wp))
                      .exp();
  if (terms) *terms = total;
  return acc * qs;
}

}  // namespace

EvalReport eval_L1(const PeriodicFunction& f, mpfr_prec_t prec, EvalMethod method) {
  require_zero_mean(f);
  const std::int64_t q = f.modulus();
  EvalReport report;
  report.method = method;
  report.precision_bits = prec;

  switch (method) {
    case EvalMethod::digamma: {
      const mpfr_prec_t wp = prec + 16 + ceil_log2(q + 1);
      Ball acc(wp);
      std::uint64_t terms = 0;
      for (std::int64_t a = 1; a <= q; ++a) {
        if (f(a) == 0) continue;
        acc += digamma(Rational(a, q), wp).mul_rational(f(a));
        ++terms;
      }
      report.value = ComplexBall(acc.div_int(-q));
      report.terms_used = terms;
      return report;
    }

    case EvalMethod::fourier_log: {
      const mpfr_prec_t wp = prec + 16 + ceil_log2(q + 1);
      const FourierCoefficients F = fourier_transform(f);
      ComplexBall acc(wp);
      std::uint64_t terms = 0;
      for (std::int64_t b = 1; b < q; ++b) {
        if (F.hat[b - 1].is_zero()) continue;
        acc += F.hat[b - 1].embed(wp) * log_one_minus_root(b, q, wp);
        ++terms;
      }
      report.value = -acc;
      report.terms_used = terms;
      return report;
    }

    case EvalMethod::hurwitz: {
      // centered limit: (L(1+d) + L(1-d))/2 = L(1) + (d^2/2) L''(xi),
      // |L''| <= 2B on [3/4, 5/4] by Abel summation with |partial sums| <= B
      const Rational bound = prefix_bound(f);
      if (bound == 0) {
        report.value = ComplexBall(Ball(prec));
        return report;
      }
      const long k = std::max<long>(2, (prec + 8 + log2_bound(bound)) / 2 + 1);
      Rational delta(1);
      mpz_mul_2exp(delta.get_den_mpz_t(), delta.get_den_mpz_t(),
                   static_cast<unsigned long>(k));  // delta = 2^{-k}
      const mpfr_prec_t wp =
          std::min<mpfr_prec_t>(kMaxPrecision, prec + static_cast<mpfr_prec_t>(k) + 64);
      std::uint64_t t1 = 0, t2 = 0;
      const Ball upper = ls_core(f, Rational(1) + delta, wp, &t1);
      const Ball lower = ls_core(f, Rational(1) - delta, wp, &t2);
      Ball value = (upper + lower).div_int(2);
      value.add_error(delta * delta * bound);
      report.value = ComplexBall(value);
      report.terms_used = t1 + t2;
      return report;
    }

    case EvalMethod::partial_sum: {
      const Rational bound = prefix_bound(f);
      const mpfr_prec_t wp = prec + 16;
      const std::uint64_t half =
          std::clamp<std::uint64_t>(static_cast<std::uint64_t>(prec) * 2000, 1000, 2000000);
      Ball acc(wp);
      for (std::uint64_t n = 1; n <= 2 * half; ++n) {
        const Rational& v = f(static_cast<std::int64_t>(n));
        if (v == 0) continue;
        Rational term = v / Rational(static_cast<unsigned long>(n));
        if (n > half) {
          term *= Rational(static_cast<unsigned long>(2 * half - n),
                           static_cast<unsigned long>(half));
        }
        acc += Ball::from_rational(term, wp);
      }
      // Abel tail bound: the taper weights have total variation 1/half
      acc.add_error(bound / Rational(static_cast<unsigned long>(half)));
      report.value = ComplexBall(acc);
      report.terms_used = 2 * half;
      return report;
    }
  }
  throw std::logic_error("eval_L1: unknown method");
}

EvalReport eval_L1(std::int64_t q, const std::vector<CyclotomicElement>& values,
                   mpfr_prec_t prec) {
  if (static_cast<std::int64_t>(values.size()) != q) {
    throw std::invalid_argument("eval_L1: expected q values");
  }
  CyclotomicElement sum = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) sum += values[i];
  if (!sum.is_zero()) {
    throw std::domain_error("eval_L1: values do not sum to zero (pole at s = 1)");
  }
  const mpfr_prec_t wp = prec + 16 + ceil_log2(q + 1);
  ComplexBall acc(wp);
  std::uint64_t terms = 0;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (values[a - 1].is_zero()) continue;
    const Ball psi = digamma(Rational(a, q), wp);
    acc += values[a - 1].embed(wp) * ComplexBall(psi);
    ++terms;
  }
  EvalReport report;
  report.method = EvalMethod::digamma;
  report.precision_bits = prec;
  report.terms_used = terms;
  report.value = ComplexBall(acc.real().div_int(-q), acc.imag().div_int(-q));
  return report;
}

EvalReport eval_Ls(const PeriodicFunction& f, const Rational& s, mpfr_prec_t prec) {
  if (s == 1) throw std::domain_error("eval_Ls: s = 1 is the pole; use the L1 routines");
  if (s <= 0) throw std::domain_error("eval_Ls: s must be positive");
  const mpfr_prec_t wp = prec + 16 + ceil_log2(f.modulus() + 1);
  EvalReport report;
  report.method = EvalMethod::hurwitz;
  report.precision_bits = prec;
  report.value = ComplexBall(ls_core(f, s, wp, &report.terms_used));
  return report;
}

SeparationCheck digamma_unit_sum_bound(std::int64_t q, mpfr_prec_t prec) {
  if (q < 2) throw std::invalid_argument("digamma_unit_sum_bound: q must be >= 2");
  const mpfr_prec_t wp = prec + 16 + ceil_log2(q + 1);
  Ball sum(wp);
  long count = 0;
  for (std::int64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    sum += digamma(Rational(a, q), wp);
    ++count;
  }
  SeparationCheck check{sum, euler_gamma(wp).mul_rational(Rational(-count)), false};
  check.holds = check.sum.strictly_less(check.bound);
  return check;
}

IdentityCheck mobius_log_identity(std::int64_t q, mpfr_prec_t prec) {
  if (q < 2) throw std::invalid_argument("mobius_log_identity: q must be >= 2");
  std::vector<Rational> values(q, Rational(0));
  for (std::int64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) == 1) values[a - 1] = 1;
  }
  values[q - 1] = -Rational(static_cast<unsigned long>(euler_phi(q)));
  const PeriodicFunction g(q, std::move(values));

  IdentityCheck check{eval_L1(g, prec).value.real(), Ball(prec), false};
  const mpfr_prec_t wp = prec + 16;
  Ball rhs(wp);
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(q))) {
    if (d == 1) continue;  // log 1 = 0
    const int mu = mobius(static_cast<std::uint64_t>(q) / d);
    if (mu == 0) continue;
    rhs += Ball::log_int(d, wp).mul_rational(Rational(mu * static_cast<long>(d)));
  }
  check.rhs = rhs.div_int(q);
  check.agree = check.lhs.overlaps(check.rhs);
  return check;
}

}  // namespace lseries
