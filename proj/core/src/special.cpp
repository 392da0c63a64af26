#include "lseries/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace lseries {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, ... via the classic recurrence

Rational pow_rational(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;  // base canonical => power canonical
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

Rational bernoulli_even(unsigned k) {
  const std::size_t need = 2 * static_cast<std::size_t>(k);
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) g_bernoulli.push_back(Rational(1));
  while (g_bernoulli.size() <= need) {
    const unsigned long m = g_bernoulli.size();
    // sum_{j<m} C(m+1, j) B_j = 0
    Rational acc = 0;
    Integer binom;
    for (unsigned long j = 0; j < m; ++j) {
      if (j > 1 && (j & 1)) continue;  // odd Bernoulli numbers vanish
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom) * g_bernoulli[j];
    }
    g_bernoulli.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return g_bernoulli[need];
}

Ball euler_gamma(mpfr_prec_t prec) {
  // the constant is rounded once, so the half-ulp at prec+8 is < 2^{-prec}
  return Ball::euler_gamma_constant(prec + 8);
}

Ball digamma(const Rational& x, mpfr_prec_t prec) {
  if (x <= 0) throw std::domain_error("digamma: argument must be positive");
  const mpfr_prec_t wp = prec + 32;

  // Shift target and series length from double estimates; rigor comes from
  // the exact first-omitted-term bound added at the end.
  const double target_log2 = -static_cast<double>(prec + 8);
  double ymin = std::max(8.0, 0.13 * static_cast<double>(wp));
  unsigned series_len = 0;
  while (series_len == 0) {
    double prev = 1e300;
    for (unsigned k = 1; k < 200000; ++k) {
      const double l2b =
          1.2 + std::lgamma(2.0 * k + 1.0) / M_LN2 - 2.0 * k * std::log2(2.0 * M_PI);
      const double lt = l2b - std::log2(2.0 * k) - 2.0 * k * std::log2(ymin);
      if (lt < target_log2) {
        series_len = k;
        break;
      }
      if (lt > prev) break;  // series bottomed out above target: shift further
      prev = lt;
    }
    if (series_len == 0) ymin *= 1.5;
  }

  const double xd = mpq_get_d(x.get_mpq_t());
  long shift = 0;
  if (xd < ymin) shift = static_cast<long>(std::ceil(ymin - xd));
  const Rational y = x + shift;

  // psi(y) = log y - 1/(2y) - sum B_{2k} / (2k y^{2k}), tail <= first omitted
  const Ball yb = Ball::from_rational(y, wp);
  Ball result = yb.log();
  result -= Ball::from_rational(Rational(1) / (2 * y), wp);
  const Rational y2inv = Rational(1) / (y * y);
  const Ball zb = Ball::from_rational(y2inv, wp);
  Ball pw = zb;
  for (unsigned k = 1; k <= series_len; ++k) {
    result -= pw.mul_rational(bernoulli_even(k) / Rational(2L * k));
    if (k < series_len) pw = pw * zb;
  }
  Rational rem = bernoulli_even(series_len + 1) / Rational(2L * (series_len + 1));
  rem = abs(rem) * pow_rational(y2inv, series_len + 1) * (y * y);
  // rem = |B_{2K+2}| / ((2K+2) y^{2K+2})
  result.add_error(rem);

  // psi(x) = psi(y) - sum_{i=0}^{shift-1} 1/(x+i)
  for (long i = 0; i < shift; ++i) {
    result -= Ball::from_rational(Rational(1) / (x + i), wp);
  }
  return result;
}

Ball digamma_series(const Rational& x, mpfr_prec_t prec, unsigned long terms) {
  if (x <= 0) throw std::domain_error("digamma_series: argument must be positive");
  if (terms == 0) throw std::invalid_argument("digamma_series: need at least one term");
  const mpfr_prec_t wp = prec + 16;
  Ball acc = -euler_gamma(wp);
  acc -= Ball::from_rational(Rational(1) / x, wp);
  for (unsigned long n = 1; n <= terms; ++n) {
    // 1/(n+x) - 1/n = -x / (n (n+x))
    acc += Ball::from_rational(x / (Rational(static_cast<long>(n)) * (x + static_cast<long>(n))), wp);
  }
  // remaining tail lies in (0, x/terms)
  const Rational half_tail = x / (2 * Rational(static_cast<long>(terms)));
  acc += Ball::from_rational(half_tail, wp);
  acc.add_error(half_tail);
  return acc;
}

Ball hurwitz_zeta(const Rational& s, const Rational& x, mpfr_prec_t prec,
                  std::uint64_t* terms_used) {
  if (s == 1) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  if (s <= 0) throw std::domain_error("hurwitz_zeta: s must be positive");
  if (x <= 0 || x > 1) throw std::domain_error("hurwitz_zeta: x must be in (0, 1]");
  const mpfr_prec_t wp = prec + 48;
  const double sd = mpq_get_d(s.get_mpq_t());
  const double xd = mpq_get_d(x.get_mpq_t());

  // Euler-Maclaurin lengths; the remainder of the k-sum is bounded by the
  // first omitted term for real s with s + 2K + 1 > 0.
  const unsigned K = std::max<unsigned>(4, static_cast<unsigned>(0.22 * wp));
  unsigned long N = std::max<unsigned long>(K, static_cast<unsigned long>(0.3 * wp));
  const double target = -static_cast<double>(prec + 8);
  while (true) {
    const double log2_rem = 1.2 - (2.0 * K + 2.0) * std::log2(2.0 * M_PI) +
                            (std::lgamma(sd + 2 * K + 1) - std::lgamma(sd)) / M_LN2 -
                            (sd + 2 * K + 1) * std::log2(static_cast<double>(N) + xd);
    if (log2_rem < target) break;
    N = N + N / 2 + 1;
  }

  const bool s_is_int = (s.get_den() == 1) && s.get_num().fits_slong_p();
  const long s_int = s_is_int ? s.get_num().get_si() : 0;
  const Ball sball = Ball::from_rational(s, wp);
  auto power = [&](const Rational& base, const Ball& expo_neg) -> Ball {
    // base^{expo_neg}; base > 0 rational
    if (base == 1) return Ball::from_int(1, wp);
    return (Ball::from_rational(base, wp).log() * expo_neg).exp();
  };

  Ball total(wp);
  // sum_{n<N} (n+x)^{-s}
  for (unsigned long n = 0; n < N; ++n) {
    const Rational base = x + static_cast<long>(n);
    if (s_is_int) {
      total += Ball::from_rational(base, wp).pow_int(-s_int);
    } else {
      total += power(base, -sball);
    }
  }
  const Rational big = x + static_cast<long>(N);
  const Ball big_pow_ms = s_is_int ? Ball::from_rational(big, wp).pow_int(-s_int)
                                   : power(big, -sball);
  // (N+x)^{1-s}/(s-1)
  total += big_pow_ms.mul_rational(big) / Ball::from_rational(s - 1, wp);
  // (N+x)^{-s}/2
  total += big_pow_ms.div_int(2);

  // sum_k B_{2k}/(2k)! (s)_{2k-1} (N+x)^{1-s-2k}
  const Rational big2inv = Rational(1) / (big * big);
  Ball poch = sball;                            // (s)_1
  Ball w = big_pow_ms.mul_rational(big * big2inv);  // (N+x)^{-s-1}
  for (unsigned k = 1; k <= K; ++k) {
    const Rational coeff = bernoulli_even(k) / Rational(factorial(2 * k));
    total += (poch * w).mul_rational(coeff);
    // advance to (s)_{2k+1} and (N+x)^{-s-2k-1}
    const Ball t1 = sball + Ball::from_int(2L * k - 1, wp);
    const Ball t2 = sball + Ball::from_int(2L * k, wp);
    poch = poch * t1 * t2;
    w = w.mul_rational(big2inv);
  }
  const Rational rem_coeff = abs(bernoulli_even(K + 1)) / Rational(factorial(2 * K + 2));
  Ball rem = (poch * w).mul_rational(rem_coeff);
  total.add_error_from(rem);

  if (terms_used) *terms_used = N + K;
  return total;
}

ComplexBall log_one_minus_root(std::int64_t b, std::int64_t q, mpfr_prec_t prec) {
  if (q < 1) throw std::invalid_argument("log_one_minus_root: modulus must be positive");
  std::int64_t br = b % q;
  if (br < 0) br += q;
  if (br == 0) throw std::domain_error("log_one_minus_root: b = 0 mod q (log of zero)");
  const mpfr_prec_t wp = prec + 16;
  const Ball pi = Ball::pi(wp);
  const Ball sine = pi.mul_rational(Rational(br, q)).sin();
  const Ball re = (sine + sine).log();
  const Ball im = pi.mul_rational(Rational(2 * br - q, 2 * q));
  return ComplexBall(re, im);
}

ComplexBall root_of_unity(std::int64_t order, std::int64_t k, mpfr_prec_t prec) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  std::int64_t kr = k % order;
  if (kr < 0) kr += order;
  if (kr == 0) return ComplexBall(Ball::from_int(1, prec), Ball(prec));
  const mpfr_prec_t wp = prec + 16;
  const Ball angle = Ball::pi(wp).mul_rational(Rational(2 * kr, order));
  return ComplexBall(angle.cos(), angle.sin());
}

}  // namespace lseries
