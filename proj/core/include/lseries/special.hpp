#pragma once

#include <cstdint>

#include "lseries/ball.hpp"
#include "lseries/rational.hpp"

namespace lseries {

// B_{2k}, exact. Cached process-wide behind a mutex.
Rational bernoulli_even(unsigned k);

// Euler's constant with radius < 2^{-prec}.
Ball euler_gamma(mpfr_prec_t prec);

// psi(x) for rational x > 0 with radius < 2^{-prec}: the argument is shifted
// up by the recurrence psi(x+1) = psi(x) + 1/x, then the asymptotic series in
// 1/x^2 is summed with the first omitted term folded into the radius.
Ball digamma(const Rational& x, mpfr_prec_t prec);

// Partial sum of the defining series
//   -psi(x) = gamma + 1/x + sum_{n>=1} (1/(n+x) - 1/n)
// over n <= terms, with the tail enclosed in the radius. Slow; serves as an
// independent oracle for digamma.
Ball digamma_series(const Rational& x, mpfr_prec_t prec, unsigned long terms);

// zeta(s, x) = sum_{n>=0} (n+x)^{-s} for rational s != 1 and 0 < x <= 1,
// continued via Euler-Maclaurin with the remainder bound in the radius.
// terms_used, when given, receives the count of summed terms.
Ball hurwitz_zeta(const Rational& s, const Rational& x, mpfr_prec_t prec,
                  std::uint64_t* terms_used = nullptr);

// Principal Log(1 - e^{2 pi i b/q}) = ln(2 sin(pi b/q)) + i pi (2b - q)/(2q);
// requires 1 <= b mod q <= q-1.
ComplexBall log_one_minus_root(std::int64_t b, std::int64_t q, mpfr_prec_t prec);

// e^{2 pi i k / order}
ComplexBall root_of_unity(std::int64_t order, std::int64_t k, mpfr_prec_t prec);

}  // namespace lseries
