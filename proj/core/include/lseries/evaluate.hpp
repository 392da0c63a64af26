#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lseries/ball.hpp"
#include "lseries/cyclotomic.hpp"
#include "lseries/periodic_function.hpp"

namespace lseries {

enum class EvalMethod { digamma, hurwitz, fourier_log, partial_sum };

const char* to_string(EvalMethod method);

struct EvalReport {
  ComplexBall value;
  EvalMethod method = EvalMethod::digamma;
  mpfr_prec_t precision_bits = 0;
  std::uint64_t terms_used = 0;
};

// L(1, f) for zero-mean rational f (throws on a nonzero mean: pole).
//   digamma:     -q^{-1} sum_a f(a) psi(a/q)
//   fourier_log: -sum_{b<q} f^(b) Log(1 - zeta^b)
//   hurwitz:     (L(1+d, f) + L(1-d, f))/2 via Hurwitz zeta, with the
//                central-difference error d^2 B folded into the radius
//   partial_sum: tapered partial sums of sum f(n)/n with an Abel-summation
//                tail bound; converges like 1/terms, so the radius is wide
//                (sanity oracle, not a high-precision route)
EvalReport eval_L1(const PeriodicFunction& f, mpfr_prec_t prec = kDefaultPrecision,
                   EvalMethod method = EvalMethod::digamma);

// L(1, f) for f with values in Q(zeta_m) (e.g. a Dirichlet character),
// via the digamma formula with embedded values. Values are indexed like
// PeriodicFunction (slot q holds f(0)); their exact sum must be zero.
EvalReport eval_L1(std::int64_t q, const std::vector<CyclotomicElement>& values,
                   mpfr_prec_t prec = kDefaultPrecision);

// L(s, f) = q^{-s} sum_a f(a) zeta(s, a/q) for rational s > 0, s != 1.
EvalReport eval_Ls(const PeriodicFunction& f, const Rational& s,
                   mpfr_prec_t prec = kDefaultPrecision);

// sum over units a of psi(a/q) against the bound -gamma phi(q); holds means
// the sum's enclosure lies strictly below the bound's.
struct SeparationCheck {
  Ball sum;
  Ball bound;
  bool holds = false;
};
SeparationCheck digamma_unit_sum_bound(std::int64_t q, mpfr_prec_t prec = kDefaultPrecision);

// For g = (unit indicator, g(q) = -phi(q)): L(1, g) computed by digamma on
// the left and q^{-1} sum_{d|q} mu(q/d) d log d on the right.
struct IdentityCheck {
  Ball lhs;
  Ball rhs;
  bool agree = false;
};
IdentityCheck mobius_log_identity(std::int64_t q, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace lseries
