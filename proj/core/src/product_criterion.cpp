#include "lseries/product_criterion.hpp"

#include <stdexcept>

#include "lseries/arith.hpp"
#include "lseries/special.hpp"

namespace lseries {

ProductCriterionResult product_criterion_decide(const PeriodicFunction& f, mpfr_prec_t prec) {
  if (!f.has_zero_mean()) {
    throw std::domain_error("product_criterion_decide: L(s, f) has a pole at s = 1");
  }
  const std::int64_t q = f.modulus();

  ProductCriterionResult result;
  result.precision_used = prec;
  if (q == 1) {  // zero mean forces f == 0
    result.vanishing = true;
    result.exact_stage_ran = true;
    return result;
  }

  // Clear denominators: L(1, c f) = c L(1, f), so vanishing is unchanged and
  // the coordinate denominators then divide q.
  const Integer den = lcm_denominators(f.values());
  PeriodicFunction g = f;
  if (den != 1) {
    std::vector<Rational> scaled(f.values());
    for (auto& v : scaled) {
      v *= Rational(den);
      v.canonicalize();
    }
    g = PeriodicFunction(q, std::move(scaled));
  }

  const std::vector<std::vector<Rational>> coords = coefficient_matrix(g);
  const std::size_t phi = coords.empty() ? 1 : coords[0].size();

  Integer common = 1;
  for (const auto& row : coords) {
    for (const auto& c : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!(common <= q && Integer(q) % common == 0)) {
    throw std::logic_error("product_criterion_decide: denominator lcm does not divide q");
  }
  const long scale = static_cast<long>(common.get_si());

  // integer exponents N c_{bj}
  std::vector<std::vector<long>> expn(coords.size(), std::vector<long>(phi, 0));
  for (std::size_t b = 0; b < coords.size(); ++b) {
    for (std::size_t j = 0; j < phi; ++j) {
      const Rational e = coords[b][j] * scale;
      if (e.get_den() != 1) throw std::logic_error("product_criterion_decide: scaling failed");
      if (!e.get_num().fits_slong_p()) {
        throw std::invalid_argument("product_criterion_decide: exponent overflow");
      }
      expn[b][j] = e.get_num().get_si();
    }
  }

  // Enclose lambda_j = sum_b c_{bj} Log(1 - zeta^b); retry at doubled
  // precision until each scaled imaginary part has radius < 1/4.
  mpfr_prec_t wp = prec;
  std::vector<ComplexBall> lambdas;
  while (true) {
    std::vector<ComplexBall> logs(static_cast<std::size_t>(q));  // index b, 1..q-1 used
    std::vector<bool> have(static_cast<std::size_t>(q), false);
    lambdas.assign(phi, ComplexBall(wp));
    for (std::size_t j = 0; j < phi; ++j) {
      ComplexBall acc(wp);
      for (std::size_t b = 0; b + 1 < static_cast<std::size_t>(q); ++b) {
        const Rational& c = coords[b][j];
        if (c == 0) continue;
        if (!have[b + 1]) {
          logs[b + 1] = log_one_minus_root(static_cast<std::int64_t>(b + 1), q, wp);
          have[b + 1] = true;
        }
        acc += logs[b + 1].mul_rational(c);
      }
      lambdas[j] = acc;
    }

    bool some_nonzero = false;
    for (const auto& l : lambdas) {
      if (l.is_nonzero()) {
        some_nonzero = true;
        break;
      }
    }
    if (some_nonzero) {
      // some principal-log combination is certified nonzero, hence some
      // alpha_j != 1 and L(1, f) != 0; the products are not needed
      result.vanishing = false;
      result.precision_used = wp;
      result.exact_stage_ran = false;
      return result;
    }

    // all enclosures contain zero: need them tight enough to pin the unique
    // lattice point of (2 pi / N) Z once the products confirm P_j = 1
    const Ball two_pi = Ball::pi(wp) + Ball::pi(wp);
    bool tight = true;
    for (const auto& l : lambdas) {
      const Ball scaled = l.imag().mul_rational(Rational(scale)) / two_pi;
      if (!scaled.radius_less_than_2exp(-2)) {
        tight = false;
        break;
      }
    }
    if (tight) break;
    if (wp >= kMaxPrecision) {
      throw std::runtime_error("product_criterion_decide: precision cap reached");
    }
    wp = std::min<mpfr_prec_t>(2 * wp, kMaxPrecision);
  }
  result.precision_used = wp;

  // Exact stage: P_j = prod_b (1 - zeta^b)^{N c_{bj}}, negative exponents
  // collected on the divisor side so only a failing P_j needs an inversion.
  result.exact_stage_ran = true;
  result.vanishing = true;
  std::vector<CyclotomicElement> bases(static_cast<std::size_t>(q));
  std::vector<bool> have_base(static_cast<std::size_t>(q), false);
  const CyclotomicElement one = CyclotomicElement::one(q);
  for (std::size_t j = 0; j < phi; ++j) {
    CyclotomicElement num = one;
    CyclotomicElement div = one;
    for (std::size_t b = 1; b < static_cast<std::size_t>(q); ++b) {
      const long e = expn[b - 1][j];
      if (e == 0) continue;
      if (!have_base[b]) {
        bases[b] = one - CyclotomicElement::zeta_power(q, static_cast<std::int64_t>(b));
        have_base[b] = true;
      }
      if (e > 0) {
        num *= bases[b].pow(e);
      } else {
        div *= bases[b].pow(-e);
      }
    }
    if (num == div) {
      result.unit_products.push_back(one);
    } else {
      result.vanishing = false;
      result.unit_products.push_back(num * div.inverse());
    }
  }
  if (!result.vanishing) return result;

  // every P_j = 1, so lambda_j lies in (2 pi i / N) Z; read the lattice index
  const Ball two_pi = Ball::pi(wp) + Ball::pi(wp);
  for (std::size_t j = 0; j < phi; ++j) {
    const Ball scaled = lambdas[j].imag().mul_rational(Rational(scale)) / two_pi;
    const long k = mpfr_get_si(scaled.midpoint(), MPFR_RNDN);
    if (!scaled.contains(Rational(k))) {
      throw std::logic_error("product_criterion_decide: lattice read-off failed");
    }
    result.root_of_unity_indices.push_back(k);
    if (k != 0) result.vanishing = false;
  }
  return result;
}

}  // namespace lseries
