#pragma once

#include <vector>

#include "lseries/ball.hpp"
#include "lseries/cyclotomic.hpp"
#include "lseries/periodic_function.hpp"

namespace lseries {

// Outcome of the cyclotomic-unit product criterion: with c_{bj} the
// power-basis coordinates of f^(b) and N the lcm of their denominators,
// L(1, f) = 0 iff every P_j = prod_b (1 - zeta^b)^{N c_{bj}} equals 1 and
// every lambda_j = sum_b c_{bj} Log(1 - zeta^b) is 0 (principal branches).
struct ProductCriterionResult {
  bool vanishing = false;
  // P_j for j = 0..phi(q)-1 when the exact stage ran (exact_stage_ran);
  // empty when a lambda_j was already certified nonzero numerically.
  std::vector<CyclotomicElement> unit_products;
  // k_j with lambda_j = 2 pi i k_j / N, read off the certified enclosures
  // once all P_j = 1; all zero exactly when f vanishes at s = 1.
  std::vector<long> root_of_unity_indices;
  mpfr_prec_t precision_used = 0;
  bool exact_stage_ran = false;
};

// Decides L(1, f) = 0 via the unit products. Requires zero-mean f (pole
// otherwise). The function is scaled to integer values first (vanishing is
// invariant under scaling), which bounds N by q. Enclosures of the lambda_j
// are tried first: a lambda_j separated from zero certifies nonvanishing
// without expanding any product; otherwise the P_j are compared exactly and
// the lattice indices are read from enclosures with radius < pi/(2N),
// doubling the precision (up to kMaxPrecision) if the radii are too wide.
ProductCriterionResult product_criterion_decide(const PeriodicFunction& f,
                                                mpfr_prec_t prec = kDefaultPrecision);

}  // namespace lseries
