#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lseries/rational.hpp"

namespace lseries {

inline constexpr std::int64_t kMaxModulus = 1'000'000;

// Rational-valued function on the integers with period q. One period is
// stored indexed by the residues 1..q; the slot at q holds f(0) == f(q).
class PeriodicFunction {
 public:
  PeriodicFunction(std::int64_t modulus, std::vector<Rational> values);

  static PeriodicFunction zero(std::int64_t modulus);

  std::int64_t modulus() const { return q_; }
  const std::vector<Rational>& values() const { return values_; }

  // f(n) for any integer n; n is reduced mod q and residue 0 reads slot q.
  const Rational& operator()(std::int64_t n) const;

  Rational value_sum() const;
  Rational mean() const;       // q^{-1} * value_sum()
  bool has_zero_mean() const;  // recomputed, never cached

  friend bool operator==(const PeriodicFunction&, const PeriodicFunction&) = default;

 private:
  std::int64_t q_;
  std::vector<Rational> values_;
};

// f_a(b) = f(ab); requires gcd(a, q) = 1.
PeriodicFunction dilate(const PeriodicFunction& f, std::int64_t a);

// (f_e, f_o) with f_e(a) = (f(a) + f(-a))/2 and f_o(a) = (f(a) - f(-a))/2,
// so f = f_e + f_o with f_e even and f_o odd.
std::pair<PeriodicFunction, PeriodicFunction> even_odd_split(const PeriodicFunction& f);

// phi(q)^{-1} * sum over units a mod q of f(a) g(a). Moduli must agree.
Rational inner_product(const PeriodicFunction& f, const PeriodicFunction& g);

}  // namespace lseries
