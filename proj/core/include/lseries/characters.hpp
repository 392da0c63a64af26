#pragma once

#include <cstdint>
#include <vector>

#include "lseries/ball.hpp"
#include "lseries/cyclotomic.hpp"
#include "lseries/periodic_function.hpp"

namespace lseries {

// Cyclic decomposition of (Z/qZ)^*: one generator per cyclic factor (CRT
// over odd prime powers; {-1, 5} for 2^k with k >= 3). Cached per modulus.
class UnitGroupStructure {
 public:
  std::int64_t modulus() const { return q_; }
  std::int64_t phi() const { return phi_; }
  std::int64_t exponent() const { return exponent_; }  // lcm of orders
  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  // Units in [1..q], ascending (q itself only for q = 1).
  const std::vector<std::int64_t>& units() const { return units_; }

  bool is_unit(std::int64_t a) const;
  // Componentwise discrete logarithm; requires gcd(a, q) = 1.
  std::vector<std::int64_t> discrete_log(std::int64_t a) const;

 private:
  friend const UnitGroupStructure& unit_group(std::int64_t q);
  UnitGroupStructure() = default;

  // One table per generator: the exponent of that generator in the local
  // decomposition of a mod prime_power (-1 marks non-units).
  struct Component {
    std::uint64_t prime_power;
    std::vector<std::int64_t> dlog;
  };

  std::int64_t q_ = 1;
  std::int64_t phi_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> units_;
  std::vector<Component> components_;  // aligned with generators_
};

const UnitGroupStructure& unit_group(std::int64_t q);

// Character of (Z/qZ)^* given by exponents on the unit-group generators;
// chi(a) is a root of unity in Q(zeta_E) with E the group exponent, and 0
// off the units.
class DirichletCharacter {
 public:
  DirichletCharacter(std::int64_t q, std::vector<std::int64_t> exponents);

  static DirichletCharacter principal(std::int64_t q);

  std::int64_t modulus() const { return q_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  bool is_principal() const;
  std::int64_t value_modulus() const;  // E: chi takes values in Q(zeta_E)

  // t with chi(a) = zeta_E^t; requires gcd(a, q) = 1.
  std::int64_t value_exponent(std::int64_t a) const;
  // chi(a) as an element of Q(zeta_E); zero for non-units.
  CyclotomicElement operator()(std::int64_t a) const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  std::int64_t q_;
  std::vector<std::int64_t> exps_;
};

// All phi(q) characters mod q, principal character first, then odometer
// order over the exponent vectors.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t q);

// (f, chi) = phi(q)^{-1} sum over units a of f(a) conj(chi(a)), exact in
// Q(zeta_E).
CyclotomicElement inner_product(const PeriodicFunction& f, const DirichletCharacter& chi);

// Coefficients (g, chi) for every character, aligned with
// enumerate_characters(q); g must vanish off the units.
std::vector<CyclotomicElement> character_decompose(const PeriodicFunction& g);

struct DedekindDeterminant {
  ComplexBall determinant;        // det [F(x y^{-1})] over the units
  ComplexBall character_product;  // prod_chi sum_x chi(x) F(x)
  bool agree = false;             // the two enclosures overlap
};

// Both sides of the Dedekind determinant identity for G = (Z/qZ)^*.
// values_on_units is aligned with unit_group(q).units(). The determinant is
// expanded division-free, so phi(q) is capped at 16.
DedekindDeterminant dedekind_determinant(std::int64_t q,
                                         const std::vector<ComplexBall>& values_on_units,
                                         mpfr_prec_t prec);

}  // namespace lseries
