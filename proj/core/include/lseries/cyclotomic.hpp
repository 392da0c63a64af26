#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lseries/ball.hpp"
#include "lseries/periodic_function.hpp"
#include "lseries/rational.hpp"

namespace lseries {

// Exact cyclotomic arithmetic is quadratic in phi(q) with dense tables, so it
// gets a separate, smaller cap than the rest of the library.
inline constexpr std::int64_t kMaxCyclotomicModulus = 4096;

// Dense integer polynomial, ascending powers, no trailing zero coefficients.
using IntPolynomial = std::vector<Integer>;

// Phi_q, exact, degree phi(q); computed by dividing x^q - 1 by the Phi_d for
// proper divisors d and cached process-wide.
const IntPolynomial& cyclotomic_polynomial(std::int64_t q);

// Element of Q(zeta_q) on the power basis 1, zeta, ..., zeta^{phi(q)-1},
// always reduced mod Phi_q. Immutable value type.
class CyclotomicElement {
 public:
  CyclotomicElement();  // zero in Q(zeta_1) = Q
  CyclotomicElement(std::int64_t modulus, std::vector<Rational> coeffs);

  static CyclotomicElement zero(std::int64_t modulus);
  static CyclotomicElement one(std::int64_t modulus);
  static CyclotomicElement from_rational(std::int64_t modulus, const Rational& r);
  static CyclotomicElement zeta_power(std::int64_t modulus, std::int64_t k);

  std::int64_t modulus() const { return q_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q; then *value receives it if non-null.
  bool is_rational(Rational* value = nullptr) const;

  CyclotomicElement operator-() const;
  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  CyclotomicElement& operator+=(const CyclotomicElement& b);
  CyclotomicElement& operator*=(const CyclotomicElement& b);
  CyclotomicElement mul_rational(const Rational& c) const;

  CyclotomicElement inverse() const;      // throws on zero
  CyclotomicElement pow(long e) const;    // negative e via inverse
  CyclotomicElement conjugate() const;    // zeta -> zeta^{-1}

  // Galois action zeta -> zeta^a; requires gcd(a, q) = 1.
  CyclotomicElement galois(std::int64_t a) const;

  // Numeric embedding with zeta_q = e^{2 pi i / q}.
  ComplexBall embed(mpfr_prec_t prec) const;

  // Polynomial rendering in the variable z, e.g. "1/2*z^3 - z + 2".
  std::string to_string() const;

  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  std::int64_t q_;
  std::vector<Rational> coeffs_;  // size phi(q)
};

struct FourierCoefficients {
  std::int64_t modulus = 1;
  std::vector<CyclotomicElement> hat;  // hat[b-1] = f^(b) for b = 1..q
};

// f^(b) = q^{-1} sum_a f(a) zeta^{-ab}, exact in Q(zeta_q).
FourierCoefficients fourier_transform(const PeriodicFunction& f);

// f(b) = sum_a f^(a) zeta^{ab}; throws if some reconstructed value has a
// nonzero zeta-component (coefficients not produced by a rational function).
PeriodicFunction fourier_inverse(const FourierCoefficients& coefficients);

// Power-basis coordinate rows c[b-1][j] of f^(b) for b = 1..q-1.
// Requires zero mean (so that f^(q) = 0 and the rows b < q carry everything).
std::vector<std::vector<Rational>> coefficient_matrix(const PeriodicFunction& f);

}  // namespace lseries
