#pragma once

#include <mpfr.h>

#include <string>

#include "lseries/rational.hpp"

namespace lseries {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 16384;

// Real interval stored as midpoint +- radius. The midpoint carries the
// working precision; the radius lives at a small fixed precision and every
// radius update rounds upward, so a Ball computed from exact inputs always
// encloses the exact value of the expression that produced it.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = kDefaultPrecision);  // exact zero
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  static Ball from_int(long value, mpfr_prec_t prec);
  static Ball from_rational(const Rational& value, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);
  static Ball euler_gamma_constant(mpfr_prec_t prec);  // mpfr's gamma
  static Ball ln2(mpfr_prec_t prec);
  // log of an exact positive integer (0 -> error), e.g. for divisor sums.
  static Ball log_int(unsigned long value, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr midpoint() const { return mid_; }
  mpfr_srcptr radius() const { return rad_; }

  bool is_exact() const;           // radius == 0
  bool contains_zero() const;      // |mid| <= rad
  bool is_nonzero() const;         // |mid| > rad
  bool is_positive() const;        // mid - rad > 0
  bool is_negative() const;        // mid + rad < 0
  bool contains(const Rational& value) const;
  bool overlaps(const Ball& other) const;
  // other's interval certainly inside this one
  bool contains_interval(const Ball& other) const;
  // upper bound of this interval strictly below lower bound of other
  bool strictly_less(const Ball& other) const;
  bool radius_less_than_2exp(long e) const;         // rad < 2^e
  bool radius_less_than_pow10(long k) const;        // rad < 10^k

  // Enlarges the radius; used to fold analytic tail bounds into a result.
  void add_error(const Rational& bound);
  void add_error_2exp(long e);          // radius += 2^e
  void add_error_from(const Ball& bound);  // radius += sup |bound|

  Ball operator-() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);  // b must exclude 0
  Ball& operator+=(const Ball& b);
  Ball& operator-=(const Ball& b);
  Ball& operator*=(const Ball& b);

  Ball mul_rational(const Rational& c) const;
  Ball div_int(long d) const;

  Ball abs() const;
  Ball log() const;  // interval must be strictly positive
  Ball exp() const;
  Ball sin() const;
  Ball cos() const;
  Ball sqrt() const;  // interval must be nonnegative
  Ball pow_int(long e) const;

  // Smallest ball (at this precision) containing both intervals.
  Ball hull(const Ball& other) const;

  // Round-trip helpers for reports: scientific decimal strings.
  std::string midpoint_string(std::size_t digits = 0) const;  // 0: from prec
  std::string radius_string() const;
  std::string to_string(std::size_t digits = 0) const;        // "m +- r"

  double radius_double() const;

 private:
  friend class ComplexBall;
  void bump_ulp(int inexact);  // account for one rounding of mid_

  mpfr_t mid_;
  mpfr_t rad_;
  mpfr_prec_t prec_;
};

// Rectangular complex enclosure: independent real and imaginary balls.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = kDefaultPrecision);
  ComplexBall(Ball re, Ball im);
  explicit ComplexBall(Ball re);  // imaginary part exact zero

  static ComplexBall from_rational(const Rational& value, mpfr_prec_t prec);

  const Ball& real() const { return re_; }
  const Ball& imag() const { return im_; }
  mpfr_prec_t precision() const;

  bool contains_zero() const;  // both components contain zero
  bool is_nonzero() const;     // some component separated from zero
  bool overlaps(const ComplexBall& other) const;
  bool radius_less_than_pow10(long k) const;  // both radii < 10^k

  ComplexBall conj() const;
  ComplexBall operator-() const;
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  ComplexBall& operator+=(const ComplexBall& b);
  ComplexBall mul_rational(const Rational& c) const;
  Ball abs_upper() const;  // ball enclosing an upper bound for |z|

  std::string to_string(std::size_t digits = 0) const;

 private:
  Ball re_;
  Ball im_;
};

}  // namespace lseries
