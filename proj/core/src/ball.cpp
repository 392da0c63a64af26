#include "lseries/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace lseries {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// RAII scratch value for radius computations (all rounded upward).
struct Temp {
  mpfr_t v;
  explicit Temp(mpfr_prec_t p = kRadPrec) { mpfr_init2(v, p); }
  Temp(const Temp&) = delete;
  Temp& operator=(const Temp&) = delete;
  ~Temp() { mpfr_clear(v); }
};

void interval_lower(mpfr_t out, const Ball& b) {
  mpfr_sub(out, b.midpoint(), b.radius(), MPFR_RNDD);
}

void interval_upper(mpfr_t out, const Ball& b) {
  mpfr_add(out, b.midpoint(), b.radius(), MPFR_RNDU);
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
  if (prec < MPFR_PREC_MIN || prec > kMaxPrecision) {
    throw std::invalid_argument("Ball: precision out of range");
  }
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) : prec_(other.prec_) {
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);  // same precision: exact
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
  if (this != &other) {
    if (prec_ != other.prec_) {
      mpfr_set_prec(mid_, other.prec_);
      prec_ = other.prec_;
    }
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  std::swap(prec_, other.prec_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Ball::bump_ulp(int inexact) {
  if (inexact == 0) return;
  Temp t;
  if (mpfr_zero_p(mid_)) {
    // underflow to zero: error below the smallest representable magnitude
    mpfr_set_ui_2exp(t.v, 1, mpfr_get_emin() + 2, MPFR_RNDU);
  } else {
    mpfr_set_ui_2exp(t.v, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
  }
  mpfr_add(rad_, rad_, t.v, MPFR_RNDU);
}

Ball Ball::from_int(long value, mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_ulp(mpfr_set_si(b.mid_, value, MPFR_RNDN));
  return b;
}

Ball Ball::from_rational(const Rational& value, mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_ulp(mpfr_set_q(b.mid_, value.get_mpq_t(), MPFR_RNDN));
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_ulp(mpfr_const_pi(b.mid_, MPFR_RNDN));
  return b;
}

Ball Ball::euler_gamma_constant(mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_ulp(mpfr_const_euler(b.mid_, MPFR_RNDN));
  return b;
}

Ball Ball::ln2(mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_ulp(mpfr_const_log2(b.mid_, MPFR_RNDN));
  return b;
}

Ball Ball::log_int(unsigned long value, mpfr_prec_t prec) {
  if (value == 0) throw std::domain_error("log_int: log of zero");
  Ball b(prec);
  b.bump_ulp(mpfr_log_ui(b.mid_, value, MPFR_RNDN));
  return b;
}

bool Ball::is_exact() const { return mpfr_zero_p(rad_); }

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::is_nonzero() const { return mpfr_cmpabs(mid_, rad_) > 0; }

bool Ball::is_positive() const {
  Temp t;
  interval_lower(t.v, *this);
  return mpfr_sgn(t.v) > 0;
}

bool Ball::is_negative() const {
  Temp t;
  interval_upper(t.v, *this);
  return mpfr_sgn(t.v) < 0;
}

bool Ball::contains(const Rational& value) const {
  // distance |mid - value| with its own rounding slack, then compare to rad
  Temp d(prec_ + 64), slack;
  const int ix = mpfr_sub_q(d.v, mid_, value.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(d.v, d.v, MPFR_RNDN);
  Temp dist;
  mpfr_set(dist.v, d.v, MPFR_RNDU);
  if (ix != 0 && !mpfr_zero_p(d.v)) {
    mpfr_set_ui_2exp(slack.v, 1, mpfr_get_exp(d.v) - (prec_ + 64), MPFR_RNDU);
    mpfr_add(dist.v, dist.v, slack.v, MPFR_RNDU);
  }
  return mpfr_cmp(dist.v, rad_) <= 0;
}

bool Ball::overlaps(const Ball& other) const {
  Temp alo, ahi, blo, bhi;
  interval_lower(alo.v, *this);
  interval_upper(ahi.v, *this);
  interval_lower(blo.v, other);
  interval_upper(bhi.v, other);
  return mpfr_cmp(alo.v, bhi.v) <= 0 && mpfr_cmp(blo.v, ahi.v) <= 0;
}

bool Ball::contains_interval(const Ball& other) const {
  Temp alo, ahi, blo, bhi;
  // round our endpoints inward, the other's outward: certainly-contains
  mpfr_sub(alo.v, mid_, rad_, MPFR_RNDU);
  mpfr_add(ahi.v, mid_, rad_, MPFR_RNDD);
  interval_lower(blo.v, other);
  interval_upper(bhi.v, other);
  return mpfr_cmp(alo.v, blo.v) <= 0 && mpfr_cmp(bhi.v, ahi.v) <= 0;
}

bool Ball::strictly_less(const Ball& other) const {
  Temp ahi, blo;
  interval_upper(ahi.v, *this);
  interval_lower(blo.v, other);
  return mpfr_cmp(ahi.v, blo.v) < 0;
}

bool Ball::radius_less_than_2exp(long e) const {
  if (mpfr_zero_p(rad_)) return true;
  return mpfr_get_exp(rad_) <= e;
}

bool Ball::radius_less_than_pow10(long k) const {
  if (mpfr_zero_p(rad_)) return true;
  Temp t;
  mpfr_set_ui(t.v, 10, MPFR_RNDD);
  mpfr_pow_si(t.v, t.v, k, MPFR_RNDD);
  return mpfr_cmp(rad_, t.v) < 0;
}

void Ball::add_error(const Rational& bound) {
  Temp t;
  mpfr_set_q(t.v, bound.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(t.v, t.v, MPFR_RNDU);
  mpfr_add(rad_, rad_, t.v, MPFR_RNDU);
}

void Ball::add_error_2exp(long e) {
  Temp t;
  mpfr_set_ui_2exp(t.v, 1, e, MPFR_RNDU);
  mpfr_add(rad_, rad_, t.v, MPFR_RNDU);
}

void Ball::add_error_from(const Ball& bound) {
  Temp t, u;
  mpfr_abs(t.v, bound.mid_, MPFR_RNDU);
  mpfr_add(t.v, t.v, bound.rad_, MPFR_RNDU);
  mpfr_add(rad_, rad_, t.v, MPFR_RNDU);
}

Ball Ball::operator-() const {
  Ball r(prec_);
  mpfr_neg(r.mid_, mid_, MPFR_RNDN);  // exact
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  return r;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  const int ix = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  const int ix = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  const int ix = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Temp t, u;
  mpfr_abs(t.v, a.mid_, MPFR_RNDU);
  mpfr_mul(t.v, t.v, b.rad_, MPFR_RNDU);
  mpfr_abs(u.v, b.mid_, MPFR_RNDU);
  mpfr_mul(u.v, u.v, a.rad_, MPFR_RNDU);
  mpfr_add(t.v, t.v, u.v, MPFR_RNDU);
  mpfr_mul(u.v, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(t.v, t.v, u.v, MPFR_RNDU);
  mpfr_set(r.rad_, t.v, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (!b.is_nonzero()) throw std::domain_error("Ball division by interval containing zero");
  Ball r(std::max(a.prec_, b.prec_));
  const int ix = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // (ra + |a/b| rb) / (|b| - rb), with |a/b| safely above |mid|
  Temp t, u, w;
  mpfr_abs(t.v, r.mid_, MPFR_RNDU);
  mpfr_nextabove(t.v);
  mpfr_nextabove(t.v);
  mpfr_mul(t.v, t.v, b.rad_, MPFR_RNDU);
  mpfr_add(t.v, t.v, a.rad_, MPFR_RNDU);
  mpfr_abs(u.v, b.mid_, MPFR_RNDD);
  mpfr_sub(w.v, u.v, b.rad_, MPFR_RNDD);
  mpfr_div(t.v, t.v, w.v, MPFR_RNDU);
  mpfr_set(r.rad_, t.v, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball& Ball::operator+=(const Ball& b) {
  *this = *this + b;
  return *this;
}
Ball& Ball::operator-=(const Ball& b) {
  *this = *this - b;
  return *this;
}
Ball& Ball::operator*=(const Ball& b) {
  *this = *this * b;
  return *this;
}

Ball Ball::mul_rational(const Rational& c) const {
  return *this * Ball::from_rational(c, prec_);
}

Ball Ball::div_int(long d) const {
  if (d == 0) throw std::domain_error("Ball division by zero");
  Ball r(prec_);
  const int ix = mpfr_div_si(r.mid_, mid_, d, MPFR_RNDN);
  Temp t;
  mpfr_abs(t.v, rad_, MPFR_RNDU);
  mpfr_div_si(t.v, t.v, d, MPFR_RNDU);
  mpfr_abs(r.rad_, t.v, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball Ball::abs() const {
  Ball r(prec_);
  mpfr_abs(r.mid_, mid_, MPFR_RNDN);  // exact
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  return r;
}

Ball Ball::log() const {
  Temp lo;
  interval_lower(lo.v, *this);
  if (mpfr_sgn(lo.v) <= 0) throw std::domain_error("Ball log: interval not strictly positive");
  Ball r(prec_);
  const int ix = mpfr_log(r.mid_, mid_, MPFR_RNDN);
  Temp t;
  mpfr_div(t.v, rad_, lo.v, MPFR_RNDU);  // |log x - log m| <= rad / lo
  mpfr_set(r.rad_, t.v, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball Ball::exp() const {
  Ball r(prec_);
  const int ix = mpfr_exp(r.mid_, mid_, MPFR_RNDN);
  Temp hi, u;
  interval_upper(hi.v, *this);
  mpfr_exp(u.v, hi.v, MPFR_RNDU);
  mpfr_sub(u.v, u.v, r.mid_, MPFR_RNDU);  // exp(m+r) - exp(m), convexity
  if (mpfr_sgn(u.v) < 0) mpfr_set_zero(u.v, 1);
  mpfr_set(r.rad_, u.v, MPFR_RNDU);
  r.bump_ulp(ix);
  r.bump_ulp(1);  // cover the half-ulp slack in the subtraction above
  return r;
}

Ball Ball::sin() const {
  Ball r(prec_);
  const int ix = mpfr_sin(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);  // |sin'| <= 1
  r.bump_ulp(ix);
  return r;
}

Ball Ball::cos() const {
  Ball r(prec_);
  const int ix = mpfr_cos(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.bump_ulp(ix);
  return r;
}

Ball Ball::sqrt() const {
  Temp lo, hi;
  interval_lower(lo.v, *this);
  interval_upper(hi.v, *this);
  if (mpfr_sgn(lo.v) < 0) throw std::domain_error("Ball sqrt: interval not nonnegative");
  Ball r(prec_);
  const int ix = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
  Temp l, u;
  mpfr_sqrt(l.v, lo.v, MPFR_RNDD);
  mpfr_sqrt(u.v, hi.v, MPFR_RNDU);
  mpfr_sub(u.v, u.v, r.mid_, MPFR_RNDU);
  mpfr_sub(l.v, r.mid_, l.v, MPFR_RNDU);
  if (mpfr_cmp(l.v, u.v) > 0) mpfr_swap(l.v, u.v);
  if (mpfr_sgn(u.v) < 0) mpfr_set_zero(u.v, 1);
  mpfr_set(r.rad_, u.v, MPFR_RNDU);
  r.bump_ulp(ix);
  r.bump_ulp(1);
  return r;
}

Ball Ball::pow_int(long e) const {
  if (e < 0) return Ball::from_int(1, prec_) / pow_int(-e);
  Ball acc = Ball::from_int(1, prec_);
  Ball base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Ball Ball::hull(const Ball& other) const {
  Temp alo, ahi, blo, bhi;
  interval_lower(alo.v, *this);
  interval_upper(ahi.v, *this);
  interval_lower(blo.v, other);
  interval_upper(bhi.v, other);
  if (mpfr_cmp(blo.v, alo.v) < 0) mpfr_swap(alo.v, blo.v);
  if (mpfr_cmp(bhi.v, ahi.v) > 0) mpfr_swap(ahi.v, bhi.v);
  // now alo = min lower, ahi = max upper
  Ball r(std::max(prec_, other.prec_));
  mpfr_add(r.mid_, alo.v, ahi.v, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  Temp d1, d2;
  mpfr_sub(d1.v, ahi.v, r.mid_, MPFR_RNDU);
  mpfr_sub(d2.v, r.mid_, alo.v, MPFR_RNDU);
  if (mpfr_cmp(d2.v, d1.v) > 0) mpfr_swap(d1.v, d2.v);
  mpfr_set(r.rad_, d1.v, MPFR_RNDU);
  r.bump_ulp(1);
  return r;
}

std::string Ball::midpoint_string(std::size_t digits) const {
  if (digits == 0) digits = static_cast<std::size_t>(prec_ * 30103L / 100000L) + 2;
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits), mid_);
  return std::string(buf.data());
}

std::string Ball::radius_string() const {
  if (mpfr_zero_p(rad_)) return "0";
  char buf[48];
  mpfr_snprintf(buf, sizeof buf, "%.2Re", rad_);
  return std::string(buf);
}

std::string Ball::to_string(std::size_t digits) const {
  return midpoint_string(digits) + " +- " + radius_string();
}

double Ball::radius_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

// ---------------------------------------------------------------------------

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexBall::ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}

ComplexBall::ComplexBall(Ball re) : re_(std::move(re)), im_(re_.precision()) {}

ComplexBall ComplexBall::from_rational(const Rational& value, mpfr_prec_t prec) {
  return ComplexBall(Ball::from_rational(value, prec), Ball(prec));
}

mpfr_prec_t ComplexBall::precision() const {
  return std::max(re_.precision(), im_.precision());
}

bool ComplexBall::contains_zero() const {
  return re_.contains_zero() && im_.contains_zero();
}

bool ComplexBall::is_nonzero() const { return re_.is_nonzero() || im_.is_nonzero(); }

bool ComplexBall::overlaps(const ComplexBall& other) const {
  return re_.overlaps(other.re_) && im_.overlaps(other.im_);
}

bool ComplexBall::radius_less_than_pow10(long k) const {
  return re_.radius_less_than_pow10(k) && im_.radius_less_than_pow10(k);
}

ComplexBall ComplexBall::conj() const { return ComplexBall(re_, -im_); }

ComplexBall ComplexBall::operator-() const { return ComplexBall(-re_, -im_); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBall& ComplexBall::operator+=(const ComplexBall& b) {
  *this = *this + b;
  return *this;
}

ComplexBall ComplexBall::mul_rational(const Rational& c) const {
  return ComplexBall(re_.mul_rational(c), im_.mul_rational(c));
}

Ball ComplexBall::abs_upper() const {
  const Ball a = re_.abs();
  const Ball b = im_.abs();
  return (a * a + b * b).sqrt();
}

std::string ComplexBall::to_string(std::size_t digits) const {
  return re_.to_string(digits) + "  +  i * (" + im_.to_string(digits) + ")";
}

}  // namespace lseries
