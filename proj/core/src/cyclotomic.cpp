#include "lseries/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lseries/arith.hpp"
#include "lseries/special.hpp"

namespace lseries {

namespace {

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
IntPolynomial poly_div_exact(IntPolynomial num, const IntPolynomial& den) {
  const std::size_t dn = den.size() - 1;  // divisor degree, >= 1 here
  if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
  IntPolynomial quot(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    // entries above i are already cleared
    if (num[i] == 0) continue;
    const std::size_t qi = i - dn;
    quot[qi] = num[i];
    for (std::size_t j = 0; j <= dn; ++j) num[qi + j] -= quot[qi] * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::mutex g_phi_mutex;
std::map<std::int64_t, IntPolynomial> g_phi_cache;

// ---------------------------------------------------------------------------
// Per-modulus context: Phi_q plus the reduction rows of x^k and zeta^k.

struct Field {
  std::int64_t q = 1;
  std::size_t phi = 1;
  IntPolynomial modpoly;
  // zeta_rows[k] = power-basis coordinates of zeta^k, k = 0..q-1
  std::vector<std::vector<Integer>> zeta_rows;
};

std::mutex g_field_mutex;
std::map<std::int64_t, std::unique_ptr<Field>> g_field_cache;

const Field& field(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("cyclotomic: modulus must be >= 1");
  if (q > kMaxCyclotomicModulus) {
    throw std::invalid_argument("cyclotomic: modulus above cap");
  }
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto it = g_field_cache.find(q);
  if (it != g_field_cache.end()) return *it->second;

  auto f = std::make_unique<Field>();
  f->q = q;
  f->modpoly = cyclotomic_polynomial(q);
  f->phi = f->modpoly.size() - 1;

  // x^{k+1} = shift(x^k) with the overflow folded back via
  // x^phi = -(low part of Phi_q)  (Phi_q monic)
  std::vector<Integer> head(f->phi);
  for (std::size_t j = 0; j < f->phi; ++j) head[j] = -f->modpoly[j];
  f->zeta_rows.reserve(q);
  std::vector<Integer> cur(f->phi, Integer(0));
  cur[0] = 1;
  for (std::int64_t k = 0; k < q; ++k) {
    f->zeta_rows.push_back(cur);
    if (k + 1 == q) break;
    Integer carry = cur[f->phi - 1];
    for (std::size_t j = f->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry != 0) {
      for (std::size_t j = 0; j < f->phi; ++j) cur[j] += carry * head[j];
    }
  }

  const Field& ref = *f;
  g_field_cache.emplace(q, std::move(f));
  return ref;
}

// dense rational polynomial helpers for field inversion
using RatPoly = std::vector<Rational>;

int rp_degree(const RatPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

// in-place remainder; returns the quotient
RatPoly rp_divmod(RatPoly& rem, const RatPoly& den) {
  const int dd = rp_degree(den);
  RatPoly quot(rem.size(), Rational(0));
  for (int i = rp_degree(rem); i >= dd && i >= 0; i = rp_degree(rem)) {
    const Rational c = rem[i] / den[dd];
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
  if (q > kMaxCyclotomicModulus) {
    throw std::invalid_argument("cyclotomic_polynomial: q above cap");
  }
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(q);
  if (it != g_phi_cache.end()) return it->second;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(q))) {
    const std::int64_t dd = static_cast<std::int64_t>(d);
    if (g_phi_cache.count(dd)) continue;
    IntPolynomial num(d + 1, Integer(0));  // x^d - 1
    num[0] = -1;
    num[d] = 1;
    for (std::uint64_t e : divisors(d)) {
      if (e == d) continue;
      num = poly_div_exact(std::move(num), g_phi_cache.at(static_cast<std::int64_t>(e)));
    }
    g_phi_cache.emplace(dd, std::move(num));
  }
  return g_phi_cache.at(q);
}

// ---------------------------------------------------------------------------

CyclotomicElement::CyclotomicElement() : q_(1), coeffs_(1, Rational(0)) {}

CyclotomicElement::CyclotomicElement(std::int64_t modulus, std::vector<Rational> coeffs)
    : q_(modulus), coeffs_(std::move(coeffs)) {
  const Field& f = field(q_);
  if (coeffs_.size() != f.phi) {
    throw std::invalid_argument("CyclotomicElement: expected phi(q) coefficients");
  }
}

CyclotomicElement CyclotomicElement::zero(std::int64_t modulus) {
  const Field& f = field(modulus);
  return CyclotomicElement(modulus, std::vector<Rational>(f.phi, Rational(0)));
}

CyclotomicElement CyclotomicElement::one(std::int64_t modulus) {
  return from_rational(modulus, Rational(1));
}

CyclotomicElement CyclotomicElement::from_rational(std::int64_t modulus, const Rational& r) {
  const Field& f = field(modulus);
  std::vector<Rational> c(f.phi, Rational(0));
  c[0] = r;
  return CyclotomicElement(modulus, std::move(c));
}

CyclotomicElement CyclotomicElement::zeta_power(std::int64_t modulus, std::int64_t k) {
  const Field& f = field(modulus);
  std::int64_t kr = k % modulus;
  if (kr < 0) kr += modulus;
  std::vector<Rational> c(f.phi, Rational(0));
  const auto& row = f.zeta_rows[kr];
  for (std::size_t j = 0; j < f.phi; ++j) c[j] = Rational(row[j]);
  return CyclotomicElement(modulus, std::move(c));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational(Rational* value) const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  if (value) *value = coeffs_[0];
  return true;
}

CyclotomicElement CyclotomicElement::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = -coeffs_[j];
  return CyclotomicElement(q_, std::move(c));
}

namespace {
void require_same_modulus(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("cyclotomic arithmetic: modulus mismatch");
  }
}
}  // namespace

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_modulus(a, b);
  std::vector<Rational> c(a.coefficients());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += b.coefficients()[j];
  return CyclotomicElement(a.modulus(), std::move(c));
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_modulus(a, b);
  std::vector<Rational> c(a.coefficients());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] -= b.coefficients()[j];
  return CyclotomicElement(a.modulus(), std::move(c));
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_modulus(a, b);
  const Field& f = field(a.modulus());
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> conv(2 * f.phi - 1, Rational(0));
  for (std::size_t i = 0; i < f.phi; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < f.phi; ++j) {
      if (y[j] == 0) continue;
      conv[i + j] += x[i] * y[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + f.phi);
  for (std::size_t k = f.phi; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    const auto& row = f.zeta_rows[k % f.q];  // k < 2 phi - 1 <= 2(q-1), safe
    // zeta^k for k >= q wraps around: reduce the exponent mod q first
    for (std::size_t j = 0; j < f.phi; ++j) {
      if (row[j] != 0) out[j] += conv[k] * row[j];
    }
  }
  return CyclotomicElement(a.modulus(), std::move(out));
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& b) {
  *this = *this + b;
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& b) {
  *this = *this * b;
  return *this;
}

CyclotomicElement CyclotomicElement::mul_rational(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j] = coeffs_[j] * c;
  return CyclotomicElement(q_, std::move(out));
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
  const Field& f = field(q_);
  // extended Euclid in Q[x] against Phi_q (irreducible), gcd is a constant
  RatPoly r0(f.modpoly.size());
  for (std::size_t j = 0; j < f.modpoly.size(); ++j) r0[j] = Rational(f.modpoly[j]);
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  r1.resize(f.modpoly.size(), Rational(0));
  RatPoly t0(f.modpoly.size(), Rational(0));
  RatPoly t1(f.modpoly.size(), Rational(0));
  t1[0] = 1;
  while (rp_degree(r1) > 0) {
    RatPoly quot = rp_divmod(r0, r1);
    std::swap(r0, r1);
    // t0 -= quot * t1, then swap
    for (int i = rp_degree(quot); i >= 0; --i) {
      if (quot[i] == 0) continue;
      for (int j = 0; j + i < static_cast<int>(t0.size()); ++j) {
        if (t1[j] != 0) t0[i + j] -= quot[i] * t1[j];
      }
    }
    std::swap(t0, t1);
  }
  const int d = rp_degree(r1);
  if (d != 0) throw std::logic_error("cyclotomic inverse: gcd not constant");
  const Rational c = r1[0];
  std::vector<Rational> out(f.phi, Rational(0));
  for (std::size_t j = 0; j < f.phi && j < t1.size(); ++j) out[j] = t1[j] / c;
  return CyclotomicElement(q_, std::move(out));
}

CyclotomicElement CyclotomicElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicElement acc = one(q_);
  CyclotomicElement base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return acc;
}

CyclotomicElement CyclotomicElement::conjugate() const {
  if (q_ == 1) return *this;
  return galois(q_ - 1);
}

CyclotomicElement CyclotomicElement::galois(std::int64_t a) const {
  std::int64_t ar = a % q_;
  if (ar < 0) ar += q_;
  if (std::gcd(ar == 0 ? q_ : ar, q_) != 1) {
    throw std::invalid_argument("galois: a must be a unit mod q");
  }
  const Field& f = field(q_);
  std::vector<Rational> out(f.phi, Rational(0));
  for (std::size_t j = 0; j < f.phi; ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& row = f.zeta_rows[(ar * static_cast<std::int64_t>(j)) % q_];
    for (std::size_t i = 0; i < f.phi; ++i) {
      if (row[i] != 0) out[i] += coeffs_[j] * row[i];
    }
  }
  return CyclotomicElement(q_, std::move(out));
}

ComplexBall CyclotomicElement::embed(mpfr_prec_t prec) const {
  ComplexBall acc(prec);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    acc += root_of_unity(q_, static_cast<std::int64_t>(j), prec).mul_rational(coeffs_[j]);
  }
  return acc;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (j == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

FourierCoefficients fourier_transform(const PeriodicFunction& fn) {
  const std::int64_t q = fn.modulus();
  const Field& f = field(q);
  FourierCoefficients out;
  out.modulus = q;
  out.hat.reserve(q);
  for (std::int64_t b = 1; b <= q; ++b) {
    std::vector<Rational> acc(f.phi, Rational(0));
    for (std::int64_t a = 1; a <= q; ++a) {
      const Rational& v = fn(a);
      if (v == 0) continue;
      std::int64_t k = (-(a * b)) % q;
      if (k < 0) k += q;
      const auto& row = f.zeta_rows[k];
      for (std::size_t j = 0; j < f.phi; ++j) {
        if (row[j] != 0) acc[j] += v * row[j];
      }
    }
    for (auto& c : acc) c /= q;
    out.hat.emplace_back(q, std::move(acc));
  }
  return out;
}

PeriodicFunction fourier_inverse(const FourierCoefficients& coefficients) {
  const std::int64_t q = coefficients.modulus;
  const Field& f = field(q);
  if (coefficients.hat.size() != static_cast<std::size_t>(q)) {
    throw std::invalid_argument("fourier_inverse: expected q coefficients");
  }
  std::vector<Rational> values;
  values.reserve(q);
  for (std::int64_t b = 1; b <= q; ++b) {
    std::vector<Rational> acc(f.phi, Rational(0));
    for (std::int64_t a = 1; a <= q; ++a) {
      const auto& coeffs = coefficients.hat[a - 1].coefficients();
      if (coefficients.hat[a - 1].modulus() != q) {
        throw std::invalid_argument("fourier_inverse: modulus mismatch");
      }
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const auto& row = f.zeta_rows[(a * b + static_cast<std::int64_t>(j)) % q];
        for (std::size_t i = 0; i < f.phi; ++i) {
          if (row[i] != 0) acc[i] += coeffs[j] * row[i];
        }
      }
    }
    for (std::size_t i = 1; i < f.phi; ++i) {
      if (acc[i] != 0) {
        throw std::invalid_argument(
            "fourier_inverse: coefficients do not reconstruct a rational function");
      }
    }
    values.push_back(acc[0]);
  }
  return PeriodicFunction(q, std::move(values));
}

std::vector<std::vector<Rational>> coefficient_matrix(const PeriodicFunction& fn) {
  if (!fn.has_zero_mean()) {
    throw std::domain_error("coefficient_matrix: nonzero mean (f^(q) != 0 has no row)");
  }
  const std::int64_t q = fn.modulus();
  FourierCoefficients F = fourier_transform(fn);
  if (!F.hat[q - 1].is_zero()) {
    throw std::logic_error("coefficient_matrix: f^(q) != 0 for zero-mean input");
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(q - 1);
  for (std::int64_t b = 1; b < q; ++b) rows.push_back(F.hat[b - 1].coefficients());
  return rows;
}

}  // namespace lseries
