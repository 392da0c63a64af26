#include "lseries/periodic_function.hpp"

#include <numeric>
#include <stdexcept>

#include "lseries/arith.hpp"

namespace lseries {

PeriodicFunction::PeriodicFunction(std::int64_t modulus, std::vector<Rational> values)
    : q_(modulus), values_(std::move(values)) {
  if (q_ < 1) throw std::invalid_argument("PeriodicFunction: modulus must be >= 1");
  if (q_ > kMaxModulus) throw std::invalid_argument("PeriodicFunction: modulus above cap");
  if (static_cast<std::int64_t>(values_.size()) != q_) {
    throw std::invalid_argument("PeriodicFunction: expected exactly q values");
  }
}

PeriodicFunction PeriodicFunction::zero(std::int64_t modulus) {
  return PeriodicFunction(modulus, std::vector<Rational>(modulus, Rational(0)));
}

const Rational& PeriodicFunction::operator()(std::int64_t n) const {
  std::int64_t r = n % q_;
  if (r < 0) r += q_;
  return values_[r == 0 ? q_ - 1 : r - 1];
}

Rational PeriodicFunction::value_sum() const {
  Rational s = 0;
  for (const auto& v : values_) s += v;
  return s;
}

Rational PeriodicFunction::mean() const { return value_sum() / q_; }

bool PeriodicFunction::has_zero_mean() const { return value_sum() == 0; }

PeriodicFunction dilate(const PeriodicFunction& f, std::int64_t a) {
  const std::int64_t q = f.modulus();
  std::int64_t ar = a % q;
  if (ar < 0) ar += q;
  if (std::gcd(ar == 0 ? q : ar, q) != 1) {
    throw std::invalid_argument("dilate: a must be a unit mod q");
  }
  std::vector<Rational> values;
  values.reserve(q);
  for (std::int64_t b = 1; b <= q; ++b) values.push_back(f(ar * b));
  return PeriodicFunction(q, std::move(values));
}

std::pair<PeriodicFunction, PeriodicFunction> even_odd_split(const PeriodicFunction& f) {
  const std::int64_t q = f.modulus();
  std::vector<Rational> even, odd;
  even.reserve(q);
  odd.reserve(q);
  for (std::int64_t a = 1; a <= q; ++a) {
    const Rational& plus = f(a);
    const Rational& minus = f(-a);
    even.push_back((plus + minus) / 2);
    odd.push_back((plus - minus) / 2);
  }
  return {PeriodicFunction(q, std::move(even)), PeriodicFunction(q, std::move(odd))};
}

Rational inner_product(const PeriodicFunction& f, const PeriodicFunction& g) {
  if (f.modulus() != g.modulus()) {
    throw std::invalid_argument("inner_product: modulus mismatch");
  }
  const std::int64_t q = f.modulus();
  Rational s = 0;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) s += f(a) * g(a);
  }
  return s / static_cast<long>(euler_phi(q));
}

}  // namespace lseries
