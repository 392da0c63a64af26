#include "lseries/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lseries {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw std::invalid_argument("not a rational: '" + text + "'");

  Rational v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  v.canonicalize();
  return v;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer lcm_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

long log2_bound(const Rational& value) {
  if (value == 0) return 0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  return num_bits - den_bits + 1;
}

}  // namespace lseries
