#include "lseries/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lseries {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("inverse_mod: zero modulus");
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t k = r / new_r;
    std::swap(t -= k * new_t, new_t);
    std::swap(r -= k * new_r, new_r);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                          29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic base set for the 64-bit range.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                          29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  std::uint64_t c = 1;
  while (true) {
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  while (n > 1) {
    if (is_prime(n)) {
      out.push_back(n);
      return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    n /= d;
  }
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.push_back({primes[i], static_cast<unsigned>(j - i)});
    i = j;
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::uint64_t pk = 1;
    for (unsigned i = 1; i < e; ++i) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

int mobius(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return (f.size() % 2 == 0) ? 1 : -1;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be positive");
  if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1) {
    throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  }
  std::uint64_t order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / p, m) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lseries
