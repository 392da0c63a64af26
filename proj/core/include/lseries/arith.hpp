#pragma once

#include <cstdint>
#include <vector>

namespace lseries {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Deterministic for all 64-bit inputs (Miller-Rabin over a fixed base set).
bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);  // requires n >= 1

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);  // in {-1, 0, 1}

// v_p(n); requires n >= 1 and p prime.
unsigned valuation(std::uint64_t n, std::uint64_t p);

// Order of a in (Z/mZ)^*; requires m >= 1 and gcd(a, m) = 1. The order
// modulo 1 is 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

std::vector<std::uint64_t> divisors(std::uint64_t n);  // sorted ascending

}  // namespace lseries
