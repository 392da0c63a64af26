#include <doctest.h>

#include <numeric>
#include <random>

#include "lseries/arith.hpp"
#include "lseries/periodic_function.hpp"
#include "lseries/rational.hpp"
#include "testutil.hpp"

using namespace lseries;
using testutil::make_f;

TEST_CASE("rational parsing is exact and strict") {
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("-6") == Rational(-6));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("factorize") {
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  // trial-division oracle on a prime and on a mid-size composite
  auto trial = [](std::uint64_t n) {
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
  };
  CHECK(factorize(97) == trial(97));
  CHECK(factorize(97) == Factorization{{97, 1}});
  for (std::uint64_t n : {360u, 9973u, 104729u, 720720u, 999983u}) {
    CHECK(factorize(n) == trial(n));
  }
}

TEST_CASE("arithmetic functions") {
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK(valuation(12, 2) == 2);
  CHECK_THROWS_AS(valuation(12, 4), std::invalid_argument);
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(7, 1) == 1);
  CHECK_THROWS_AS(multiplicative_order(2, 4), std::invalid_argument);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});

  // sum over divisors of phi(d) = n
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t s = 0;
    for (std::uint64_t d : divisors(n)) s += euler_phi(d);
    CHECK(s == n);
  }
}

TEST_CASE("is_prime deterministic sanity") {
  int count = 0;
  for (std::uint64_t n = 2; n < 1000; ++n) {
    bool p = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        p = false;
        break;
      }
    }
    CHECK(is_prime(n) == p);
    if (p) ++count;
  }
  CHECK(count == 168);
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693953ULL));
}

TEST_CASE("periodic function basics") {
  const auto f = make_f(4, {2, -6, 2, 2});
  CHECK(f(1) == 2);
  CHECK(f(2) == -6);
  CHECK(f(0) == 2);   // slot q
  CHECK(f(4) == 2);
  CHECK(f(-1) == 2);  // f(3)
  CHECK(f(6) == -6);
  CHECK(f.value_sum() == 0);
  CHECK(f.has_zero_mean());
  CHECK(f.mean() == 0);

  const auto g = make_f(3, {1, 1, 1});
  CHECK_FALSE(g.has_zero_mean());
  CHECK(g.mean() == 1);

  CHECK_THROWS_AS(PeriodicFunction(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicFunction(3, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("dilate") {
  const auto f = make_f(4, {2, -6, 2, 2});
  CHECK(dilate(f, 3) == f);  // f(3)=2, f(6)=f(2), f(9)=f(1), f(12)=f(4)
  CHECK(dilate(f, 1) == f);
  const auto h = make_f(4, {1, -2, 1, 0});
  CHECK(dilate(h, 3) == h);
  CHECK_THROWS_AS(dilate(f, 2), std::invalid_argument);

  // dilation composes: f_{ab} = (f_a)_b
  std::mt19937_64 rng(42);
  for (std::int64_t q : {5, 8, 9, 12}) {
    const auto r = testutil::random_zero_mean(q, rng, true);
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      for (std::int64_t b = 1; b <= q; ++b) {
        if (std::gcd(b, q) != 1) continue;
        CHECK(dilate(dilate(r, a), b) == dilate(r, (a * b) % q));
      }
    }
  }
}

TEST_CASE("even/odd split") {
  const auto f = make_f(4, {1, -2, 1, 0});
  const auto [fe, fo] = even_odd_split(f);
  CHECK(fe == f);
  CHECK(fo == PeriodicFunction::zero(4));

  const auto g = make_f(4, {1, 0, -1, 0});
  const auto [ge, go] = even_odd_split(g);
  CHECK(ge == PeriodicFunction::zero(4));
  CHECK(go == g);

  const auto z = PeriodicFunction::zero(5);
  const auto [ze, zo] = even_odd_split(z);
  CHECK(ze == z);
  CHECK(zo == z);

  // reassembly, parity, and zero-mean preservation on random functions
  std::mt19937_64 rng(7);
  for (std::int64_t q : {3, 4, 7, 10, 12}) {
    const auto r = testutil::random_zero_mean(q, rng, true);
    const auto [re, ro] = even_odd_split(r);
    CHECK(re.has_zero_mean());
    CHECK(ro.has_zero_mean());
    for (std::int64_t a = 1; a <= q; ++a) {
      CHECK(re(a) + ro(a) == r(a));
      CHECK(re(-a) == re(a));
      CHECK(ro(-a) == -ro(a));
    }
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) == 1) CHECK(dilate(r, a).has_zero_mean());
    }
  }
}

TEST_CASE("inner product") {
  // indicator of 1 mod 4 against itself: phi(4) = 2
  auto ind = make_f(4, {1, 0, 0, 0});
  CHECK(inner_product(ind, ind) == Rational(1, 2));

  const auto f = make_f(4, {2, -6, 2, 2});
  const auto chi0 = make_f(4, {1, 0, 1, 0});  // principal character values
  CHECK(inner_product(f, chi0) == 2);

  std::mt19937_64 rng(3);
  for (std::int64_t q : {4, 6, 9}) {
    const auto r = testutil::random_zero_mean(q, rng, true);
    CHECK(inner_product(r, r) >= 0);
  }
  CHECK_THROWS_AS(inner_product(ind, make_f(2, {1, 0})), std::invalid_argument);
}
