#include <doctest.h>

#include <numeric>
#include <random>

#include "lseries/cyclotomic.hpp"
#include "lseries/okada.hpp"
#include "lseries/product_criterion.hpp"
#include "testutil.hpp"

using namespace lseries;
using testutil::make_f;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
  IntPolynomial p;
  for (long c : coeffs) p.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(105).size() == euler_phi(105) + 1);
  // product over divisors reassembles x^q - 1
  for (std::int64_t q : {6, 12, 30}) {
    IntPolynomial prod{Integer(1)};
    for (std::uint64_t d : divisors(q)) {
      const IntPolynomial& phi_d = cyclotomic_polynomial(static_cast<std::int64_t>(d));
      IntPolynomial next(prod.size() + phi_d.size() - 1, Integer(0));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        for (std::size_t j = 0; j < phi_d.size(); ++j) next[i + j] += prod[i] * phi_d[j];
      }
      prod = std::move(next);
    }
    CHECK(prod.front() == -1);
    CHECK(prod.back() == 1);
    CHECK(prod.size() == static_cast<std::size_t>(q) + 1);
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  const auto zeta = CyclotomicElement::zeta_power(4, 1);
  CHECK(zeta * zeta == CyclotomicElement::from_rational(4, -1));
  CHECK((zeta * zeta).coefficients() == std::vector<Rational>{-1, 0});

  for (std::int64_t q : {1, 2, 3, 8, 12}) {
    CHECK(CyclotomicElement::zeta_power(q, 1).pow(q).is_one());
  }

  // (1 - zeta_4)(1 - zeta_4^3) = norm of 1 - i = 2
  const auto one = CyclotomicElement::one(4);
  const auto a = one - CyclotomicElement::zeta_power(4, 1);
  const auto b = one - CyclotomicElement::zeta_power(4, 3);
  CHECK(a * b == CyclotomicElement::from_rational(4, 2));

  CHECK_THROWS_AS(CyclotomicElement::zero(4).inverse(), std::domain_error);
  CHECK_THROWS_AS(CyclotomicElement::one(4) * CyclotomicElement::one(3),
                  std::invalid_argument);
}

TEST_CASE("cyclotomic inverse") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (std::int64_t q : {3, 4, 5, 8, 12, 15}) {
    const std::size_t phi = euler_phi(q);
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<Rational> coeffs(phi);
      for (auto& c : coeffs) c = dist(rng);
      CyclotomicElement e(q, coeffs);
      if (e.is_zero()) continue;
      CHECK((e * e.inverse()).is_one());
    }
  }
}

TEST_CASE("galois action") {
  const auto zeta = CyclotomicElement::zeta_power(4, 1);
  CHECK(zeta.galois(1) == zeta);
  CHECK(zeta.galois(3) == CyclotomicElement::zeta_power(4, 3));
  CHECK(zeta.galois(3).coefficients() == std::vector<Rational>{0, -1});
  CHECK_THROWS_AS(zeta.galois(2), std::invalid_argument);

  // sigma_a . sigma_b = sigma_{ab}, and it is a ring homomorphism
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (std::int64_t q : {5, 8, 12}) {
    const std::size_t phi = euler_phi(q);
    std::vector<Rational> c1(phi), c2(phi);
    for (auto& c : c1) c = dist(rng);
    for (auto& c : c2) c = dist(rng);
    const CyclotomicElement e1(q, c1), e2(q, c2);
    for (std::int64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      CHECK((e1 * e2).galois(a) == e1.galois(a) * e2.galois(a));
      for (std::int64_t b = 1; b <= q; ++b) {
        if (std::gcd(b, q) != 1) continue;
        CHECK(e1.galois(a).galois(b) == e1.galois((a * b) % q));
      }
    }
  }
}

TEST_CASE("norm product: prod (1 - zeta^b) = q") {
  for (std::int64_t q = 2; q <= 30; ++q) {
    CyclotomicElement prod = CyclotomicElement::one(q);
    for (std::int64_t b = 1; b < q; ++b) {
      prod *= CyclotomicElement::one(q) - CyclotomicElement::zeta_power(q, b);
    }
    Rational value;
    REQUIRE(prod.is_rational(&value));
    CHECK(value == q);
  }
}

TEST_CASE("fourier transform") {
  // constant function: everything lands in f^(q)
  for (std::int64_t q : {3, 5, 8}) {
    const PeriodicFunction one_fn(q, std::vector<Rational>(q, Rational(1)));
    const auto F = fourier_transform(one_fn);
    for (std::int64_t b = 1; b < q; ++b) CHECK(F.hat[b - 1].is_zero());
    CHECK(F.hat[q - 1].is_one());
  }

  // two-point case, computed by hand
  const auto alt = make_f(2, {1, -1});
  const auto F2 = fourier_transform(alt);
  CHECK(F2.hat[0] == CyclotomicElement::from_rational(2, -1));
  CHECK(F2.hat[1].is_zero());

  // zero mean forces f^(q) = 0
  std::mt19937_64 rng(3);
  for (std::int64_t q : {4, 6, 9, 12}) {
    const auto f = testutil::random_zero_mean(q, rng, true);
    CHECK(fourier_transform(f).hat[q - 1].is_zero());
  }

  // indicator of the residue 0: f^(b) = 1/q for every b
  const PeriodicFunction delta(6, {0, 0, 0, 0, 0, 1});
  const auto Fd = fourier_transform(delta);
  for (std::int64_t b = 1; b <= 6; ++b) {
    CHECK(Fd.hat[b - 1] == CyclotomicElement::from_rational(6, Rational(1, 6)));
  }
  CHECK(fourier_inverse(Fd) == delta);
}

TEST_CASE("fourier inversion round trip") {
  std::mt19937_64 rng(8);
  for (std::int64_t q = 1; q <= 24; ++q) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto f = testutil::random_zero_mean(q, rng, true);
      CHECK(fourier_inverse(fourier_transform(f)) == f);
    }
  }
  // all-zero coefficients reconstruct the zero function
  FourierCoefficients zero;
  zero.modulus = 5;
  for (int i = 0; i < 5; ++i) zero.hat.push_back(CyclotomicElement::zero(5));
  CHECK(fourier_inverse(zero) == PeriodicFunction::zero(5));

  // corrupted coefficients (not a rational function) are rejected
  FourierCoefficients bad;
  bad.modulus = 4;
  bad.hat.push_back(CyclotomicElement::zeta_power(4, 1));
  for (int i = 0; i < 3; ++i) bad.hat.push_back(CyclotomicElement::zero(4));
  CHECK_THROWS_AS(fourier_inverse(bad), std::invalid_argument);
}

TEST_CASE("coefficient matrix") {
  const auto alt = make_f(2, {1, -1});
  const auto c = coefficient_matrix(alt);
  REQUIRE(c.size() == 1);
  REQUIRE(c[0].size() == 1);
  CHECK(c[0][0] == -1);

  const auto zero = PeriodicFunction::zero(6);
  for (const auto& row : coefficient_matrix(zero)) {
    for (const auto& v : row) CHECK(v == 0);
  }

  // rows are the power-basis coordinates of f^(b)
  std::mt19937_64 rng(12);
  for (std::int64_t q : {4, 9, 12}) {
    const auto f = testutil::random_zero_mean(q, rng, true);
    const auto rows = coefficient_matrix(f);
    const auto F = fourier_transform(f);
    for (std::int64_t b = 1; b < q; ++b) {
      CyclotomicElement rebuilt = CyclotomicElement::zero(q);
      for (std::size_t j = 0; j < rows[b - 1].size(); ++j) {
        rebuilt += CyclotomicElement::zeta_power(q, static_cast<std::int64_t>(j))
                       .mul_rational(rows[b - 1][j]);
      }
      CHECK(rebuilt == F.hat[b - 1]);
    }
  }

  CHECK_THROWS_AS(coefficient_matrix(make_f(3, {1, 1, 1})), std::domain_error);
}

TEST_CASE("unit product criterion") {
  const auto vanishing = make_f(4, {2, -6, 2, 2});
  const auto r1 = product_criterion_decide(vanishing, 128);
  CHECK(r1.vanishing);
  CHECK(r1.exact_stage_ran);
  for (const auto& p : r1.unit_products) CHECK(p.is_one());
  for (long k : r1.root_of_unity_indices) CHECK(k == 0);

  const auto nonvanishing = make_f(4, {1, -2, 1, 0});
  CHECK_FALSE(product_criterion_decide(nonvanishing, 128).vanishing);

  const auto zero = PeriodicFunction::zero(6);
  const auto rz = product_criterion_decide(zero, 128);
  CHECK(rz.vanishing);
  for (const auto& p : rz.unit_products) CHECK(p.is_one());

  CHECK(product_criterion_decide(PeriodicFunction::zero(1), 128).vanishing);
  CHECK_THROWS_AS(product_criterion_decide(make_f(3, {1, 1, 1}), 128), std::domain_error);

  // non-integer values are scaled away internally
  const PeriodicFunction half(4, {Rational(1), Rational(-3, 2), Rational(1), Rational(-1, 2)});
  const auto rh = product_criterion_decide(half, 128);
  CHECK_FALSE(rh.vanishing);
  const PeriodicFunction half_kernel(4,
                                     {Rational(1, 2), Rational(-3, 2), Rational(1, 2),
                                      Rational(1, 2)});
  CHECK(product_criterion_decide(half_kernel, 128).vanishing);
}

TEST_CASE("product criterion is dilation invariant and matches okada") {
  std::mt19937_64 rng(77);
  for (std::int64_t q : {4, 6, 8, 9, 12}) {
    const OkadaSystem sys(q);
    for (int rep = 0; rep < 10; ++rep) {
      const auto f = testutil::random_zero_mean(q, rng, rep % 2 == 0);
      const bool v = product_criterion_decide(f, 128).vanishing;
      CHECK(v == sys.decide(f).decision);
      for (std::int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        CHECK(product_criterion_decide(dilate(f, a), 128).vanishing == v);
      }
    }
  }
}
