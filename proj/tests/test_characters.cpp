#include <doctest.h>

#include <numeric>
#include <random>

#include "lseries/arith.hpp"
#include "lseries/characters.hpp"
#include "lseries/evaluate.hpp"
#include "lseries/special.hpp"
#include "testutil.hpp"

using namespace lseries;
using testutil::make_f;

TEST_CASE("unit group structure") {
  const auto& g4 = unit_group(4);
  CHECK(g4.generators() == std::vector<std::int64_t>{3});
  CHECK(g4.orders() == std::vector<std::int64_t>{2});
  CHECK(g4.units() == std::vector<std::int64_t>{1, 3});

  const auto& g8 = unit_group(8);
  CHECK(g8.generators() == std::vector<std::int64_t>{7, 5});
  CHECK(g8.orders() == std::vector<std::int64_t>{2, 2});

  const auto& g5 = unit_group(5);
  REQUIRE(g5.generators().size() == 1);
  CHECK(g5.orders() == std::vector<std::int64_t>{4});
  CHECK((g5.generators()[0] == 2 || g5.generators()[0] == 3));

  const auto& g1 = unit_group(1);
  CHECK(g1.generators().empty());
  CHECK(g1.units() == std::vector<std::int64_t>{1});
  CHECK(g1.exponent() == 1);

  // orders multiply to phi(q); generators with the stated orders reproduce
  // every unit exactly once via the discrete log
  for (std::int64_t q = 1; q <= 64; ++q) {
    const auto& g = unit_group(q);
    std::int64_t prod = 1;
    for (std::int64_t o : g.orders()) prod *= o;
    CHECK(prod == g.phi());
    CHECK(static_cast<std::int64_t>(g.units().size()) == g.phi());
    for (std::int64_t a : g.units()) {
      const auto dl = g.discrete_log(a);
      std::uint64_t rebuilt = 1 % q;
      for (std::size_t i = 0; i < dl.size(); ++i) {
        CHECK(dl[i] >= 0);
        CHECK(dl[i] < g.orders()[i]);
        rebuilt = mul_mod(rebuilt,
                          pow_mod(static_cast<std::uint64_t>(g.generators()[i]),
                                  static_cast<std::uint64_t>(dl[i]),
                                  static_cast<std::uint64_t>(q)),
                          static_cast<std::uint64_t>(q));
      }
      CHECK(static_cast<std::int64_t>(rebuilt == 0 ? q : rebuilt) == a);
    }
  }
  CHECK_THROWS_AS(unit_group(4).discrete_log(2), std::invalid_argument);
}

TEST_CASE("character enumeration") {
  const auto c4 = enumerate_characters(4);
  REQUIRE(c4.size() == 2);
  CHECK(c4[0].is_principal());
  CHECK(c4[0](3).is_one());
  CHECK(c4[1](3) == CyclotomicElement::from_rational(2, -1));
  CHECK(c4[1](2).is_zero());

  CHECK(enumerate_characters(12).size() == 4);
  CHECK(enumerate_characters(1).size() == 1);
}

TEST_CASE("character multiplicativity and value structure") {
  std::mt19937_64 rng(41);
  for (std::int64_t q : {3, 4, 5, 8, 9, 12, 24, 36}) {
    const auto& g = unit_group(q);
    const auto chars = enumerate_characters(q);
    std::uniform_int_distribution<std::size_t> pick(0, g.units().size() - 1);
    for (const auto& chi : chars) {
      for (int rep = 0; rep < 6; ++rep) {
        const std::int64_t a = g.units()[pick(rng)];
        const std::int64_t b = g.units()[pick(rng)];
        CHECK(chi((a * b) % q) == chi(a) * chi(b));
      }
      // sum over units: phi(q) for the principal character, 0 otherwise
      CyclotomicElement sum = CyclotomicElement::zero(g.exponent());
      for (std::int64_t c : g.units()) sum += chi(c);
      if (chi.is_principal()) {
        CHECK(sum == CyclotomicElement::from_rational(g.exponent(), g.phi()));
      } else {
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("character orthogonality") {
  for (std::int64_t q = 1; q <= 24; ++q) {
    const auto& g = unit_group(q);
    const auto chars = enumerate_characters(q);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        CyclotomicElement sum = CyclotomicElement::zero(g.exponent());
        for (std::int64_t a : g.units()) sum += chars[i](a) * chars[j](a).conjugate();
        if (i == j) {
          CHECK(sum == CyclotomicElement::from_rational(g.exponent(), g.phi()));
        } else {
          CHECK(sum.is_zero());
        }
      }
    }
  }
}

TEST_CASE("character decomposition") {
  // restriction of the principal character
  {
    const std::int64_t q = 12;
    std::vector<Rational> values(q, Rational(0));
    for (std::int64_t a : unit_group(q).units()) values[a - 1] = 1;
    const PeriodicFunction chi0(q, std::move(values));
    const auto coeffs = character_decompose(chi0);
    CHECK(coeffs[0].is_one());
    for (std::size_t i = 1; i < coeffs.size(); ++i) CHECK(coeffs[i].is_zero());
  }

  // indicator of a = 1: every coefficient is 1/phi(q)
  {
    const std::int64_t q = 8;
    std::vector<Rational> values(q, Rational(0));
    values[0] = 1;
    const PeriodicFunction ind(q, std::move(values));
    for (const auto& c : character_decompose(ind)) {
      CHECK(c == CyclotomicElement::from_rational(unit_group(q).exponent(), Rational(1, 4)));
    }
  }

  // reconstruction on random unit-supported functions
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (std::int64_t q : {3, 4, 5, 8, 12, 15, 24}) {
    const auto& g = unit_group(q);
    std::vector<Rational> values(q, Rational(0));
    for (std::int64_t a : g.units()) values[a - 1] = dist(rng);
    const PeriodicFunction f(q, values);
    const auto chars = enumerate_characters(q);
    const auto coeffs = character_decompose(f);
    for (std::int64_t a : g.units()) {
      CyclotomicElement sum = CyclotomicElement::zero(g.exponent());
      for (std::size_t i = 0; i < chars.size(); ++i) sum += coeffs[i] * chars[i](a);
      CHECK(sum == CyclotomicElement::from_rational(g.exponent(), f(a)));
    }
  }

  // support violation
  CHECK_THROWS_AS(character_decompose(make_f(4, {1, 1, 0, 0})), std::invalid_argument);
}

TEST_CASE("dilation twists the character coefficients") {
  std::mt19937_64 rng(67);
  for (std::int64_t q : {4, 5, 8, 12}) {
    const auto f = testutil::random_zero_mean(q, rng, true);
    for (const auto& chi : enumerate_characters(q)) {
      for (std::int64_t c = 1; c <= q; ++c) {
        if (std::gcd(c, q) != 1) continue;
        CHECK(inner_product(dilate(f, c), chi) == chi(c) * inner_product(f, chi));
      }
    }
  }
}

TEST_CASE("dedekind determinant, exact corners") {
  const mpfr_prec_t prec = 128;
  // F = indicator of the identity: the matrix is the identity
  {
    const std::int64_t q = 12;
    const auto& g = unit_group(q);
    std::vector<ComplexBall> F;
    for (std::int64_t u : g.units()) {
      F.push_back(ComplexBall::from_rational(u == 1 ? 1 : 0, prec));
    }
    const auto result = dedekind_determinant(q, F, prec);
    CHECK(result.determinant.real().contains(Rational(1)));
    CHECK(result.determinant.imag().contains_zero());
    CHECK(result.character_product.real().contains(Rational(1)));
    CHECK(result.agree);
  }
  // constant F: rank one, determinant 0 (phi(q) > 1)
  {
    const std::int64_t q = 8;
    std::vector<ComplexBall> F(4, ComplexBall::from_rational(Rational(7, 3), prec));
    const auto result = dedekind_determinant(q, F, prec);
    CHECK(result.determinant.contains_zero());
    CHECK(result.character_product.contains_zero());
    CHECK(result.agree);
  }
}

TEST_CASE("dedekind determinant identity") {
  // random rational maps and digamma maps
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (std::int64_t q : {3, 4, 5, 8, 12}) {
    const auto& g = unit_group(q);
    std::vector<ComplexBall> F;
    for (std::size_t i = 0; i < g.units().size(); ++i) {
      Rational v(dist(rng), 1 + (i % 3));
      v.canonicalize();
      F.push_back(ComplexBall::from_rational(v, 128));
    }
    CHECK(dedekind_determinant(q, F, 128).agree);

    std::vector<ComplexBall> psi;
    for (std::int64_t u : g.units()) {
      psi.push_back(ComplexBall(digamma(Rational(u, q), 128)));
    }
    const auto result = dedekind_determinant(q, psi, 128);
    CHECK(result.agree);
    // both routes are tight at this precision
    const Ball gap = result.determinant.real() - result.character_product.real();
    CHECK(gap.radius_less_than_pow10(-20));
  }
}
