#include <doctest.h>

#include <numeric>
#include <random>

#include "lseries/evaluate.hpp"
#include "lseries/okada.hpp"
#include "lseries/product_criterion.hpp"
#include "testutil.hpp"

using namespace lseries;
using testutil::make_f;

TEST_CASE("epsilon weights") {
  CHECK(epsilon_weight(2, 2, 4) == 1);
  CHECK(epsilon_weight(4, 2, 4) == 3);
  CHECK(epsilon_weight(3, 3, 12) == Rational(3, 2));
  CHECK(epsilon_weight(1, 2, 4) == 0);  // v_2(1) = 0 < 2
  CHECK_THROWS_AS(epsilon_weight(1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_weight(0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_weight(5, 2, 4), std::invalid_argument);

  const auto table = epsilon_table(12);
  CHECK(table.at(3, 3) == Rational(3, 2));
  CHECK(table.at(4, 2) == Rational(2) + 1);
  CHECK_THROWS_AS(table.at(5, 2), std::invalid_argument);  // 5 is a unit mod 12
}

TEST_CASE("epsilon truncated double sum") {
  const auto ps = epsilon_partial_sum(2, 2, 4, 10);
  CHECK(ps.partial == 1);
  CHECK(ps.tail_bound == Rational(4, 1024) * 2);

  const auto deep = epsilon_partial_sum(4, 2, 4, 20);
  CHECK(abs(Rational(3) - deep.partial) <= deep.tail_bound);

  // case 1 collapses to a finite sum: exact once depth >= v_p(q)
  CHECK(epsilon_partial_sum(3, 2, 12, 5).partial == epsilon_weight(3, 2, 12));
  CHECK(epsilon_partial_sum(2, 2, 12, 5).partial == epsilon_weight(2, 2, 12));

  for (std::int64_t q = 2; q <= 16; ++q) {
    for (const auto& pp : factorize(q)) {
      for (std::int64_t r = 1; r <= q; ++r) {
        const auto s = epsilon_partial_sum(r, pp.prime, q, 40);
        CHECK(abs(epsilon_weight(r, pp.prime, q) - s.partial) <= s.tail_bound);
      }
    }
  }
}

TEST_CASE("residue weight system tables") {
  const auto s4 = ResidueWeightSystem::build(4);
  CHECK(s4.weight(1) == 1);
  CHECK(s4.weight(2) == Rational(1, 2));
  CHECK(s4.weight(3) == 0);
  CHECK(s4.weight(4) == Rational(1, 2));

  const auto s6 = ResidueWeightSystem::build(6);
  CHECK(s6.weights() ==
        std::vector<Rational>{1, Rational(2, 3), Rational(1, 2), Rational(1, 3), 0,
                              Rational(1, 2)});

  // q = 4 log-weights: W_2(2) = 1/2, W_2(4) = sum_{e>=2} e/2^e = 3/2
  const auto& w2 = s4.log_weights(2);
  CHECK(w2[0] == 0);
  CHECK(w2[1] == Rational(1, 2));
  CHECK(w2[2] == 0);
  CHECK(w2[3] == Rational(3, 2));

  for (std::int64_t q = 1; q <= 60; ++q) {
    CHECK(ResidueWeightSystem::build(q).weight_total() ==
          Rational(q, static_cast<long>(euler_phi(q))));
  }
  CHECK_THROWS_AS(ResidueWeightSystem::build(20000), std::invalid_argument);
  CHECK_THROWS_AS(s4.log_weights(3), std::invalid_argument);
}

TEST_CASE("unit-average identity for the weights") {
  // sum_rho S(rho) #{a unit: a rho == r} = 1 for every residue r
  for (std::int64_t q = 1; q <= 60; ++q) {
    const auto sys = ResidueWeightSystem::build(q);
    for (std::int64_t r = 1; r <= q; ++r) {
      Rational total = 0;
      for (std::int64_t rho = 1; rho <= q; ++rho) {
        if (sys.weight(rho) == 0) continue;
        long count = 0;
        for (std::int64_t a = 1; a <= q; ++a) {
          if (std::gcd(a, q) == 1 && (a * rho - r) % q == 0) ++count;
        }
        total += sys.weight(rho) * count;
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("condition A") {
  const OkadaSystem sys(4);
  const auto kernel = make_f(4, {2, -6, 2, 2});
  CHECK(sys.condition_a(kernel, 1) == 0);
  CHECK(sys.condition_a(kernel, 3) == 0);

  const auto half_log = make_f(4, {1, -2, 1, 0});
  CHECK(sys.condition_a(half_log, 1) == 0);
  CHECK(sys.condition_a(half_log, 3) == 0);

  CHECK_THROWS_AS(sys.condition_a(kernel, 2), std::invalid_argument);
}

TEST_CASE("condition B") {
  const OkadaSystem sys(4);
  CHECK(sys.condition_b(make_f(4, {2, -6, 2, 2}), 2) == 0);
  CHECK(sys.condition_b(make_f(4, {1, -2, 1, 0}), 2) == -2);
  // unit-supported: empty sum
  CHECK(sys.condition_b(make_f(4, {5, 0, -5, 0}), 2) == 0);
  CHECK_THROWS_AS(sys.condition_b(make_f(4, {1, -2, 1, 0}), 3), std::invalid_argument);
}

TEST_CASE("log-coefficient condition") {
  const OkadaSystem sys(4);
  const auto t_kernel = sys.log_coefficients(make_f(4, {2, -6, 2, 2}));
  REQUIRE(t_kernel.size() == 1);
  CHECK(t_kernel[0].first == 2);
  CHECK(t_kernel[0].second == 0);

  const auto t_log = sys.log_coefficients(make_f(4, {1, -2, 1, 0}));
  CHECK(t_log[0].second == -1);

  const auto t_zero = sys.log_coefficients(PeriodicFunction::zero(4));
  CHECK(t_zero[0].second == 0);

  CHECK_THROWS_AS(sys.log_coefficients(make_f(4, {1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("log condition matches the epsilon form exactly") {
  CHECK(log_identity_holds(make_f(4, {1, -2, 1, 0})));
  CHECK(log_identity_holds(PeriodicFunction::zero(4)));
  std::mt19937_64 rng(101);
  for (std::int64_t q : {4, 6, 8, 9, 12, 18, 30}) {
    const OkadaSystem sys(q);
    for (int rep = 0; rep < 25; ++rep) {
      CHECK(sys.log_identity_holds(testutil::random_zero_mean(q, rng, rep % 2 == 0)));
    }
  }
}

TEST_CASE("decide") {
  const auto cert = decide_vanishing(make_f(4, {2, -6, 2, 2}));
  CHECK(cert.decision);
  CHECK(cert.route == DecisionRoute::okada);
  for (const auto& [a, r] : cert.condition_a) CHECK(r == 0);
  for (const auto& [p, r] : cert.condition_b) CHECK(r == 0);

  const auto cert2 = decide_vanishing(make_f(4, {1, -2, 1, 0}));
  CHECK_FALSE(cert2.decision);
  REQUIRE(cert2.condition_b.size() == 1);
  CHECK(cert2.condition_b[0].second == -2);

  // character values: nonvanishing by Dirichlet
  CHECK_FALSE(decide_vanishing(make_f(4, {1, 0, -1, 0})).decision);

  CHECK_THROWS_AS(decide_vanishing(make_f(3, {1, 1, 1})), std::domain_error);

  // q = 1: zero mean forces the zero function
  CHECK(decide_vanishing(PeriodicFunction::zero(1)).decision);
}

TEST_CASE("kernel basis") {
  const auto b4 = kernel_basis(4);
  REQUIRE(b4.size() == 1);
  CHECK(b4[0].values() == std::vector<Rational>{1, -3, 1, 1});

  for (std::int64_t q : {2, 3, 5, 7, 11, 13}) CHECK(kernel_basis(q).empty());
  CHECK(kernel_basis(1).empty());

  for (std::int64_t q = 1; q <= 24; ++q) {
    for (const auto& f : kernel_basis(q)) {
      CHECK(f.has_zero_mean());
      CHECK(decide_vanishing(f).decision);
      // canonical form: integer entries, content 1, first nonzero positive
      Integer content = 0;
      for (const auto& v : f.values()) {
        CHECK(v.get_den() == 1);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
      }
      CHECK(content == 1);
      for (const auto& v : f.values()) {
        if (v != 0) {
          CHECK(v > 0);
          break;
        }
      }
    }
  }
}

TEST_CASE("unit-average identity for condition A") {
  std::mt19937_64 rng(303);
  for (std::int64_t q = 1; q <= 30; ++q) {
    const OkadaSystem sys(q);
    for (int rep = 0; rep < 5; ++rep) {
      const auto f = testutil::random_zero_mean(q, rng, true);
      Rational sum = 0;
      for (std::int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) == 1) sum += sys.condition_a(f, a);
      }
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("parity split and dilation invariance of the decision") {
  std::mt19937_64 rng(404);
  for (std::int64_t q : {4, 6, 8, 9, 12}) {
    const OkadaSystem sys(q);
    // include a kernel vector so the vanishing branch is exercised
    std::vector<PeriodicFunction> corpus = kernel_basis(q);
    for (int rep = 0; rep < 15; ++rep) {
      corpus.push_back(testutil::random_zero_mean(q, rng, rep % 2 == 0));
    }
    for (const auto& f : corpus) {
      const bool v = sys.decide(f).decision;
      const auto [fe, fo] = even_odd_split(f);
      CHECK(v == (sys.decide(fe).decision && sys.decide(fo).decision));
      for (std::int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) == 1) CHECK(sys.decide(dilate(f, a)).decision == v);
      }
    }
  }
}

TEST_CASE("character-twisted weight sums vanish for kernel vectors") {
  // sum_rho S(rho) (f_rho, chi) = 0 for every character chi when L(1,f) = 0
  for (std::int64_t q : {4, 6, 8, 12, 15, 16}) {
    const auto sys = ResidueWeightSystem::build(q);
    const auto chars = enumerate_characters(q);
    const std::int64_t expo = unit_group(q).exponent();
    for (const auto& f : kernel_basis(q)) {
      for (const auto& chi : chars) {
        CyclotomicElement acc = CyclotomicElement::zero(expo);
        for (std::int64_t rho = 1; rho <= q; ++rho) {
          if (sys.weight(rho) == 0) continue;
          acc += inner_product(dilate_by_residue(f, rho), chi).mul_rational(sys.weight(rho));
        }
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("functions supported off the intermediate divisors never vanish") {
  // nonzero rational f with f(r) = 0 for 1 < gcd(r,q) < q and zero mean
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (std::int64_t q : {6, 8, 12, 15}) {
    const OkadaSystem sys(q);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Rational> values(q, Rational(0));
      Rational sum = 0;
      bool nonzero = false;
      for (std::int64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        values[a - 1] = dist(rng);
        if (values[a - 1] != 0) nonzero = true;
        sum += values[a - 1];
      }
      values[q - 1] = -sum;
      if (!nonzero && sum == 0) continue;
      CHECK_FALSE(sys.decide(PeriodicFunction(q, std::move(values))).decision);
    }
  }
}
