#pragma once

#include <cstdint>
#include <vector>

#include "lseries/periodic_function.hpp"
#include "lseries/rational.hpp"

namespace lseries {

// Residue-weight systems enumerate one class tuple per divisor-prime axis;
// the tuple count can reach prod (v_i + ord), so the modulus is capped.
inline constexpr std::int64_t kMaxWeightModulus = 10'000;

// epsilon(r, p) = v_p(r) if v_p(r) < v_p(q), else v_p(q) + 1/(p-1).
// Requires p | q and 1 <= r <= q.
Rational epsilon_weight(std::int64_t r, std::uint64_t p, std::int64_t q);

// All epsilon values on the non-unit residues, r ascending then p ascending.
struct EpsilonTable {
  struct Row {
    std::int64_t r;
    std::uint64_t p;
    Rational value;
  };
  std::int64_t modulus = 1;
  std::vector<Row> rows;
  const Rational& at(std::int64_t r, std::uint64_t p) const;
};
EpsilonTable epsilon_table(std::int64_t q);

// Truncation of the double sum sum_{j>=1} p^{-j} #{t mod q : p^j t == r}
// whose value is epsilon(r, p): exact partial sum over j <= depth plus the
// geometric tail bound q p^{-depth} / (1 - 1/p).
struct EpsilonPartialSum {
  Rational partial;
  Rational tail_bound;
};
EpsilonPartialSum epsilon_partial_sum(std::int64_t r, std::uint64_t p, std::int64_t q,
                                      unsigned depth);

// Exact weights S(r) = sum_{m in M(q), m == r mod q} 1/m over the monoid
// M(q) generated by the primes dividing q, and the log-weight variants
// W_p(r) = sum v_p(m)/m. Built from finite exponent classes e < v_p(q) plus
// geometric tail classes grouped by the order of p modulo q/p^{v_p(q)}.
class ResidueWeightSystem {
 public:
  static ResidueWeightSystem build(std::int64_t q, std::int64_t cap = kMaxWeightModulus);

  std::int64_t modulus() const { return q_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const Rational& weight(std::int64_t r) const;             // S(r), r in 1..q
  const std::vector<Rational>& weights() const { return s_; }
  const std::vector<Rational>& log_weights(std::uint64_t p) const;  // W_p rows
  Rational weight_total() const;  // sum_r S(r) = q/phi(q)

 private:
  ResidueWeightSystem() = default;
  std::int64_t q_ = 1;
  std::vector<std::uint64_t> primes_;
  std::vector<Rational> s_;
  std::vector<std::vector<Rational>> w_;  // aligned with primes_
};

enum class DecisionRoute { okada, theorem1, both };

struct VanishingCertificate {
  bool decision = false;
  // Exact residuals; the decision is true iff every residual is zero.
  std::vector<std::pair<std::int64_t, Rational>> condition_a;   // per unit a
  std::vector<std::pair<std::uint64_t, Rational>> condition_b;  // per prime p | q
  DecisionRoute route = DecisionRoute::okada;
};

// Decision engine for one modulus; precomputes the weight system once.
class OkadaSystem {
 public:
  explicit OkadaSystem(std::int64_t q, std::int64_t cap = kMaxWeightModulus);

  std::int64_t modulus() const { return weights_.modulus(); }
  const ResidueWeightSystem& weights() const { return weights_; }

  // sum_{m in M(q)} f(am)/m = sum_rho S(rho) f(a rho); requires gcd(a,q)=1.
  Rational condition_a(const PeriodicFunction& f, std::int64_t a) const;

  // sum over non-unit residues r of f(r) epsilon(r, p); requires p | q.
  Rational condition_b(const PeriodicFunction& f, std::uint64_t p) const;

  // Coefficient T_p of log p in sum_{b in M(q)} (f_b, chi0)/b * log b,
  // one entry per prime p | q; requires zero mean.
  std::vector<std::pair<std::uint64_t, Rational>> log_coefficients(
      const PeriodicFunction& f) const;

  // Exact identity T_p = (q1/phi(q1)) phi(q)^{-1} sum f(r) epsilon(r, p)
  // with q1 = q / p^{v_p(q)}, checked for every p | q.
  bool log_identity_holds(const PeriodicFunction& f) const;

  // L(1, f) = 0 iff all condition_a and condition_b residuals vanish.
  // Requires zero mean (otherwise L(s, f) has a pole at s = 1).
  VanishingCertificate decide(const PeriodicFunction& f) const;

  // Canonical basis of { f : sum f(a) = 0, all conditions vanish }: integer
  // entries, content 1, first nonzero entry positive.
  std::vector<PeriodicFunction> kernel_basis() const;

 private:
  ResidueWeightSystem weights_;
  std::vector<std::int64_t> units_;
};

// One-shot conveniences over OkadaSystem.
Rational condition_a(const PeriodicFunction& f, std::int64_t a);
Rational condition_b(const PeriodicFunction& f, std::uint64_t p);
std::vector<std::pair<std::uint64_t, Rational>> log_coefficients(const PeriodicFunction& f);
bool log_identity_holds(const PeriodicFunction& f);
VanishingCertificate decide_vanishing(const PeriodicFunction& f);
std::vector<PeriodicFunction> kernel_basis(std::int64_t q);

}  // namespace lseries
