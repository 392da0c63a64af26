#include "lseries/okada.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lseries/arith.hpp"

namespace lseries {

namespace {

Rational pow_uint_rational(std::uint64_t base, std::uint64_t e) {
  Integer b(static_cast<unsigned long>(base));
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);
}

void require_prime_divisor(std::uint64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("modulus must be >= 1");
  if (p < 2 || !is_prime(p) || static_cast<std::uint64_t>(q) % p != 0) {
    throw std::invalid_argument("p must be a prime divisor of q");
  }
}

}  // namespace

Rational epsilon_weight(std::int64_t r, std::uint64_t p, std::int64_t q) {
  require_prime_divisor(p, q);
  if (r < 1 || r > q) throw std::invalid_argument("epsilon_weight: need 1 <= r <= q");
  const unsigned vq = valuation(static_cast<std::uint64_t>(q), p);
  const unsigned vr = valuation(static_cast<std::uint64_t>(r), p);
  if (vr < vq) return Rational(static_cast<long>(vr));
  return Rational(static_cast<long>(vq)) + Rational(1, static_cast<long>(p) - 1);
}

const Rational& EpsilonTable::at(std::int64_t r, std::uint64_t p) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), std::make_pair(r, p),
                             [](const Row& row, const std::pair<std::int64_t, std::uint64_t>& key) {
                               return std::make_pair(row.r, row.p) < key;
                             });
  if (it == rows.end() || it->r != r || it->p != p) {
    throw std::invalid_argument("EpsilonTable: no such entry");
  }
  return it->value;
}

EpsilonTable epsilon_table(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("epsilon_table: modulus must be >= 1");
  EpsilonTable table;
  table.modulus = q;
  std::vector<std::uint64_t> primes;
  for (const auto& pp : factorize(static_cast<std::uint64_t>(q))) primes.push_back(pp.prime);
  for (std::int64_t r = 1; r <= q; ++r) {
    if (std::gcd(r, q) == 1) continue;
    for (std::uint64_t p : primes) {
      table.rows.push_back({r, p, epsilon_weight(r, p, q)});
    }
  }
  return table;
}

EpsilonPartialSum epsilon_partial_sum(std::int64_t r, std::uint64_t p, std::int64_t q,
                                      unsigned depth) {
  require_prime_divisor(p, q);
  if (r < 1 || r > q) throw std::invalid_argument("epsilon_partial_sum: need 1 <= r <= q");
  if (depth == 0) throw std::invalid_argument("epsilon_partial_sum: depth must be >= 1");
  const unsigned vq = valuation(static_cast<std::uint64_t>(q), p);
  Rational partial = 0;
  for (unsigned j = 1; j <= depth; ++j) {
    // solutions t mod q of p^j t == r: gcd(p^j, q) = p^{min(j, vq)} of them,
    // provided that power divides r
    const unsigned m = std::min(j, vq);
    std::uint64_t g = 1;
    for (unsigned i = 0; i < m; ++i) g *= p;
    if (static_cast<std::uint64_t>(r) % g != 0) continue;
    partial += pow_uint_rational(p, m) / pow_uint_rational(p, j);
  }
  // sum_{j > depth} p^{-j} * (count <= q)
  Rational tail = Rational(q) / pow_uint_rational(p, depth);
  tail /= Rational(1) - Rational(1, static_cast<long>(p));
  return {partial, tail};
}

// ---------------------------------------------------------------------------

ResidueWeightSystem ResidueWeightSystem::build(std::int64_t q, std::int64_t cap) {
  if (q < 1) throw std::invalid_argument("ResidueWeightSystem: modulus must be >= 1");
  if (q > cap) throw std::invalid_argument("ResidueWeightSystem: modulus above cap");

  ResidueWeightSystem sys;
  sys.q_ = q;

  struct WeightClass {
    std::int64_t residue;  // p^e mod q, constant on the class
    Rational weight;       // sum of p^{-e} over the class
    Rational wexp;         // sum of e p^{-e} over the class
  };
  std::vector<std::vector<WeightClass>> axes;

  for (const auto& [p, v] : factorize(static_cast<std::uint64_t>(q))) {
    sys.primes_.push_back(p);
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < v; ++i) pv *= p;
    const std::uint64_t q1 = static_cast<std::uint64_t>(q) / pv;
    const std::uint64_t d = multiplicative_order(p % (q1 == 1 ? 1 : q1), q1);

    std::vector<WeightClass> classes;
    std::uint64_t pe = 1;
    for (unsigned e = 0; e < v; ++e) {
      classes.push_back({static_cast<std::int64_t>(pe % q),
                         Rational(1) / Rational(static_cast<unsigned long>(pe)),
                         Rational(static_cast<long>(e)) / Rational(static_cast<unsigned long>(pe))});
      pe *= p;
    }
    // e >= v: residue p^{v+s} repeats with period d; geometric tails
    const Rational y = Rational(1) / pow_uint_rational(p, d);  // p^{-d}
    const Rational geo = Rational(1) / (Rational(1) - y);
    for (std::uint64_t s = 0; s < d; ++s) {
      const std::uint64_t e0 = v + s;
      const Rational a = Rational(1) / pow_uint_rational(p, e0);
      const std::int64_t res =
          static_cast<std::int64_t>(pow_mod(p, e0, static_cast<std::uint64_t>(q)));
      // sum_k (e0 + k d) X^{e0 + k d} = A (e0/(1-Y) + d Y/(1-Y)^2)
      const Rational wexp =
          a * (Rational(static_cast<unsigned long>(e0)) * geo +
               Rational(static_cast<unsigned long>(d)) * y * geo * geo);
      classes.push_back({res, a * geo, wexp});
    }
    axes.push_back(std::move(classes));
  }

  // fold one axis at a time (same sum as enumerating all class tuples)
  auto convolve = [q](const std::vector<Rational>& cur, const std::vector<WeightClass>& classes,
                      bool use_wexp) {
    std::vector<Rational> out(static_cast<std::size_t>(q), Rational(0));
    for (std::int64_t res = 0; res < q; ++res) {
      const Rational& w = cur[res];
      if (w == 0) continue;
      for (const auto& cls : classes) {
        const std::int64_t target = (res * cls.residue) % q;
        out[target] += w * (use_wexp ? cls.wexp : cls.weight);
      }
    }
    return out;
  };

  auto to_slots = [q](const std::vector<Rational>& by_residue) {
    std::vector<Rational> slots(static_cast<std::size_t>(q));
    for (std::int64_t r = 1; r <= q; ++r) slots[r - 1] = by_residue[r % q];
    return slots;
  };

  std::vector<Rational> unit_vec(static_cast<std::size_t>(q), Rational(0));
  unit_vec[1 % q] = 1;

  std::vector<Rational> s_vec = unit_vec;
  for (const auto& axis : axes) s_vec = convolve(s_vec, axis, false);
  sys.s_ = to_slots(s_vec);

  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::vector<Rational> w_vec = unit_vec;
    for (std::size_t j = 0; j < axes.size(); ++j) {
      w_vec = convolve(w_vec, axes[j], i == j);
    }
    sys.w_.push_back(to_slots(w_vec));
  }
  return sys;
}

const Rational& ResidueWeightSystem::weight(std::int64_t r) const {
  if (r < 1 || r > q_) throw std::invalid_argument("weight: residue out of range");
  return s_[r - 1];
}

const std::vector<Rational>& ResidueWeightSystem::log_weights(std::uint64_t p) const {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (primes_[i] == p) return w_[i];
  }
  throw std::invalid_argument("log_weights: p does not divide q");
}

Rational ResidueWeightSystem::weight_total() const {
  Rational t = 0;
  for (const auto& v : s_) t += v;
  return t;
}

// ---------------------------------------------------------------------------

OkadaSystem::OkadaSystem(std::int64_t q, std::int64_t cap)
    : weights_(ResidueWeightSystem::build(q, cap)) {
  for (std::int64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) units_.push_back(a);
  }
}

Rational OkadaSystem::condition_a(const PeriodicFunction& f, std::int64_t a) const {
  const std::int64_t q = modulus();
  if (f.modulus() != q) throw std::invalid_argument("condition_a: modulus mismatch");
  std::int64_t ar = a % q;
  if (ar < 0) ar += q;
  if (std::gcd(ar == 0 ? q : ar, q) != 1) {
    throw std::invalid_argument("condition_a: a must be a unit mod q");
  }
  Rational acc = 0;
  for (std::int64_t r = 1; r <= q; ++r) {
    const Rational& s = weights_.weight(r);
    if (s == 0) continue;
    acc += s * f(ar * r);
  }
  return acc;
}

Rational OkadaSystem::condition_b(const PeriodicFunction& f, std::uint64_t p) const {
  const std::int64_t q = modulus();
  if (f.modulus() != q) throw std::invalid_argument("condition_b: modulus mismatch");
  require_prime_divisor(p, q);
  Rational acc = 0;
  for (std::int64_t r = 1; r <= q; ++r) {
    if (std::gcd(r, q) == 1) continue;
    const Rational& v = f(r);
    if (v == 0) continue;
    acc += v * epsilon_weight(r, p, q);
  }
  return acc;
}

std::vector<std::pair<std::uint64_t, Rational>> OkadaSystem::log_coefficients(
    const PeriodicFunction& f) const {
  const std::int64_t q = modulus();
  if (f.modulus() != q) throw std::invalid_argument("log_coefficients: modulus mismatch");
  if (!f.has_zero_mean()) throw std::domain_error("log_coefficients: nonzero mean");
  const Rational phi_inv = Rational(1, static_cast<long>(units_.size()));
  std::vector<std::pair<std::uint64_t, Rational>> out;
  for (std::uint64_t p : weights_.primes()) {
    const auto& w = weights_.log_weights(p);
    Rational t = 0;
    for (std::int64_t r = 1; r <= q; ++r) {
      if (w[r - 1] == 0) continue;
      Rational unit_sum = 0;  // sum over units a of f(a r)
      for (std::int64_t a : units_) unit_sum += f(a * r);
      t += w[r - 1] * unit_sum;
    }
    out.emplace_back(p, t * phi_inv);
  }
  return out;
}

bool OkadaSystem::log_identity_holds(const PeriodicFunction& f) const {
  const std::int64_t q = modulus();
  const auto t = log_coefficients(f);
  for (const auto& [p, tp] : t) {
    const unsigned v = valuation(static_cast<std::uint64_t>(q), p);
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < v; ++i) pv *= p;
    const std::uint64_t q1 = static_cast<std::uint64_t>(q) / pv;
    const Rational rhs = Rational(static_cast<unsigned long>(q1)) /
                         Rational(static_cast<unsigned long>(euler_phi(q1))) /
                         Rational(static_cast<long>(units_.size())) * condition_b(f, p);
    if (tp != rhs) return false;
  }
  return true;
}

VanishingCertificate OkadaSystem::decide(const PeriodicFunction& f) const {
  if (f.modulus() != modulus()) throw std::invalid_argument("decide: modulus mismatch");
  if (!f.has_zero_mean()) {
    throw std::domain_error("decide: L(s, f) has a pole at s = 1 (mean " +
                            to_string(f.mean()) + ")");
  }
  VanishingCertificate cert;
  cert.route = DecisionRoute::okada;
  cert.decision = true;
  for (std::int64_t a : units_) {
    Rational res = condition_a(f, a);
    if (res != 0) cert.decision = false;
    cert.condition_a.emplace_back(a, std::move(res));
  }
  for (std::uint64_t p : weights_.primes()) {
    Rational res = condition_b(f, p);
    if (res != 0) cert.decision = false;
    cert.condition_b.emplace_back(p, std::move(res));
  }
  return cert;
}

std::vector<PeriodicFunction> OkadaSystem::kernel_basis() const {
  const std::int64_t q = modulus();
  const std::size_t n = static_cast<std::size_t>(q);

  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(n, Rational(1));  // zero mean
  for (std::int64_t a : units_) {
    std::vector<Rational> row(n, Rational(0));
    for (std::int64_t r = 1; r <= q; ++r) {
      const Rational& s = weights_.weight(r);
      if (s == 0) continue;
      std::int64_t target = (a * r) % q;
      if (target == 0) target = q;
      row[target - 1] += s;
    }
    rows.push_back(std::move(row));
  }
  for (std::uint64_t p : weights_.primes()) {
    std::vector<Rational> row(n, Rational(0));
    for (std::int64_t r = 1; r <= q; ++r) {
      if (std::gcd(r, q) != 1) row[r - 1] = epsilon_weight(r, p, q);
    }
    rows.push_back(std::move(row));
  }

  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rational inv = Rational(1) / rows[pivot_row][col];
    for (std::size_t j = col; j < n; ++j) rows[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      const Rational c = rows[i][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= c * rows[pivot_row][j];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<PeriodicFunction> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      x[pivot_cols[i]] = -rows[i][free_col];
    }
    // normalize: integer entries, content 1, first nonzero entry positive
    const Integer denom = lcm_denominators(x);
    Integer content = 0;
    for (auto& v : x) {
      v *= Rational(denom);
      v.canonicalize();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
    }
    if (content != 0) {
      for (auto& v : x) {
        v /= Rational(content);
        v.canonicalize();
      }
    }
    for (const auto& v : x) {
      if (v != 0) {
        if (v < 0) {
          for (auto& w : x) w = -w;
        }
        break;
      }
    }
    basis.emplace_back(q, std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------

Rational condition_a(const PeriodicFunction& f, std::int64_t a) {
  return OkadaSystem(f.modulus()).condition_a(f, a);
}

Rational condition_b(const PeriodicFunction& f, std::uint64_t p) {
  return OkadaSystem(f.modulus()).condition_b(f, p);
}

std::vector<std::pair<std::uint64_t, Rational>> log_coefficients(const PeriodicFunction& f) {
  return OkadaSystem(f.modulus()).log_coefficients(f);
}

bool log_identity_holds(const PeriodicFunction& f) {
  return OkadaSystem(f.modulus()).log_identity_holds(f);
}

VanishingCertificate decide_vanishing(const PeriodicFunction& f) {
  return OkadaSystem(f.modulus()).decide(f);
}

std::vector<PeriodicFunction> kernel_basis(std::int64_t q) {
  return OkadaSystem(q).kernel_basis();
}

}  // namespace lseries
