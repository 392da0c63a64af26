#include "lseries/characters.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lseries/arith.hpp"
#include "lseries/special.hpp"

namespace lseries {

namespace {

std::mutex g_group_mutex;
std::map<std::int64_t, std::unique_ptr<UnitGroupStructure>> g_group_cache;

// smallest primitive root modulo an odd prime p
std::uint64_t primitive_root_mod_p(std::uint64_t p) {
  const Factorization fac = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pp : fac) {
      if (pow_mod(g, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root_mod_p: none found");
}

std::int64_t crt_lift(std::uint64_t local, std::uint64_t pk, std::int64_t q) {
  // residue == local mod pk, == 1 mod q/pk
  const std::uint64_t m = static_cast<std::uint64_t>(q) / pk;
  if (m == 1) return static_cast<std::int64_t>(local);
  const std::uint64_t inv_m = inverse_mod(m % pk, pk);
  const std::uint64_t inv_pk = inverse_mod(pk % m, m);
  const std::uint64_t qa = static_cast<std::uint64_t>(q);
  std::uint64_t r = mul_mod(mul_mod(local % pk, m, qa), inv_m, qa);
  r = (r + mul_mod(mul_mod(1, pk, qa), inv_pk, qa)) % qa;
  return static_cast<std::int64_t>(r == 0 ? qa : r);
}

}  // namespace

bool UnitGroupStructure::is_unit(std::int64_t a) const {
  std::int64_t r = a % q_;
  if (r < 0) r += q_;
  if (r == 0) r = q_;
  return std::gcd(r, q_) == 1;
}

std::vector<std::int64_t> UnitGroupStructure::discrete_log(std::int64_t a) const {
  if (!is_unit(a)) throw std::invalid_argument("discrete_log: not a unit");
  std::int64_t r = a % q_;
  if (r < 0) r += q_;
  std::vector<std::int64_t> out;
  out.reserve(generators_.size());
  for (const auto& comp : components_) {
    const std::int64_t idx = r % static_cast<std::int64_t>(comp.prime_power);
    const std::int64_t v = comp.dlog[idx];
    if (v < 0) throw std::logic_error("discrete_log: missing table entry");
    out.push_back(v);
  }
  return out;
}

const UnitGroupStructure& unit_group(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("unit_group: modulus must be >= 1");
  if (q > kMaxModulus) throw std::invalid_argument("unit_group: modulus above cap");
  std::lock_guard<std::mutex> lock(g_group_mutex);
  auto it = g_group_cache.find(q);
  if (it != g_group_cache.end()) return *it->second;

  auto g = std::unique_ptr<UnitGroupStructure>(new UnitGroupStructure());
  g->q_ = q;
  g->phi_ = static_cast<std::int64_t>(euler_phi(q));

  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(q))) {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) pk *= p;
    if (p == 2) {
      if (e == 1) continue;  // trivial factor
      if (e == 2) {
        UnitGroupStructure::Component comp{pk, std::vector<std::int64_t>(pk, -1)};
        comp.dlog[1] = 0;
        comp.dlog[3] = 1;
        g->generators_.push_back(crt_lift(3, pk, q));
        g->orders_.push_back(2);
        g->components_.push_back(std::move(comp));
        continue;
      }
      // 2^k, k >= 3: <-1> x <5>
      const std::uint64_t five_order = pk / 4;
      UnitGroupStructure::Component sign{pk, std::vector<std::int64_t>(pk, -1)};
      UnitGroupStructure::Component five{pk, std::vector<std::int64_t>(pk, -1)};
      std::uint64_t cur = 1;
      for (std::uint64_t t = 0; t < five_order; ++t) {
        sign.dlog[cur] = 0;
        five.dlog[cur] = static_cast<std::int64_t>(t);
        const std::uint64_t neg = pk - cur;
        sign.dlog[neg] = 1;
        five.dlog[neg] = static_cast<std::int64_t>(t);
        cur = mul_mod(cur, 5, pk);
      }
      g->generators_.push_back(crt_lift(pk - 1, pk, q));
      g->orders_.push_back(2);
      g->components_.push_back(std::move(sign));
      g->generators_.push_back(crt_lift(5, pk, q));
      g->orders_.push_back(static_cast<std::int64_t>(five_order));
      g->components_.push_back(std::move(five));
      continue;
    }
    // odd prime power: cyclic
    std::uint64_t root = primitive_root_mod_p(p);
    if (e >= 2 && pow_mod(root, p - 1, p * p) == 1) root += p;
    const std::uint64_t order = euler_phi(pk);
    UnitGroupStructure::Component comp{pk, std::vector<std::int64_t>(pk, -1)};
    std::uint64_t cur = 1;
    for (std::uint64_t t = 0; t < order; ++t) {
      comp.dlog[cur] = static_cast<std::int64_t>(t);
      cur = mul_mod(cur, root, pk);
    }
    g->generators_.push_back(crt_lift(root, pk, q));
    g->orders_.push_back(static_cast<std::int64_t>(order));
    g->components_.push_back(std::move(comp));
  }

  std::int64_t expo = 1;
  for (std::int64_t o : g->orders_) expo = std::lcm(expo, o);
  g->exponent_ = expo;

  for (std::int64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) g->units_.push_back(a);
  }

  const UnitGroupStructure& ref = *g;
  g_group_cache.emplace(q, std::move(g));
  return ref;
}

// ---------------------------------------------------------------------------

DirichletCharacter::DirichletCharacter(std::int64_t q, std::vector<std::int64_t> exponents)
    : q_(q), exps_(std::move(exponents)) {
  const UnitGroupStructure& g = unit_group(q);
  if (exps_.size() != g.orders().size()) {
    throw std::invalid_argument("DirichletCharacter: one exponent per generator");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int64_t e = exps_[i] % g.orders()[i];
    if (e < 0) e += g.orders()[i];
    exps_[i] = e;
  }
}

DirichletCharacter DirichletCharacter::principal(std::int64_t q) {
  const UnitGroupStructure& g = unit_group(q);
  return DirichletCharacter(q, std::vector<std::int64_t>(g.orders().size(), 0));
}

bool DirichletCharacter::is_principal() const {
  for (std::int64_t e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

std::int64_t DirichletCharacter::value_modulus() const {
  return unit_group(q_).exponent();
}

std::int64_t DirichletCharacter::value_exponent(std::int64_t a) const {
  const UnitGroupStructure& g = unit_group(q_);
  const std::vector<std::int64_t> dl = g.discrete_log(a);
  const std::int64_t expo = g.exponent();
  std::int64_t t = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::int64_t step = expo / g.orders()[i];
    t = (t + (exps_[i] * dl[i]) % expo * step) % expo;
  }
  return t;
}

CyclotomicElement DirichletCharacter::operator()(std::int64_t a) const {
  const UnitGroupStructure& g = unit_group(q_);
  if (!g.is_unit(a)) return CyclotomicElement::zero(g.exponent());
  return CyclotomicElement::zeta_power(g.exponent(), value_exponent(a));
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q) {
  const UnitGroupStructure& g = unit_group(q);
  std::vector<DirichletCharacter> out;
  out.reserve(g.phi());
  std::vector<std::int64_t> e(g.orders().size(), 0);
  while (true) {
    out.emplace_back(q, e);
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (++e[i] < g.orders()[i]) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  return out;
}

CyclotomicElement inner_product(const PeriodicFunction& f, const DirichletCharacter& chi) {
  if (f.modulus() != chi.modulus()) {
    throw std::invalid_argument("inner_product: modulus mismatch");
  }
  const UnitGroupStructure& g = unit_group(chi.modulus());
  const std::int64_t expo = g.exponent();
  CyclotomicElement acc = CyclotomicElement::zero(expo);
  for (std::int64_t a : g.units()) {
    const Rational& v = f(a);
    if (v == 0) continue;
    const std::int64_t t = chi.value_exponent(a);
    acc += CyclotomicElement::zeta_power(expo, -t).mul_rational(v);
  }
  return acc.mul_rational(Rational(1, g.phi()));
}

std::vector<CyclotomicElement> character_decompose(const PeriodicFunction& g) {
  const std::int64_t q = g.modulus();
  for (std::int64_t r = 1; r <= q; ++r) {
    if (std::gcd(r, q) != 1 && g(r) != 0) {
      throw std::invalid_argument("character_decompose: function not supported on the units");
    }
  }
  std::vector<CyclotomicElement> out;
  for (const auto& chi : enumerate_characters(q)) out.push_back(inner_product(g, chi));
  return out;
}

DedekindDeterminant dedekind_determinant(std::int64_t q,
                                         const std::vector<ComplexBall>& values_on_units,
                                         mpfr_prec_t prec) {
  const UnitGroupStructure& g = unit_group(q);
  const std::size_t n = g.units().size();
  if (values_on_units.size() != n) {
    throw std::invalid_argument("dedekind_determinant: need one value per unit");
  }
  if (n > 16) {
    throw std::invalid_argument("dedekind_determinant: phi(q) > 16 not supported");
  }

  std::vector<std::int64_t> pos(q + 1, -1);
  for (std::size_t i = 0; i < n; ++i) pos[g.units()[i]] = static_cast<std::int64_t>(i);

  // matrix entry (x row, y column) = F(x y^{-1})
  std::vector<std::vector<const ComplexBall*>> m(n, std::vector<const ComplexBall*>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t inv =
        inverse_mod(static_cast<std::uint64_t>(g.units()[j]) % q, static_cast<std::uint64_t>(q));
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t r = mul_mod(static_cast<std::uint64_t>(g.units()[i]) % q, inv,
                                static_cast<std::uint64_t>(q));
      if (r == 0) r = static_cast<std::uint64_t>(q);
      m[i][j] = &values_on_units[pos[r]];
    }
  }

  // division-free expansion over column subsets
  const std::size_t full = static_cast<std::size_t>(1) << n;
  std::vector<ComplexBall> det_of(full, ComplexBall(prec));
  det_of[0] = ComplexBall(Ball::from_int(1, prec), Ball(prec));
  for (std::size_t mask = 1; mask < full; ++mask) {
    const int k = __builtin_popcountll(mask);
    const std::size_t row = static_cast<std::size_t>(k - 1);
    ComplexBall acc(prec);
    int seen = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (static_cast<std::size_t>(1) << j))) continue;
      // expansion along the last row: sign (-1)^{(k-1) + column position}
      const ComplexBall term = *m[row][j] * det_of[mask ^ (static_cast<std::size_t>(1) << j)];
      acc += ((k - 1 + seen) % 2 == 0) ? term : -term;
      ++seen;
    }
    det_of[mask] = acc;
  }

  DedekindDeterminant out{det_of[full - 1], ComplexBall(prec), false};

  // prod over characters of sum_x chi(x) F(x)
  const std::int64_t expo = g.exponent();
  std::vector<ComplexBall> roots;
  roots.reserve(expo);
  for (std::int64_t t = 0; t < expo; ++t) roots.push_back(root_of_unity(expo, t, prec));
  ComplexBall prod(Ball::from_int(1, prec), Ball(prec));
  for (const auto& chi : enumerate_characters(q)) {
    ComplexBall s(prec);
    for (std::size_t i = 0; i < n; ++i) {
      s += roots[chi.value_exponent(g.units()[i])] * values_on_units[i];
    }
    prod = prod * s;
  }
  out.character_product = prod;
  out.agree = out.determinant.overlaps(out.character_product);
  return out;
}

}  // namespace lseries
