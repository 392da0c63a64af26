#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lseries/periodic_function.hpp"

namespace testutil {

// Zero-mean rational function with small random entries. Denominators from
// {1, 2, 3} when mixed_denominators is set; the last slot balances the sum.
inline lseries::PeriodicFunction random_zero_mean(std::int64_t q, std::mt19937_64& rng,
                                                  bool mixed_denominators = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<lseries::Rational> values;
  values.reserve(q);
  lseries::Rational sum = 0;
  for (std::int64_t a = 1; a < q; ++a) {
    lseries::Rational v(num(rng), mixed_denominators ? den(rng) : 1);
    v.canonicalize();
    sum += v;
    values.push_back(std::move(v));
  }
  values.push_back(-sum);
  return lseries::PeriodicFunction(q, std::move(values));
}

inline lseries::PeriodicFunction make_f(std::int64_t q, std::initializer_list<long> vals) {
  std::vector<lseries::Rational> values;
  for (long v : vals) values.emplace_back(v);
  return lseries::PeriodicFunction(q, std::move(values));
}

}  // namespace testutil
