#pragma once

// Fixed-seed random generators for property-style tests.

#include <random>
#include <vector>

#include "zeta/power_series.hpp"
#include "zeta/rational.hpp"

namespace gen {

inline zeta::Rational rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return zeta::make_rational(zeta::Integer(num(rng)), zeta::Integer(den(rng)));
}

inline zeta::PowerSeries power_series(std::mt19937_64& rng, unsigned order) {
  std::vector<zeta::Rational> c(order + 1);
  for (auto& x : c) x = rational(rng);
  return zeta::PowerSeries(std::move(c));
}

/// Random series with constant term 1 (log-admissible, invertible).
inline zeta::PowerSeries power_series_unit(std::mt19937_64& rng, unsigned order) {
  auto s = power_series(rng, order);
  s[0] = 1;
  return s;
}

}  // namespace gen
