#pragma once

#include <optional>
#include <vector>

#include "zeta/power_series.hpp"
#include "zeta/rational.hpp"

namespace zeta {

/// P(t)/Q(t) with integer coefficients, ascending degree.  Normal form:
/// Q(0) != 0, polynomial gcd(P, Q) = 1, integer content 1, and Q's constant
/// term positive.
struct RationalFunction {
  std::vector<Integer> numerator;
  std::vector<Integer> denominator;

  /// Construct from rational-coefficient polynomials and normalize.
  static RationalFunction from_rational_polys(std::vector<Rational> num,
                                              std::vector<Rational> den);

  /// Power-series expansion to the given order (long division).
  PowerSeries expand(unsigned order) const;

  bool operator==(const RationalFunction& other) const = default;
};

/// Pade-style reconstruction: find P/Q with deg P <= num_deg, deg Q <= den_deg,
/// Q(0) = 1, matching the series through its truncation order T.  Requires
/// T >= num_deg + den_deg + 1 (else InsufficientPrecisionError).  Among
/// admissible denominators the minimal degree wins, which makes the result
/// unique.  Returns nullopt when no rational function fits.
std::optional<RationalFunction> rational_reconstruct(const PowerSeries& a, unsigned num_deg,
                                                     unsigned den_deg);

}  // namespace zeta
