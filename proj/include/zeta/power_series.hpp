#pragma once

#include <vector>

#include "zeta/rational.hpp"

namespace zeta {

/// Truncated formal power series over Q: coefficients of t^0 .. t^T where
/// T = truncation_order().  All arithmetic truncates to the minimum of the
/// operand orders; coefficients beyond an operand's order are unknown, not
/// zero.
class PowerSeries {
 public:
  /// order = coeffs.size() - 1; coeffs must be nonempty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  /// The zero / constant-one series to a given order.
  static PowerSeries zero(unsigned order);
  static PowerSeries one(unsigned order);

  unsigned truncation_order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

  /// Coefficient of t^n; n must be <= truncation_order().
  const Rational& operator[](unsigned n) const;
  Rational& operator[](unsigned n);

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Equal orders and equal coefficients.
  bool operator==(const PowerSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficient-wise sum/difference, truncated to min(order_a, order_b).
PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const Rational& c, const PowerSeries& a);

/// Cauchy product, truncated to min(order_a, order_b).
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// Multiplicative inverse.  Throws ZeroConstantTermError if a[0] = 0.
/// Postcondition: ps_mul(a, ps_inv(a)) = 1 through the common order.
PowerSeries ps_inv(const PowerSeries& a);

/// exp of a series with a[0] = 0 (else BadConstantTermError):
/// sum_k a^k / k!, computed to the order of a.
PowerSeries ps_exp(const PowerSeries& a);

/// log of a series with a[0] = 1 (else BadConstantTermError).
/// Postcondition: ps_exp(ps_log(a)) = a and ps_log(ps_exp(b)) = b.
PowerSeries ps_log(const PowerSeries& a);

/// (1 - t^d)^e for integer e (negative allowed), truncated at `order`.
/// Coefficient of t^(d*j) is binomial(e, j) * (-1)^j, exact for huge e.
PowerSeries ps_geometric_pow(unsigned d, const Integer& e, unsigned order);

}  // namespace zeta
