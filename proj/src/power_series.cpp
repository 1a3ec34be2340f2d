#include "zeta/power_series.hpp"

#include <algorithm>

#include "zeta/errors.hpp"

namespace zeta {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInputError("power series needs at least the t^0 coefficient");
}

PowerSeries PowerSeries::zero(unsigned order) {
  return PowerSeries(std::vector<Rational>(order + 1, Rational(0)));
}

PowerSeries PowerSeries::one(unsigned order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  return PowerSeries(std::move(c));
}

const Rational& PowerSeries::operator[](unsigned n) const {
  if (n >= coeffs_.size()) throw InvalidInputError("coefficient index beyond truncation order");
  return coeffs_[n];
}

Rational& PowerSeries::operator[](unsigned n) {
  if (n >= coeffs_.size()) throw InvalidInputError("coefficient index beyond truncation order");
  return coeffs_[n];
}

namespace {
unsigned common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.truncation_order(), b.truncation_order());
}
}  // namespace

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  unsigned T = common_order(a, b);
  std::vector<Rational> c(T + 1);
  for (unsigned n = 0; n <= T; ++n) c[n] = a[n] + b[n];
  return PowerSeries(std::move(c));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  unsigned T = common_order(a, b);
  std::vector<Rational> c(T + 1);
  for (unsigned n = 0; n <= T; ++n) c[n] = a[n] - b[n];
  return PowerSeries(std::move(c));
}

PowerSeries ps_scale(const Rational& c, const PowerSeries& a) {
  std::vector<Rational> out(a.truncation_order() + 1);
  for (unsigned n = 0; n <= a.truncation_order(); ++n) out[n] = c * a[n];
  return PowerSeries(std::move(out));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  unsigned T = common_order(a, b);
  std::vector<Rational> c(T + 1, Rational(0));
  for (unsigned i = 0; i <= T; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= T; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_inv(const PowerSeries& a) {
  if (a[0] == 0) throw ZeroConstantTermError("ps_inv: constant term is zero");
  unsigned T = a.truncation_order();
  std::vector<Rational> b(T + 1, Rational(0));
  b[0] = 1 / a[0];
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -acc / a[0];
  }
  return PowerSeries(std::move(b));
}

PowerSeries ps_exp(const PowerSeries& a) {
  if (a[0] != 0) throw BadConstantTermError("ps_exp: constant term must be zero");
  unsigned T = a.truncation_order();
  // b' = a' b, i.e. n b_n = sum_{k=1..n} k a_k b_{n-k}.
  std::vector<Rational> b(T + 1, Rational(0));
  b[0] = 1;
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += Rational(k) * a[k] * b[n - k];
    b[n] = acc / Rational(n);
  }
  return PowerSeries(std::move(b));
}

PowerSeries ps_log(const PowerSeries& a) {
  if (a[0] != 1) throw BadConstantTermError("ps_log: constant term must be one");
  unsigned T = a.truncation_order();
  // l' = a'/a, i.e. n a_n = sum_{k=1..n} k l_k a_{n-k}; solve for l_n.
  std::vector<Rational> l(T + 1, Rational(0));
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc = Rational(n) * a[n];
    for (unsigned k = 1; k < n; ++k) acc -= Rational(k) * l[k] * a[n - k];
    l[n] = acc / Rational(n);
  }
  return PowerSeries(std::move(l));
}

PowerSeries ps_geometric_pow(unsigned d, const Integer& e, unsigned order) {
  if (d == 0) throw InvalidInputError("ps_geometric_pow: d must be >= 1");
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  // binomial(e, j) (-1)^j, built incrementally: each step multiplies by
  // -(e - j + 1)/j; stays integral (and exact) for any integer e.
  Rational binom(1);
  for (unsigned j = 1; d * j <= order; ++j) {
    binom *= make_rational(-(e - Integer(j) + 1), Integer(j));
    c[d * j] = binom;
  }
  return PowerSeries(std::move(c));
}

}  // namespace zeta
