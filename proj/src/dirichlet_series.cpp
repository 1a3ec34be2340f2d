#include "zeta/dirichlet_series.hpp"

#include <algorithm>

#include "zeta/errors.hpp"

namespace zeta {

DirichletCoefficients::DirichletCoefficients(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInputError("Dirichlet coefficients need bound >= 1");
}

DirichletCoefficients DirichletCoefficients::ones(std::size_t bound) {
  return DirichletCoefficients(std::vector<Rational>(bound, Rational(1)));
}

DirichletCoefficients DirichletCoefficients::delta(std::size_t bound) {
  std::vector<Rational> c(bound, Rational(0));
  c[0] = 1;
  return DirichletCoefficients(std::move(c));
}

const Rational& DirichletCoefficients::at(std::size_t n) const {
  if (n < 1 || n > coeffs_.size()) throw InvalidInputError("Dirichlet index out of range");
  return coeffs_[n - 1];
}

Rational& DirichletCoefficients::at(std::size_t n) {
  if (n < 1 || n > coeffs_.size()) throw InvalidInputError("Dirichlet index out of range");
  return coeffs_[n - 1];
}

DirichletCoefficients ds_mul(const DirichletCoefficients& f, const DirichletCoefficients& g) {
  std::size_t N = std::min(f.bound(), g.bound());
  std::vector<Rational> c(N, Rational(0));
  for (std::size_t i = 1; i <= N; ++i) {
    if (f.at(i) == 0) continue;
    for (std::size_t j = 1; i * j <= N; ++j) {
      if (g.at(j) == 0) continue;
      c[i * j - 1] += f.at(i) * g.at(j);
    }
  }
  return DirichletCoefficients(std::move(c));
}

DirichletCoefficients ds_inv(const DirichletCoefficients& f) {
  if (f.at(1) == 0) throw NonInvertibleError("ds_inv: f(1) = 0");
  std::size_t N = f.bound();
  std::vector<Rational> g(N, Rational(0));
  g[0] = 1 / f.at(1);
  for (std::size_t n = 2; n <= N; ++n) {
    // sum_{d | n} g(d) f(n/d) = 0  =>  solve for g(n).
    Rational acc(0);
    for (std::size_t d = 1; d < n; ++d)
      if (n % d == 0) acc += g[d - 1] * f.at(n / d);
    g[n - 1] = -acc / f.at(1);
  }
  return DirichletCoefficients(std::move(g));
}

}  // namespace zeta
