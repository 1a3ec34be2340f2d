#pragma once

#include <cstdint>
#include <vector>

#include "zeta/rational.hpp"

namespace zeta {

/// Coefficients c_1 .. c_N of a Dirichlet series sum c_n n^{-s}.
/// Arithmetic truncates to the minimum of the operand bounds.
class DirichletCoefficients {
 public:
  /// coeffs[i] is c_{i+1}; coeffs must be nonempty.
  explicit DirichletCoefficients(std::vector<Rational> coeffs);

  static DirichletCoefficients ones(std::size_t bound);   // zeta
  static DirichletCoefficients delta(std::size_t bound);  // multiplicative unit: 1, 0, 0, ...

  std::size_t bound() const { return coeffs_.size(); }

  /// c_n for 1 <= n <= bound().
  const Rational& at(std::size_t n) const;
  Rational& at(std::size_t n);

  bool operator==(const DirichletCoefficients& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Dirichlet convolution (f*g)(n) = sum_{ij=n} f(i) g(j), to min bound.
DirichletCoefficients ds_mul(const DirichletCoefficients& f, const DirichletCoefficients& g);

/// Inverse under Dirichlet convolution; throws NonInvertibleError if f(1)=0.
/// Postcondition: ds_mul(f, ds_inv(f)) = delta through the bound.
DirichletCoefficients ds_inv(const DirichletCoefficients& f);

}  // namespace zeta
