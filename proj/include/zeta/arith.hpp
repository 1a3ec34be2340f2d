#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zeta/dirichlet_series.hpp"
#include "zeta/power_series.hpp"
#include "zeta/rational.hpp"

namespace zeta {

/// Kronecker symbol (a|n), defined for all integers including n <= 0.
int kronecker_symbol(const Integer& a, const Integer& n);

/// True when D is a fundamental discriminant: D = 1 mod 4 and squarefree,
/// or D = 4m with m = 2 or 3 mod 4 and squarefree. 0 and 1 are rejected.
bool is_fundamental_discriminant(const Integer& d);

enum class SplittingType { Split, Inert, Ramified };

/// A quadratic number field, identified by its fundamental discriminant.
class QuadraticField {
 public:
  explicit QuadraticField(Integer d);

  const Integer& discriminant() const { return d_; }

  /// Splitting of the rational prime p, read off the Kronecker symbol (D|p).
  SplittingType splitting(std::uint64_t p) const;

 private:
  Integer d_;
};

/// Classical Mobius function: 0 on square factors, else (-1)^{#prime factors}.
int mobius_classical(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Local Euler factor: maps a prime p to a power series in t = p^{-s},
/// truncated at (at least) the requested order.
using LocalFactorFn = std::function<PowerSeries(std::uint64_t p, std::size_t order)>;

/// Expands prod_p local(p) into Dirichlet coefficients c_1..c_N. The factor
/// at p is queried to order floor(log_p N) and must have constant term 1.
/// Local factors at distinct primes are evaluated in parallel when
/// threads > 1; assembly is serial, so output is thread-count independent.
DirichletCoefficients euler_product(const LocalFactorFn& local, std::size_t n_max,
                                    unsigned threads = 1);

/// Euler factor of the Dedekind zeta function of K at p:
/// (1-t)^-2 split, (1-t^2)^-1 inert, (1-t)^-1 ramified.
PowerSeries dedekind_local_factor(const QuadraticField& k, std::uint64_t p, std::size_t order);

/// c_n = number of ideals of O_K with norm n, for n = 1..N.
DirichletCoefficients dedekind_zeta_coeffs(const QuadraticField& k, std::size_t n_max);

/// Coefficients of the Dirichlet inverse of the Dedekind zeta function,
/// assembled from the reciprocal local factors.
DirichletCoefficients dedekind_mobius_coeffs(const QuadraticField& k, std::size_t n_max);

}  // namespace zeta
