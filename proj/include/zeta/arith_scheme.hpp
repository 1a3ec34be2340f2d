#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "zeta/arith.hpp"
#include "zeta/dirichlet_series.hpp"
#include "zeta/variety.hpp"

namespace zeta {

/// A scheme of finite type over Spec Z: either an integer polynomial system
/// in affine or projective ambient space, or Spec O_K for a quadratic field
/// (carried as splitting data, the one construction a polynomial system does
/// not capture verbatim).
class ArithmeticScheme {
 public:
  static ArithmeticScheme spec_z();
  static ArithmeticScheme affine_space(unsigned n);
  static ArithmeticScheme projective_space(unsigned n);
  /// Ring of integers of the quadratic field with fundamental discriminant d.
  static ArithmeticScheme spec_ok(const Integer& d);
  static ArithmeticScheme from_polynomials(Ambient ambient, std::vector<Polynomial> eqs);

  /// Splitting data when the scheme is Spec O_K, else nullptr.
  const QuadraticField* number_field() const;
  /// Integral polynomial model.  For Spec O_K this is the monogenic
  /// presentation Z[x]/(x^2 - x + (1-D)/4) or Z[x]/(x^2 - D/4).
  const VarietySpec& polynomial_model() const;

 private:
  struct OkData {
    QuadraticField field;
    VarietySpec model;
  };
  explicit ArithmeticScheme(std::variant<VarietySpec, OkData> data);

  std::variant<VarietySpec, OkData> data_;
};

/// "specz", "affine:n", "projective:n", "specok:D", or
/// "poly:<ambient>;<equation>[;<equation>...]".
ArithmeticScheme parse_scheme(const std::string& text);

/// Coefficientwise reduction of the polynomial model into F_p; the ambient is
/// preserved.  Degenerate reductions (equations vanishing mod p) are legal.
VarietySpec reduce_mod_p(const ArithmeticScheme& x, std::uint64_t p);

/// Z(X_p, t) to the given order: the Hasse-Weil zeta series of the mod-p
/// reduction.  Spec O_K uses its splitting data directly ((1-t)^-2 split,
/// (1-t^2)^-1 inert, (1-t)^-1 ramified), which agrees with the polynomial
/// model because quadratic rings of integers are monogenic.
PowerSeries local_factor(const ArithmeticScheme& x, std::uint64_t p, unsigned order,
                         const CountOptions& opts = {});

/// Dirichlet coefficients of zeta_X(s) = prod_p Z(X_p, p^{-s}) for n <= n_max.
/// Local factors at distinct primes are computed in parallel (opts.threads);
/// assembly is serial and the result thread-count independent.
DirichletCoefficients global_coeffs(const ArithmeticScheme& x, std::size_t n_max,
                                    const CountOptions& opts = {});

/// zeta_X = zeta_Z * zeta_U for a closed subscheme Z with open complement U,
/// compared through n_max coefficients.  The caller supplies the pieces.
bool check_decomposition_identity(const ArithmeticScheme& x, const ArithmeticScheme& z_closed,
                                  const ArithmeticScheme& u_open, std::size_t n_max,
                                  const CountOptions& opts = {});

}  // namespace zeta
