#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeta/fq.hpp"
#include "zeta/polynomial.hpp"
#include "zeta/power_series.hpp"
#include "zeta/rational_function.hpp"

namespace zeta {

enum class AmbientKind { Affine, Projective };

/// Ambient space 𝔸^m or ℙ^m; dim is m, so the coordinate count is m for
/// affine and m + 1 for projective.
struct Ambient {
  AmbientKind kind;
  unsigned dim;

  unsigned coord_count() const {
    return kind == AmbientKind::Projective ? dim + 1 : dim;
  }
  bool operator==(const Ambient&) const = default;
};

/// Parses "affine:m" / "projective:m".
Ambient parse_ambient(const std::string& text);

/// A closed subvariety of the ambient space, cut out by integer-coefficient
/// equations in the ambient coordinates (validated: arity matches, and
/// projective equations are homogeneous).
class VarietySpec {
 public:
  VarietySpec(Ambient ambient, std::vector<Polynomial> equations);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Polynomial>& equations() const { return equations_; }

 private:
  Ambient ambient_;
  std::vector<Polynomial> equations_;
};

/// Enumeration limits for point counting.  The budget is the number of
/// coordinate-prefix assignments the enumeration may evaluate (the last
/// coordinate of each stratum is resolved by univariate root counting, not
/// iterated); it is checked up front, before any work.
struct CountOptions {
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

/// Number of F-points of X: satisfying m-tuples for affine ambient, solutions
/// up to scalar (normalized representatives) for projective.  Throws
/// FieldTooLargeError when the required enumeration exceeds opts.budget.
Integer count_points(const VarietySpec& x, const FiniteField& f,
                     const CountOptions& opts = {});

/// Same count over F_{p^k}, constructing the field only when equations
/// survive reduction mod p — closed forms (empty systems) work for any k.
Integer count_points(const VarietySpec& x, std::uint64_t p, unsigned k,
                     const CountOptions& opts = {});

/// Z(X,t) = exp(sum_{n=1}^{M} #X(F_{q^n}) t^n / n) truncated at order M,
/// for q = p^k.  Validates that the expansion has integer coefficients and
/// throws InconsistentCountsError otherwise.
PowerSeries hasse_weil_zeta(const VarietySpec& x, std::uint64_t q, unsigned order,
                            const CountOptions& opts = {});

/// Recovers a_d (number of closed points of degree d) from the point counts
/// N_n = sum_{d | n} d * a_d via a_n = (N_n - sum_{d | n, d < n} d * a_d) / n.
/// Throws InconsistentCountsError if any a_d is negative or non-integral.
std::vector<Integer> closed_point_counts(const std::vector<Integer>& n);

/// prod_d (1 - t^d)^{-a_d}, truncated at `order` — equal to the zeta series.
PowerSeries product_formula_series(const std::vector<Integer>& a, unsigned order);

/// prod_d (1 - t^d)^{+a_d}, the Mobius series M(X,t) = 1 / Z(X,t).
PowerSeries mobius_series(const std::vector<Integer>& a, unsigned order);

/// Outcome of the functional-equation test Z(1/(q^n t)) = eps q^{nE/2} t^E Z(t):
/// ok says whether some sign works, and eps is that sign (0 when !ok).
struct WeilCheckResult {
  bool ok;
  int eps;
};

/// Tests the identity above symbolically (cross-multiplied polynomial
/// comparison; no evaluation).  Requires q^{nE/2} integral, i.e. n*E even —
/// odd n*E fails the check.
WeilCheckResult weil_functional_check(const RationalFunction& z, std::uint64_t q,
                                      unsigned n, unsigned e);

}  // namespace zeta
