#pragma once

#include <map>
#include <string>
#include <vector>

#include "zeta/rational.hpp"

namespace zeta {

/// Sparse multivariate polynomial with integer coefficients in a fixed number
/// of variables.  Keys are exponent vectors of length nvars; zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Polynomial(unsigned nvars) : nvars_(nvars) {}
  static Polynomial constant(unsigned nvars, Integer c);
  static Polynomial variable(unsigned nvars, unsigned index);

  unsigned nvars() const { return nvars_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^m into the polynomial, merging and dropping zeros.
  void add_term(Monomial m, Integer c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;

  /// Largest total degree of a monomial; 0 for the zero polynomial.
  unsigned total_degree() const;
  /// Every stored monomial has the same total degree (true for 0).
  bool is_homogeneous() const;

  bool operator==(const Polynomial&) const = default;

 private:
  unsigned nvars_;
  std::map<Monomial, Integer> terms_;
};

/// Parses "+ - * ^"-expressions over integers and the variables x0..x{n-1}
/// (aliases x, y, z when nvars <= 3), e.g. "y^2+y-x^3" or "(x+1)^2".
///
/// Grammar (whitespace ignored):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ['^' number]
///   atom   := number | variable | '(' expr ')'
/// Syntax errors raise ParseError with the byte position; a variable index
/// >= nvars raises ArityError.
Polynomial parse_polynomial(const std::string& src, unsigned nvars);

/// Canonical text form; parse_polynomial(to_string(p), p.nvars()) == p.
std::string to_string(const Polynomial& p);

}  // namespace zeta
