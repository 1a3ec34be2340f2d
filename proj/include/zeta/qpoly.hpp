#pragma once

#include <utility>
#include <vector>

#include "zeta/rational.hpp"

/// Dense univariate polynomials over Q, ascending degree.  The zero
/// polynomial is the empty vector; trailing zeros are tolerated on input and
/// stripped by trim().  Internal plumbing shared by rational-function
/// normalization and the Weil functional-equation check.
namespace zeta::qpoly {

using Poly = std::vector<Rational>;

Poly trim(Poly a);
int degree(const Poly& a);  // -1 for the zero polynomial
bool equal(const Poly& a, const Poly& b);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Rational& c, const Poly& a);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; zero polynomial if both inputs are zero.
Poly gcd(Poly a, Poly b);

}  // namespace zeta::qpoly
