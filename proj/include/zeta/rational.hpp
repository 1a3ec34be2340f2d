#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms.  mpq_class does NOT canonicalize pair
/// constructions on its own; every construction in this library goes through
/// here or through integer promotion (which is always canonical).
Rational make_rational(const Integer& num, const Integer& den);

/// Canonical text form: "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Accepts "p" and "p/q" with optional leading '-'.  Throws InvalidInputError
/// on malformed input or a zero denominator.
Rational rational_from_string(std::string_view s);
Integer integer_from_string(std::string_view s);

/// True if r has denominator 1.
bool is_integral(const Rational& r);

}  // namespace zeta
