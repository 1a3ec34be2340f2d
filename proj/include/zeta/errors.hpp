#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeta {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad discriminants, bad JSON, violated structural
/// preconditions (non-homogeneous projective equations, broken simplicial
/// identities, covers with cycles, ...).
struct InvalidInputError : Error {
  using Error::Error;
};

/// Series inversion requires a nonzero constant term.
struct ZeroConstantTermError : Error {
  using Error::Error;
};

/// exp needs constant term 0; log needs constant term 1.
struct BadConstantTermError : Error {
  using Error::Error;
};

/// Dirichlet inversion requires f(1) != 0; simplicial zeta inversion requires
/// an invertible truncated algebra.  The message names the witness.
struct NonInvertibleError : Error {
  using Error::Error;
};

/// Euler-product local factor with constant term != 1.
struct BadLocalFactorError : Error {
  using Error::Error;
};

/// Rational reconstruction needs truncation_order >= num_deg + den_deg + 1.
struct InsufficientPrecisionError : Error {
  using Error::Error;
};

/// Mobius queried on a pair (x, y) with x not below y.
struct NotComparableError : Error {
  using Error::Error;
};

/// Incidence-algebra inversion hit an element with a zero diagonal value.
struct NonInvertibleOnDiagonalError : Error {
  using Error::Error;
};

/// The enumeration budget would be exceeded (point counting, 0-cycle DFS).
struct FieldTooLargeError : Error {
  using Error::Error;
};

/// Point-count sequence admits no nonnegative integral closed-point solution,
/// or a zeta expansion came out non-integral.
struct InconsistentCountsError : Error {
  using Error::Error;
};

/// A functional-equation check was requested but no rational form is known
/// (reconstruction failed or was skipped).
struct NotRationalError : Error {
  using Error::Error;
};

/// Decomposition-space check needs truncation level >= 2.
struct LevelTooShallowError : Error {
  using Error::Error;
};

/// Polynomial parser: syntax error with byte position into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// Polynomial parser: variable index out of range for the declared arity.
struct ArityError : Error {
  using Error::Error;
};

/// verify invoked with a suite name that does not exist.
struct UnknownSuiteError : Error {
  using Error::Error;
};

}  // namespace zeta
