#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zeta/arith.hpp"
#include "zeta/rational.hpp"

namespace zeta {

/// A prime ideal of the ring of integers of a quadratic field, named by the
/// rational prime it lies over plus a tag: the unique prime above an inert or
/// ramified p, or one of the two conjugate primes above a split p.
struct PrimeIdeal {
  enum Tag : std::uint8_t { Inert = 0, SplitA = 1, SplitB = 2, Ramified = 3 };

  std::uint64_t p = 0;
  Tag tag = Inert;

  auto operator<=>(const PrimeIdeal&) const = default;
};

/// A nonzero integral ideal in factored form: sorted prime-ideal factors with
/// exponents >= 1.  The default-constructed value is the unit ideal (1).
class Ideal {
 public:
  using Factors = std::vector<std::pair<PrimeIdeal, unsigned>>;

  Ideal() = default;

  /// Validates exponents >= 1 and that each symbol's tag matches the actual
  /// splitting of its prime in K; factors are sorted and merged.
  static Ideal from_factors(Factors factors, const QuadraticField& k);

  const Factors& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  /// Divisibility of ideals: every exponent of a appears in b at least as high.
  bool divides(const Ideal& b) const;

  friend Ideal ideal_mul(const Ideal& a, const Ideal& b);
  /// Quotient b / a; requires a | b.
  friend Ideal ideal_quotient(const Ideal& a, const Ideal& b);

  bool operator==(const Ideal&) const = default;

 private:
  Factors factors_;
};

/// N(a) = product of N(p)^e; N(p) = p^2 for inert p, else p.
Integer ideal_norm(const QuadraticField& k, const Ideal& a);

/// Mobius function on ideals: 0 on square factors, else (-1)^{#prime factors}.
int mobius_ideal(const Ideal& a);

/// Canonical text form: "1" for the unit ideal, otherwise factors joined by
/// "*", each "p" (inert), "pr" (ramified), or "pa"/"pb" (the split pair),
/// with "^e" for exponents e >= 2.  Example: "2r*5a^2*7".
std::string to_string(const Ideal& a);

/// Parses the canonical text form, validating symbols against K.
Ideal ideal_from_string(const std::string& text, const QuadraticField& k);

/// All nonzero ideals of norm <= bound, sorted by (norm, text form).
std::vector<Ideal> ideals_of_norm_up_to(const QuadraticField& k, std::uint64_t bound);

/// The poset (I_K+, |) of nonzero integral ideals under divisibility.  The
/// interval [a, b] is the divisor lattice of b/a, so the classifier label is
/// the quotient ideal (in text form), giving the reduced incidence algebra.
class IdealPoset {
 public:
  using element_type = Ideal;
  using label_type = std::string;

  explicit IdealPoset(QuadraticField k) : field_(std::move(k)) {}

  const QuadraticField& field() const { return field_; }

  bool leq(const Ideal& x, const Ideal& y) const { return x.divides(y); }
  std::vector<Ideal> interval(const Ideal& x, const Ideal& y) const;
  std::string label(const Ideal& x, const Ideal& y) const {
    return to_string(ideal_quotient(x, y));
  }

 private:
  QuadraticField field_;
};

}  // namespace zeta
