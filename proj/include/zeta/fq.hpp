#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zeta/rational.hpp"

namespace zeta {

/// The finite field F_q, q = p^k <= 2^62, realized as F_p[u]/(m(u)) where m
/// is the canonical modulus: the monic irreducible of degree k over F_p with
/// the smallest packed code (coefficients read as base-p digits, constant
/// term least significant).  Elements are packed the same way, so the codes
/// 0 .. q-1 enumerate the field and code arithmetic is reproducible.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  FiniteField(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }

  /// Low coefficients m_0..m_{k-1} of the modulus (the leading one is 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  /// Text form of the modulus, e.g. "u^4+u+1".
  std::string modulus_text() const;

  Elem zero() const { return 0; }
  Elem one() const { return k_ == 0 ? 0 : 1; }
  Elem from_integer(const Integer& n) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;  // low digits of the canonical modulus
  std::uint64_t modulus_mask_ = 0;      // p = 2 only: packed modulus incl. leading bit
};

/// Writes q as p^k for prime p and k >= 1; InvalidInputError otherwise.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

}  // namespace zeta
