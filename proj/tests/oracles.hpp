#pragma once

// Brute-force oracles used to freeze expected values in tests.  Everything
// here is deliberately naive and independent of the library's algorithms.

#include <cstdint>
#include <vector>

#include "zeta/rational.hpp"

namespace oracles {

/// Series expansion of num/den by schoolbook long division.
inline std::vector<zeta::Rational> long_division(const std::vector<zeta::Rational>& num,
                                                 const std::vector<zeta::Rational>& den,
                                                 unsigned order) {
  std::vector<zeta::Rational> c(order + 1, zeta::Rational(0));
  for (unsigned n = 0; n <= order; ++n) {
    zeta::Rational acc = n < num.size() ? num[n] : zeta::Rational(0);
    for (unsigned j = 1; j < den.size() && j <= n; ++j) acc -= den[j] * c[n - j];
    c[n] = acc / den[0];
  }
  return c;
}

/// Number of divisors of n.
inline std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

/// Sum of divisors of n.
inline std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

/// Euler totient by counting coprime residues.
inline std::uint64_t totient(std::uint64_t n) {
  auto gcd = [](std::uint64_t a, std::uint64_t b) {
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

/// Classical Mobius by trial factorization (independent of the library).
inline int mobius_int(std::uint64_t n) {
  int r = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

/// r(n) = #{(x, y) in Z^2 : x^2 + y^2 = n}.
inline std::uint64_t lattice_points_x2_y2(std::uint64_t n) {
  std::uint64_t c = 0;
  std::int64_t bound = 0;
  while (static_cast<std::uint64_t>(bound) * bound <= n) ++bound;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      if (static_cast<std::uint64_t>(x * x + y * y) == n) ++c;
  return c;
}

/// Unpacks a monic polynomial over F_p from the base-p code of its low
/// coefficients; returns c_0..c_deg with c_deg = 1.
inline std::vector<std::uint64_t> unpack_monic(std::uint64_t p, std::uint64_t code,
                                               unsigned deg) {
  std::vector<std::uint64_t> f(deg + 1);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[deg] = 1;
  return f;
}

/// Trial-division irreducibility over F_p of a monic polynomial given as
/// coefficients c_0..c_deg (c_deg = 1): checks no monic divisor of degree
/// 1..deg/2 divides it.  Exponential in the degree; test scale only.
inline bool monic_irreducible(std::uint64_t p, std::vector<std::uint64_t> f) {
  // Remainder of a mod b over F_p, for monic b.
  auto rem = [&](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
    while (a.size() >= b.size()) {
      std::uint64_t lead = a.back();
      if (lead) {
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
          a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      }
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.size() < b.size()) break;
    }
    return a;
  };
  unsigned d = static_cast<unsigned>(f.size()) - 1;
  for (unsigned e = 1; 2 * e <= d; ++e) {
    std::uint64_t sub = 1;
    for (unsigned i = 0; i < e; ++i) sub *= p;
    for (std::uint64_t gcode = 0; gcode < sub; ++gcode)
      if (rem(f, unpack_monic(p, gcode, e)).empty()) return false;
  }
  return true;
}

/// Number of monic irreducible polynomials of degree d over F_p (p small),
/// by exhaustive enumeration and trial division.
inline std::uint64_t monic_irreducible_count(std::uint64_t p, unsigned d) {
  std::uint64_t count = 0;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code)
    if (monic_irreducible(p, unpack_monic(p, code, d))) ++count;
  return count;
}

}  // namespace oracles
