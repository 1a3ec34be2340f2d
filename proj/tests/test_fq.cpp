#include "zeta/fq.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zeta/errors.hpp"

using namespace zeta;

TEST_CASE("prime power factorization") {
  CHECK(factor_prime_power(2) == std::pair<std::uint64_t, unsigned>{2, 1});
  CHECK(factor_prime_power(4) == std::pair<std::uint64_t, unsigned>{2, 2});
  CHECK(factor_prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(factor_prime_power(9) == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(factor_prime_power(1024) == std::pair<std::uint64_t, unsigned>{2, 10});
  CHECK(factor_prime_power(7919) == std::pair<std::uint64_t, unsigned>{7919, 1});
  CHECK(factor_prime_power(std::uint64_t(1) << 62) == std::pair<std::uint64_t, unsigned>{2, 62});
  for (std::uint64_t bad : {0ull, 1ull, 6ull, 12ull, 100ull})
    CHECK_THROWS_AS(factor_prime_power(bad), InvalidInputError);
}

TEST_CASE("canonical moduli are frozen and minimal") {
  CHECK(FiniteField(2, 2).modulus_text() == "u^2+u+1");
  CHECK(FiniteField(2, 3).modulus_text() == "u^3+u+1");
  CHECK(FiniteField(2, 4).modulus_text() == "u^4+u+1");
  CHECK(FiniteField(3, 2).modulus_text() == "u^2+1");
  CHECK(FiniteField(3, 3).modulus_text() == "u^3+2*u+1");
  CHECK(FiniteField(5, 2).modulus_text() == "u^2+2");
  CHECK(FiniteField(7, 1).modulus_text() == "u");

  // minimality: every smaller packed code is reducible (independent oracle)
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 8}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    FiniteField f(p, k);
    std::uint64_t code = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      code += f.modulus()[i] * scale;
      scale *= p;
    }
    CHECK(oracles::monic_irreducible(p, oracles::unpack_monic(p, code, k)));
    for (std::uint64_t c = 0; c < code; ++c)
      CHECK(!oracles::monic_irreducible(p, oracles::unpack_monic(p, c, k)));
  }
}

TEST_CASE("irreducible counts by degree match the enumeration oracle") {
  CHECK(oracles::monic_irreducible_count(2, 1) == 2);
  CHECK(oracles::monic_irreducible_count(2, 2) == 1);
  CHECK(oracles::monic_irreducible_count(2, 3) == 2);
  CHECK(oracles::monic_irreducible_count(2, 4) == 3);
  CHECK(oracles::monic_irreducible_count(2, 5) == 6);
  CHECK(oracles::monic_irreducible_count(2, 6) == 9);
  CHECK(oracles::monic_irreducible_count(3, 1) == 3);
  CHECK(oracles::monic_irreducible_count(3, 2) == 3);
  CHECK(oracles::monic_irreducible_count(3, 3) == 8);
  CHECK(oracles::monic_irreducible_count(3, 4) == 18);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {2, 2}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {13, 1}}) {
    FiniteField f(p, k);
    std::uint64_t q = f.q();
    for (std::uint64_t a = 0; a < q; ++a) {
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.pow(a, q) == a);  // Frobenius fixes nothing beyond F_q
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, q - 1) == f.one());
      }
      for (std::uint64_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
        for (std::uint64_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplication tables are closed and cancellative") {
  FiniteField f(2, 4);
  for (std::uint64_t a = 1; a < f.q(); ++a) {
    std::vector<bool> seen(f.q(), false);
    for (std::uint64_t b = 0; b < f.q(); ++b) {
      auto ab = f.mul(a, b);
      CHECK(ab < f.q());
      CHECK(!seen[ab]);
      seen[ab] = true;
    }
  }
}

TEST_CASE("Fermat identity on larger fields, both code paths") {
  std::mt19937_64 rng(7601);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 16}, {2, 31}, {3, 10}, {5, 8}, {65537, 1}, {4294967291ull, 1}}) {
    FiniteField f(p, k);
    for (int i = 0; i < 100; ++i) {
      std::uint64_t a = rng() % f.q();
      CHECK(f.pow(a, f.q()) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("prime subfield embedding") {
  FiniteField f(7, 2);
  CHECK(f.from_integer(Integer(10)) == 3);
  CHECK(f.from_integer(Integer(-1)) == 6);
  CHECK(f.from_integer(Integer(0)) == f.zero());
  CHECK(f.from_integer(Integer(1)) == f.one());
  // the embedding is a ring homomorphism
  for (long a = -10; a <= 10; ++a)
    for (long b = -10; b <= 10; ++b) {
      CHECK(f.add(f.from_integer(Integer(a)), f.from_integer(Integer(b))) ==
            f.from_integer(Integer(a + b)));
      CHECK(f.mul(f.from_integer(Integer(a)), f.from_integer(Integer(b))) ==
            f.from_integer(Integer(a * b)));
    }
}

TEST_CASE("characteristic and conventions") {
  FiniteField f(5, 3);
  auto s = f.zero();
  for (int i = 0; i < 5; ++i) s = f.add(s, f.one());
  CHECK(s == f.zero());
  CHECK(f.pow(f.zero(), 0) == f.one());  // empty product convention
  CHECK_THROWS_AS(f.inv(f.zero()), InvalidInputError);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FiniteField(4, 1), InvalidInputError);
  CHECK_THROWS_AS(FiniteField(1, 3), InvalidInputError);
  CHECK_THROWS_AS(FiniteField(0, 1), InvalidInputError);
  CHECK_THROWS_AS(FiniteField(2, 0), InvalidInputError);
  CHECK_THROWS_AS(FiniteField(2, 63), FieldTooLargeError);
  CHECK_THROWS_AS(FiniteField(3, 40), FieldTooLargeError);
  CHECK(FiniteField(2, 62).q() == std::uint64_t(1) << 62);
}
