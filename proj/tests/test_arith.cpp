#include "zeta/arith.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zeta/errors.hpp"
#include "zeta/ideals.hpp"
#include "zeta/poset.hpp"
#include "zeta/posets.hpp"

using namespace zeta;

static_assert(ReducedPoset<IdealPoset>);

TEST_CASE("Kronecker symbol matches the GMP implementation") {
  for (long a = -60; a <= 60; ++a)
    for (long n = -60; n <= 60; ++n)
      CHECK(kronecker_symbol(Integer(a), Integer(n)) == mpz_kronecker(Integer(a).get_mpz_t(), Integer(n).get_mpz_t()));

  std::mt19937_64 rng(7401);
  std::uniform_int_distribution<long long> big(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int i = 0; i < 500; ++i) {
    Integer a(std::to_string(big(rng)));
    Integer n(std::to_string(big(rng)));
    CHECK(kronecker_symbol(a, n) == mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()));
  }
}

TEST_CASE("fundamental discriminant validation") {
  for (long d : {-4, -3, 5, 8, -8, 12, 13, -7, -11, 17, 21, -20})
    CHECK(is_fundamental_discriminant(Integer(d)));
  for (long d : {0, 1, 4, -2, 9, 20, -9, 25, 18, -12, 16, 45})
    CHECK(!is_fundamental_discriminant(Integer(d)));
  CHECK_THROWS_AS(QuadraticField(Integer(9)), InvalidInputError);
  CHECK_THROWS_AS(QuadraticField(Integer(0)), InvalidInputError);
}

TEST_CASE("splitting in Q(i)") {
  QuadraticField k(Integer(-4));
  CHECK(k.splitting(2) == SplittingType::Ramified);
  CHECK(k.splitting(5) == SplittingType::Split);
  CHECK(k.splitting(13) == SplittingType::Split);
  CHECK(k.splitting(3) == SplittingType::Inert);
  CHECK(k.splitting(7) == SplittingType::Inert);
  CHECK(k.splitting(11) == SplittingType::Inert);
}

TEST_CASE("classical Mobius function") {
  CHECK(mobius_classical(1) == 1);
  CHECK(mobius_classical(30) == -1);
  CHECK(mobius_classical(12) == 0);
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(mobius_classical(n) == oracles::mobius_int(n));
  CHECK_THROWS_AS(mobius_classical(0), InvalidInputError);
}

TEST_CASE("classical Mobius agrees with the divisibility-poset Mobius") {
  DivisibilityPoset div;
  for (std::uint64_t n = 1; n <= 500; ++n)
    CHECK(Rational(mobius_classical(n)) == mobius(div, 1, n));
}

TEST_CASE("Euler product: zeta, Mobius, and shifted-zeta local factors") {
  auto geometric = [](std::uint64_t, std::size_t order) {
    PowerSeries denom = PowerSeries::one(static_cast<unsigned>(order));
    if (order >= 1) denom[1] = Rational(-1);
    return ps_inv(denom);
  };
  auto ones = euler_product(geometric, 100);
  for (std::size_t n = 1; n <= 100; ++n) CHECK(ones.at(n) == Rational(1));

  auto one_minus_t = [](std::uint64_t, std::size_t order) {
    PowerSeries f = PowerSeries::one(static_cast<unsigned>(order));
    if (order >= 1) f[1] = Rational(-1);
    return f;
  };
  auto mob = euler_product(one_minus_t, 100);
  for (std::size_t n = 1; n <= 100; ++n) CHECK(mob.at(n) == Rational(mobius_classical(n)));

  auto shifted = [](std::uint64_t p, std::size_t order) {
    PowerSeries denom = PowerSeries::one(static_cast<unsigned>(order));
    if (order >= 1) denom[1] = Rational(-static_cast<long>(p));
    return ps_inv(denom);
  };
  auto id = euler_product(shifted, 100);
  for (std::size_t n = 1; n <= 100; ++n) CHECK(id.at(n) == Rational(n));
}

TEST_CASE("Euler product rejects bad local factors and is thread-independent") {
  auto bad = [](std::uint64_t, std::size_t order) {
    auto f = PowerSeries::one(static_cast<unsigned>(order));
    f[0] = Rational(2);
    return f;
  };
  CHECK_THROWS_AS(euler_product(bad, 10), BadLocalFactorError);

  auto shifted = [](std::uint64_t p, std::size_t order) {
    PowerSeries denom = PowerSeries::one(static_cast<unsigned>(order));
    if (order >= 1) denom[1] = Rational(-static_cast<long>(p));
    return ps_inv(denom);
  };
  auto serial = euler_product(shifted, 300, 1);
  auto parallel = euler_product(shifted, 300, 4);
  CHECK(serial == parallel);
}

TEST_CASE("Dedekind zeta of Q(i) counts Gaussian ideals") {
  QuadraticField k(Integer(-4));
  auto c = dedekind_zeta_coeffs(k, 500);
  CHECK(c.at(1) == Rational(1));
  CHECK(c.at(2) == Rational(1));
  CHECK(c.at(3) == Rational(0));
  CHECK(c.at(4) == Rational(1));
  CHECK(c.at(5) == Rational(2));
  CHECK(c.at(9) == Rational(1));
  // Z[i] is a PID with unit group of order 4, so the ideal count of norm n
  // is the number of lattice points on x^2 + y^2 = n divided by 4.
  for (std::size_t n = 1; n <= 500; ++n) {
    std::uint64_t r = oracles::lattice_points_x2_y2(n);
    CHECK(r % 4 == 0);
    CHECK(c.at(n) == Rational(r / 4));
  }
}

TEST_CASE("Dedekind Mobius inverts Dedekind zeta") {
  for (long d : {-4, -3, 5, 8}) {
    QuadraticField k{Integer(d)};
    auto z = dedekind_zeta_coeffs(k, 200);
    auto m = dedekind_mobius_coeffs(k, 200);
    CHECK(ds_mul(z, m) == DirichletCoefficients::delta(200));
    CHECK(m == ds_inv(z));
  }
  QuadraticField qi(Integer(-4));
  auto m = dedekind_mobius_coeffs(qi, 10);
  CHECK(m.at(1) == Rational(1));
  CHECK(m.at(2) == Rational(-1));  // one ramified prime of norm 2
  CHECK(m.at(5) == Rational(-2));  // two split primes of norm 5
}

TEST_CASE("Dedekind coefficients are multiplicative") {
  QuadraticField k(Integer(-4));
  auto c = dedekind_zeta_coeffs(k, 10000);
  for (std::size_t m = 1; m <= 100; ++m)
    for (std::size_t n = m + 1; n <= 100; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(c.at(m * n) == c.at(m) * c.at(n));
    }
}

TEST_CASE("ideal construction, norms, and text round trips") {
  QuadraticField k(Integer(-4));
  auto a = ideal_from_string("2r^2*5a*13b^3", k);
  CHECK(ideal_norm(k, a) == Integer(4) * 5 * 13 * 13 * 13);
  CHECK(to_string(a) == "2r^2*5a*13b^3");
  CHECK(ideal_from_string(to_string(a), k) == a);
  CHECK(to_string(Ideal{}) == "1");
  CHECK(ideal_from_string("1", k) == Ideal{});
  CHECK(ideal_norm(k, ideal_from_string("3", k)) == Integer(9));  // inert: norm p^2

  CHECK_THROWS_AS(ideal_from_string("5", k), InvalidInputError);   // 5 splits, needs a/b
  CHECK_THROWS_AS(ideal_from_string("2", k), InvalidInputError);   // 2 ramifies
  CHECK_THROWS_AS(ideal_from_string("3a", k), InvalidInputError);  // 3 is inert
  CHECK_THROWS_AS(ideal_from_string("4r", k), InvalidInputError);  // not prime
  CHECK_THROWS_AS(ideal_from_string("5a^0", k), ParseError);
  CHECK_THROWS_AS(ideal_from_string("", k), ParseError);
  CHECK_THROWS_AS(ideal_from_string("5a*", k), ParseError);
  CHECK_THROWS_AS(ideal_from_string("1*5a", k), ParseError);

  auto b = ideal_from_string("5a*5b", k);
  CHECK(ideal_norm(k, b) == Integer(25));
  CHECK(ideal_from_string("5a", k).divides(b));
  CHECK(!b.divides(ideal_from_string("5a^2", k)));
  CHECK(ideal_quotient(ideal_from_string("5a", k), b) == ideal_from_string("5b", k));
  CHECK(ideal_mul(ideal_from_string("5a", k), ideal_from_string("5a", k)) ==
        ideal_from_string("5a^2", k));
}

TEST_CASE("ideal counts by norm match the Dedekind coefficients") {
  for (long d : {-4, -3, 5}) {
    QuadraticField k{Integer(d)};
    auto all = ideals_of_norm_up_to(k, 60);
    auto z = dedekind_zeta_coeffs(k, 60);
    auto m = dedekind_mobius_coeffs(k, 60);
    std::vector<Rational> counts(61), mob(61);
    for (const auto& a : all) {
      auto n = ideal_norm(k, a).get_ui();
      counts[n] += 1;
      mob[n] += Rational(mobius_ideal(a));
    }
    for (std::size_t n = 1; n <= 60; ++n) {
      CHECK(counts[n] == z.at(n));
      CHECK(mob[n] == m.at(n));  // Mobius aggregated over ideals of norm n
    }
  }
}

TEST_CASE("ideal poset Mobius matches the closed form") {
  QuadraticField k(Integer(-4));
  IdealPoset poset(k);
  Ideal unit;

  auto two_primes = ideal_from_string("5a*5b", k);
  CHECK(mobius(poset, unit, two_primes) == Rational(1));
  CHECK(mobius(poset, unit, ideal_from_string("2r^2", k)) == Rational(0));
  CHECK(mobius(poset, unit, ideal_from_string("2r*5a*13a", k)) == Rational(-1));

  for (const auto& a : ideals_of_norm_up_to(k, 60))
    CHECK(mobius(poset, unit, a) == Rational(mobius_ideal(a)));

  // reduced structure: the interval [a, ab] only depends on b
  auto shift = ideal_from_string("13b^2*3", k);
  for (const auto& a : ideals_of_norm_up_to(k, 30))
    CHECK(mobius(poset, shift, ideal_mul(shift, a)) == Rational(mobius_ideal(a)));

  CHECK_THROWS_AS(mobius(poset, two_primes, ideal_from_string("5a^2", k)), NotComparableError);
}

TEST_CASE("ideal poset intervals are divisor lattices of the quotient") {
  QuadraticField k(Integer(5));
  IdealPoset poset(k);
  auto x = ideal_from_string("2", k);   // inert
  auto y = ideal_from_string("2*5r^2*11a", k);
  auto iv = poset.interval(x, y);
  CHECK(iv.size() == 6);  // divisors of 5r^2 * 11a
  CHECK(iv.front() == x);
  CHECK(iv.back() == y);
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      CHECK(!poset.leq(iv[j], iv[i]));  // listed order is a linear extension

  CHECK(poset.interval(y, x).empty());

  // convolution identity zeta * zeta = divisor count of the quotient
  auto zz = convolve(zeta_element<IdealPoset>(), zeta_element<IdealPoset>(), poset);
  CHECK(zz(x, y) == Rational(6));
}
