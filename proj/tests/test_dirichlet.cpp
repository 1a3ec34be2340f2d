#include "zeta/dirichlet_series.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zeta/errors.hpp"

using namespace zeta;

namespace {

DirichletCoefficients random_ds(std::mt19937_64& rng, std::size_t bound, bool unit_at_one) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::vector<Rational> c(bound);
  for (auto& x : c) x = Rational(num(rng));
  if (unit_at_one && c[0] == 0) c[0] = 1;
  return DirichletCoefficients(std::move(c));
}

}  // namespace

TEST_CASE("convolution of all-ones with all-ones is the divisor count") {
  auto z = DirichletCoefficients::ones(60);
  auto d = ds_mul(z, z);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(d.at(n) == Rational(oracles::divisor_count(n)));
}

TEST_CASE("delta is the convolution unit") {
  std::mt19937_64 rng(7101);
  auto f = random_ds(rng, 40, false);
  CHECK(ds_mul(f, DirichletCoefficients::delta(40)) == f);
  CHECK(ds_mul(DirichletCoefficients::delta(40), f) == f);
}

TEST_CASE("inverse of all-ones is the classical Mobius sequence") {
  auto mu = ds_inv(DirichletCoefficients::ones(100));
  for (std::size_t n = 1; n <= 100; ++n) CHECK(mu.at(n) == Rational(oracles::mobius_int(n)));
}

TEST_CASE("inverse: round trip, involution, error") {
  std::mt19937_64 rng(7102);
  for (int i = 0; i < 25; ++i) {
    auto f = random_ds(rng, 30, true);
    auto g = ds_inv(f);
    CHECK(ds_mul(f, g) == DirichletCoefficients::delta(30));
    CHECK(ds_mul(g, f) == DirichletCoefficients::delta(30));
    CHECK(ds_inv(g) == f);
  }
  std::vector<Rational> bad = {Rational(0), Rational(1)};
  CHECK_THROWS_AS(ds_inv(DirichletCoefficients(bad)), NonInvertibleError);
}

TEST_CASE("convolution is associative and commutative (random)") {
  std::mt19937_64 rng(7103);
  for (int i = 0; i < 25; ++i) {
    auto a = random_ds(rng, 24, false);
    auto b = random_ds(rng, 24, false);
    auto c = random_ds(rng, 24, false);
    CHECK(ds_mul(a, b) == ds_mul(b, a));
    CHECK(ds_mul(ds_mul(a, b), c) == ds_mul(a, ds_mul(b, c)));
  }
}

TEST_CASE("bound propagation takes the minimum") {
  auto a = DirichletCoefficients::ones(10);
  auto b = DirichletCoefficients::ones(4);
  CHECK(ds_mul(a, b).bound() == 4);
}
