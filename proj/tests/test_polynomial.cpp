#include "zeta/polynomial.hpp"

#include <random>

#include "doctest.h"
#include "zeta/errors.hpp"

using namespace zeta;
using Monomial = Polynomial::Monomial;

TEST_CASE("parses a plane curve equation") {
  auto p = parse_polynomial("y^2+y-x^3", 2);
  std::map<Monomial, Integer> want = {
      {{0, 2}, Integer(1)}, {{0, 1}, Integer(1)}, {{3, 0}, Integer(-1)}};
  CHECK(p.terms() == want);
  CHECK(p.nvars() == 2);
  CHECK(p.total_degree() == 3);
  CHECK(!p.is_homogeneous());
}

TEST_CASE("expands powers of sums") {
  auto p = parse_polynomial("(x+1)^2", 1);
  std::map<Monomial, Integer> want = {{{2}, Integer(1)}, {{1}, Integer(2)}, {{0}, Integer(1)}};
  CHECK(p.terms() == want);

  auto q = parse_polynomial("(x+y)^2-x^2-2*x*y-y^2", 2);
  CHECK(q.is_zero());
  CHECK(to_string(q) == "0");
}

TEST_CASE("variable aliases and indexed variables") {
  CHECK(parse_polynomial("x*y*z", 3) == parse_polynomial("x0*x1*x2", 3));
  CHECK(parse_polynomial("x", 1) == parse_polynomial("x0", 1));
  CHECK(parse_polynomial("x11^2", 12).total_degree() == 2);
  CHECK_THROWS_AS(parse_polynomial("x0*x3", 2), ArityError);
  CHECK_THROWS_AS(parse_polynomial("y", 1), ArityError);
  CHECK_THROWS_AS(parse_polynomial("x", 4), ParseError);  // aliases need nvars <= 3
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_polynomial("", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x+*y", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x+1", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x 1", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^5000", 1), ParseError);
  try {
    parse_polynomial("x+*y", 2);
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("unary minus and signed terms") {
  auto p = parse_polynomial("-x^2", 1);
  std::map<Monomial, Integer> want = {{{2}, Integer(-1)}};
  CHECK(p.terms() == want);
  CHECK(parse_polynomial("-(x-2)", 1) == parse_polynomial("2-x", 1));
  CHECK(parse_polynomial("x*-y", 2) == -parse_polynomial("x*y", 2));
  CHECK(parse_polynomial("+x", 1) == parse_polynomial("x", 1));
}

TEST_CASE("big integer coefficients survive parsing and printing") {
  std::string big = "123456789012345678901234567890";
  auto p = parse_polynomial(big + "*x-" + big, 1);
  CHECK(p.terms().at({1}) == Integer(big));
  CHECK(p.terms().at({0}) == -Integer(big));
  CHECK(parse_polynomial(to_string(p), 1) == p);
}

TEST_CASE("homogeneity detection") {
  CHECK(parse_polynomial("x^2+x*y", 2).is_homogeneous());
  CHECK(parse_polynomial("x^3+y^2*z+x*y*z", 3).is_homogeneous());
  CHECK(!parse_polynomial("x^2+x", 2).is_homogeneous());
  CHECK(Polynomial(3).is_homogeneous());  // zero polynomial
  CHECK(Polynomial(2).total_degree() == 0);
}

TEST_CASE("printer round trips random polynomials") {
  std::mt19937_64 rng(7501);
  std::uniform_int_distribution<int> coeff(-9, 9), expo(0, 4), terms(1, 6), vars(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned nv = static_cast<unsigned>(vars(rng));
    Polynomial p(nv);
    int nt = terms(rng);
    for (int t = 0; t < nt; ++t) {
      Monomial m(nv);
      for (auto& e : m) e = static_cast<unsigned>(expo(rng));
      p.add_term(std::move(m), Integer(coeff(rng)));
    }
    CAPTURE(to_string(p));
    CHECK(parse_polynomial(to_string(p), nv) == p);
  }
}

TEST_CASE("arithmetic identities") {
  auto x = Polynomial::variable(2, 0);
  auto y = Polynomial::variable(2, 1);
  CHECK((x + y).pow(2) == x * x + Polynomial::constant(2, Integer(2)) * x * y + y * y);
  CHECK((x - x).is_zero());
  CHECK(x.pow(0) == Polynomial::constant(2, Integer(1)));
  CHECK(parse_polynomial("(x+y)*(x-y)", 2) == parse_polynomial("x^2-y^2", 2));
}
