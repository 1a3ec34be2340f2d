#include "zeta/zero_cycle.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "zeta/errors.hpp"
#include "zeta/poset.hpp"
#include "zeta/variety.hpp"

using namespace zeta;

static_assert(ReducedPoset<ZeroCyclePoset>);

namespace {

ZeroCycle cyc(const std::string& text) { return cycle_from_string(text); }

std::vector<Integer> p1_counts(std::uint64_t q, unsigned up_to) {
  const VarietySpec p1(parse_ambient("projective:1"), {});
  const auto [p, k] = factor_prime_power(q);
  std::vector<Integer> n;
  for (unsigned i = 1; i <= up_to; ++i) n.push_back(count_points(p1, p, k * i));
  return n;
}

// Stars-and-bars over multiplicity splittings: a third counting path,
// independent of both the series machinery and the per-instance tabulation.
Integer multichoose(std::uint64_t points, unsigned mult) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), points + mult - 1, mult);
  return r;
}

Integer sb_count(const std::vector<Integer>& a, unsigned d, unsigned remaining) {
  if (d == 0) return remaining == 0 ? Integer(1) : Integer(0);
  const std::uint64_t points = d <= a.size() ? a[d - 1].get_ui() : 0;
  Integer total = 0;
  for (unsigned s = 0; s * d <= remaining; ++s) {
    if (s == 0) {
      total += sb_count(a, d - 1, remaining);
      continue;
    }
    if (points == 0) break;
    total += multichoose(points, s) * sb_count(a, d - 1, remaining - s * d);
  }
  return total;
}

std::vector<ZeroCycle> cycles_up_to(const std::vector<Integer>& a, unsigned max_degree) {
  std::vector<ZeroCycle> all;
  for (unsigned n = 0; n <= max_degree; ++n) {
    const auto layer = cycles_of_degree(a, n);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

}  // namespace

TEST_CASE("cycle construction and text forms") {
  CHECK(ZeroCycle().is_zero());
  CHECK(ZeroCycle().degree() == 0);
  CHECK(to_string(ZeroCycle()) == "0");

  const ZeroCycle alpha = ZeroCycle::from_terms({{{1, 3}, 2}, {{2, 1}, 1}});
  CHECK(alpha.degree() == 4);
  CHECK(to_string(alpha) == "2(1,3)+(2,1)");
  CHECK(cyc("2(1,3)+(2,1)") == alpha);
  CHECK(cyc(" 2 (1, 3) + (2 ,1) ") == alpha);

  // duplicates merge, zero multiplicities vanish
  CHECK(ZeroCycle::from_terms({{{1, 1}, 1}, {{1, 1}, 1}}) == cyc("2(1,1)"));
  CHECK(ZeroCycle::from_terms({{{1, 1}, 0}}) == ZeroCycle());
  CHECK(cyc("(1,1)+(1,1)") == cyc("2(1,1)"));
  CHECK(cyc("0") == ZeroCycle());

  // round trips
  std::mt19937 rng(7701);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<ClosedPointId, std::uint64_t>> terms;
    const unsigned len = rng() % 4;
    for (unsigned i = 0; i < len; ++i)
      terms.push_back(
          {{static_cast<unsigned>(1 + rng() % 4), 1 + rng() % 5}, 1 + rng() % 3});
    const ZeroCycle gamma = ZeroCycle::from_terms(terms);
    CHECK(cyc(to_string(gamma)) == gamma);
  }

  for (const char* bad : {"", "(1", "(1,2", "x", "1,2", "0+(1,1)", "(1,1)+", "(1,1)(2,1)",
                          "(1,1)++(2,1)", "(,1)", "(1,)"})
    CHECK_THROWS_AS(cycle_from_string(bad), ParseError);
  CHECK_THROWS_AS(cycle_from_string("(0,1)"), InvalidInputError);
  CHECK_THROWS_AS(cycle_from_string("(1,0)"), InvalidInputError);
  CHECK_THROWS_AS(ZeroCycle::from_terms({{{0, 1}, 1}}), InvalidInputError);
  CHECK_THROWS_AS(ZeroCycle::from_terms({{{1, 0}, 1}}), InvalidInputError);
}

TEST_CASE("cycle order and arithmetic") {
  const ZeroCycle zero;
  const ZeroCycle a = cyc("(1,1)+(2,1)");
  const ZeroCycle b = cyc("2(1,1)+(2,1)+(3,2)");
  CHECK(cycle_leq(zero, a));
  CHECK(cycle_leq(a, a));
  CHECK(cycle_leq(a, b));
  CHECK_FALSE(cycle_leq(b, a));
  CHECK_FALSE(cycle_leq(cyc("(1,2)"), b));

  CHECK(cycle_diff(a, b) == cyc("(1,1)+(3,2)"));
  CHECK(cycle_add(a, cycle_diff(a, b)) == b);
  CHECK_THROWS_AS(cycle_diff(b, a), InvalidInputError);

  std::mt19937 rng(7702);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<ClosedPointId, std::uint64_t>> ta, tb;
    for (unsigned i = 0; i < 3; ++i) {
      ta.push_back({{static_cast<unsigned>(1 + rng() % 3), 1 + rng() % 3}, rng() % 3});
      tb.push_back({{static_cast<unsigned>(1 + rng() % 3), 1 + rng() % 3}, rng() % 3});
    }
    const ZeroCycle x = ZeroCycle::from_terms(ta);
    const ZeroCycle y = ZeroCycle::from_terms(tb);
    const ZeroCycle sum = cycle_add(x, y);
    CHECK(sum.degree() == x.degree() + y.degree());
    CHECK(cycle_leq(x, sum));
    CHECK(cycle_diff(x, sum) == y);
  }
}

TEST_CASE("mobius of a cycle") {
  CHECK(mobius_0cycle(ZeroCycle()) == 1);
  CHECK(mobius_0cycle(cyc("2(1,1)")) == 0);
  CHECK(mobius_0cycle(cyc("(1,1)+(1,2)+(2,1)")) == -1);  // three distinct points
  CHECK(mobius_0cycle(cyc("(1,1)+(2,1)")) == 1);
  CHECK(mobius_0cycle(cyc("(5,9)")) == -1);
  CHECK(mobius_0cycle(cyc("(1,1)+2(2,1)+(3,1)")) == 0);
}

TEST_CASE("mobius agrees with the poset machinery") {
  const ZeroCyclePoset poset;
  // two distinct closed points: mu([0, x1 + x2]) = (-1)^2 = 1
  CHECK(mobius(poset, ZeroCycle(), cyc("(1,1)+(1,2)")) == 1);

  const std::vector<Integer> a = {2, 2, 1};
  for (const ZeroCycle& alpha : cycles_up_to(a, 5))
    CHECK(mobius(poset, ZeroCycle(), alpha) == mobius_0cycle(alpha));

  // reduced: the label is the difference cycle, so shifted intervals agree
  const ZeroCycle shift = cyc("(3,1)+4(1,2)");
  for (const ZeroCycle& alpha : cycles_up_to(a, 4))
    CHECK(mobius(poset, shift, cycle_add(shift, alpha)) == mobius_0cycle(alpha));

  CHECK_THROWS_AS(mobius(poset, cyc("(1,1)"), cyc("(1,2)")), NotComparableError);
}

TEST_CASE("intervals are sorted linear extensions") {
  const ZeroCyclePoset poset;
  const ZeroCycle x = cyc("(1,1)");
  const ZeroCycle y = cycle_add(x, cyc("2(1,2)+(2,1)"));
  const auto segment = poset.interval(x, y);
  REQUIRE(segment.size() == 6);  // (2+1) * (1+1) sub-multisets of the gap
  CHECK(segment.front() == x);
  CHECK(segment.back() == y);
  for (std::size_t i = 0; i < segment.size(); ++i)
    for (std::size_t j = i + 1; j < segment.size(); ++j) {
      CHECK_FALSE(cycle_leq(segment[j], segment[i]));
      CHECK(segment[i].degree() <= segment[j].degree());
    }

  CHECK(poset.interval(y, x).empty());
  CHECK(poset.interval(x, x) == std::vector<ZeroCycle>{x});
  CHECK(poset.label(x, y) == "2(1,2)+(2,1)");
  CHECK(poset.label(x, x) == "0");
}

TEST_CASE("cycle counts for the projective line") {
  // #{effective 0-cycles of degree n} = (q^{n+1} - 1)/(q - 1), two ways
  for (std::uint64_t q : {2, 3}) {
    const auto a = closed_point_counts(p1_counts(q, 10));
    const PowerSeries by_series = product_formula_series(a, 10);
    for (unsigned n = 0; n <= 10; ++n) {
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), q, n + 1);
      expected = (expected - 1) / static_cast<unsigned long>(q - 1);
      CHECK(enumerate_0cycles(a, n) == expected);
      CHECK(by_series[n] == Rational(expected));
    }
  }
  const auto a2 = closed_point_counts(p1_counts(2, 3));
  CHECK(enumerate_0cycles(a2, 3) == 15);
}

TEST_CASE("counting, materialization, and stars-and-bars agree") {
  const std::vector<Integer> a = {3, 1, 2, 3, 6};
  for (unsigned n = 0; n <= 8; ++n)
    CHECK(enumerate_0cycles(a, n) == sb_count(a, static_cast<unsigned>(a.size()), n));

  for (unsigned n = 0; n <= 6; ++n) {
    const auto cycles = cycles_of_degree(a, n);
    CHECK(Integer(static_cast<unsigned long>(cycles.size())) == enumerate_0cycles(a, n));
    std::set<std::string> texts;
    for (const ZeroCycle& alpha : cycles) {
      CHECK(alpha.degree() == n);
      texts.insert(to_string(alpha));
    }
    CHECK(texts.size() == cycles.size());
  }

  // a single closed point carries exactly one cycle per degree
  for (unsigned n = 0; n <= 6; ++n) CHECK(enumerate_0cycles({1}, n) == 1);
  CHECK(enumerate_0cycles({}, 0) == 1);
  CHECK(enumerate_0cycles({}, 3) == 0);

  const PowerSeries series = zero_cycle_series(a, 8);
  for (unsigned n = 0; n <= 8; ++n) CHECK(series[n] == Rational(enumerate_0cycles(a, n)));
}

TEST_CASE("budgets and bad inputs") {
  CHECK_THROWS_AS(enumerate_0cycles({integer_from_string("1099511627776")}, 4),
                  FieldTooLargeError);  // 2^40 instances overflow the state budget
  CHECK_THROWS_AS(enumerate_0cycles({integer_from_string("18446744073709551616")}, 1),
                  FieldTooLargeError);  // 2^64 does not even fit the instance type
  CHECK_THROWS_AS(enumerate_0cycles({Integer(-1)}, 2), InvalidInputError);
  CHECK_THROWS_AS(cycles_of_degree({3, 1, 2}, 6, 10), FieldTooLargeError);
  CHECK_NOTHROW(cycles_of_degree({3, 1, 2}, 6));
}

TEST_CASE("reduced convolution matches generating-series multiplication") {
  const ZeroCyclePoset poset;
  const std::vector<Integer> a = {2, 1};
  const auto cycles = cycles_up_to(a, 6);

  std::mt19937 rng(7703);
  const auto random_functional = [&] {
    std::map<std::string, Rational> table;
    for (const ZeroCycle& gamma : cycles)
      table[to_string(gamma)] =
          make_rational(Integer(static_cast<long>(rng() % 19) - 9),
                        Integer(static_cast<long>(1 + rng() % 5)));
    return table;
  };
  const auto as_element = [&](const std::map<std::string, Rational>& table) {
    return IncidenceElement<ZeroCyclePoset>([&table](const ZeroCycle& x, const ZeroCycle& y) {
      const auto it = table.find(to_string(cycle_diff(x, y)));
      return it == table.end() ? Rational(0) : it->second;
    });
  };
  const auto degree_series = [&](const std::map<std::string, Rational>& table) {
    std::vector<Rational> coeffs(7, Rational(0));
    for (const ZeroCycle& gamma : cycles)
      coeffs[static_cast<unsigned>(gamma.degree())] += table.at(to_string(gamma));
    return PowerSeries(std::move(coeffs));
  };

  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_functional();
    const auto g = random_functional();
    const auto h = convolve(as_element(f), as_element(g), poset);
    const PowerSeries product = ps_mul(degree_series(f), degree_series(g));
    std::vector<Rational> h_by_degree(7, Rational(0));
    for (const ZeroCycle& alpha : cycles)
      h_by_degree[static_cast<unsigned>(alpha.degree())] += h(ZeroCycle(), alpha);
    for (unsigned n = 0; n <= 6; ++n) CHECK(h_by_degree[n] == product[n]);
  }
}
