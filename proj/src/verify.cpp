#include "zeta/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "zeta/arith.hpp"
#include "zeta/arith_scheme.hpp"
#include "zeta/errors.hpp"
#include "zeta/poset.hpp"
#include "zeta/posets.hpp"
#include "zeta/power_series.hpp"
#include "zeta/rational_function.hpp"
#include "zeta/simplicial.hpp"
#include "zeta/variety.hpp"
#include "zeta/zero_cycle.hpp"

namespace zeta {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

namespace {

SuiteCheck ok(std::string name, std::string detail) {
  return SuiteCheck{std::move(name), true, std::move(detail)};
}

SuiteCheck fail(std::string name, std::string detail) {
  return SuiteCheck{std::move(name), false, std::move(detail)};
}

// ---- mobius -----------------------------------------------------------

template <typename P>
SuiteCheck inversion_check(std::string name, const P& poset,
                           const std::vector<std::pair<typename P::element_type,
                                                       typename P::element_type>>& intervals) {
  const auto mu = mobius_element(poset);
  const auto z = zeta_element<P>();
  const auto mz = convolve(mu, z, poset);
  const auto zm = convolve(z, mu, poset);
  const auto del = delta_element<P>();
  for (const auto& [x, y] : intervals) {
    const Rational expected = del(x, y);
    if (mz(x, y) != expected || zm(x, y) != expected) {
      std::ostringstream out;
      out << "first counterexample at [" << x << ", " << y << "]: mu*zeta = "
          << to_string(mz(x, y)) << ", zeta*mu = " << to_string(zm(x, y));
      return fail(std::move(name), out.str());
    }
  }
  return ok(std::move(name), "mu*zeta = delta = zeta*mu on " + std::to_string(intervals.size()) +
                                 " intervals with top <= 200");
}

SuiteReport mobius_suite(const VerifyOptions&) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> div_intervals;
  for (std::uint64_t y = 1; y <= 200; ++y)
    for (std::uint64_t x : divisors_of(y)) div_intervals.emplace_back(x, y);

  std::vector<std::pair<std::int64_t, std::int64_t>> chain_intervals;
  for (std::int64_t y = 0; y <= 200; ++y)
    for (std::int64_t x = 0; x <= y; ++x) chain_intervals.emplace_back(x, y);

  return SuiteReport{
      "mobius",
      {inversion_check("divisibility poset inversion", DivisibilityPoset{}, div_intervals),
       inversion_check("chain poset inversion", ChainPoset{}, chain_intervals)}};
}

// ---- euler ------------------------------------------------------------

SuiteCheck dirichlet_match(std::string name, const DirichletCoefficients& got,
                           const DirichletCoefficients& expected, const std::string& on_pass) {
  for (std::size_t n = 1; n <= std::min(got.bound(), expected.bound()); ++n)
    if (got.at(n) != expected.at(n))
      return fail(std::move(name), "first counterexample at n = " + std::to_string(n) + ": got " +
                                       to_string(got.at(n)) + ", expected " +
                                       to_string(expected.at(n)));
  if (got.bound() != expected.bound())
    return fail(std::move(name), "bound mismatch: " + std::to_string(got.bound()) + " vs " +
                                     std::to_string(expected.bound()));
  return ok(std::move(name), on_pass);
}

SuiteReport euler_suite(const VerifyOptions& opts) {
  const auto zeta_local = [](std::uint64_t, std::size_t order) {
    return ps_geometric_pow(1, Integer(-1), static_cast<unsigned>(order));
  };
  const auto inverse_local = [](std::uint64_t, std::size_t order) {
    return ps_geometric_pow(1, Integer(1), static_cast<unsigned>(order));
  };
  std::vector<Rational> mu;
  mu.reserve(100);
  for (std::uint64_t n = 1; n <= 100; ++n) mu.emplace_back(mobius_classical(n));

  return SuiteReport{
      "euler",
      {dirichlet_match("geometric local factors", euler_product(zeta_local, 100, opts.threads),
                       DirichletCoefficients::ones(100), "matches the all-ones vector, n <= 100"),
       dirichlet_match("reciprocal local factors", euler_product(inverse_local, 100, opts.threads),
                       DirichletCoefficients(std::move(mu)),
                       "matches the classical Mobius vector, n <= 100")}};
}

// ---- dedekind ---------------------------------------------------------

SuiteReport dedekind_suite(const VerifyOptions&) {
  const QuadraticField k{Integer(-4)};
  const DirichletCoefficients zk = dedekind_zeta_coeffs(k, 500);

  std::vector<Rational> lattice(501, Rational(0));
  for (int x = -23; x <= 23; ++x)
    for (int y = -23; y <= 23; ++y) {
      const int n = x * x + y * y;
      if (n >= 1 && n <= 500) lattice[static_cast<std::size_t>(n)] += 1;
    }
  for (auto& v : lattice) v /= 4;
  SuiteCheck oracle = ok("Gaussian lattice oracle", "r(n)/4 matches for all n <= 500");
  for (std::size_t n = 1; n <= 500; ++n)
    if (zk.at(n) != lattice[n]) {
      oracle = fail("Gaussian lattice oracle",
                    "first counterexample at n = " + std::to_string(n) + ": got " +
                        to_string(zk.at(n)) + ", expected " + to_string(lattice[n]));
      break;
    }

  const DirichletCoefficients prod = ds_mul(zk, dedekind_mobius_coeffs(k, 500));
  SuiteCheck inverse = dirichlet_match("Dirichlet inverse", prod,
                                       DirichletCoefficients::delta(500),
                                       "zeta_K * mu_K = delta at bound 500");
  return SuiteReport{"dedekind", {std::move(oracle), std::move(inverse)}};
}

// ---- hasseweil --------------------------------------------------------

SuiteCheck series_match(std::string name, const PowerSeries& got, const PowerSeries& expected,
                        const std::string& on_pass) {
  for (unsigned n = 0; n <= std::min(got.truncation_order(), expected.truncation_order()); ++n)
    if (got[n] != expected[n])
      return fail(std::move(name), "first counterexample at t^" + std::to_string(n) + ": got " +
                                       to_string(got[n]) + ", expected " +
                                       to_string(expected[n]));
  return ok(std::move(name), on_pass);
}

SuiteReport hasseweil_suite(const VerifyOptions& opts) {
  const CountOptions counts{opts.budget, opts.threads};
  const VarietySpec p1(parse_ambient("projective:1"), {});
  SuiteReport report{"hasseweil", {}};

  bool weil_ok = true;
  std::string weil_detail = "epsilon = +1 for q in {2, 3, 5}";
  for (const std::uint64_t q : {2ull, 3ull, 5ull}) {
    const std::string name = "projective line zeta at q = " + std::to_string(q);
    const PowerSeries z = hasse_weil_zeta(p1, q, 20, counts);
    const RationalFunction expected{
        {Integer(1)}, {Integer(1), Integer(-static_cast<long>(q + 1)), Integer(q)}};
    SuiteCheck check = series_match(name, z, expected.expand(20),
                                    "matches 1/((1-t)(1-" + std::to_string(q) +
                                        "t)) to order 20; reconstruction exact");
    if (check.pass) {
      const auto rec = rational_reconstruct(z, 0, 2);
      if (!rec || !(*rec == expected))
        check = fail(name, "rational reconstruction with bounds (0, 2) did not return "
                           "1/((1-t)(1-" + std::to_string(q) + "t))");
      else {
        const WeilCheckResult w = weil_functional_check(*rec, q, 1, 2);
        if (!w.ok || w.eps != 1) {
          weil_ok = false;
          weil_detail = "functional equation fails at q = " + std::to_string(q) +
                        (w.ok ? " with epsilon = " + std::to_string(w.eps) : "");
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  const VarietySpec curve(parse_ambient("affine:2"), {parse_polynomial("y^2+y-x^3", 2)});
  const struct {
    const VarietySpec* x;
    std::string name;
  } cases[] = {{&p1, "product formula on the projective line over F_2"},
               {&curve, "product formula on the affine curve y^2+y = x^3 over F_2"}};
  for (const auto& c : cases) {
    std::vector<Integer> counts_n;
    for (unsigned n = 1; n <= 16; ++n) counts_n.push_back(count_points(*c.x, 2, n, counts));
    const std::vector<Integer> a = closed_point_counts(counts_n);
    bool nonneg = true;
    for (const Integer& ad : a) nonneg = nonneg && ad >= 0;
    if (!nonneg) {
      report.checks.push_back(fail(c.name, "a negative closed-point count appeared"));
      continue;
    }
    report.checks.push_back(series_match(c.name, product_formula_series(a, 16),
                                         hasse_weil_zeta(*c.x, 2, 16, counts),
                                         "closed-point factorization matches to order 16; "
                                         "all a_d nonnegative"));
  }

  report.checks.push_back(weil_ok ? ok("Weil functional equation", weil_detail)
                                  : fail("Weil functional equation", weil_detail));
  return report;
}

// ---- cycles -----------------------------------------------------------

SuiteReport cycles_suite(const VerifyOptions& opts) {
  const CountOptions counts{opts.budget, opts.threads};
  const VarietySpec p1(parse_ambient("projective:1"), {});
  SuiteReport report{"cycles", {}};

  bool inverse_ok = true;
  std::string inverse_detail = "M * Z = 1 to order 16 for q in {2, 3}";
  for (const std::uint64_t q : {2ull, 3ull}) {
    const std::string name = "0-cycles on the projective line over F_" + std::to_string(q);
    std::vector<Integer> counts_n;
    for (unsigned n = 1; n <= 16; ++n) counts_n.push_back(count_points(p1, q, n, counts));
    const std::vector<Integer> a = closed_point_counts(counts_n);

    const PowerSeries z10 = zero_cycle_series(a, 10, opts.budget);
    SuiteCheck check = ok(name, "(q^(n+1)-1)/(q-1) via coefficients and enumeration, n <= 10");
    for (unsigned n = 0; n <= 10 && check.pass; ++n) {
      Integer expected = 0;
      Integer power = 1;
      for (unsigned i = 0; i <= n; ++i, power *= q) expected += power;
      if (z10[n] != expected)
        check = fail(name, "coefficient mismatch at degree " + std::to_string(n) + ": got " +
                               to_string(z10[n]) + ", expected " + to_string(expected));
      else if (n >= 1 && enumerate_0cycles(a, n, opts.budget) != expected)
        check = fail(name, "enumeration mismatch at degree " + std::to_string(n));
    }
    report.checks.push_back(std::move(check));

    const PowerSeries prod = ps_mul(mobius_series(a, 16), product_formula_series(a, 16));
    if (prod != PowerSeries::one(16)) {
      inverse_ok = false;
      inverse_detail = "M * Z differs from 1 at q = " + std::to_string(q);
    }
  }
  report.checks.push_back(inverse_ok ? ok("0-cycle Mobius inverts zeta", inverse_detail)
                                     : fail("0-cycle Mobius inverts zeta", inverse_detail));
  return report;
}

// ---- arith ------------------------------------------------------------

SuiteReport arith_suite(const VerifyOptions& opts) {
  const CountOptions counts{opts.budget, opts.threads};
  auto coeffs = [&](const ArithmeticScheme& x) { return global_coeffs(x, 100, counts); };

  std::vector<Rational> ns, sigma;
  for (std::uint64_t n = 1; n <= 100; ++n) {
    ns.emplace_back(static_cast<unsigned long>(n));
    std::uint64_t s = 0;
    for (std::uint64_t d : divisors_of(n)) s += d;
    sigma.emplace_back(static_cast<unsigned long>(s));
  }

  return SuiteReport{
      "arith",
      {dirichlet_match("Spec Z", coeffs(ArithmeticScheme::spec_z()),
                       DirichletCoefficients::ones(100), "all-ones vector, n <= 100"),
       dirichlet_match("affine line", coeffs(ArithmeticScheme::affine_space(1)),
                       DirichletCoefficients(std::move(ns)), "c_n = n, n <= 100"),
       dirichlet_match("projective line", coeffs(ArithmeticScheme::projective_space(1)),
                       DirichletCoefficients(std::move(sigma)), "c_n = sigma_1(n), n <= 100"),
       dirichlet_match("Spec O_K at D = -4", coeffs(ArithmeticScheme::spec_ok(Integer(-4))),
                       dedekind_zeta_coeffs(QuadraticField{Integer(-4)}, 100),
                       "matches the Dedekind coefficients, n <= 100")}};
}

// ---- decomp -----------------------------------------------------------

// Tuple model of the 3-simplex boundary: weakly increasing tuples [n] -> [3]
// that miss at least one vertex.
TruncatedSimplicialSet boundary_delta3() {
  using Tuple = std::vector<unsigned>;
  std::vector<std::vector<Tuple>> tup(4);
  for (unsigned n = 0; n <= 3; ++n) {
    Tuple cur;
    const std::function<void()> rec = [&]() {
      if (cur.size() == n + 1) {
        if (std::set<unsigned>(cur.begin(), cur.end()).size() < 4) tup[n].push_back(cur);
        return;
      }
      for (unsigned v = cur.empty() ? 0 : cur.back(); v <= 3; ++v) {
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  std::vector<std::map<Tuple, std::size_t>> pos(4);
  std::vector<std::vector<std::string>> ids(4);
  for (unsigned n = 0; n <= 3; ++n)
    for (std::size_t x = 0; x < tup[n].size(); ++x) {
      pos[n].emplace(tup[n][x], x);
      std::string id;
      for (std::size_t j = 0; j < tup[n][x].size(); ++j) {
        if (j) id += '|';
        id += std::to_string(tup[n][x][j]);
      }
      ids[n].push_back(std::move(id));
    }
  std::vector<std::vector<TruncatedSimplicialSet::Table>> faces(4), degens(4);
  for (unsigned n = 1; n <= 3; ++n) {
    faces[n].assign(n + 1, TruncatedSimplicialSet::Table(tup[n].size()));
    for (std::size_t x = 0; x < tup[n].size(); ++x)
      for (unsigned i = 0; i <= n; ++i) {
        Tuple t = tup[n][x];
        t.erase(t.begin() + i);
        faces[n][i][x] = pos[n - 1].at(t);
      }
  }
  for (unsigned n = 0; n < 3; ++n) {
    degens[n].assign(n + 1, TruncatedSimplicialSet::Table(tup[n].size()));
    for (std::size_t x = 0; x < tup[n].size(); ++x)
      for (unsigned i = 0; i <= n; ++i) {
        Tuple t = tup[n][x];
        const unsigned v = t[i];
        t.insert(t.begin() + i, v);
        degens[n][i][x] = pos[n + 1].at(t);
      }
  }
  return TruncatedSimplicialSet(std::move(ids), std::move(faces), std::move(degens));
}

std::string describe_witness(const DecompositionWitness& w) {
  std::ostringstream out;
  out << "square (n=" << w.square.n << ", m=" << w.square.m << ", l=" << w.square.ell
      << ", offset=" << w.square.offset << ", g=(";
  for (std::size_t j = 0; j < w.square.g.size(); ++j) {
    if (j) out << ",";
    out << w.square.g[j];
  }
  out << ")): fiber pair ('" << w.a << "', '" << w.b << "') has " << w.preimages
      << " preimages";
  return out.str();
}

SuiteReport decomp_suite(const VerifyOptions& opts) {
  SuiteReport report{"decomp", {}};
  const FinitePoset p60 = make_divisor_poset(60);
  const TruncatedSimplicialSet k60 = nerve(p60, 4);

  const DecompositionReport pass60 = check_decomposition(k60, 4, opts.threads);
  report.checks.push_back(
      pass60.pass ? ok("divisor-60 nerve", std::to_string(pass60.squares) +
                                               " pushout squares checked at level 4")
                  : fail("divisor-60 nerve", describe_witness(*pass60.witness)));

  const DecompositionReport bd = check_decomposition(boundary_delta3(), 3, opts.threads);
  report.checks.push_back(
      !bd.pass && bd.witness.has_value()
          ? ok("boundary 3-simplex expected failure", "checker fails it at level 3: " +
                                                          describe_witness(*bd.witness))
          : fail("boundary 3-simplex expected failure",
                 "the checker accepted a non-example at level 3"));

  const auto violation = find_algebra_violation(k60);
  report.checks.push_back(
      !violation ? ok("functional algebra laws",
                      "associativity and both unit laws hold over all enumerable triples")
                 : fail("functional algebra laws", violation->detail));

  std::mt19937_64 rng(20260814);
  auto rnd = [&rng]() {
    const long num = static_cast<long>(rng() % 19) - 9;
    const unsigned long den = rng() % 9 + 1;
    return make_rational(Integer(num), Integer(den));
  };
  Functional phi{std::vector<Rational>(k60.level_size(1))};
  Functional psi{std::vector<Rational>(k60.level_size(1))};
  for (auto& v : phi.values) v = rnd();
  for (auto& v : psi.values) v = rnd();
  const Functional got = convolve_functionals(phi, psi, k60);
  const auto as_element = [&](const Functional& f) {
    return IncidenceElement<FinitePoset>(
        [&k60, &p60, f](const FinitePoset::element_type& x, const FinitePoset::element_type& y) {
          return f.values[k60.index_of(1, p60.id(x) + "|" + p60.id(y))];
        });
  };
  const auto conv = convolve(as_element(phi), as_element(psi), p60);
  SuiteCheck agree = ok("nerve convolution vs incidence algebra",
                        "agrees on 100 random intervals of the divisor poset of 60");
  for (int trial = 0; trial < 100 && agree.pass; ++trial) {
    const std::size_t e = rng() % k60.level_size(1);
    const std::string& id = k60.id(1, e);
    const auto x = p60.index_of(id.substr(0, id.find('|')));
    const auto y = p60.index_of(id.substr(id.find('|') + 1));
    if (got.values[e] != conv(x, y))
      agree = fail("nerve convolution vs incidence algebra",
                   "first counterexample on the interval [" + p60.id(x) + ", " + p60.id(y) + "]");
  }
  report.checks.push_back(std::move(agree));
  return report;
}

}  // namespace

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& opts) {
  if (suite == "mobius") return {mobius_suite(opts)};
  if (suite == "euler") return {euler_suite(opts)};
  if (suite == "dedekind") return {dedekind_suite(opts)};
  if (suite == "hasseweil") return {hasseweil_suite(opts)};
  if (suite == "cycles") return {cycles_suite(opts)};
  if (suite == "arith") return {arith_suite(opts)};
  if (suite == "decomp") return {decomp_suite(opts)};
  if (suite == "all")
    return {mobius_suite(opts), euler_suite(opts),  dedekind_suite(opts), hasseweil_suite(opts),
            cycles_suite(opts), arith_suite(opts),  decomp_suite(opts)};
  throw UnknownSuiteError("unknown verification suite '" + suite + "'");
}

Json report_to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const SuiteCheck& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"suite", r.suite}, {"pass", r.pass()}, {"checks", std::move(checks)}};
}

Json reports_to_json(const std::vector<SuiteReport>& rs) {
  Json arr = Json::array();
  bool pass = true;
  for (const SuiteReport& r : rs) {
    pass = pass && r.pass();
    arr.push_back(report_to_json(r));
  }
  return Json{{"pass", pass}, {"reports", std::move(arr)}};
}

}  // namespace zeta
