#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "zeta/arith.hpp"
#include "zeta/arith_scheme.hpp"
#include "zeta/errors.hpp"
#include "zeta/fq.hpp"
#include "zeta/ideals.hpp"
#include "zeta/json_io.hpp"
#include "zeta/polynomial.hpp"
#include "zeta/posets.hpp"
#include "zeta/power_series.hpp"
#include "zeta/rational_function.hpp"
#include "zeta/simplicial.hpp"
#include "zeta/variety.hpp"
#include "zeta/verify.hpp"
#include "zeta/zero_cycle.hpp"

namespace {

using namespace zeta;

struct GlobalOptions {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;
};

// Resolved configuration goes to stderr so stdout stays byte-identical
// across thread counts and is safe to pipe.
void echo_config(const GlobalOptions& g, const std::string& command,
                 const std::vector<std::pair<std::string, std::string>>& extras) {
  std::ostringstream out;
  out << "config: command=" << command << " format=" << g.format << " threads=" << g.threads
      << " budget=" << g.budget;
  for (const auto& [key, value] : extras) out << ' ' << key << '=' << value;
  std::cerr << out.str() << '\n';
}

void emit_coefficients(const DirichletCoefficients& c, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,c_n\n";
    for (std::size_t n = 1; n <= c.bound(); ++n)
      std::cout << n << ',' << to_string(c.at(n)) << '\n';
  } else if (format == "pretty") {
    for (std::size_t n = 1; n <= c.bound(); ++n)
      std::cout << "c_" << n << " = " << to_string(c.at(n)) << '\n';
  } else {
    std::cout << dirichlet_to_json(c).dump(2) << '\n';
  }
}

void emit_structured(const Json& j, const std::string& format) {
  if (format == "csv")
    throw InvalidInputError("csv output is restricted to coefficient vectors");
  std::cout << j.dump(2) << '\n';
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidInputError(std::string("bad ") + what + " '" + text + "'");
  }
}

// "a,b" with both parts unsigned.
std::pair<unsigned, unsigned> parse_pair(const std::string& text, const char* what) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw InvalidInputError(std::string("expected '") + what + "' as two comma-separated values");
  return {static_cast<unsigned>(parse_u64(text.substr(0, comma), what)),
          static_cast<unsigned>(parse_u64(text.substr(comma + 1), what))};
}

FinitePoset ideal_poset_slice(const Integer& disc, std::uint64_t bound) {
  const QuadraticField k{disc};
  const std::vector<Ideal> ideals = ideals_of_norm_up_to(k, bound);
  std::vector<std::string> ids;
  ids.reserve(ideals.size());
  for (const Ideal& a : ideals) ids.push_back(to_string(a));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (i == j || !ideals[i].divides(ideals[j])) continue;
      const Ideal q = ideal_quotient(ideals[i], ideals[j]);
      if (q.factors().size() == 1 && q.factors()[0].second == 1)
        covers.emplace_back(ids[i], ids[j]);
    }
  return FinitePoset::from_covers(std::move(ids), covers);
}

FinitePoset cycle_poset_slice(const std::string& spec, const GlobalOptions& g) {
  // q:deg:<scheme>
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw InvalidInputError("expected cycles:<q>:<degree>:<scheme>");
  const std::uint64_t q = parse_u64(spec.substr(0, c1), "q");
  const unsigned deg = static_cast<unsigned>(parse_u64(spec.substr(c1 + 1, c2 - c1 - 1), "degree"));
  const auto [p, k] = factor_prime_power(q);
  const VarietySpec x = reduce_mod_p(parse_scheme(spec.substr(c2 + 1)), p);
  const CountOptions counts{g.budget, g.threads};

  std::vector<Integer> point_counts;
  for (unsigned n = 1; n <= deg && deg > 0; ++n)
    point_counts.push_back(count_points(x, p, k * n, counts));
  const std::vector<Integer> a =
      deg > 0 ? closed_point_counts(point_counts) : std::vector<Integer>{};

  std::vector<ZeroCycle> cycles;
  for (unsigned d = 0; d <= deg; ++d)
    for (ZeroCycle& alpha : cycles_of_degree(a, d, g.budget)) cycles.push_back(std::move(alpha));

  std::vector<std::string> ids;
  ids.reserve(cycles.size());
  for (const ZeroCycle& alpha : cycles) ids.push_back(to_string(alpha));
  std::vector<std::pair<std::string, std::string>> covers;
  for (const ZeroCycle& alpha : cycles)
    for (unsigned d = 1; d + alpha.degree() <= deg; ++d)
      for (std::uint64_t i = 1; Integer(static_cast<unsigned long>(i)) <= a[d - 1]; ++i) {
        const ZeroCycle beta =
            cycle_add(alpha, ZeroCycle::from_terms({{ClosedPointId{d, i}, 1}}));
        covers.emplace_back(to_string(alpha), to_string(beta));
      }
  return FinitePoset::from_covers(std::move(ids), covers);
}

// A poset argument is either a builtin descriptor or a JSON file path.
FinitePoset load_poset(const std::string& spec, const GlobalOptions& g) {
  if (spec.rfind("chain:", 0) == 0)
    return make_chain_poset(static_cast<unsigned>(parse_u64(spec.substr(6), "chain top")));
  if (spec.rfind("divisors:", 0) == 0) return make_divisor_poset(parse_u64(spec.substr(9), "n"));
  if (spec.rfind("ideals:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw InvalidInputError("expected ideals:<disc>:<norm bound>");
    return ideal_poset_slice(integer_from_string(rest.substr(0, colon)),
                             parse_u64(rest.substr(colon + 1), "norm bound"));
  }
  if (spec.rfind("cycles:", 0) == 0) return cycle_poset_slice(spec.substr(7), g);
  return poset_from_json(load_json_file(spec));
}

// zeta | delta | mobius | @file.json
Functional load_functional(const std::string& spec, const TruncatedSimplicialSet& k) {
  if (spec == "zeta") return zeta_functional(k);
  if (spec == "delta") return counit(k);
  if (spec == "mobius") return mobius_functional(k);
  if (!spec.empty() && spec[0] == '@')
    return functional_from_json(load_json_file(spec.substr(1)), k);
  throw InvalidInputError("expected zeta, delta, mobius, or @file for functional '" + spec + "'");
}

Json witness_to_json(const DecompositionWitness& w) {
  Json g = Json::array();
  for (unsigned v : w.square.g) g.push_back(std::to_string(v));
  return Json{{"square", Json{{"n", std::to_string(w.square.n)},
                              {"m", std::to_string(w.square.m)},
                              {"l", std::to_string(w.square.ell)},
                              {"offset", std::to_string(w.square.offset)},
                              {"g", std::move(g)}}},
              {"a", w.a},
              {"b", w.b},
              {"preimages", std::to_string(w.preimages)}};
}

struct RiemannArgs {
  std::size_t terms = 0;
};
struct MobiusArgs {
  std::size_t terms = 0;
};
struct DedekindArgs {
  std::int64_t disc = 0;
  std::size_t terms = 0;
};
struct VarietyArgs {
  std::uint64_t q = 0;
  std::string ambient;
  std::vector<std::string> polys;
  unsigned order = 0;
  std::string reconstruct;
  std::string functional;
};
struct ArithArgs {
  std::string scheme;
  std::size_t terms = 0;
  std::string compare;
};
struct DecompCheckArgs {
  std::string input;
  unsigned level = 0;
};
struct DecompNerveArgs {
  std::string poset;
  unsigned level = 0;
  std::string out;
};
struct DecompConvolveArgs {
  std::string input;
  std::string phi = "zeta";
  std::string psi = "zeta";
};
struct VerifyArgs {
  std::string suite;
};

int run_riemann(const RiemannArgs& a, const GlobalOptions& g) {
  echo_config(g, "riemann", {{"terms", std::to_string(a.terms)}});
  const auto local = [](std::uint64_t, std::size_t order) {
    return ps_geometric_pow(1, Integer(-1), static_cast<unsigned>(order));
  };
  emit_coefficients(euler_product(local, a.terms, g.threads), g.format);
  return 0;
}

int run_mobius(const MobiusArgs& a, const GlobalOptions& g) {
  echo_config(g, "mobius", {{"terms", std::to_string(a.terms)}});
  std::vector<Rational> mu;
  mu.reserve(a.terms);
  for (std::uint64_t n = 1; n <= a.terms; ++n) mu.emplace_back(mobius_classical(n));
  emit_coefficients(DirichletCoefficients(std::move(mu)), g.format);
  return 0;
}

int run_dedekind(const DedekindArgs& a, const GlobalOptions& g) {
  echo_config(g, "dedekind",
              {{"disc", std::to_string(a.disc)}, {"terms", std::to_string(a.terms)}});
  emit_coefficients(dedekind_zeta_coeffs(QuadraticField{Integer(a.disc)}, a.terms), g.format);
  return 0;
}

int run_variety(const VarietyArgs& a, const GlobalOptions& g) {
  std::vector<std::pair<std::string, std::string>> extras{{"q", std::to_string(a.q)},
                                                          {"ambient", a.ambient}};
  for (const std::string& poly : a.polys) extras.emplace_back("poly", poly);
  extras.emplace_back("order", std::to_string(a.order));
  if (!a.reconstruct.empty()) extras.emplace_back("reconstruct", a.reconstruct);
  if (!a.functional.empty()) extras.emplace_back("check-functional", a.functional);
  echo_config(g, "variety", extras);

  factor_prime_power(a.q);  // reject non-prime-powers before any counting
  const Ambient ambient = parse_ambient(a.ambient);
  std::vector<Polynomial> eqs;
  eqs.reserve(a.polys.size());
  for (const std::string& poly : a.polys)
    eqs.push_back(parse_polynomial(poly, ambient.coord_count()));
  const VarietySpec x(ambient, std::move(eqs));

  const PowerSeries z = hasse_weil_zeta(x, a.q, a.order, CountOptions{g.budget, g.threads});
  Json out{{"q", std::to_string(a.q)}, {"zeta", series_to_json(z)}};

  std::optional<RationalFunction> rec;
  if (!a.reconstruct.empty()) {
    const auto [nd, dd] = parse_pair(a.reconstruct, "reconstruct");
    rec = rational_reconstruct(z, nd, dd);
    out["rational"] = rec ? rational_function_to_json(*rec) : Json(nullptr);
  }
  bool weil_ok = true;
  if (!a.functional.empty()) {
    if (!rec)
      throw NotRationalError("the functional-equation check needs a successful --reconstruct");
    const auto [n, e] = parse_pair(a.functional, "check-functional");
    const WeilCheckResult w = weil_functional_check(*rec, a.q, n, e);
    out["weil"] = Json{{"ok", w.ok}, {"eps", std::to_string(w.eps)}};
    weil_ok = w.ok;
  }
  emit_structured(out, g.format);
  return weil_ok ? 0 : 1;
}

int run_arith(const ArithArgs& a, const GlobalOptions& g) {
  std::vector<std::pair<std::string, std::string>> extras{{"scheme", a.scheme},
                                                          {"terms", std::to_string(a.terms)}};
  if (!a.compare.empty()) extras.emplace_back("compare", a.compare);
  echo_config(g, "arith", extras);

  const CountOptions counts{g.budget, g.threads};
  const DirichletCoefficients left = global_coeffs(parse_scheme(a.scheme), a.terms, counts);
  if (a.compare.empty()) {
    emit_coefficients(left, g.format);
    return 0;
  }
  const DirichletCoefficients right = global_coeffs(parse_scheme(a.compare), a.terms, counts);
  std::size_t first_difference = 0;
  for (std::size_t n = 1; n <= a.terms && first_difference == 0; ++n)
    if (left.at(n) != right.at(n)) first_difference = n;
  emit_structured(Json{{"left", dirichlet_to_json(left)},
                       {"right", dirichlet_to_json(right)},
                       {"equal", first_difference == 0},
                       {"first_difference", first_difference == 0
                                                ? Json(nullptr)
                                                : Json(std::to_string(first_difference))}},
                  g.format);
  return first_difference == 0 ? 0 : 1;
}

int run_decomp_check(const DecompCheckArgs& a, const GlobalOptions& g) {
  echo_config(g, "decomp check",
              {{"input", a.input}, {"level", std::to_string(a.level)}});
  const TruncatedSimplicialSet k = simplicial_from_json(load_json_file(a.input));
  const DecompositionReport r = check_decomposition(k, a.level, g.threads);
  emit_structured(Json{{"pass", r.pass},
                       {"level", std::to_string(r.level)},
                       {"squares", std::to_string(r.squares)},
                       {"witness", r.witness ? witness_to_json(*r.witness) : Json(nullptr)}},
                  g.format);
  return r.pass ? 0 : 1;
}

int run_decomp_nerve(const DecompNerveArgs& a, const GlobalOptions& g) {
  std::vector<std::pair<std::string, std::string>> extras{{"poset", a.poset},
                                                          {"level", std::to_string(a.level)}};
  if (!a.out.empty()) extras.emplace_back("out", a.out);
  echo_config(g, "decomp nerve", extras);
  const Json j = simplicial_to_json(nerve(load_poset(a.poset, g), a.level));
  if (!a.out.empty()) save_json_file(a.out, j);
  emit_structured(j, g.format);
  return 0;
}

int run_decomp_convolve(const DecompConvolveArgs& a, const GlobalOptions& g) {
  echo_config(g, "decomp convolve", {{"input", a.input}, {"phi", a.phi}, {"psi", a.psi}});
  const TruncatedSimplicialSet k = simplicial_from_json(load_json_file(a.input));
  const Functional result =
      convolve_functionals(load_functional(a.phi, k), load_functional(a.psi, k), k);
  emit_structured(functional_to_json(result, k), g.format);
  return 0;
}

int run_verify_cmd(const VerifyArgs& a, const GlobalOptions& g) {
  echo_config(g, "verify", {{"suite", a.suite}});
  const std::vector<SuiteReport> reports = run_verify(a.suite, VerifyOptions{g.threads, g.budget});
  emit_structured(reports_to_json(reports), g.format);
  for (const SuiteReport& r : reports)
    if (!r.pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zeta functions: incidence algebras, point counts, decomposition checks"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker thread cap")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Enumeration budget")
      ->envname("ZETA_ENUM_BUDGET")
      ->capture_default_str();

  RiemannArgs riemann;
  auto* riemann_cmd = app.add_subcommand("riemann", "Riemann zeta Dirichlet coefficients");
  riemann_cmd->add_option("--terms", riemann.terms, "Coefficients c_1..c_N")->required();

  MobiusArgs mobius;
  auto* mobius_cmd = app.add_subcommand("mobius", "Classical Mobius function values");
  mobius_cmd->add_option("--terms", mobius.terms, "Values mu(1)..mu(N)")->required();

  DedekindArgs dedekind;
  auto* dedekind_cmd =
      app.add_subcommand("dedekind", "Dedekind zeta coefficients of a quadratic field");
  dedekind_cmd->add_option("--disc", dedekind.disc, "Fundamental discriminant")->required();
  dedekind_cmd->add_option("--terms", dedekind.terms, "Coefficients c_1..c_N")->required();

  VarietyArgs variety;
  auto* variety_cmd = app.add_subcommand("variety", "Hasse-Weil zeta series over F_q");
  variety_cmd->add_option("--q", variety.q, "Field size, a prime power")->required();
  variety_cmd->add_option("--ambient", variety.ambient, "affine:n or projective:n")->required();
  variety_cmd->add_option("--poly", variety.polys, "Defining equation (repeatable)");
  variety_cmd->add_option("--order", variety.order, "Truncation order of the series")
      ->required();
  variety_cmd->add_option("--reconstruct", variety.reconstruct,
                          "Numerator,denominator degree bounds");
  variety_cmd->add_option("--check-functional", variety.functional,
                          "Dimension,Euler characteristic for the Weil functional equation");

  ArithArgs arith;
  auto* arith_cmd = app.add_subcommand("arith", "Global zeta coefficients of an arithmetic scheme");
  arith_cmd
      ->add_option("--scheme", arith.scheme,
                   "specz | affine:n | projective:n | specok:D | poly:<ambient>;<eq>[;...]")
      ->required();
  arith_cmd->add_option("--terms", arith.terms, "Coefficients c_1..c_N")->required();
  arith_cmd->add_option("--compare", arith.compare, "Second scheme to diff against");

  auto* decomp_cmd = app.add_subcommand("decomp", "Discrete decomposition-space tools");
  decomp_cmd->require_subcommand(1);

  DecompCheckArgs dcheck;
  auto* dcheck_cmd = decomp_cmd->add_subcommand("check", "Run the pushout-square check");
  dcheck_cmd->add_option("--input", dcheck.input, "Simplicial-set JSON file")->required();
  dcheck_cmd->add_option("--level", dcheck.level, "Level bound for the squares")->required();

  DecompNerveArgs dnerve;
  auto* dnerve_cmd = decomp_cmd->add_subcommand("nerve", "Nerve of a finite poset");
  dnerve_cmd
      ->add_option("--poset", dnerve.poset,
                   "JSON file, chain:N, divisors:N, ideals:D:B, or cycles:q:deg:<scheme>")
      ->required();
  dnerve_cmd->add_option("--level", dnerve.level, "Truncation level")->required();
  dnerve_cmd->add_option("--out", dnerve.out, "Also write the JSON here");

  DecompConvolveArgs dconv;
  auto* dconv_cmd = decomp_cmd->add_subcommand("convolve", "Convolve two functionals on K_1");
  dconv_cmd->add_option("--input", dconv.input, "Simplicial-set JSON file")->required();
  dconv_cmd->add_option("--phi", dconv.phi, "zeta | delta | mobius | @file")
      ->capture_default_str();
  dconv_cmd->add_option("--psi", dconv.psi, "zeta | delta | mobius | @file")
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Built-in verification suites");
  verify_cmd
      ->add_option("--suite", verify.suite,
                   "mobius | euler | dedekind | hasseweil | cycles | arith | decomp | all")
      ->required();

  // let the global --format/--threads/--budget appear after any subcommand
  for (CLI::App* sub : {riemann_cmd, mobius_cmd, dedekind_cmd, variety_cmd, arith_cmd, decomp_cmd,
                        dcheck_cmd, dnerve_cmd, dconv_cmd, verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (riemann_cmd->parsed()) return run_riemann(riemann, g);
    if (mobius_cmd->parsed()) return run_mobius(mobius, g);
    if (dedekind_cmd->parsed()) return run_dedekind(dedekind, g);
    if (variety_cmd->parsed()) return run_variety(variety, g);
    if (arith_cmd->parsed()) return run_arith(arith, g);
    if (decomp_cmd->parsed()) {
      if (dcheck_cmd->parsed()) return run_decomp_check(dcheck, g);
      if (dnerve_cmd->parsed()) return run_decomp_nerve(dnerve, g);
      if (dconv_cmd->parsed()) return run_decomp_convolve(dconv, g);
    }
    if (verify_cmd->parsed()) return run_verify_cmd(verify, g);
  } catch (const FieldTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NotRationalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
