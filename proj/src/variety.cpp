#include "zeta/variety.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>

#include "zeta/errors.hpp"
#include "zeta/qpoly.hpp"

namespace zeta {

namespace {

using Elem = FiniteField::Elem;
using FPoly = std::vector<Elem>;  // dense univariate over F_q, ascending

void ftrim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b nonzero (trimmed).
FPoly fq_rem(FPoly a, const FPoly& b, const FiniteField& f) {
  const Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    ftrim(a);
    if (a.empty()) break;
  }
  return a;
}

FPoly fq_gcd(FPoly a, FPoly b, const FiniteField& f) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FPoly r = fq_rem(std::move(a), b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Elem inv = f.inv(a.back());
    for (Elem& c : a) c = f.mul(c, inv);
  }
  return a;
}

FPoly fq_mulmod(const FPoly& a, const FPoly& b, const FPoly& m, const FiniteField& f) {
  FPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  ftrim(prod);
  if (prod.empty()) return prod;
  return fq_rem(std::move(prod), m, f);
}

// x^q mod m for q = f.q(); m nonconstant and trimmed.
FPoly fq_pow_x_q(const FPoly& m, const FiniteField& f) {
  FPoly result{1};      // 1
  FPoly base{0, 1};     // x
  if (base.size() >= m.size()) base = fq_rem(std::move(base), m, f);
  std::uint64_t e = f.q();
  while (e > 0) {
    if (e & 1) {
      if (result.empty() || base.empty())
        result.clear();
      else
        result = fq_mulmod(result, base, m, f);
    }
    e >>= 1;
    if (e > 0 && !base.empty()) base = fq_mulmod(base, base, m, f);
  }
  return result;
}

// Distinct roots of g in F: deg gcd(x^q - x, g).  g nonconstant and trimmed.
unsigned root_count(const FPoly& g, const FiniteField& f) {
  FPoly h = fq_pow_x_q(g, f);
  // h - x
  if (h.size() < 2) h.resize(2, 0);
  h[1] = f.sub(h[1], 1);
  ftrim(h);
  if (h.empty()) return static_cast<unsigned>(g.size() - 1);  // every element is a root
  FPoly r = fq_gcd(std::move(h), g, f);
  return r.empty() ? 0 : static_cast<unsigned>(r.size() - 1);
}

struct Term {
  std::uint64_t c;               // coefficient in [1, p)
  std::vector<unsigned> exps;    // one exponent per free coordinate
};

// One piece of the point count: v free coordinates subject to `polys` (each
// nonempty, in v variables).  Unconstrained pieces contribute q^v points.
struct Stratum {
  unsigned v = 0;
  bool impossible = false;  // some equation reduced to a nonzero constant
  std::vector<std::vector<Term>> polys;
};

std::vector<Term> reduce_poly_mod_p(const Polynomial& poly, std::uint64_t p) {
  std::vector<Term> out;
  for (const auto& [mono, coeff] : poly.terms()) {
    const std::uint64_t c = mpz_fdiv_ui(coeff.get_mpz_t(), p);
    if (c != 0) out.push_back({c, mono});
  }
  return out;
}

// Merge equal monomials mod p and drop zeros (used after substitution).
std::vector<Term> normalize_terms(std::vector<Term> terms, std::uint64_t p) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps < b.exps; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().c = (out.back().c + t.c) % p;
      if (out.back().c == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void add_system_to_stratum(Stratum& s, std::vector<std::vector<Term>> polys) {
  for (auto& terms : polys) {
    if (terms.empty()) continue;  // 0 = 0: no constraint
    if (terms.size() == 1 && terms[0].exps == std::vector<unsigned>(s.v, 0u)) {
      s.impossible = true;  // nonzero constant = 0
      return;
    }
    s.polys.push_back(std::move(terms));
  }
}

// Affine: one stratum on all m coordinates.  Projective: stratum i fixes
// coordinates < i to 0 and coordinate i to 1, leaving m - i free ones — the
// normalized representatives, so no division by q - 1 is ever needed.
std::vector<Stratum> prepare_strata(const VarietySpec& x, std::uint64_t p) {
  std::vector<std::vector<Term>> reduced;
  for (const Polynomial& poly : x.equations())
    reduced.push_back(reduce_poly_mod_p(poly, p));

  std::vector<Stratum> strata;
  if (x.ambient().kind == AmbientKind::Affine) {
    Stratum s;
    s.v = x.ambient().dim;
    add_system_to_stratum(s, reduced);
    strata.push_back(std::move(s));
    return strata;
  }

  const unsigned m = x.ambient().dim;
  for (unsigned i = 0; i <= m; ++i) {
    Stratum s;
    s.v = m - i;
    std::vector<std::vector<Term>> subbed;
    for (const auto& terms : reduced) {
      std::vector<Term> out;
      for (const Term& t : terms) {
        bool dies = false;
        for (unsigned j = 0; j < i; ++j)
          if (t.exps[j] > 0) { dies = true; break; }
        if (dies) continue;
        std::vector<unsigned> rest(t.exps.begin() + i + 1, t.exps.end());
        out.push_back({t.c, std::move(rest)});
      }
      subbed.push_back(normalize_terms(std::move(out), p));
    }
    add_system_to_stratum(s, std::move(subbed));
    strata.push_back(std::move(s));
  }
  return strata;
}

Integer integer_pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Prefix assignments needed to enumerate the constrained strata; the last
// free coordinate is resolved by univariate root counting.
Integer required_prefix_count(const std::vector<Stratum>& strata, const Integer& q) {
  Integer total = 0;
  for (const Stratum& s : strata)
    if (!s.impossible && !s.polys.empty()) total += integer_pow(q, s.v - 1);
  return total;
}

void check_budget(const Integer& needed, std::uint64_t budget) {
  if (needed > Integer(static_cast<unsigned long>(budget)))
    throw FieldTooLargeError("point enumeration needs " + to_string(needed) +
                             " prefix evaluations; budget is " + std::to_string(budget));
}

// Terms of one polynomial grouped by the exponent of the last coordinate.
struct GroupedPoly {
  std::vector<std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>> by_last;
};

GroupedPoly group_by_last(const std::vector<Term>& terms, unsigned v) {
  GroupedPoly g;
  for (const Term& t : terms) {
    const unsigned e_last = t.exps[v - 1];
    if (g.by_last.size() <= e_last) g.by_last.resize(e_last + 1);
    std::vector<unsigned> prefix(t.exps.begin(), t.exps.end() - 1);
    g.by_last[e_last].push_back({t.c, std::move(prefix)});
  }
  return g;
}

// Solutions with the given prefix: distinct roots in the last coordinate of
// the gcd of the substituted equations.
std::uint64_t count_prefix(const std::vector<GroupedPoly>& polys,
                           const std::vector<Elem>& prefix, const FiniteField& f) {
  FPoly common;
  bool any_constraint = false;
  for (const GroupedPoly& g : polys) {
    FPoly univ(g.by_last.size(), 0);
    for (std::size_t e = 0; e < g.by_last.size(); ++e)
      for (const auto& [c, pe] : g.by_last[e]) {
        Elem val = c;
        for (std::size_t j = 0; j < pe.size(); ++j)
          if (pe[j] != 0) val = f.mul(val, f.pow(prefix[j], pe[j]));
        univ[e] = f.add(univ[e], val);
      }
    ftrim(univ);
    if (univ.empty()) continue;  // vanishes identically: no constraint here
    any_constraint = true;
    if (univ.size() == 1) return 0;  // nonzero constant
    common = common.empty() ? std::move(univ) : fq_gcd(std::move(common), std::move(univ), f);
    if (common.size() == 1) return 0;
  }
  if (!any_constraint) return f.q();  // last coordinate free
  return root_count(common, f);
}

Integer count_stratum(const Stratum& s, const FiniteField& f, unsigned threads) {
  const std::uint64_t q = f.q();
  std::vector<GroupedPoly> grouped;
  for (const auto& terms : s.polys) grouped.push_back(group_by_last(terms, s.v));

  std::uint64_t prefix_count = 1;
  for (unsigned j = 0; j + 1 < s.v; ++j) prefix_count *= q;

  const std::uint64_t want = std::max<std::uint64_t>(1, threads);
  const unsigned t = static_cast<unsigned>(std::min<std::uint64_t>(want, prefix_count));
  std::vector<Integer> partial(t, Integer(0));
  auto worker = [&](unsigned slot, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Elem> prefix(s.v - 1, 0);
    Integer local = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned j = 0; j + 1 < s.v; ++j) {
        prefix[j] = rest % q;
        rest /= q;
      }
      local += static_cast<unsigned long>(count_prefix(grouped, prefix, f));
    }
    partial[slot] = std::move(local);
  };

  if (t == 1) {
    worker(0, 0, prefix_count);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (prefix_count + t - 1) / t;
    for (unsigned i = 0; i < t; ++i) {
      const std::uint64_t lo = std::min<std::uint64_t>(prefix_count, i * chunk);
      const std::uint64_t hi = std::min<std::uint64_t>(prefix_count, lo + chunk);
      pool.emplace_back(worker, i, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  Integer total = 0;
  for (const Integer& part : partial) total += part;
  return total;
}

Integer count_with_strata(const std::vector<Stratum>& strata, const Integer& q,
                          const FiniteField* f, const CountOptions& opts) {
  check_budget(required_prefix_count(strata, q), opts.budget);
  Integer total = 0;
  for (const Stratum& s : strata) {
    if (s.impossible) continue;
    if (s.polys.empty()) {
      total += integer_pow(q, s.v);
      continue;
    }
    total += count_stratum(s, *f, opts.threads);
  }
  return total;
}

bool is_prime_u64(std::uint64_t p) {
  const Integer n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

qpoly::Poly to_qpoly(const std::vector<Integer>& coeffs) {
  qpoly::Poly out;
  out.reserve(coeffs.size());
  for (const Integer& c : coeffs) out.push_back(Rational(c));
  return qpoly::trim(std::move(out));
}

// s^{deg} P(1/s) evaluated at s = scale * t: reverse and twist by scale^j.
qpoly::Poly reverse_twist(const qpoly::Poly& p, const Integer& scale) {
  qpoly::Poly out(p.size());
  Rational power(1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    out[j] = p[p.size() - 1 - j] * power;
    power *= Rational(scale);
  }
  return qpoly::trim(std::move(out));
}

qpoly::Poly shift_up(const qpoly::Poly& p, unsigned by) {
  if (p.empty()) return p;
  qpoly::Poly out(p.size() + by, Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) out[j + by] = p[j];
  return out;
}

}  // namespace

Ambient parse_ambient(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InvalidInputError("ambient must look like affine:m or projective:m, got '" +
                            text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string dim_text = text.substr(colon + 1);
  if (dim_text.empty() || dim_text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInputError("bad ambient dimension '" + dim_text + "'");
  const unsigned long dim = std::stoul(dim_text);
  if (dim > 64) throw InvalidInputError("ambient dimension too large: " + dim_text);
  if (kind == "affine") return {AmbientKind::Affine, static_cast<unsigned>(dim)};
  if (kind == "projective") return {AmbientKind::Projective, static_cast<unsigned>(dim)};
  throw InvalidInputError("unknown ambient kind '" + kind + "'");
}

VarietySpec::VarietySpec(Ambient ambient, std::vector<Polynomial> equations)
    : ambient_(ambient), equations_(std::move(equations)) {
  for (const Polynomial& poly : equations_) {
    if (poly.nvars() != ambient_.coord_count())
      throw InvalidInputError("equation has " + std::to_string(poly.nvars()) +
                              " variables; ambient has " +
                              std::to_string(ambient_.coord_count()) + " coordinates");
    if (ambient_.kind == AmbientKind::Projective && !poly.is_homogeneous())
      throw InvalidInputError("projective equation is not homogeneous: " + to_string(poly));
  }
}

Integer count_points(const VarietySpec& x, const FiniteField& f, const CountOptions& opts) {
  const auto strata = prepare_strata(x, f.p());
  return count_with_strata(strata, Integer(static_cast<unsigned long>(f.q())), &f, opts);
}

Integer count_points(const VarietySpec& x, std::uint64_t p, unsigned k,
                     const CountOptions& opts) {
  if (k == 0) throw InvalidInputError("extension degree must be >= 1");
  if (p < 2 || !is_prime_u64(p))
    throw InvalidInputError("characteristic must be prime, got " + std::to_string(p));
  const auto strata = prepare_strata(x, p);
  bool constrained = false;
  for (const Stratum& s : strata)
    if (!s.impossible && !s.polys.empty()) constrained = true;
  if (!constrained) {
    // Closed form: only powers of q are needed, so the field (which may be
    // far beyond the representable range) is never built.
    const Integer q = integer_pow(Integer(static_cast<unsigned long>(p)), k);
    return count_with_strata(strata, q, nullptr, opts);
  }
  const FiniteField f(p, k);
  return count_with_strata(strata, Integer(static_cast<unsigned long>(f.q())), &f, opts);
}

PowerSeries hasse_weil_zeta(const VarietySpec& x, std::uint64_t q, unsigned order,
                            const CountOptions& opts) {
  if (order < 1) throw InvalidInputError("zeta order must be >= 1");
  const auto [p, k] = factor_prime_power(q);
  std::vector<Rational> log_coeffs(order + 1, Rational(0));
  for (unsigned n = 1; n <= order; ++n) {
    const Integer count = count_points(x, p, k * n, opts);
    log_coeffs[n] = make_rational(count, Integer(n));
  }
  PowerSeries z = ps_exp(PowerSeries(std::move(log_coeffs)));
  for (unsigned n = 0; n <= order; ++n)
    if (!is_integral(z[n]))
      throw InconsistentCountsError("zeta coefficient of t^" + std::to_string(n) +
                                    " is not an integer: " + to_string(z[n]));
  return z;
}

std::vector<Integer> closed_point_counts(const std::vector<Integer>& n) {
  std::vector<Integer> a(n.size());
  for (std::size_t m = 1; m <= n.size(); ++m) {
    Integer rest = 0;
    for (std::size_t d = 1; d < m; ++d)
      if (m % d == 0) rest += Integer(static_cast<unsigned long>(d)) * a[d - 1];
    Integer num = n[m - 1] - rest;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), m))
      throw InconsistentCountsError("no integral closed-point count at degree " +
                                    std::to_string(m));
    a[m - 1] = num / static_cast<unsigned long>(m);
    if (a[m - 1] < 0)
      throw InconsistentCountsError("negative closed-point count at degree " +
                                    std::to_string(m));
  }
  return a;
}

PowerSeries product_formula_series(const std::vector<Integer>& a, unsigned order) {
  PowerSeries result = PowerSeries::one(order);
  for (std::size_t d = 1; d <= a.size() && d <= order; ++d)
    if (a[d - 1] != 0)
      result = ps_mul(result, ps_geometric_pow(static_cast<unsigned>(d), -a[d - 1], order));
  return result;
}

PowerSeries mobius_series(const std::vector<Integer>& a, unsigned order) {
  PowerSeries result = PowerSeries::one(order);
  for (std::size_t d = 1; d <= a.size() && d <= order; ++d)
    if (a[d - 1] != 0)
      result = ps_mul(result, ps_geometric_pow(static_cast<unsigned>(d), a[d - 1], order));
  return result;
}

WeilCheckResult weil_functional_check(const RationalFunction& z, std::uint64_t q,
                                      unsigned n, unsigned e) {
  if ((static_cast<std::uint64_t>(n) * e) % 2 != 0) return {false, 0};
  const qpoly::Poly num = to_qpoly(z.numerator);
  const qpoly::Poly den = to_qpoly(z.denominator);
  if (num.empty() || den.empty()) return {false, 0};

  const Integer qn = integer_pow(Integer(static_cast<unsigned long>(q)), n);
  const Integer c = integer_pow(
      Integer(static_cast<unsigned long>(q)),
      static_cast<unsigned>(static_cast<std::uint64_t>(n) * e / 2));
  const int dp = qpoly::degree(num);
  const int dq = qpoly::degree(den);

  // Z(1/(q^n t)) = (q^n t)^{dq-dp} P~(q^n t) / Q~(q^n t) with P~, Q~ the
  // reversed polynomials; cross-multiplying against eps c t^E P(t)/Q(t)
  // leaves a polynomial identity to test for each sign.
  qpoly::Poly lhs = qpoly::mul(reverse_twist(num, qn), den);
  qpoly::Poly rhs = qpoly::mul(num, reverse_twist(den, qn));
  const int delta = dq - dp;
  if (delta >= 0) {
    Integer twist;
    mpz_pow_ui(twist.get_mpz_t(), qn.get_mpz_t(), static_cast<unsigned>(delta));
    lhs = shift_up(qpoly::scale(Rational(twist), lhs), static_cast<unsigned>(delta));
    rhs = shift_up(qpoly::scale(Rational(c), rhs), e);
  } else {
    Integer twist;
    mpz_pow_ui(twist.get_mpz_t(), qn.get_mpz_t(), static_cast<unsigned>(-delta));
    rhs = shift_up(qpoly::scale(Rational(c * twist), rhs),
                   e + static_cast<unsigned>(-delta));
  }
  if (qpoly::equal(lhs, rhs)) return {true, 1};
  if (qpoly::equal(lhs, qpoly::scale(Rational(-1), rhs))) return {true, -1};
  return {false, 0};
}

}  // namespace zeta
