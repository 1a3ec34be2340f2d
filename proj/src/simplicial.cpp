#include "zeta/simplicial.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <thread>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

std::string level_elem(unsigned n, const std::string& id) {
  return "level " + std::to_string(n) + " element '" + id + "'";
}

}  // namespace

SimplexMap::SimplexMap(unsigned target, std::vector<unsigned> values)
    : target_(target), values_(std::move(values)) {
  if (values_.empty()) throw InvalidInputError("a simplex map needs a nonempty table");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > target_) throw InvalidInputError("simplex map value exceeds the target");
    if (i > 0 && values_[i] < values_[i - 1])
      throw InvalidInputError("simplex map table must be weakly increasing");
  }
}

SimplexMap SimplexMap::identity(unsigned n) {
  std::vector<unsigned> v(n + 1);
  for (unsigned i = 0; i <= n; ++i) v[i] = i;
  return SimplexMap(n, std::move(v));
}

SimplexMap compose(const SimplexMap& g, const SimplexMap& f) {
  if (f.target() != g.source())
    throw InvalidInputError("simplex map composition: source/target mismatch");
  std::vector<unsigned> v;
  v.reserve(f.values().size());
  for (unsigned x : f.values()) v.push_back(g(x));
  return SimplexMap(g.target(), std::move(v));
}

bool is_active(const SimplexMap& g) { return g(0) == 0 && g(g.source()) == g.target(); }

bool is_inert(const SimplexMap& g) {
  for (unsigned i = 0; i < g.source(); ++i)
    if (g(i + 1) != g(i) + 1) return false;
  return true;
}

TruncatedSimplicialSet::TruncatedSimplicialSet(std::vector<std::vector<std::string>> levels,
                                               std::vector<std::vector<Table>> faces,
                                               std::vector<std::vector<Table>> degeneracies)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (levels_.empty()) throw InvalidInputError("a simplicial set needs at least level 0");
  const unsigned L = truncation_level();
  index_.resize(levels_.size());
  for (unsigned n = 0; n <= L; ++n)
    for (std::size_t x = 0; x < levels_[n].size(); ++x)
      if (!index_[n].emplace(levels_[n][x], x).second)
        throw InvalidInputError("duplicate id at " + level_elem(n, levels_[n][x]));
  if (faces_.size() != levels_.size() || degeneracies_.size() != levels_.size())
    throw InvalidInputError("face/degeneracy tables must cover every level");
  if (!faces_[0].empty()) throw InvalidInputError("level 0 admits no face maps");
  if (!degeneracies_[L].empty())
    throw InvalidInputError("the top level admits no degeneracy maps");

  auto check_tables = [&](const std::vector<Table>& maps, unsigned n, std::size_t count,
                          std::size_t domain, std::size_t codomain, const char* what) {
    if (maps.size() != count)
      throw InvalidInputError(std::string(what) + " map count wrong at level " +
                              std::to_string(n));
    for (const Table& t : maps) {
      if (t.size() != domain)
        throw InvalidInputError(std::string(what) + " table size wrong at level " +
                                std::to_string(n));
      for (std::size_t v : t)
        if (v >= codomain)
          throw InvalidInputError(std::string(what) + " image out of range at level " +
                                  std::to_string(n));
    }
  };
  for (unsigned n = 1; n <= L; ++n)
    check_tables(faces_[n], n, n + 1, levels_[n].size(), levels_[n - 1].size(), "face");
  for (unsigned n = 0; n < L; ++n)
    check_tables(degeneracies_[n], n, n + 1, levels_[n].size(), levels_[n + 1].size(),
                 "degeneracy");

  degenerate_.resize(levels_.size());
  for (unsigned n = 0; n <= L; ++n) degenerate_[n].assign(levels_[n].size(), 0);
  for (unsigned n = 0; n < L; ++n)
    for (const Table& t : degeneracies_[n])
      for (std::size_t v : t) degenerate_[n + 1][v] = 1;

  auto fail = [&](const char* law, unsigned n, std::size_t x) {
    throw InvalidInputError(std::string("simplicial identity ") + law + " fails at " +
                            level_elem(n, levels_[n][x]));
  };
  for (unsigned n = 2; n <= L; ++n)
    for (std::size_t x = 0; x < levels_[n].size(); ++x)
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned i = 0; i < j; ++i)
          if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x)))
            fail("d_i d_j = d_{j-1} d_i", n, x);
  for (unsigned n = 0; n + 2 <= L; ++n)
    for (std::size_t x = 0; x < levels_[n].size(); ++x)
      for (unsigned j = 0; j <= n; ++j)
        for (unsigned i = 0; i <= j; ++i)
          if (degeneracy(n + 1, i, degeneracy(n, j, x)) !=
              degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
            fail("s_i s_j = s_{j+1} s_i", n, x);
  for (unsigned n = 0; n < L; ++n)
    for (std::size_t x = 0; x < levels_[n].size(); ++x)
      for (unsigned j = 0; j <= n; ++j) {
        const std::size_t sx = degeneracy(n, j, x);
        for (unsigned i = 0; i <= n + 1; ++i) {
          const std::size_t got = face(n + 1, i, sx);
          if (i == j || i == j + 1) {
            if (got != x) fail("d_j s_j = id = d_{j+1} s_j", n, x);
          } else if (i < j) {
            if (got != degeneracy(n - 1, j - 1, face(n, i, x)))
              fail("d_i s_j = s_{j-1} d_i", n, x);
          } else {
            if (got != degeneracy(n - 1, j, face(n, i - 1, x)))
              fail("d_i s_j = s_j d_{i-1}", n, x);
          }
        }
      }
}

std::size_t TruncatedSimplicialSet::index_of(unsigned n, const std::string& id) const {
  if (n >= levels_.size()) throw InvalidInputError("level out of range");
  auto it = index_[n].find(id);
  if (it == index_[n].end()) throw InvalidInputError("unknown id at " + level_elem(n, id));
  return it->second;
}

std::size_t TruncatedSimplicialSet::face(unsigned n, unsigned i, std::size_t x) const {
  return faces_.at(n).at(i).at(x);
}

std::size_t TruncatedSimplicialSet::degeneracy(unsigned n, unsigned i, std::size_t x) const {
  return degeneracies_.at(n).at(i).at(x);
}

bool TruncatedSimplicialSet::is_degenerate(unsigned n, std::size_t x) const {
  return degenerate_.at(n).at(x) != 0;
}

std::size_t TruncatedSimplicialSet::act(const SimplexMap& phi, std::size_t x) const {
  const unsigned b = phi.target();
  if (b >= levels_.size() || phi.source() >= levels_.size())
    throw InvalidInputError("simplex map exceeds the truncation");
  if (x >= levels_[b].size()) throw InvalidInputError("element index out of range");
  std::vector<char> hit(b + 1, 0);
  for (unsigned v : phi.values()) hit[v] = 1;
  unsigned lvl = b;
  std::size_t y = x;
  for (unsigned i = b + 1; i-- > 0;)
    if (!hit[i]) y = face(lvl--, i, y);
  for (unsigned j = 0; j < phi.source(); ++j)
    if (phi(j) == phi(j + 1)) y = degeneracy(lvl++, j, y);
  assert(lvl == phi.source());
  return y;
}

TruncatedSimplicialSet nerve(const FinitePoset& p, unsigned levels) {
  using Elem = FinitePoset::element_type;
  using Chain = std::vector<Elem>;
  const std::size_t sz = p.size();
  std::vector<std::vector<Chain>> chains(levels + 1);
  for (std::size_t x = 0; x < sz; ++x) chains[0].push_back({static_cast<Elem>(x)});
  for (unsigned n = 1; n <= levels; ++n)
    for (const Chain& c : chains[n - 1])
      for (std::size_t y = 0; y < sz; ++y)
        if (p.leq(c.back(), static_cast<Elem>(y))) {
          Chain d = c;
          d.push_back(static_cast<Elem>(y));
          chains[n].push_back(std::move(d));
        }

  std::vector<std::map<Chain, std::size_t>> pos(levels + 1);
  std::vector<std::vector<std::string>> ids(levels + 1);
  for (unsigned n = 0; n <= levels; ++n)
    for (std::size_t x = 0; x < chains[n].size(); ++x) {
      pos[n].emplace(chains[n][x], x);
      std::string id;
      for (std::size_t j = 0; j < chains[n][x].size(); ++j) {
        if (j) id += '|';
        id += p.id(chains[n][x][j]);
      }
      ids[n].push_back(std::move(id));
    }

  std::vector<std::vector<TruncatedSimplicialSet::Table>> faces(levels + 1);
  std::vector<std::vector<TruncatedSimplicialSet::Table>> degens(levels + 1);
  for (unsigned n = 1; n <= levels; ++n) {
    faces[n].assign(n + 1, TruncatedSimplicialSet::Table(chains[n].size()));
    for (std::size_t x = 0; x < chains[n].size(); ++x)
      for (unsigned i = 0; i <= n; ++i) {
        Chain c = chains[n][x];
        c.erase(c.begin() + i);
        faces[n][i][x] = pos[n - 1].at(c);
      }
  }
  for (unsigned n = 0; n + 1 <= levels; ++n) {
    degens[n].assign(n + 1, TruncatedSimplicialSet::Table(chains[n].size()));
    for (std::size_t x = 0; x < chains[n].size(); ++x)
      for (unsigned i = 0; i <= n; ++i) {
        Chain c = chains[n][x];
        const Elem v = c[i];
        c.insert(c.begin() + i, v);
        degens[n][i][x] = pos[n + 1].at(c);
      }
  }
  return TruncatedSimplicialSet(std::move(ids), std::move(faces), std::move(degens));
}

namespace {

/// Active tables [n] -> [ell] in lexicographic order: endpoints are forced,
/// the middle entries range over weakly increasing fillers.
std::vector<std::vector<unsigned>> active_tables(unsigned n, unsigned ell) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) {
    if (ell == 0) out.push_back({0});
    return out;
  }
  std::vector<unsigned> cur{0};
  std::function<void()> rec = [&]() {
    if (cur.size() == n) {
      cur.push_back(ell);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (unsigned v = cur.back(); v <= ell; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<PushoutSquare> enumerate_squares(unsigned level) {
  std::vector<PushoutSquare> out;
  for (unsigned n = 0; n <= level; ++n)
    for (unsigned m = n; m <= level; ++m)
      for (unsigned ell = n; m + ell - n <= level; ++ell) {
        const auto tables = active_tables(n, ell);
        for (unsigned o = 0; o + n <= m; ++o)
          for (const auto& g : tables) out.push_back({n, m, ell, o, g});
      }
  return out;
}

std::optional<DecompositionWitness> check_square(const TruncatedSimplicialSet& k,
                                                 const PushoutSquare& sq) {
  const unsigned n = sq.n, m = sq.m, ell = sq.ell, o = sq.offset;
  const unsigned p = m + ell - n;
  std::vector<unsigned> fv(n + 1), uv(m + 1), vv(ell + 1);
  for (unsigned i = 0; i <= n; ++i) fv[i] = i + o;
  for (unsigned j = 0; j <= m; ++j) {
    if (j < o)
      uv[j] = j;
    else if (j <= o + n)
      uv[j] = sq.g[j - o] + o;
    else
      uv[j] = j + ell - n;
  }
  for (unsigned j = 0; j <= ell; ++j) vv[j] = j + o;
  const SimplexMap f(m, fv), g(ell, sq.g), u(p, uv), v(p, vv);
  assert(is_inert(f) && is_active(g) && is_active(u) && is_inert(v));
  assert(compose(u, f) == compose(v, g));

  const std::size_t szm = k.level_size(m), szl = k.level_size(ell), szp = k.level_size(p);
  std::vector<std::size_t> fstar(szm), gstar(szl);
  for (std::size_t a = 0; a < szm; ++a) fstar[a] = k.act(f, a);
  for (std::size_t b = 0; b < szl; ++b) gstar[b] = k.act(g, b);
  std::unordered_map<std::uint64_t, std::size_t> preimages;
  preimages.reserve(szp * 2);
  for (std::size_t s = 0; s < szp; ++s) {
    const std::uint64_t key =
        static_cast<std::uint64_t>(k.act(u, s)) * szl + k.act(v, s);
    ++preimages[key];
  }
  for (std::size_t a = 0; a < szm; ++a)
    for (std::size_t b = 0; b < szl; ++b) {
      if (fstar[a] != gstar[b]) continue;
      const auto it = preimages.find(static_cast<std::uint64_t>(a) * szl + b);
      const std::size_t count = it == preimages.end() ? 0 : it->second;
      if (count != 1) return DecompositionWitness{sq, k.id(m, a), k.id(ell, b), count};
    }
  return std::nullopt;
}

}  // namespace

DecompositionReport check_decomposition(const TruncatedSimplicialSet& k, unsigned level,
                                        unsigned threads) {
  if (level < 2)
    throw LevelTooShallowError("the decomposition condition is vacuous below level 2");
  if (level > k.truncation_level())
    throw InvalidInputError("decomposition check beyond the truncation");
  const std::vector<PushoutSquare> squares = enumerate_squares(level);
  std::vector<std::optional<DecompositionWitness>> results(squares.size());
  const std::size_t want = std::max<std::size_t>(1, threads);
  const unsigned t = static_cast<unsigned>(std::min(want, std::max<std::size_t>(1, squares.size())));
  if (t <= 1) {
    for (std::size_t i = 0; i < squares.size(); ++i) results[i] = check_square(k, squares[i]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w)
      pool.emplace_back([&, w]() {
        for (std::size_t i = w; i < squares.size(); i += t)
          results[i] = check_square(k, squares[i]);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& r : results)
    if (r) return {false, level, squares.size(), std::move(r)};
  return {true, level, squares.size(), std::nullopt};
}

namespace {

using Fiber = std::vector<std::pair<std::size_t, std::size_t>>;

/// fibers[f] lists (d_2 sigma, d_0 sigma) over sigma in K_2 with d_1 sigma = f.
std::vector<Fiber> d1_fibers(const TruncatedSimplicialSet& k) {
  if (k.truncation_level() < 2)
    throw LevelTooShallowError("the incidence coalgebra needs levels through K_2");
  std::vector<Fiber> fib(k.level_size(1));
  for (std::size_t s = 0; s < k.level_size(2); ++s)
    fib[k.face(2, 1, s)].push_back({k.face(2, 2, s), k.face(2, 0, s)});
  return fib;
}

void check_total(const Functional& phi, const TruncatedSimplicialSet& k) {
  if (phi.values.size() != k.level_size(1))
    throw InvalidInputError("functional must be total on K_1");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> comultiply(const TruncatedSimplicialSet& k,
                                                            std::size_t f) {
  if (k.truncation_level() < 2)
    throw LevelTooShallowError("comultiplication needs levels through K_2");
  if (f >= k.level_size(1)) throw InvalidInputError("1-simplex index out of range");
  Fiber out;
  for (std::size_t s = 0; s < k.level_size(2); ++s)
    if (k.face(2, 1, s) == f) out.push_back({k.face(2, 2, s), k.face(2, 0, s)});
  return out;
}

Functional zeta_functional(const TruncatedSimplicialSet& k) {
  if (k.truncation_level() < 1) throw LevelTooShallowError("functionals live on K_1");
  return {std::vector<Rational>(k.level_size(1), Rational(1))};
}

Functional counit(const TruncatedSimplicialSet& k) {
  if (k.truncation_level() < 1) throw LevelTooShallowError("functionals live on K_1");
  Functional d{std::vector<Rational>(k.level_size(1), Rational(0))};
  for (std::size_t f = 0; f < k.level_size(1); ++f)
    if (k.is_degenerate(1, f)) d.values[f] = Rational(1);
  return d;
}

Functional convolve_functionals(const Functional& phi, const Functional& psi,
                                const TruncatedSimplicialSet& k) {
  check_total(phi, k);
  check_total(psi, k);
  const std::vector<Fiber> fib = d1_fibers(k);
  Functional out{std::vector<Rational>(k.level_size(1), Rational(0))};
  for (std::size_t f = 0; f < fib.size(); ++f)
    for (const auto& [l, r] : fib[f]) out.values[f] += phi.values[l] * psi.values[r];
  return out;
}

Functional mobius_functional(const TruncatedSimplicialSet& k) {
  const std::vector<Fiber> fib = d1_fibers(k);
  const Functional delta = counit(k);
  const std::size_t edges = k.level_size(1);
  std::vector<Rational> mu(edges);
  std::vector<unsigned char> state(edges, 0);  // 0 white, 1 grey, 2 done
  // (mu * zeta)(f) = delta(f) rearranges to
  //   c_f mu(f) = delta(f) - sum_{d1 sigma = f, d2 sigma != f} mu(d2 sigma)
  // with c_f = #{sigma : d1 sigma = f = d2 sigma} >= 1 (s_1 f qualifies).
  std::function<void(std::size_t)> solve = [&](std::size_t f) {
    if (state[f] == 2) return;
    if (state[f] == 1)
      throw NonInvertibleError("zeta inversion cycles at edge '" + k.id(1, f) + "'");
    state[f] = 1;
    std::size_t cf = 0;
    Rational rhs = delta.values[f];
    for (const auto& [l, r] : fib[f]) {
      (void)r;
      if (l == f) {
        ++cf;
        continue;
      }
      solve(l);
      rhs -= mu[l];
    }
    if (cf == 0)
      throw NonInvertibleError("zeta inversion is undetermined at edge '" + k.id(1, f) + "'");
    mu[f] = rhs / Rational(static_cast<unsigned long>(cf));
    state[f] = 2;
  };
  for (std::size_t f = 0; f < edges; ++f) solve(f);

  Functional result{std::move(mu)};
  const Functional z = zeta_functional(k);
  const Functional left = convolve_functionals(result, z, k);
  const Functional right = convolve_functionals(z, result, k);
  for (std::size_t f = 0; f < edges; ++f)
    if (left.values[f] != delta.values[f] || right.values[f] != delta.values[f])
      throw NonInvertibleError("zeta has no two-sided inverse at edge '" + k.id(1, f) + "'");
  return result;
}

std::optional<AlgebraViolation> find_algebra_violation(const TruncatedSimplicialSet& k) {
  const std::vector<Fiber> fib = d1_fibers(k);
  using Triple = std::array<std::size_t, 3>;
  for (std::size_t f = 0; f < fib.size(); ++f) {
    // Unit laws: (delta * phi)(f) = sum over the fiber with degenerate left
    // factor of phi(right), so delta is a left unit for every functional iff
    // that multiset of right factors is exactly {f}; mirrored on the right.
    std::vector<std::size_t> left_unit, right_unit;
    for (const auto& [l, r] : fib[f]) {
      if (k.is_degenerate(1, l)) left_unit.push_back(r);
      if (k.is_degenerate(1, r)) right_unit.push_back(l);
    }
    std::sort(left_unit.begin(), left_unit.end());
    std::sort(right_unit.begin(), right_unit.end());
    const std::vector<std::size_t> expected{f};
    if (left_unit != expected)
      return AlgebraViolation{AlgebraViolation::Kind::LeftUnit, f,
                              "delta * phi != phi on '" + k.id(1, f) + "': the fiber has " +
                                  std::to_string(left_unit.size()) +
                                  " degenerate-left terms"};
    if (right_unit != expected)
      return AlgebraViolation{AlgebraViolation::Kind::RightUnit, f,
                              "phi * delta != phi on '" + k.id(1, f) + "': the fiber has " +
                                  std::to_string(right_unit.size()) +
                                  " degenerate-right terms"};
    // Associativity as coassociativity: the two iterated comultiplications
    // must give the same multiset of triples; bilinearity then covers all
    // rational functionals.
    std::vector<Triple> lhs, rhs;
    for (const auto& [l, r] : fib[f]) {
      for (const auto& [a, b] : fib[l]) lhs.push_back({a, b, r});
      for (const auto& [a, b] : fib[r]) rhs.push_back({l, a, b});
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
      return AlgebraViolation{AlgebraViolation::Kind::Associativity, f,
                              "iterated comultiplication multisets differ on '" +
                                  k.id(1, f) + "'"};
  }
  return std::nullopt;
}

}  // namespace zeta
