#include "zeta/json_io.hpp"

#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

std::vector<Rational> rational_array(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError(std::string(what) + " must be a nonempty array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw InvalidInputError(std::string(what) + " entries must be rational strings");
    out.push_back(rational_from_string(entry.get<std::string>()));
  }
  return out;
}

std::vector<Integer> integer_array(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError(std::string(what) + " must be a nonempty array");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw InvalidInputError(std::string(what) + " entries must be integer strings");
    out.push_back(integer_from_string(entry.get<std::string>()));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json series_to_json(const PowerSeries& s) {
  Json arr = Json::array();
  for (const Rational& c : s.coefficients()) arr.push_back(to_string(c));
  return arr;
}

PowerSeries series_from_json(const Json& j) {
  return PowerSeries(rational_array(j, "power series"));
}

Json dirichlet_to_json(const DirichletCoefficients& c) {
  Json arr = Json::array();
  for (std::size_t n = 1; n <= c.bound(); ++n) arr.push_back(to_string(c.at(n)));
  return arr;
}

DirichletCoefficients dirichlet_from_json(const Json& j) {
  return DirichletCoefficients(rational_array(j, "Dirichlet coefficients"));
}

Json rational_function_to_json(const RationalFunction& f) {
  Json num = Json::array(), den = Json::array();
  for (const Integer& c : f.numerator) num.push_back(to_string(c));
  for (const Integer& c : f.denominator) den.push_back(to_string(c));
  return Json{{"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction{integer_array(field(j, "numerator"), "numerator"),
                          integer_array(field(j, "denominator"), "denominator")};
}

Json poset_to_json(const FinitePoset& p) {
  Json elements = Json::array();
  for (std::size_t x = 0; x < p.size(); ++x)
    elements.push_back(p.id(static_cast<FinitePoset::element_type>(x)));
  // covering relations: x < y with nothing strictly between
  Json covers = Json::array();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const auto ex = static_cast<FinitePoset::element_type>(x);
      const auto ey = static_cast<FinitePoset::element_type>(y);
      if (x == y || !p.leq(ex, ey)) continue;
      bool covered = true;
      for (std::size_t z = 0; covered && z < p.size(); ++z) {
        const auto ez = static_cast<FinitePoset::element_type>(z);
        if (z != x && z != y && p.leq(ex, ez) && p.leq(ez, ey)) covered = false;
      }
      if (covered) covers.push_back(Json::array({p.id(ex), p.id(ey)}));
    }
  return Json{{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

FinitePoset poset_from_json(const Json& j) {
  const Json& elements = field(j, "elements");
  if (!elements.is_array() || elements.empty())
    throw InvalidInputError("poset 'elements' must be a nonempty array");
  std::vector<std::string> ids;
  ids.reserve(elements.size());
  for (const auto& e : elements) {
    if (!e.is_string()) throw InvalidInputError("poset element ids must be strings");
    ids.push_back(e.get<std::string>());
  }
  const Json& covers = field(j, "covers");
  if (!covers.is_array()) throw InvalidInputError("poset 'covers' must be an array");
  std::vector<std::pair<std::string, std::string>> rel;
  rel.reserve(covers.size());
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw InvalidInputError("poset covers must be [lo, hi] string pairs");
    rel.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return FinitePoset::from_covers(std::move(ids), rel);
}

Json simplicial_to_json(const TruncatedSimplicialSet& k) {
  const unsigned L = k.truncation_level();
  Json levels = Json::array();
  for (unsigned n = 0; n <= L; ++n) levels.push_back(k.level(n));
  Json faces = Json::object(), degeneracies = Json::object();
  for (unsigned n = 1; n <= L; ++n)
    for (unsigned i = 0; i <= n; ++i) {
      Json table = Json::object();
      for (std::size_t x = 0; x < k.level_size(n); ++x)
        table[k.id(n, x)] = k.id(n - 1, k.face(n, i, x));
      faces[std::to_string(n) + "," + std::to_string(i)] = std::move(table);
    }
  for (unsigned n = 0; n < L; ++n)
    for (unsigned i = 0; i <= n; ++i) {
      Json table = Json::object();
      for (std::size_t x = 0; x < k.level_size(n); ++x)
        table[k.id(n, x)] = k.id(n + 1, k.degeneracy(n, i, x));
      degeneracies[std::to_string(n) + "," + std::to_string(i)] = std::move(table);
    }
  return Json{{"levels", std::move(levels)},
              {"faces", std::move(faces)},
              {"degeneracies", std::move(degeneracies)}};
}

namespace {

// Parses "n,i" keys and fills tables[n][i], mapping ids through the level
// index maps.  `offset` is the target level relative to n: -1 for faces,
// +1 for degeneracies.
void read_operator_tables(const Json& j, const char* key, int offset, unsigned L,
                          const std::vector<std::vector<std::string>>& levels,
                          std::vector<std::vector<TruncatedSimplicialSet::Table>>& tables) {
  const Json& obj = field(j, key);
  if (!obj.is_object())
    throw InvalidInputError(std::string("'") + key + "' must be an object");

  std::vector<std::unordered_map<std::string, std::size_t>> index(levels.size());
  for (std::size_t n = 0; n < levels.size(); ++n)
    for (std::size_t x = 0; x < levels[n].size(); ++x) index[n].emplace(levels[n][x], x);

  const unsigned lo = offset < 0 ? 1 : 0;
  const unsigned hi = offset < 0 ? L : L - 1;
  tables.assign(L + 1, {});
  std::vector<std::vector<char>> seen(L + 1);
  for (unsigned n = lo; n <= hi; ++n) {
    tables[n].assign(n + 1, TruncatedSimplicialSet::Table(levels[n].size()));
    seen[n].assign(n + 1, 0);
  }

  for (const auto& [name, table] : obj.items()) {
    const std::size_t comma = name.find(',');
    unsigned n = 0, i = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(name);
      n = static_cast<unsigned>(std::stoul(name.substr(0, comma)));
      i = static_cast<unsigned>(std::stoul(name.substr(comma + 1)));
    } catch (const std::exception&) {
      throw InvalidInputError(std::string("bad operator key '") + name + "' under '" + key + "'");
    }
    if (n < lo || n > hi || i > n)
      throw InvalidInputError(std::string("operator key '") + name + "' out of range under '" +
                              key + "'");
    if (seen[n][i])
      throw InvalidInputError(std::string("duplicate operator key '") + name + "' under '" + key +
                              "'");
    seen[n][i] = 1;
    if (!table.is_object() || table.size() != levels[n].size())
      throw InvalidInputError(std::string("operator '") + name + "' under '" + key +
                              "' must map every level-" + std::to_string(n) + " id");
    const unsigned target = static_cast<unsigned>(static_cast<int>(n) + offset);
    for (const auto& [src, dst] : table.items()) {
      const auto sit = index[n].find(src);
      if (sit == index[n].end() || !dst.is_string())
        throw InvalidInputError(std::string("operator '") + name + "' has a bad entry '" + src +
                                "'");
      const auto dit = index[target].find(dst.get<std::string>());
      if (dit == index[target].end())
        throw InvalidInputError(std::string("operator '") + name + "' maps '" + src +
                                "' to an unknown id");
      tables[n][i][sit->second] = dit->second;
    }
  }

  for (unsigned n = lo; n <= hi; ++n)
    for (unsigned i = 0; i <= n; ++i)
      if (!seen[n][i])
        throw InvalidInputError(std::string("missing operator '") + std::to_string(n) + "," +
                                std::to_string(i) + "' under '" + key + "'");
}

}  // namespace

TruncatedSimplicialSet simplicial_from_json(const Json& j) {
  const Json& jlevels = field(j, "levels");
  if (!jlevels.is_array() || jlevels.empty())
    throw InvalidInputError("'levels' must be a nonempty array of id arrays");
  std::vector<std::vector<std::string>> levels;
  levels.reserve(jlevels.size());
  for (const auto& lvl : jlevels) {
    if (!lvl.is_array()) throw InvalidInputError("'levels' must be a nonempty array of id arrays");
    std::vector<std::string> ids;
    ids.reserve(lvl.size());
    for (const auto& e : lvl) {
      if (!e.is_string()) throw InvalidInputError("simplex ids must be strings");
      ids.push_back(e.get<std::string>());
    }
    levels.push_back(std::move(ids));
  }
  const unsigned L = static_cast<unsigned>(levels.size()) - 1;

  std::vector<std::vector<TruncatedSimplicialSet::Table>> faces, degeneracies;
  read_operator_tables(j, "faces", -1, L, levels, faces);
  read_operator_tables(j, "degeneracies", +1, L, levels, degeneracies);
  return TruncatedSimplicialSet(std::move(levels), std::move(faces), std::move(degeneracies));
}

Json functional_to_json(const Functional& f, const TruncatedSimplicialSet& k) {
  if (f.values.size() != k.level_size(1))
    throw InvalidInputError("functional size does not match K_1");
  Json obj = Json::object();
  for (std::size_t x = 0; x < f.values.size(); ++x) obj[k.id(1, x)] = to_string(f.values[x]);
  return obj;
}

Functional functional_from_json(const Json& j, const TruncatedSimplicialSet& k) {
  if (!j.is_object()) throw InvalidInputError("functional must be an id-to-rational object");
  Functional f{std::vector<Rational>(k.level_size(1), Rational(0))};
  for (const auto& [id, value] : j.items()) {
    if (!value.is_string())
      throw InvalidInputError("functional values must be rational strings");
    f.values[k.index_of(1, id)] = rational_from_string(value.get<std::string>());
  }
  return f;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError("cannot parse '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw InvalidInputError("failed writing '" + path + "'");
}

}  // namespace zeta
