#include "zeta/ideals.hpp"

#include <algorithm>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void validate_symbol(const PrimeIdeal& q, const QuadraticField& k) {
  if (!is_prime_u64(q.p))
    throw InvalidInputError("not a prime: " + std::to_string(q.p));
  SplittingType s = k.splitting(q.p);
  bool ok = (s == SplittingType::Inert && q.tag == PrimeIdeal::Inert) ||
            (s == SplittingType::Ramified && q.tag == PrimeIdeal::Ramified) ||
            (s == SplittingType::Split &&
             (q.tag == PrimeIdeal::SplitA || q.tag == PrimeIdeal::SplitB));
  if (!ok)
    throw InvalidInputError("prime-ideal symbol for " + std::to_string(q.p) +
                            " does not match its splitting in discriminant " +
                            k.discriminant().get_str());
}

std::string symbol_text(const PrimeIdeal& q) {
  std::string s = std::to_string(q.p);
  switch (q.tag) {
    case PrimeIdeal::Inert:
      break;
    case PrimeIdeal::SplitA:
      s += 'a';
      break;
    case PrimeIdeal::SplitB:
      s += 'b';
      break;
    case PrimeIdeal::Ramified:
      s += 'r';
      break;
  }
  return s;
}

}  // namespace

Ideal Ideal::from_factors(Factors factors, const QuadraticField& k) {
  for (const auto& [q, e] : factors) {
    if (e == 0) throw InvalidInputError("ideal factor with exponent 0: " + symbol_text(q));
    validate_symbol(q, k);
  }
  std::sort(factors.begin(), factors.end());
  Ideal a;
  for (const auto& [q, e] : factors) {
    if (!a.factors_.empty() && a.factors_.back().first == q)
      a.factors_.back().second += e;
    else
      a.factors_.emplace_back(q, e);
  }
  return a;
}

bool Ideal::divides(const Ideal& b) const {
  auto it = b.factors_.begin();
  for (const auto& [q, e] : factors_) {
    while (it != b.factors_.end() && it->first < q) ++it;
    if (it == b.factors_.end() || it->first != q || it->second < e) return false;
  }
  return true;
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
  Ideal c;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
      c.factors_.push_back(*ia++);
    else if (ia == a.factors_.end() || ib->first < ia->first)
      c.factors_.push_back(*ib++);
    else {
      c.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  return c;
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  if (!a.divides(b)) throw InvalidInputError("ideal quotient requires divisibility");
  Ideal c;
  auto ia = a.factors_.begin();
  for (const auto& [q, e] : b.factors_) {
    unsigned sub = 0;
    if (ia != a.factors_.end() && ia->first == q) sub = (ia++)->second;
    if (e > sub) c.factors_.emplace_back(q, e - sub);
  }
  return c;
}

Integer ideal_norm(const QuadraticField& k, const Ideal& a) {
  Integer n = 1;
  for (const auto& [q, e] : a.factors()) {
    unsigned f = k.splitting(q.p) == SplittingType::Inert ? 2 : 1;
    Integer pf;
    mpz_ui_pow_ui(pf.get_mpz_t(), q.p, f * e);
    n *= pf;
  }
  return n;
}

int mobius_ideal(const Ideal& a) {
  int sign = 1;
  for (const auto& [q, e] : a.factors()) {
    (void)q;
    if (e >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

std::string to_string(const Ideal& a) {
  if (a.is_unit()) return "1";
  std::string s;
  for (const auto& [q, e] : a.factors()) {
    if (!s.empty()) s += '*';
    s += symbol_text(q);
    if (e >= 2) s += '^' + std::to_string(e);
  }
  return s;
}

Ideal ideal_from_string(const std::string& text, const QuadraticField& k) {
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_number = [&]() -> std::uint64_t {
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", pos);
    return v;
  };

  skip_spaces();
  Ideal::Factors factors;
  while (true) {
    std::uint64_t p = read_number();
    PrimeIdeal::Tag tag = PrimeIdeal::Inert;
    if (pos < text.size()) {
      switch (text[pos]) {
        case 'a':
          tag = PrimeIdeal::SplitA;
          ++pos;
          break;
        case 'b':
          tag = PrimeIdeal::SplitB;
          ++pos;
          break;
        case 'r':
          tag = PrimeIdeal::Ramified;
          ++pos;
          break;
        default:
          break;
      }
    }
    unsigned e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::uint64_t v = read_number();
      if (v == 0 || v > 1'000'000) throw ParseError("exponent out of range", pos);
      e = static_cast<unsigned>(v);
    }
    if (p == 1) {
      // "1" denotes the unit ideal and cannot carry tags, exponents, or cofactors.
      if (tag != PrimeIdeal::Inert || e != 1 || !factors.empty())
        throw ParseError("'1' is only valid as the whole ideal", pos);
      skip_spaces();
      if (pos != text.size()) throw ParseError("trailing input after '1'", pos);
      return Ideal{};
    }
    factors.emplace_back(PrimeIdeal{p, tag}, e);
    skip_spaces();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
    skip_spaces();
  }
  return Ideal::from_factors(std::move(factors), k);
}

std::vector<Ideal> ideals_of_norm_up_to(const QuadraticField& k, std::uint64_t bound) {
  std::vector<std::pair<PrimeIdeal, Integer>> gens;  // prime ideal, its norm
  for (std::uint64_t p : primes_up_to(bound)) {
    switch (k.splitting(p)) {
      case SplittingType::Split:
        gens.push_back({{p, PrimeIdeal::SplitA}, Integer(p)});
        gens.push_back({{p, PrimeIdeal::SplitB}, Integer(p)});
        break;
      case SplittingType::Ramified:
        gens.push_back({{p, PrimeIdeal::Ramified}, Integer(p)});
        break;
      case SplittingType::Inert:
        if (Integer(p) * p <= bound) gens.push_back({{p, PrimeIdeal::Inert}, Integer(p) * p});
        break;
    }
  }

  std::vector<std::pair<Integer, Ideal>> found;
  Ideal::Factors current;
  auto dfs = [&](auto&& self, std::size_t i, const Integer& norm) -> void {
    if (i == gens.size()) {
      Ideal a;
      for (const auto& f : current) a = ideal_mul(a, Ideal::from_factors({f}, k));
      found.emplace_back(norm, a);
      return;
    }
    self(self, i + 1, norm);
    Integer n = norm * gens[i].second;
    unsigned e = 1;
    while (n <= bound) {
      current.emplace_back(gens[i].first, e);
      self(self, i + 1, n);
      current.pop_back();
      n *= gens[i].second;
      ++e;
    }
  };
  dfs(dfs, 0, Integer(1));

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return to_string(a.second) < to_string(b.second);
  });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& [n, a] : found) out.push_back(std::move(a));
  return out;
}

std::vector<Ideal> IdealPoset::interval(const Ideal& x, const Ideal& y) const {
  if (!x.divides(y)) return {};
  Ideal q = ideal_quotient(x, y);
  const auto& fs = q.factors();

  // Enumerate divisors of the quotient; sorting by total exponent gives a
  // linear extension (proper divisors have strictly smaller exponent sums).
  std::vector<std::pair<unsigned, Ideal>> divs;
  Ideal::Factors current;
  auto dfs = [&](auto&& self, std::size_t i, unsigned total) -> void {
    if (i == fs.size()) {
      Ideal d;
      for (const auto& f : current) d = ideal_mul(d, Ideal::from_factors({f}, field_));
      divs.emplace_back(total, ideal_mul(x, d));
      return;
    }
    self(self, i + 1, total);
    for (unsigned e = 1; e <= fs[i].second; ++e) {
      current.emplace_back(fs[i].first, e);
      self(self, i + 1, total + e);
      current.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  std::stable_sort(divs.begin(), divs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Ideal> out;
  out.reserve(divs.size());
  for (auto& [t, d] : divs) out.push_back(std::move(d));
  return out;
}

}  // namespace zeta
