#include "zeta/zero_cycle.hpp"

#include <algorithm>
#include <cstddef>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

void validate_point(const ClosedPointId& x) {
  if (x.degree == 0) throw InvalidInputError("closed point must have degree >= 1");
  if (x.index == 0) throw InvalidInputError("closed-point index is 1-based");
}

// Point instances of each degree d = 1..a.size(), ascending; validates a.
std::vector<std::pair<unsigned, std::uint64_t>> degree_classes(
    const std::vector<Integer>& a) {
  std::vector<std::pair<unsigned, std::uint64_t>> classes;
  for (std::size_t d = 1; d <= a.size(); ++d) {
    if (a[d - 1] < 0)
      throw InvalidInputError("negative closed-point count at degree " + std::to_string(d));
    if (!a[d - 1].fits_ulong_p())
      throw FieldTooLargeError("closed-point count at degree " + std::to_string(d) +
                               " is out of range");
    const std::uint64_t count = a[d - 1].get_ui();
    if (count > 0) classes.push_back({static_cast<unsigned>(d), count});
  }
  return classes;
}

}  // namespace

ZeroCycle ZeroCycle::from_terms(
    const std::vector<std::pair<ClosedPointId, std::uint64_t>>& terms) {
  ZeroCycle alpha;
  for (const auto& [point, mult] : terms) {
    validate_point(point);
    if (mult > 0) alpha.terms_[point] += mult;
  }
  return alpha;
}

std::uint64_t ZeroCycle::degree() const {
  std::uint64_t total = 0;
  for (const auto& [point, mult] : terms_) total += point.degree * mult;
  return total;
}

ZeroCycle cycle_add(const ZeroCycle& a, const ZeroCycle& b) {
  std::vector<std::pair<ClosedPointId, std::uint64_t>> terms(a.terms().begin(),
                                                             a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return ZeroCycle::from_terms(terms);
}

bool cycle_leq(const ZeroCycle& a, const ZeroCycle& b) {
  for (const auto& [point, mult] : a.terms()) {
    const auto it = b.terms().find(point);
    if (it == b.terms().end() || it->second < mult) return false;
  }
  return true;
}

ZeroCycle cycle_diff(const ZeroCycle& a, const ZeroCycle& b) {
  if (!cycle_leq(a, b)) throw InvalidInputError("cycle difference requires a <= b");
  std::vector<std::pair<ClosedPointId, std::uint64_t>> terms;
  for (const auto& [point, mult] : b.terms()) {
    const auto it = a.terms().find(point);
    const std::uint64_t lower = it == a.terms().end() ? 0 : it->second;
    if (mult > lower) terms.push_back({point, mult - lower});
  }
  return ZeroCycle::from_terms(terms);
}

std::string to_string(const ZeroCycle& alpha) {
  if (alpha.is_zero()) return "0";
  std::string out;
  for (const auto& [point, mult] : alpha.terms()) {
    if (!out.empty()) out += '+';
    if (mult != 1) out += std::to_string(mult);
    out += '(' + std::to_string(point.degree) + ',' + std::to_string(point.index) + ')';
  }
  return out;
}

ZeroCycle cycle_from_string(const std::string& text) {
  std::size_t pos = 0;
  const auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  const auto number = [&]() -> std::uint64_t {
    skip_spaces();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    if (pos - start > 18) throw ParseError("number too large", start);
    return std::stoull(text.substr(start, pos - start));
  };
  const auto eat = [&](char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };

  skip_spaces();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip_spaces();
    if (pos != text.size()) throw ParseError("unexpected input after zero cycle", pos);
    return ZeroCycle();
  }

  std::vector<std::pair<ClosedPointId, std::uint64_t>> terms;
  while (true) {
    skip_spaces();
    std::uint64_t mult = 1;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') mult = number();
    eat('(');
    const std::uint64_t degree = number();
    eat(',');
    const std::uint64_t index = number();
    eat(')');
    if (degree == 0 || degree > 1'000'000)
      throw InvalidInputError("closed-point degree out of range");
    terms.push_back({{static_cast<unsigned>(degree), index}, mult});
    skip_spaces();
    if (pos == text.size()) break;
    eat('+');
  }
  return ZeroCycle::from_terms(terms);
}

int mobius_0cycle(const ZeroCycle& alpha) {
  int sign = 1;
  for (const auto& term : alpha.terms()) {
    if (term.second > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<ZeroCycle> ZeroCyclePoset::interval(const ZeroCycle& x,
                                                const ZeroCycle& y) const {
  if (!cycle_leq(x, y)) return {};
  const ZeroCycle gap = cycle_diff(x, y);
  std::vector<std::pair<ClosedPointId, std::uint64_t>> room(gap.terms().begin(),
                                                            gap.terms().end());
  std::vector<ZeroCycle> out;
  std::vector<std::pair<ClosedPointId, std::uint64_t>> chosen;
  const auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == room.size()) {
      out.push_back(cycle_add(x, ZeroCycle::from_terms(chosen)));
      return;
    }
    for (std::uint64_t m = 0; m <= room[i].second; ++m) {
      if (m > 0) chosen.push_back({room[i].first, m});
      self(self, i + 1);
      if (m > 0) chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  std::stable_sort(out.begin(), out.end(), [](const ZeroCycle& a, const ZeroCycle& b) {
    const auto ka = std::make_pair(a.degree(), to_string(a));
    const auto kb = std::make_pair(b.degree(), to_string(b));
    return ka < kb;
  });
  return out;
}

Integer enumerate_0cycles(const std::vector<Integer>& a, unsigned degree,
                          std::uint64_t budget) {
  const auto classes = degree_classes(a);
  Integer instances = 0;
  for (const auto& [d, count] : classes)
    if (d <= degree) instances += static_cast<unsigned long>(count);

  const Integer states = (instances + 1) * (degree + 1);
  if (states > Integer(static_cast<unsigned long>(budget)))
    throw FieldTooLargeError("0-cycle enumeration needs " + to_string(states) +
                             " states; budget is " + std::to_string(budget));

  // ways[s] = number of multiplicity assignments to the instances processed
  // so far with total degree s; each point instance branches on its own
  // multiplicity.
  std::vector<Integer> ways(degree + 1, Integer(0));
  ways[0] = 1;
  for (const auto& [d, count] : classes) {
    if (d > degree) continue;
    for (std::uint64_t inst = 0; inst < count; ++inst) {
      std::vector<Integer> next(degree + 1, Integer(0));
      for (unsigned r = 0; r <= degree; ++r) {
        if (ways[r] == 0) continue;
        for (unsigned m = 0; r + m * d <= degree; ++m) next[r + m * d] += ways[r];
      }
      ways = std::move(next);
    }
  }
  return ways[degree];
}

std::vector<ZeroCycle> cycles_of_degree(const std::vector<Integer>& a, unsigned degree,
                                        std::uint64_t budget) {
  const auto classes = degree_classes(a);
  std::vector<ClosedPointId> points;
  for (const auto& [d, count] : classes)
    if (d <= degree)
      for (std::uint64_t i = 1; i <= count; ++i) points.push_back({d, i});

  std::vector<ZeroCycle> out;
  std::vector<std::pair<ClosedPointId, std::uint64_t>> chosen;
  std::uint64_t visited = 0;
  const auto recurse = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (++visited > budget)
      throw FieldTooLargeError("0-cycle enumeration exceeded budget " +
                               std::to_string(budget));
    if (remaining == 0) {
      out.push_back(ZeroCycle::from_terms(chosen));
      return;
    }
    if (i == points.size() || points[i].degree > remaining) return;
    for (std::uint64_t m = 0; m * points[i].degree <= remaining; ++m) {
      if (m > 0) chosen.push_back({points[i], m});
      self(self, i + 1, remaining - static_cast<unsigned>(m) * points[i].degree);
      if (m > 0) chosen.pop_back();
    }
  };
  recurse(recurse, 0, degree);
  std::stable_sort(out.begin(), out.end(), [](const ZeroCycle& x, const ZeroCycle& y) {
    const auto kx = std::make_pair(x.degree(), to_string(x));
    const auto ky = std::make_pair(y.degree(), to_string(y));
    return kx < ky;
  });
  return out;
}

PowerSeries zero_cycle_series(const std::vector<Integer>& a, unsigned order,
                              std::uint64_t budget) {
  std::vector<Rational> coeffs(order + 1);
  for (unsigned n = 0; n <= order; ++n) coeffs[n] = Rational(enumerate_0cycles(a, n, budget));
  return PowerSeries(std::move(coeffs));
}

}  // namespace zeta
