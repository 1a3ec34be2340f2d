#include "zeta/posets.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace zeta {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<DivisibilityPoset::element_type> DivisibilityPoset::interval(element_type x,
                                                                         element_type y) const {
  std::vector<element_type> out;
  if (!leq(x, y)) return out;
  for (auto d : divisors_of(y / x)) out.push_back(x * d);
  return out;
}

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& covers) {
  FinitePoset p;
  std::map<std::string, element_type> index;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!index.emplace(ids[i], static_cast<element_type>(i)).second)
      throw InvalidInputError("finite poset: duplicate element id '" + ids[i] + "'");
  }
  p.ids_ = std::move(ids);
  std::size_t n = p.ids_.size();
  std::vector<std::vector<element_type>> succ(n);
  std::vector<unsigned> indegree(n, 0);
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InvalidInputError("finite poset: cover references unknown element");
    if (ia->second == ib->second)
      throw InvalidInputError("finite poset: cover relates an element to itself");
    succ[ia->second].push_back(ib->second);
    ++indegree[ib->second];
  }
  // Kahn topological sort; a leftover node means the covers contain a cycle.
  std::queue<element_type> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(static_cast<element_type>(i));
  while (!ready.empty()) {
    element_type v = ready.front();
    ready.pop();
    p.topo_.push_back(v);
    for (element_type w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (p.topo_.size() != n) throw InvalidInputError("finite poset: covering relation has a cycle");
  // Transitive-reflexive closure along reverse topological order.
  p.leq_.assign(n, std::vector<char>(n, 0));
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    element_type v = *it;
    p.leq_[v][v] = 1;
    for (element_type w : succ[v])
      for (std::size_t t = 0; t < n; ++t)
        if (p.leq_[w][t]) p.leq_[v][t] = 1;
  }
  return p;
}

FinitePoset::element_type FinitePoset::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return static_cast<element_type>(i);
  throw InvalidInputError("finite poset: unknown element id '" + id + "'");
}

std::vector<FinitePoset::element_type> FinitePoset::interval(element_type x,
                                                             element_type y) const {
  std::vector<element_type> out;
  if (!leq(x, y)) return out;
  for (element_type z : topo_)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

FinitePoset make_chain_poset(unsigned top) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (unsigned i = 0; i <= top; ++i) {
    ids.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return FinitePoset::from_covers(std::move(ids), covers);
}

FinitePoset make_divisor_poset(std::uint64_t n) {
  auto divs = divisors_of(n);
  std::vector<std::string> ids;
  for (auto d : divs) ids.push_back(std::to_string(d));
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto a : divs)
    for (auto b : divs) {
      if (b % a || a == b) continue;
      // a covers b when no divisor sits strictly between them.
      std::uint64_t q = b / a;
      bool covered = true;
      for (auto m : divisors_of(q))
        if (m != 1 && m != q) {
          covered = false;
          break;
        }
      if (covered) covers.emplace_back(std::to_string(a), std::to_string(b));
    }
  return FinitePoset::from_covers(std::move(ids), covers);
}

}  // namespace zeta
