#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeta/poset.hpp"

namespace zeta {

/// The chain (N_0, <=): elements 0, 1, 2, ...; every interval is a run of
/// consecutive integers.  Interval isomorphism class = length y - x.
class ChainPoset {
 public:
  using element_type = std::int64_t;
  using label_type = std::int64_t;

  bool leq(element_type x, element_type y) const { return x >= 0 && x <= y; }

  std::vector<element_type> interval(element_type x, element_type y) const {
    std::vector<element_type> out;
    if (!leq(x, y)) return out;
    out.reserve(static_cast<std::size_t>(y - x + 1));
    for (element_type z = x; z <= y; ++z) out.push_back(z);
    return out;
  }

  label_type label(element_type x, element_type y) const { return y - x; }
};

/// The divisibility order (N, |): x <= y iff x divides y.
/// [x, y] = { x d : d | y/x }, listed ascending (a linear extension).
/// Interval isomorphism class = quotient y/x.
class DivisibilityPoset {
 public:
  using element_type = std::uint64_t;
  using label_type = std::uint64_t;

  bool leq(element_type x, element_type y) const { return x >= 1 && y >= 1 && y % x == 0; }
  std::vector<element_type> interval(element_type x, element_type y) const;
  label_type label(element_type x, element_type y) const { return y / x; }
};

/// Divisors of n, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// An explicit finite poset over string-identified elements, built from a
/// covering relation (or a full order relation).  Elements are handled as
/// dense indices; leq is the reflexive-transitive closure of the covers.
/// label(x, y) packs the index pair — the identity classifier.
class FinitePoset {
 public:
  using element_type = std::uint32_t;
  using label_type = std::uint64_t;

  /// Throws InvalidInputError on duplicate ids, unknown ids in covers, or a
  /// cyclic covering relation.
  static FinitePoset from_covers(std::vector<std::string> ids,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(element_type x) const { return ids_.at(x); }
  element_type index_of(const std::string& id) const;

  /// Elements in a fixed linear extension of the order.
  const std::vector<element_type>& topological_order() const { return topo_; }

  bool leq(element_type x, element_type y) const { return leq_.at(x).at(y); }
  std::vector<element_type> interval(element_type x, element_type y) const;
  label_type label(element_type x, element_type y) const {
    return (static_cast<std::uint64_t>(x) << 32) | y;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<char>> leq_;
  std::vector<element_type> topo_;
};

/// Finite restrictions of the built-in posets, for nerves and fixtures.
FinitePoset make_chain_poset(unsigned top);         // elements 0..top
FinitePoset make_divisor_poset(std::uint64_t n);    // divisors of n

static_assert(ReducedPoset<ChainPoset>);
static_assert(ReducedPoset<DivisibilityPoset>);
static_assert(ReducedPoset<FinitePoset>);

}  // namespace zeta
