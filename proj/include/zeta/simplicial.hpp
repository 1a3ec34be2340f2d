#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zeta/posets.hpp"
#include "zeta/rational.hpp"

namespace zeta {

/// A morphism [m] -> [n] of the simplex category: a weakly increasing table
/// values[0..m] with entries in 0..n.
class SimplexMap {
 public:
  /// Throws InvalidInputError unless values is nonempty, weakly increasing,
  /// and bounded by target.
  SimplexMap(unsigned target, std::vector<unsigned> values);
  static SimplexMap identity(unsigned n);

  unsigned source() const { return static_cast<unsigned>(values_.size()) - 1; }
  unsigned target() const { return target_; }
  unsigned operator()(unsigned i) const { return values_.at(i); }
  const std::vector<unsigned>& values() const { return values_; }

  bool operator==(const SimplexMap&) const = default;

 private:
  unsigned target_;
  std::vector<unsigned> values_;
};

/// g after f; throws InvalidInputError when f's target differs from g's source.
SimplexMap compose(const SimplexMap& g, const SimplexMap& f);

/// Active maps preserve endpoints: g(0) = 0 and g(m) = n.
bool is_active(const SimplexMap& g);
/// Inert maps preserve distances: g(i + 1) = g(i) + 1 for all i.
bool is_inert(const SimplexMap& g);

/// A simplicial set truncated at level L: finite sets K_0..K_L of simplex ids
/// with total face maps d_i : K_n -> K_{n-1} (0 <= i <= n) and degeneracy
/// maps s_i : K_n -> K_{n+1} (0 <= i <= n < L).  Every simplicial identity
/// that stays inside the truncation is checked exhaustively at construction:
///   d_i d_j = d_{j-1} d_i   (i < j)         s_i s_j = s_{j+1} s_i   (i <= j)
///   d_i s_j = s_{j-1} d_i   (i < j)         d_i s_j = s_j d_{i-1}   (i > j+1)
///   d_j s_j = id = d_{j+1} s_j
class TruncatedSimplicialSet {
 public:
  /// One face or degeneracy map as an index table into the adjacent level.
  using Table = std::vector<std::size_t>;

  /// levels[n] lists the ids of K_n (distinct within a level).
  /// faces[n][i] is d_i on K_n for 1 <= n <= L; faces[0] must be empty.
  /// degeneracies[n][i] is s_i on K_n for 0 <= n < L; degeneracies[L] empty.
  /// Throws InvalidInputError on shape errors, duplicate ids, out-of-range
  /// table entries, or a violated simplicial identity.
  TruncatedSimplicialSet(std::vector<std::vector<std::string>> levels,
                         std::vector<std::vector<Table>> faces,
                         std::vector<std::vector<Table>> degeneracies);

  unsigned truncation_level() const { return static_cast<unsigned>(levels_.size()) - 1; }
  std::size_t level_size(unsigned n) const { return levels_.at(n).size(); }
  const std::vector<std::string>& level(unsigned n) const { return levels_.at(n); }
  const std::string& id(unsigned n, std::size_t x) const { return levels_.at(n).at(x); }
  /// Throws InvalidInputError for an unknown id.
  std::size_t index_of(unsigned n, const std::string& id) const;

  std::size_t face(unsigned n, unsigned i, std::size_t x) const;        // d_i
  std::size_t degeneracy(unsigned n, unsigned i, std::size_t x) const;  // s_i
  /// True when x lies in the image of some degeneracy map into level n.
  bool is_degenerate(unsigned n, std::size_t x) const;

  /// Contravariant action K(phi) : K_{phi.target()} -> K_{phi.source()},
  /// computed through the epi-mono factorization of phi: faces for the
  /// indices missing from the image (largest first), then degeneracies for
  /// the repeated positions (smallest first).  Intermediate levels never
  /// exceed max(source, target), so the truncation suffices.
  std::size_t act(const SimplexMap& phi, std::size_t x) const;

 private:
  std::vector<std::vector<std::string>> levels_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  std::vector<std::vector<Table>> faces_;
  std::vector<std::vector<Table>> degeneracies_;
  std::vector<std::vector<char>> degenerate_;
};

/// Nerve of a finite poset truncated at `levels`: K_n is the set of weakly
/// increasing chains x_0 <= ... <= x_n, enumerated in lexicographic order of
/// index tuples; faces drop an entry (composition), degeneracies repeat one.
/// Ids are the poset ids joined with '|'.
TruncatedSimplicialSet nerve(const FinitePoset& p, unsigned levels);

/// An active-inert pushout square in the simplex category: f : [n] -> [m]
/// inert with f(i) = i + offset, g : [n] -> [ell] active, pushout corner
/// [p] with p = m + ell - n.  The pushout legs are
///   u : [m] -> [p]   u(j) = j for j < offset (left fringe of f's
///                    complement), u(offset + i) = g(i) + offset (middle,
///                    relabeled through g), u(j) = j + ell - n for
///                    j > offset + n (right fringe, shifted past the middle)
///   v : [ell] -> [p] v(j) = j + offset
/// so u is active, v is inert, and u f = v g.
struct PushoutSquare {
  unsigned n, m, ell;
  unsigned offset;
  std::vector<unsigned> g;

  bool operator==(const PushoutSquare&) const = default;
};

/// A fiber-product element over which K_p fails to be a bijection: ids of
/// a in K_m and b in K_ell with K(f)(a) = K(g)(b) whose preimage count under
/// sigma -> (K(u) sigma, K(v) sigma) differs from 1.
struct DecompositionWitness {
  PushoutSquare square;
  std::string a, b;
  std::size_t preimages;

  bool operator==(const DecompositionWitness&) const = default;
};

/// Verdict of the decomposition-space check, valid up to `level` only.
struct DecompositionReport {
  bool pass;
  unsigned level;
  std::uint64_t squares;
  std::optional<DecompositionWitness> witness;

  bool operator==(const DecompositionReport&) const = default;
};

/// Checks the discrete decomposition-space condition on every active-inert
/// pushout square whose four corners are <= level: the induced map
/// K_p -> K_m x_{K_n} K_ell must be a bijection.  Squares are enumerated in
/// lexicographic (n, m, ell, offset, g) order and pairs (a, b) in index
/// order; the reported witness is the first failure in that order even when
/// squares are checked on several threads.
/// Throws LevelTooShallowError for level < 2 (only trivial squares exist)
/// and InvalidInputError when level exceeds the truncation.
DecompositionReport check_decomposition(const TruncatedSimplicialSet& k, unsigned level,
                                        unsigned threads = 1);

/// An element of the incidence algebra of K: a rational functional on K_1,
/// values[x] being its value on the x-th 1-simplex.
struct Functional {
  std::vector<Rational> values;
  bool operator==(const Functional&) const = default;
};

/// The comultiplication fiber over f: one pair (d_2 sigma, d_0 sigma) of K_1
/// indices per sigma in K_2 with d_1 sigma = f, in K_2 index order.
/// Throws LevelTooShallowError when the truncation is below 2.
std::vector<std::pair<std::size_t, std::size_t>> comultiply(const TruncatedSimplicialSet& k,
                                                            std::size_t f);

/// zeta: constant 1 on K_1.
Functional zeta_functional(const TruncatedSimplicialSet& k);
/// counit delta: 1 on degenerate 1-simplices, 0 elsewhere.
Functional counit(const TruncatedSimplicialSet& k);
/// Convolution (phi * psi)(f) = sum over the fiber of phi(d_2) psi(d_0).
/// Throws InvalidInputError when a functional is not total on K_1.
Functional convolve_functionals(const Functional& phi, const Functional& psi,
                                const TruncatedSimplicialSet& k);
/// The two-sided convolution inverse of zeta, solved edge by edge from
/// (mu * zeta)(f) = delta(f) and verified on both sides afterwards.  Throws
/// NonInvertibleError naming the offending edge when the recursion cycles or
/// a side fails; LevelTooShallowError below truncation 2.
Functional mobius_functional(const TruncatedSimplicialSet& k);

/// First failure of the convolution algebra laws on K, scanning edges in
/// index order and checking, for each f: the left unit law (the multiset
/// {d_0 sigma : d_1 sigma = f, d_2 sigma degenerate} must be {f}), the right
/// unit law (symmetrically), then associativity (the two iterated-coproduct
/// triple multisets must agree).  Bilinearity makes the multiset comparisons
/// equivalent to checking all rational functionals.  nullopt when every law
/// holds up to the truncation.
struct AlgebraViolation {
  enum class Kind { LeftUnit, RightUnit, Associativity };
  Kind kind;
  std::size_t edge;
  std::string detail;
};
std::optional<AlgebraViolation> find_algebra_violation(const TruncatedSimplicialSet& k);

}  // namespace zeta
