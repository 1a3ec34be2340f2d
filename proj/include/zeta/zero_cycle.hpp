#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zeta/power_series.hpp"
#include "zeta/rational.hpp"

namespace zeta {

/// Abstract closed point: the `index`-th point of degree `degree` (1-based;
/// for a variety with closed-point counts a_d the valid range is 1..a_d).
/// Points are never materialized as Galois orbits — the counts suffice.
struct ClosedPointId {
  unsigned degree;
  std::uint64_t index;

  auto operator<=>(const ClosedPointId&) const = default;
};

/// Effective 0-cycle: a finite formal sum of closed points with nonnegative
/// multiplicities.  Only nonzero multiplicities are stored.
class ZeroCycle {
 public:
  ZeroCycle() = default;  // the zero cycle

  /// Merges duplicate points, drops zero multiplicities; degree or index 0
  /// raises InvalidInputError.
  static ZeroCycle from_terms(
      const std::vector<std::pair<ClosedPointId, std::uint64_t>>& terms);

  const std::map<ClosedPointId, std::uint64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Multiplicity-weighted sum of point degrees.
  std::uint64_t degree() const;

  bool operator==(const ZeroCycle&) const = default;

 private:
  std::map<ClosedPointId, std::uint64_t> terms_;
};

ZeroCycle cycle_add(const ZeroCycle& a, const ZeroCycle& b);
/// Pointwise multiplicity comparison (the effective order).
bool cycle_leq(const ZeroCycle& a, const ZeroCycle& b);
/// b - a; requires cycle_leq(a, b), else InvalidInputError.
ZeroCycle cycle_diff(const ZeroCycle& a, const ZeroCycle& b);

/// Canonical text: "0", or '+'-joined "m(d,i)" terms in point order with the
/// multiplicity omitted when 1, e.g. "2(1,3)+(2,1)".
std::string to_string(const ZeroCycle& alpha);
/// Inverse of to_string (multiplicities may repeat a point); ParseError on
/// syntax errors, InvalidInputError on zero degree/index.
ZeroCycle cycle_from_string(const std::string& text);

/// 1 on the zero cycle, 0 when any multiplicity exceeds 1, else (-1)^r for r
/// distinct points.  Agrees with the poset-module mobius on [0, alpha].
int mobius_0cycle(const ZeroCycle& alpha);

/// (Z_0^eff, <=) as a reduced poset: intervals are keyed by the difference
/// cycle, whose text form is the label.
struct ZeroCyclePoset {
  using element_type = ZeroCycle;
  using label_type = std::string;

  bool leq(const ZeroCycle& x, const ZeroCycle& y) const { return cycle_leq(x, y); }
  /// All cycles between x and y, sorted by (degree, text) — a linear
  /// extension, since strictly smaller cycles have strictly smaller degree.
  std::vector<ZeroCycle> interval(const ZeroCycle& x, const ZeroCycle& y) const;
  std::string label(const ZeroCycle& x, const ZeroCycle& y) const {
    return to_string(cycle_diff(x, y));
  }
};

/// Number of effective 0-cycles of the given degree over a point structure
/// with a[d-1] closed points of degree d: a bottom-up count over point
/// instances in ascending degree order, one multiplicity branch per instance
/// (no generating functions).  The state table is capped by `budget`
/// (FieldTooLargeError).  Negative a_d raises InvalidInputError.
Integer enumerate_0cycles(const std::vector<Integer>& a, unsigned degree,
                          std::uint64_t budget = 10'000'000);

/// The cycles themselves, sorted by (degree, text); the count of materialized
/// cycles plus visited states is capped by `budget`.
std::vector<ZeroCycle> cycles_of_degree(const std::vector<Integer>& a, unsigned degree,
                                        std::uint64_t budget = 10'000'000);

/// Coefficient n is enumerate_0cycles(a, n); equals the zeta series of the
/// variety the counts came from.
PowerSeries zero_cycle_series(const std::vector<Integer>& a, unsigned order,
                              std::uint64_t budget = 10'000'000);

}  // namespace zeta
