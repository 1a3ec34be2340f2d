#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zeta/errors.hpp"
#include "zeta/rational.hpp"

namespace zeta {

/// A locally finite poset: leq is a partial order and every closed interval
/// [x, y] = { z : x <= z <= y } is finite.  interval() must list [x, y] in
/// some linear extension of the order (z before w whenever z < w) and return
/// an empty vector when x is not below y.
template <class P>
concept LocallyFinitePoset = requires(const P& p, const typename P::element_type& x) {
  requires std::equality_comparable<typename P::element_type>;
  { p.leq(x, x) } -> std::convertible_to<bool>;
  { p.interval(x, x) } -> std::same_as<std::vector<typename P::element_type>>;
};

/// A poset with an interval classifier: label(x, y) is constant on
/// isomorphism classes of intervals, giving the reduced incidence algebra.
/// Labels key the memoization tables, so elements used with mobius/invert
/// must factor through the classifier.
template <class P>
concept ReducedPoset = LocallyFinitePoset<P> && requires(const P& p,
                                                         const typename P::element_type& x) {
  typename P::label_type;
  { p.label(x, x) } -> std::same_as<typename P::label_type>;
};

/// An element of the incidence algebra: a function on intervals.  Values on
/// non-intervals are never consulted by the algebra operations.
template <LocallyFinitePoset P>
class IncidenceElement {
 public:
  using element_type = typename P::element_type;
  using fn_type = std::function<Rational(const element_type&, const element_type&)>;

  explicit IncidenceElement(fn_type f) : fn_(std::move(f)) {}

  Rational operator()(const element_type& x, const element_type& y) const { return fn_(x, y); }

 private:
  fn_type fn_;
};

/// zeta: constant 1 on every interval.
template <LocallyFinitePoset P>
IncidenceElement<P> zeta_element() {
  return IncidenceElement<P>([](const auto&, const auto&) { return Rational(1); });
}

/// delta: 1 on trivial intervals [x, x], else 0.  The convolution unit.
template <LocallyFinitePoset P>
IncidenceElement<P> delta_element() {
  return IncidenceElement<P>(
      [](const auto& x, const auto& y) { return x == y ? Rational(1) : Rational(0); });
}

/// Convolution (a*b)([x,y]) = sum_{z in [x,y]} a([x,z]) b([z,y]).
/// The poset must outlive the returned element.
template <LocallyFinitePoset P>
IncidenceElement<P> convolve(IncidenceElement<P> a, IncidenceElement<P> b, const P& poset) {
  return IncidenceElement<P>([a = std::move(a), b = std::move(b), p = &poset](
                                 const auto& x, const auto& y) {
    Rational acc(0);
    for (const auto& z : p->interval(x, y)) acc += a(x, z) * b(z, y);
    return acc;
  });
}

namespace detail {

/// Thread-safe memo table keyed by interval label.
template <class Key>
struct SyncMemo {
  std::mutex mu;
  std::unordered_map<Key, Rational> map;

  bool lookup(const Key& k, Rational& out) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(k);
    if (it == map.end()) return false;
    out = it->second;
    return true;
  }
  void store(const Key& k, const Rational& v) {
    std::lock_guard<std::mutex> lock(mu);
    map.emplace(k, v);
  }
};

/// Inverse recursion: psi([x,x]) = 1/a([x,x]);
/// psi([x,y]) = -( sum_{z in [x,y], z != y} psi([x,z]) a([z,y]) ) / a([y,y]).
/// Terminates because [x,z] is a strictly smaller finite interval.
template <ReducedPoset P>
Rational invert_eval(const IncidenceElement<P>& a, const P& poset,
                     const typename P::element_type& x, const typename P::element_type& y,
                     SyncMemo<typename P::label_type>& memo) {
  auto key = poset.label(x, y);
  Rational cached;
  if (memo.lookup(key, cached)) return cached;
  Rational result;
  if (x == y) {
    Rational diag = a(x, x);
    if (diag == 0) throw NonInvertibleOnDiagonalError("incidence inverse: zero diagonal value");
    result = 1 / diag;
  } else {
    Rational diag = a(y, y);
    if (diag == 0) throw NonInvertibleOnDiagonalError("incidence inverse: zero diagonal value");
    Rational acc(0);
    for (const auto& z : poset.interval(x, y)) {
      if (z == y) continue;
      acc += invert_eval(a, poset, x, z, memo) * a(z, y);
    }
    result = -acc / diag;
  }
  memo.store(key, result);
  return result;
}

}  // namespace detail

/// Convolution inverse of a; requires nonzero diagonal values
/// (NonInvertibleOnDiagonalError otherwise).  The returned element carries a
/// synchronized memo table keyed by interval label, so concurrent evaluation
/// on distinct intervals is safe.  The poset must outlive the result.
template <ReducedPoset P>
IncidenceElement<P> invert(IncidenceElement<P> a, const P& poset) {
  auto memo = std::make_shared<detail::SyncMemo<typename P::label_type>>();
  return IncidenceElement<P>(
      [a = std::move(a), p = &poset, memo](const auto& x, const auto& y) {
        return detail::invert_eval(a, *p, x, y, *memo);
      });
}

/// Memoized Mobius element mu = invert(zeta).
template <ReducedPoset P>
IncidenceElement<P> mobius_element(const P& poset) {
  return invert(zeta_element<P>(), poset);
}

/// Mobius value of one interval; NotComparableError when x is not below y.
/// mu([x,x]) = 1 and mu([x,y]) = -sum_{z in [x,y], z != y} mu([x,z]).
template <ReducedPoset P>
Rational mobius(const P& poset, const typename P::element_type& x,
                const typename P::element_type& y) {
  if (!poset.leq(x, y)) throw NotComparableError("mobius: x is not below y");
  detail::SyncMemo<typename P::label_type> memo;
  return detail::invert_eval(zeta_element<P>(), poset, x, y, memo);
}

/// Mobius inversion: given f = g * zeta (cumulative data), recover
/// g = f * mu.  Postcondition: convolve(result, zeta) = f on every interval.
template <ReducedPoset P>
IncidenceElement<P> rota_invert(IncidenceElement<P> f, const P& poset) {
  return convolve(std::move(f), mobius_element(poset), poset);
}

}  // namespace zeta
