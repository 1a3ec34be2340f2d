#include "zeta/rational_function.hpp"

#include <algorithm>

#include "zeta/errors.hpp"
#include "zeta/qpoly.hpp"

namespace zeta {

namespace qpoly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

bool equal(const Poly& a, const Poly& b) { return trim(a) == trim(b); }

Poly add(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return trim(std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return trim(std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return trim(std::move(c));
}

Poly scale(const Rational& c, const Poly& a) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly bb = trim(b);
  if (bb.empty()) throw InvalidInputError("polynomial division by zero");
  Poly rem = trim(a);
  int db = degree(bb);
  if (degree(rem) < db) return {{}, rem};
  Poly quot(rem.size() - bb.size() + 1, Rational(0));
  while (degree(rem) >= db) {
    int dr = degree(rem);
    Rational c = rem[dr] / bb[db];
    quot[dr - db] = c;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * bb[i];
    rem = trim(std::move(rem));
    if (rem.empty()) break;
  }
  return {trim(std::move(quot)), rem};
}

Poly gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  // Make monic.
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

}  // namespace qpoly

namespace {

/// Scale rational polys P, Q by a common factor giving integer coefficients,
/// content 1, positive denominator constant term.
RationalFunction clear_denominators(const qpoly::Poly& num, const qpoly::Poly& den) {
  Integer lcm(1);
  for (const auto& c : num) lcm = ::lcm(lcm, c.get_den());
  for (const auto& c : den) lcm = ::lcm(lcm, c.get_den());
  std::vector<Integer> n, d;
  n.reserve(num.size());
  d.reserve(den.size());
  Integer content(0);
  for (const auto& c : num) {
    Rational v = c * lcm;
    n.push_back(v.get_num());
    content = gcd(content, n.back());
  }
  for (const auto& c : den) {
    Rational v = c * lcm;
    d.push_back(v.get_num());
    content = gcd(content, d.back());
  }
  if (content == 0) content = 1;
  for (auto& c : n) c /= content;
  for (auto& c : d) c /= content;
  if (d.empty() || d[0] == 0)
    throw InvalidInputError("rational function denominator vanishes at zero");
  if (d[0] < 0) {
    for (auto& c : n) c = -c;
    for (auto& c : d) c = -c;
  }
  if (n.empty()) n.push_back(Integer(0));
  return RationalFunction{std::move(n), std::move(d)};
}

}  // namespace

RationalFunction RationalFunction::from_rational_polys(std::vector<Rational> num,
                                                       std::vector<Rational> den) {
  qpoly::Poly n = qpoly::trim(std::move(num));
  qpoly::Poly d = qpoly::trim(std::move(den));
  if (d.empty()) throw InvalidInputError("rational function with zero denominator");
  if (n.empty()) return RationalFunction{{Integer(0)}, {Integer(1)}};
  qpoly::Poly g = qpoly::gcd(n, d);
  if (qpoly::degree(g) > 0) {
    n = qpoly::divmod(n, g).first;
    d = qpoly::divmod(d, g).first;
  }
  return clear_denominators(n, d);
}

PowerSeries RationalFunction::expand(unsigned order) const {
  if (denominator.empty() || denominator[0] == 0)
    throw InvalidInputError("expansion requires a unit constant term in the denominator");
  std::vector<Rational> c(order + 1, Rational(0));
  Rational q0(denominator[0]);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = n < numerator.size() ? Rational(numerator[n]) : Rational(0);
    for (unsigned j = 1; j < denominator.size() && j <= n; ++j)
      acc -= Rational(denominator[j]) * c[n - j];
    c[n] = acc / q0;
  }
  return PowerSeries(std::move(c));
}

namespace {

/// Solve M x = rhs exactly; M is rows x cols in row-major order.  Returns
/// false if inconsistent; free variables are set to zero.
bool solve_linear(std::vector<std::vector<Rational>>& M, std::vector<Rational>& rhs,
                  std::vector<Rational>& x) {
  std::size_t rows = M.size();
  std::size_t cols = rows ? M[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && M[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[sel], M[r]);
    std::swap(rhs[sel], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return false;
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i] / M[i][pivot_col[i]];
  return true;
}

}  // namespace

std::optional<RationalFunction> rational_reconstruct(const PowerSeries& a, unsigned num_deg,
                                                     unsigned den_deg) {
  unsigned T = a.truncation_order();
  if (T < num_deg + den_deg + 1)
    throw InsufficientPrecisionError(
        "rational_reconstruct: need truncation order >= num_deg + den_deg + 1");
  for (unsigned d = 0; d <= den_deg; ++d) {
    // Unknowns Q_1..Q_d with Q_0 = 1; equations: (Q a)_n = 0 for n > num_deg.
    std::size_t rows = T - num_deg;
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(d, Rational(0)));
    std::vector<Rational> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      unsigned n = num_deg + 1 + static_cast<unsigned>(r);
      rhs[r] = -a[n];
      for (unsigned j = 1; j <= d; ++j)
        if (j <= n) M[r][j - 1] = a[n - j];
    }
    std::vector<Rational> q;
    if (!solve_linear(M, rhs, q)) continue;
    qpoly::Poly Q(d + 1, Rational(0));
    Q[0] = 1;
    for (unsigned j = 1; j <= d; ++j) Q[j] = q[j - 1];
    // P = the low-order part of Q*a; the eliminated rows guarantee the rest
    // vanishes through order T.
    qpoly::Poly P(num_deg + 1, Rational(0));
    for (unsigned n = 0; n <= num_deg && n <= T; ++n) {
      Rational acc(0);
      for (unsigned j = 0; j <= d && j <= n; ++j) acc += Q[j] * a[n - j];
      P[n] = acc;
    }
    return RationalFunction::from_rational_polys(std::move(P), std::move(Q));
  }
  return std::nullopt;
}

}  // namespace zeta
