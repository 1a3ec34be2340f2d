#include "zeta/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "zeta/errors.hpp"

namespace zeta {

Polynomial Polynomial::constant(unsigned nvars, Integer c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned index) {
  if (index >= nvars)
    throw ArityError("variable x" + std::to_string(index) + " out of range for " +
                     std::to_string(nvars) + " variable(s)");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(std::move(m), Integer(1));
  return p;
}

void Polynomial::add_term(Monomial m, Integer c) {
  if (m.size() != nvars_) throw InvalidInputError("monomial arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw InvalidInputError("polynomial arity mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw InvalidInputError("polynomial arity mismatch");
  Polynomial r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(std::move(m), c1 * c2);
    }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(nvars_, Integer(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0u) != d) return false;
  return true;
}

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(const std::string& src, unsigned nvars) : src_(src), nvars_(nvars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_spaces();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  void skip_spaces() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_spaces();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Integer number() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return Integer(src_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    bool negate = false;
    if (!eat('+')) negate = eat('-');
    Polynomial p = term();
    if (negate) p = -p;
    while (true) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    if (eat('-')) return -factor();
    Polynomial base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      Integer e = number();
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c >= '0' && c <= '9') return Polynomial::constant(nvars_, number());
    if (c == 'x' || c == 'y' || c == 'z') {
      std::size_t at = pos_;
      ++pos_;
      if (c == 'x' && pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
        Integer idx = number();
        if (idx >= nvars_)
          throw ArityError("variable x" + idx.get_str() + " out of range for " +
                           std::to_string(nvars_) + " variable(s)");
        return Polynomial::variable(nvars_, static_cast<unsigned>(idx.get_ui()));
      }
      if (nvars_ > 3) throw ParseError("aliases x,y,z need at most 3 variables", at);
      unsigned idx = static_cast<unsigned>(c - 'x');
      if (idx >= nvars_)
        throw ArityError(std::string("variable ") + c + " out of range for " +
                         std::to_string(nvars_) + " variable(s)");
      return Polynomial::variable(nvars_, idx);
    }
    throw ParseError("expected a number, variable, or '('", pos_);
  }

  const std::string& src_;
  unsigned nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& src, unsigned nvars) {
  return Parser(src, nvars).run();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const char* alias = "xyz";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    bool has_vars = std::any_of(m.begin(), m.end(), [](unsigned e) { return e != 0; });
    bool emitted = (a != 1) || !has_vars;
    if (emitted) out += a.get_str();
    for (unsigned i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (emitted) out += '*';
      emitted = true;
      if (p.nvars() <= 3)
        out += alias[i];
      else
        out += "x" + std::to_string(i);
      if (m[i] >= 2) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace zeta
