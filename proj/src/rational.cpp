#include "zeta/rational.hpp"

#include <cctype>

#include "zeta/errors.hpp"

namespace zeta {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer integer_from_string(std::string_view s) {
  if (!valid_integer_token(s))
    throw InvalidInputError("malformed integer: '" + std::string(s) + "'");
  return Integer(std::string(s));
}

Rational rational_from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(integer_from_string(s));
  Integer num = integer_from_string(s.substr(0, slash));
  Integer den = integer_from_string(s.substr(slash + 1));
  return make_rational(num, den);
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

}  // namespace zeta
