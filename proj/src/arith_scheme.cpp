#include "zeta/arith_scheme.hpp"

#include <utility>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

bool is_prime_u64(std::uint64_t p) {
  const Integer n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Monogenic presentation of O_K: x^2 - x + (1-D)/4 for odd D, x^2 - D/4 for
// even D (exact for quadratic fields, where the index is always 1).
VarietySpec monogenic_model(const Integer& d) {
  Polynomial f(1);
  f.add_term({2}, 1);
  if (d % 4 == 0) {
    f.add_term({0}, -(d / 4));
  } else {
    f.add_term({1}, -1);
    f.add_term({0}, (Integer(1) - d) / 4);
  }
  return VarietySpec({AmbientKind::Affine, 1}, {std::move(f)});
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = text.find(sep, start);
    parts.push_back(text.substr(start, stop - start));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return parts;
}

}  // namespace

ArithmeticScheme::ArithmeticScheme(std::variant<VarietySpec, OkData> data)
    : data_(std::move(data)) {}

ArithmeticScheme ArithmeticScheme::spec_z() { return affine_space(0); }

ArithmeticScheme ArithmeticScheme::affine_space(unsigned n) {
  return ArithmeticScheme(VarietySpec({AmbientKind::Affine, n}, {}));
}

ArithmeticScheme ArithmeticScheme::projective_space(unsigned n) {
  return ArithmeticScheme(VarietySpec({AmbientKind::Projective, n}, {}));
}

ArithmeticScheme ArithmeticScheme::spec_ok(const Integer& d) {
  QuadraticField field(d);
  VarietySpec model = monogenic_model(d);
  return ArithmeticScheme(OkData{std::move(field), std::move(model)});
}

ArithmeticScheme ArithmeticScheme::from_polynomials(Ambient ambient,
                                                    std::vector<Polynomial> eqs) {
  return ArithmeticScheme(VarietySpec(ambient, std::move(eqs)));
}

const QuadraticField* ArithmeticScheme::number_field() const {
  const auto* ok = std::get_if<OkData>(&data_);
  return ok == nullptr ? nullptr : &ok->field;
}

const VarietySpec& ArithmeticScheme::polynomial_model() const {
  if (const auto* ok = std::get_if<OkData>(&data_)) return ok->model;
  return std::get<VarietySpec>(data_);
}

ArithmeticScheme parse_scheme(const std::string& text) {
  if (text == "specz") return ArithmeticScheme::spec_z();
  if (text.rfind("affine:", 0) == 0 || text.rfind("projective:", 0) == 0) {
    const Ambient ambient = parse_ambient(text);
    return ArithmeticScheme::from_polynomials(ambient, {});
  }
  if (text.rfind("specok:", 0) == 0)
    return ArithmeticScheme::spec_ok(integer_from_string(text.substr(7)));
  if (text.rfind("poly:", 0) == 0) {
    const auto parts = split(text.substr(5), ';');
    if (parts.empty() || parts[0].empty())
      throw InvalidInputError("poly: scheme needs an ambient, e.g. poly:affine:2;y^2+y-x^3");
    const Ambient ambient = parse_ambient(parts[0]);
    std::vector<Polynomial> eqs;
    for (std::size_t i = 1; i < parts.size(); ++i)
      eqs.push_back(parse_polynomial(parts[i], ambient.coord_count()));
    return ArithmeticScheme::from_polynomials(ambient, std::move(eqs));
  }
  throw InvalidInputError(
      "unknown scheme '" + text +
      "' (expected specz, affine:n, projective:n, specok:D, or poly:...)");
}

VarietySpec reduce_mod_p(const ArithmeticScheme& x, std::uint64_t p) {
  if (!is_prime_u64(p))
    throw InvalidInputError("reduction requires a prime, got " + std::to_string(p));
  const VarietySpec& model = x.polynomial_model();
  std::vector<Polynomial> reduced;
  for (const Polynomial& poly : model.equations()) {
    Polynomial rp(poly.nvars());
    for (const auto& [mono, coeff] : poly.terms()) {
      const std::uint64_t c = mpz_fdiv_ui(coeff.get_mpz_t(), p);
      if (c != 0) rp.add_term(mono, Integer(static_cast<unsigned long>(c)));
    }
    reduced.push_back(std::move(rp));
  }
  return VarietySpec(model.ambient(), std::move(reduced));
}

PowerSeries local_factor(const ArithmeticScheme& x, std::uint64_t p, unsigned order,
                         const CountOptions& opts) {
  if (const QuadraticField* field = x.number_field()) {
    if (!is_prime_u64(p))
      throw InvalidInputError("local factor requires a prime, got " + std::to_string(p));
    return dedekind_local_factor(*field, p, order);
  }
  return hasse_weil_zeta(reduce_mod_p(x, p), p, order, opts);
}

DirichletCoefficients global_coeffs(const ArithmeticScheme& x, std::size_t n_max,
                                    const CountOptions& opts) {
  const CountOptions per_prime{opts.budget, 1};
  const LocalFactorFn local = [&x, per_prime](std::uint64_t p, std::size_t order) {
    return local_factor(x, p, static_cast<unsigned>(order), per_prime);
  };
  return euler_product(local, n_max, opts.threads);
}

bool check_decomposition_identity(const ArithmeticScheme& x, const ArithmeticScheme& z_closed,
                                  const ArithmeticScheme& u_open, std::size_t n_max,
                                  const CountOptions& opts) {
  const DirichletCoefficients whole = global_coeffs(x, n_max, opts);
  const DirichletCoefficients closed = global_coeffs(z_closed, n_max, opts);
  const DirichletCoefficients open = global_coeffs(u_open, n_max, opts);
  return whole == ds_mul(closed, open);
}

}  // namespace zeta
