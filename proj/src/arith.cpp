#include "zeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

// (a|2), defined when a is odd: +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
int kronecker_two(const Integer& a) {
  Integer r = a % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

bool is_squarefree(Integer m) {
  m = abs(m);
  if (m == 0) return false;
  for (Integer i = 2; i * i <= m; ++i) {
    if (m % (i * i) == 0) return false;
    while (m % i == 0) m /= i;
  }
  return true;
}

}  // namespace

int kronecker_symbol(const Integer& a, const Integer& n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;

  Integer m = n;
  int result = 1;
  if (m < 0) {
    m = -m;
    if (a < 0) result = -result;
  }
  std::size_t twos = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++twos;
  }
  if (twos % 2 == 1 && kronecker_two(a) == -1) result = -result;

  // Jacobi symbol (a|m) with m odd positive; it only depends on a mod m.
  Integer x = a % m;
  if (x < 0) x += m;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      Integer r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

bool is_fundamental_discriminant(const Integer& d) {
  if (d == 0 || d == 1) return false;
  Integer r = d % 4;
  if (r < 0) r += 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  Integer m = d / 4;
  Integer rm = m % 4;
  if (rm < 0) rm += 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

QuadraticField::QuadraticField(Integer d) : d_(std::move(d)) {
  if (!is_fundamental_discriminant(d_))
    throw InvalidInputError("not a fundamental discriminant: " + d_.get_str());
}

SplittingType QuadraticField::splitting(std::uint64_t p) const {
  switch (kronecker_symbol(d_, Integer(p))) {
    case 1:
      return SplittingType::Split;
    case -1:
      return SplittingType::Inert;
    default:
      return SplittingType::Ramified;
  }
}

int mobius_classical(std::uint64_t n) {
  if (n == 0) throw InvalidInputError("mobius_classical requires n >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

DirichletCoefficients euler_product(const LocalFactorFn& local, std::size_t n_max,
                                    unsigned threads) {
  if (n_max < 1) throw InvalidInputError("euler_product requires a bound >= 1");
  auto primes = primes_up_to(n_max);

  auto order_at = [n_max](std::uint64_t p) {
    unsigned k = 0;
    for (std::uint64_t q = p; q <= n_max; q *= p) ++k;
    return k;
  };

  std::vector<PowerSeries> factors(primes.size(), PowerSeries::one(0));
  std::vector<std::exception_ptr> errors(primes.size());
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        factors[i] = local(primes[i], order_at(primes[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1 || primes.size() < 2) {
    eval_range(0, primes.size());
  } else {
    unsigned nw = std::min<unsigned>(threads, static_cast<unsigned>(primes.size()));
    std::vector<std::thread> workers;
    std::size_t chunk = (primes.size() + nw - 1) / nw;
    for (unsigned w = 0; w < nw; ++w) {
      std::size_t lo = std::min(primes.size(), static_cast<std::size_t>(w) * chunk);
      std::size_t hi = std::min(primes.size(), lo + chunk);
      workers.emplace_back(eval_range, lo, hi);
    }
    for (auto& t : workers) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::size_t> prime_index(n_max + 1, 0);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& f = factors[i];
    std::uint64_t p = primes[i];
    if (f.truncation_order() < order_at(p))
      throw InsufficientPrecisionError("local factor at " + std::to_string(p) +
                                       " is truncated below order " +
                                       std::to_string(order_at(p)));
    if (f[0] != Rational(1))
      throw BadLocalFactorError("local factor at " + std::to_string(p) +
                                " has constant term " + to_string(f[0]));
    for (std::uint64_t m = p; m <= n_max; m += p)
      if (prime_index[m] == 0) prime_index[m] = i + 1;  // smallest prime factor
  }

  DirichletCoefficients c = DirichletCoefficients::delta(n_max);
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::size_t i = prime_index[n] - 1;
    std::uint64_t p = primes[i];
    std::size_t m = n;
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    c.at(n) = factors[i][k] * c.at(m);
  }
  return c;
}

PowerSeries dedekind_local_factor(const QuadraticField& k, std::uint64_t p, std::size_t order) {
  PowerSeries denom = PowerSeries::one(static_cast<unsigned>(order));
  switch (k.splitting(p)) {
    case SplittingType::Split:
      if (order >= 1) denom[1] = Rational(-2);
      if (order >= 2) denom[2] = Rational(1);
      break;
    case SplittingType::Inert:
      if (order >= 2) denom[2] = Rational(-1);
      break;
    case SplittingType::Ramified:
      if (order >= 1) denom[1] = Rational(-1);
      break;
  }
  return ps_inv(denom);
}

DirichletCoefficients dedekind_zeta_coeffs(const QuadraticField& k, std::size_t n_max) {
  return euler_product(
      [&k](std::uint64_t p, std::size_t order) { return dedekind_local_factor(k, p, order); },
      n_max);
}

DirichletCoefficients dedekind_mobius_coeffs(const QuadraticField& k, std::size_t n_max) {
  // Reciprocal local factors: (1-t)^2 split, 1-t^2 inert, 1-t ramified.
  return euler_product(
      [&k](std::uint64_t p, std::size_t order) {
        PowerSeries f = PowerSeries::one(static_cast<unsigned>(order));
        switch (k.splitting(p)) {
          case SplittingType::Split:
            if (order >= 1) f[1] = Rational(-2);
            if (order >= 2) f[2] = Rational(1);
            break;
          case SplittingType::Inert:
            if (order >= 2) f[2] = Rational(-1);
            break;
          case SplittingType::Ramified:
            if (order >= 1) f[1] = Rational(-1);
            break;
        }
        return f;
      },
      n_max);
}

}  // namespace zeta
