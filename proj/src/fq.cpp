#include "zeta/fq.hpp"

#include <array>
#include <bit>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

constexpr std::uint64_t kMaxQ = std::uint64_t(1) << 62;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(u128(a) * b % p);
}

bool is_prime(std::uint64_t p) {
  Integer n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

unsigned bit_length(u128 v) {
  auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(v));
}

// --- F_p[u] helpers for the modulus search (coefficients 0..p-1, ascending).

using PPoly = std::vector<std::uint64_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b reduced modulo the monic polynomial f (low digits of degree k).
PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
  std::size_t k = f.size();
  if (a.empty() || b.empty()) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += u128(a[i]) * b[j];
  }
  PPoly c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint64_t>(acc[i] % p);
  for (std::size_t i = c.size(); i-- > k;) {
    std::uint64_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < k; ++j)
      c[i - k + j] = (c[i - k + j] + (p - mulmod(t, f[j], p))) % p;
  }
  c.resize(k);
  ptrim(c);
  return c;
}

// x^(p^reps) mod f, starting from base (a polynomial mod f).
PPoly frobenius_iterate(PPoly base, unsigned reps, const PPoly& f, std::uint64_t p) {
  for (unsigned r = 0; r < reps; ++r) {
    PPoly result{1};
    PPoly sq = base;
    std::uint64_t e = p;
    while (e > 0) {
      if (e & 1) result = pmulmod(result, sq, f, p);
      sq = pmulmod(sq, sq, f, p);
      e >>= 1;
    }
    base = std::move(result);
  }
  return base;
}

PPoly psub(PPoly a, const PPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + (p - b[i])) % p;
  ptrim(a);
  return a;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  // Euclid with explicit remainder; both inputs have degree <= k.
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t lead_inv = 1;
    {  // inverse of b's leading coefficient mod p
      std::uint64_t base = b.back(), e = p - 2;
      std::uint64_t r = 1;
      while (e > 0) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
      }
      lead_inv = r;
    }
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t t = mulmod(a.back(), lead_inv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + (p - mulmod(t, b[j], p))) % p;
      ptrim(a);
      if (a.size() <= shift) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's test for a monic f given by its low digits (degree k = f.size()):
// x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k.
bool is_irreducible(const PPoly& f, std::uint64_t p) {
  unsigned k = static_cast<unsigned>(f.size());
  if (k == 1) return true;
  PPoly full = f;  // explicit monic polynomial, for the gcd steps
  full.push_back(1);
  PPoly x{0, 1};
  PPoly xq = frobenius_iterate(x, k, f, p);
  if (psub(xq, x, p) != PPoly{}) return false;
  unsigned m = k;
  for (unsigned r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    PPoly xr = frobenius_iterate(x, k / r, f, p);
    if (pgcd(psub(xr, x, p), full, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (k == 0) throw InvalidInputError("extension degree must be >= 1");
  if (!is_prime(p)) throw InvalidInputError("characteristic must be prime, got " + std::to_string(p));
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw FieldTooLargeError("field size " + std::to_string(p) + "^" + std::to_string(k) +
                               " exceeds the 2^62 representation cap");
  }
  q_ = static_cast<std::uint64_t>(q);

  if (k == 1) {
    modulus_ = {0};  // F_p[u]/(u)
    return;
  }
  // Canonical modulus: smallest packed code whose monic polynomial is
  // irreducible.  Irreducibles have density ~1/k among monics, so the scan
  // is short; the code order makes the representation reproducible.
  for (std::uint64_t code = 0;; ++code) {
    PPoly f(k);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    if (c != 0) throw Error("no irreducible polynomial found");  // unreachable
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (p == 2) {
    modulus_mask_ = std::uint64_t(1) << k;
    for (unsigned i = 0; i < k; ++i) modulus_mask_ |= modulus_[i] << i;
  }
}

std::string FiniteField::modulus_text() const {
  if (k_ == 1) return "u";
  std::string s = "u^" + std::to_string(k_);
  for (unsigned i = k_; i-- > 0;) {
    std::uint64_t c = modulus_[i];
    if (c == 0) continue;
    s += '+';
    if (c != 1 || i == 0) s += std::to_string(c);
    if (c != 1 && i != 0) s += '*';
    if (i == 1)
      s += "u";
    else if (i >= 2)
      s += "u^" + std::to_string(i);
  }
  return s;
}

FiniteField::Elem FiniteField::from_integer(const Integer& n) const {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p_));
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t da = a % p_ + b % p_;
    if (da >= p_) da -= p_;
    out += da * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem out = 0;
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    // Carryless multiply, then xor-reduce by the packed modulus.
    u128 r = 0;
    std::uint64_t bb = b;
    while (bb != 0) {
      r ^= u128(a) << std::countr_zero(bb);
      bb &= bb - 1;
    }
    while (bit_length(r) > k_) {
      unsigned shift = bit_length(r) - 1 - k_;
      r ^= u128(modulus_mask_) << shift;
    }
    return static_cast<std::uint64_t>(r);
  }
  std::array<std::uint64_t, 64> da{}, db{};
  std::array<u128, 128> acc{};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) acc[i + j] += u128(da[i]) * db[j];
  }
  std::array<std::uint64_t, 128> c{};
  for (unsigned i = 0; i < 2 * k_ - 1; ++i) c[i] = static_cast<std::uint64_t>(acc[i] % p_);
  for (unsigned i = 2 * k_ - 1; i-- > k_;) {
    std::uint64_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      c[i - k_ + j] = (c[i - k_ + j] + (p_ - mulmod(t, modulus_[j], p_))) % p_;
  }
  Elem out = 0;
  for (unsigned i = k_; i-- > 0;) out = out * p_ + c[i];
  return out;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InvalidInputError("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidInputError("not a prime power: " + std::to_string(q));
  Integer n(static_cast<unsigned long>(q));
  for (unsigned k = 63; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::uint64_t p = root.get_ui();
      if (is_prime(p)) return {p, k};
    }
  }
  if (!is_prime(q)) throw InvalidInputError("not a prime power: " + std::to_string(q));
  return {q, 1};
}

}  // namespace zeta
