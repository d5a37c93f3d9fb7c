#include "qeuler/zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "qeuler/errors.hpp"

namespace qeuler::detail {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

// Below this length schoolbook multiplication wins over packing.
constexpr std::size_t kKroneckerThreshold = 12;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 r = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

// Deterministic for n < 4'759'123'141 with bases {2, 7, 61}.
bool is_prime_u32(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

class PrimeStream {
 public:
  u64 next() {
    do {
      candidate_ -= 2;
    } while (!is_prime_u32(candidate_));
    return candidate_;
  }

 private:
  u64 candidate_ = (u64{1} << 31) + 1;  // first result is 2^31 - 1
};

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim_mod(r);
  return r;
}

// a <- a mod b, b nonzero.
void rem_in_place(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv_lead = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 factor = mul_mod(a.back(), inv_lead, p);
    std::size_t shift = a.size() - b.size();
    if (factor != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        u64 t = mul_mod(factor, b[i], p);
        a[i + shift] = (a[i + shift] + p - t) % p;
      }
    }
    a.pop_back();
    trim_mod(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = pow_mod(a.back(), p - 2, p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

BigInteger symmetric(const BigInteger& value, const BigInteger& modulus) {
  BigInteger half = modulus / 2;
  if (value > half) return value - modulus;
  return value;
}

std::size_t max_bits(const ZPoly& a) {
  std::size_t bits = 0;
  for (const auto& c : a) {
    if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

BigInteger pack(const ZPoly& a, std::size_t bits) {
  BigInteger x = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    x += a[i];
  }
  return x;
}

// Kronecker substitution: evaluate both operands at 2^bits, multiply once
// with GMP, then read the signed digits back off.
ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
  std::size_t bits = max_bits(a) + max_bits(b) + 2;
  for (std::size_t n = std::min(a.size(), b.size()); n > 0; n >>= 1) ++bits;
  BigInteger x = pack(a, bits) * pack(b, bits);
  const std::size_t len = a.size() + b.size() - 1;
  ZPoly r(len);
  BigInteger digit;
  BigInteger half;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  for (std::size_t i = 0; i < len; ++i) {
    mpz_fdiv_r_2exp(digit.get_mpz_t(), x.get_mpz_t(), bits);
    if (digit >= half) {
      BigInteger full;
      mpz_setbit(full.get_mpz_t(), bits);
      digit -= full;
    }
    x -= digit;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    r[i] = digit;
  }
  if (x != 0) throw InvariantError("Kronecker unpack left a residue");
  return r;
}

}  // namespace

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r = std::min(a.size(), b.size()) < kKroneckerThreshold ? mul_schoolbook(a, b)
                                                                : mul_kronecker(a, b);
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const BigInteger& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

BigInteger content(const ZPoly& p) {
  BigInteger g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInteger make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return 0;
  BigInteger c = content(p);
  if (p.back() < 0) c = -c;
  if (c != 1) {
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return c;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("ZPoly: division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem(a);
  ZPoly quot(a.size() - b.size() + 1);
  const BigInteger& lead = b.back();
  BigInteger factor;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInteger& top = rem[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[k] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      mpz_submul(rem[k + i].get_mpz_t(), factor.get_mpz_t(), b[i].get_mpz_t());
    }
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  trim(quot);
  return quot;
}

GcdResult gcd_with_cofactors(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return {b, {}, ZPoly{1}};
  if (b.empty()) return {a, ZPoly{1}, {}};
  if (a.size() == 1 || b.size() == 1) return {ZPoly{1}, a, b};
  if (a == b) return {a, ZPoly{1}, ZPoly{1}};

  BigInteger lead_gcd;
  mpz_gcd(lead_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  PrimeStream primes;
  ZPoly image;  // CRT image in [0, modulus)
  BigInteger modulus = 0;
  int image_degree = -1;

  for (;;) {
    const u64 p = primes.next();
    const u64 lead_mod = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
    if (lead_mod == 0) continue;

    ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    // p does not divide the leading coefficients, so the modular degree
    // bounds the true degree from above.
    if (dg == 0) return {ZPoly{1}, a, b};
    for (auto& c : g) c = mul_mod(c, lead_mod, p);

    if (image_degree >= 0 && dg > image_degree) continue;  // unlucky prime
    if (image_degree < 0 || dg < image_degree) {
      image.assign(g.begin(), g.end());
      modulus = static_cast<unsigned long>(p);
      image_degree = dg;
      continue;
    }

    const u64 inv = pow_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
    bool stable = true;
    BigInteger next_modulus = modulus * static_cast<unsigned long>(p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      u64 current = mpz_fdiv_ui(image[i].get_mpz_t(), p);
      u64 t = mul_mod((g[i] + p - current) % p, inv, p);
      BigInteger before = symmetric(image[i], modulus);
      image[i] += modulus * static_cast<unsigned long>(t);
      if (symmetric(image[i], next_modulus) != before) stable = false;
    }
    modulus = std::move(next_modulus);
    if (!stable) continue;

    ZPoly candidate(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) candidate[i] = symmetric(image[i], modulus);
    make_primitive(candidate);
    auto qa = divide_exact(a, candidate);
    if (!qa) continue;
    auto qb = divide_exact(b, candidate);
    if (!qb) continue;
    return {std::move(candidate), std::move(*qa), std::move(*qb)};
  }
}

}  // namespace qeuler::detail
