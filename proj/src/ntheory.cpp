#include "heis/ntheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include <boost/multiprecision/miller_rabin.hpp>

namespace heis {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    default: return "undecided";
  }
}

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(std::uint64_t n, std::map<BigInt, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[BigInt(n)]++;
    return;
  }
  std::uint64_t d = rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

// Brent's variant with batched gcds; nullopt after a step budget
std::optional<BigInt> rho_big(const BigInt& n) {
  for (unsigned c = 1; c < 8; ++c) {
    BigInt y = 2, x = 2, q = 1, g = 1, ys = 2;
    std::size_t r = 1, steps = 0;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min<std::size_t>(128, r - k); ++i) {
          y = f(y);
          q = q * (x > y ? BigInt(x - y) : BigInt(y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += 128;
        steps += 128;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && steps < 400000);
    if (g == n) {
      do {
        ys = f(ys);
        g = boost::multiprecision::gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    if (steps >= 400000) return std::nullopt;
  }
  return std::nullopt;
}

bool factor_big(const BigInt& n, std::map<BigInt, int>& out) {
  if (n == 1) return true;
  if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    factor_u64(static_cast<std::uint64_t>(n), out);
    return true;
  }
  if (boost::multiprecision::miller_rabin_test(n, 40)) {
    out[n]++;
    return true;
  }
  auto d = rho_big(n);
  if (!d) return false;
  return factor_big(*d, out) && factor_big(n / *d, out);
}

}  // namespace

std::optional<std::vector<std::pair<BigInt, int>>> factor(const BigInt& n) {
  if (n == 0) return std::nullopt;
  BigInt m = n < 0 ? BigInt(-n) : n;
  std::map<BigInt, int> acc;
  for (std::uint64_t p = 2; p < 1000; ++p) {
    if (!is_prime_u64(p)) continue;
    while (m % p == 0) {
      m /= p;
      acc[BigInt(p)]++;
    }
  }
  if (m > 1 && !factor_big(m, acc)) return std::nullopt;
  return std::vector<std::pair<BigInt, int>>(acc.begin(), acc.end());
}

std::optional<BigInt> squarefree_part(const BigInt& n) {
  auto f = factor(n);
  if (!f) return std::nullopt;
  BigInt r = 1;
  for (auto& [p, e] : *f) {
    if (e % 2) r *= p;
  }
  return n < 0 ? BigInt(-r) : r;
}

std::optional<BigInt> squarefree_class(const Rational& x) {
  // numerator and denominator separately: smaller numbers to factor
  auto a = squarefree_part(boost::multiprecision::numerator(x));
  auto b = squarefree_part(boost::multiprecision::denominator(x));
  if (!a || !b) return std::nullopt;
  BigInt g = boost::multiprecision::gcd(*a, *b);
  if (g < 0) g = -g;
  return (*a / g) * (*b / g);
}

BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

bool is_square_int(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  return r * r == n;
}

bool is_qr(const BigInt& a, const BigInt& p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (p == 2 || r == 0) return true;
  BigInt e = (p - 1) / 2;
  return boost::multiprecision::powm(r, e, p) == 1;
}

Tri legendre_isotropic(const Rational& a0, const Rational& b0, const Rational& c0) {
  if (a0 == 0 || b0 == 0 || c0 == 0) return Tri::Yes;
  std::array<BigInt, 3> v;
  {
    std::array<Rational, 3> r{a0, b0, c0};
    for (int i = 0; i < 3; ++i) {
      // scaling a single coefficient by a square keeps isotropy
      auto s = squarefree_class(r[i]);
      if (!s) return Tri::Unknown;
      v[i] = *s;
    }
  }
  for (int guard = 0; guard < 200; ++guard) {
    bool changed = false;
    for (int i = 0; i < 3 && !changed; ++i) {
      for (int j = i + 1; j < 3 && !changed; ++j) {
        BigInt g = boost::multiprecision::gcd(v[i], v[j]);
        if (g < 0) g = -g;
        if (g > 1) {
          int k = 3 - i - j;
          v[i] /= g;
          v[j] /= g;
          BigInt h = boost::multiprecision::gcd(v[k], g);
          if (h < 0) h = -h;
          v[k] = (v[k] / h) * (g / h);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  if ((v[0] > 0) == (v[1] > 0) && (v[1] > 0) == (v[2] > 0)) return Tri::No;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    BigInt target = -v[j] * v[k];
    auto f = factor(v[i]);
    if (!f) return Tri::Unknown;
    for (auto& [p, e] : *f) {
      if (p == 2) continue;
      if (!is_qr(target, p)) return Tri::No;
    }
  }
  return Tri::Yes;
}

Tri sum_of_two_squares(const Rational& x) {
  if (x == 0) return Tri::Yes;
  if (x < 0) return Tri::No;
  BigInt n = boost::multiprecision::numerator(x) * boost::multiprecision::denominator(x);
  auto f = factor(n);
  if (!f) return Tri::Unknown;
  for (auto& [p, e] : *f) {
    if (p % 4 == 3 && e % 2) return Tri::No;
  }
  return Tri::Yes;
}

}  // namespace nt
}  // namespace heis
