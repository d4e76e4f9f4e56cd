#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "heis/field.hpp"

namespace heis {

namespace gfdetail {

constexpr unsigned prime_of(unsigned q) {
  for (unsigned c = 2; c <= q; ++c) {
    if (q % c == 0) return c;
  }
  return 0;
}

constexpr unsigned degree_of(unsigned q) {
  unsigned p = prime_of(q), k = 0;
  while (q > 1) {
    q /= p;
    ++k;
  }
  return k;
}

struct SmallPoly {
  std::array<int, 9> c{};  // low degree first
  int deg = -1;
};

constexpr SmallPoly from_code(unsigned code, unsigned p, int len) {
  SmallPoly r;
  for (int i = 0; i < len; ++i) {
    r.c[i] = static_cast<int>(code % p);
    code /= p;
    if (r.c[i]) r.deg = i;
  }
  return r;
}

constexpr SmallPoly reduce(SmallPoly a, const SmallPoly& m, unsigned p) {
  // m monic
  while (a.deg >= m.deg) {
    int shift = a.deg - m.deg;
    int lc = a.c[a.deg];
    for (int i = 0; i <= m.deg; ++i) {
      a.c[i + shift] = static_cast<int>((a.c[i + shift] + (p - lc) * m.c[i]) % p);
    }
    a.deg = -1;
    for (int i = 8; i >= 0; --i) {
      if (a.c[i]) {
        a.deg = i;
        break;
      }
    }
  }
  return a;
}

constexpr bool irreducible(const SmallPoly& f, unsigned p) {
  for (int m = 1; m <= f.deg / 2; ++m) {
    unsigned count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      SmallPoly g = from_code(code, p, m);
      g.c[m] = 1;
      g.deg = m;
      if (reduce(f, g, p).deg < 0) return false;
    }
  }
  return true;
}

// Smallest monic irreducible by code order, matching the dynamic backend.
constexpr SmallPoly default_modulus(unsigned p, int k) {
  unsigned count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (unsigned code = 0; code < count; ++code) {
    SmallPoly f = from_code(code, p, k);
    f.c[k] = 1;
    f.deg = k;
    if (irreducible(f, p)) return f;
  }
  return {};
}

template <unsigned Q>
struct Tables {
  std::array<std::array<std::uint8_t, Q>, Q> add{}, mul{};
  std::array<std::uint8_t, Q> neg{}, inv{};
};

template <unsigned Q>
constexpr Tables<Q> make_tables() {
  constexpr unsigned p = prime_of(Q);
  constexpr int k = static_cast<int>(degree_of(Q));
  Tables<Q> t;
  SmallPoly m = default_modulus(p, k);
  auto to_code = [](const SmallPoly& a, int len) {
    unsigned code = 0;
    for (int i = len - 1; i >= 0; --i) code = code * p + static_cast<unsigned>(a.c[i]);
    return code;
  };
  for (unsigned a = 0; a < Q; ++a) {
    SmallPoly pa = from_code(a, p, k);
    for (unsigned b = 0; b < Q; ++b) {
      SmallPoly pb = from_code(b, p, k);
      SmallPoly s;
      for (int i = 0; i < k; ++i) {
        s.c[i] = static_cast<int>((pa.c[i] + pb.c[i]) % p);
      }
      t.add[a][b] = static_cast<std::uint8_t>(to_code(s, k));
      SmallPoly pr;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) pr.c[i + j] = static_cast<int>((pr.c[i + j] + pa.c[i] * pb.c[j]) % p);
      }
      for (int i = 8; i >= 0; --i) {
        if (pr.c[i]) {
          pr.deg = i;
          break;
        }
      }
      if (k > 1) pr = reduce(pr, m, p);
      else {
        pr.c[0] %= static_cast<int>(p);
      }
      t.mul[a][b] = static_cast<std::uint8_t>(to_code(pr, k));
    }
  }
  for (unsigned a = 0; a < Q; ++a) {
    for (unsigned b = 0; b < Q; ++b) {
      if (t.add[a][b] == 0) t.neg[a] = static_cast<std::uint8_t>(b);
      if (t.mul[a][b] == 1) t.inv[a] = static_cast<std::uint8_t>(b);
    }
  }
  return t;
}

}  // namespace gfdetail

// GF(Q) with table arithmetic. Codes agree with make_field("gf:Q").
template <unsigned Q>
class GF {
  static_assert(Q >= 2 && Q <= 16, "table field too large");
  static constexpr gfdetail::Tables<Q> T = gfdetail::make_tables<Q>();

 public:
  static constexpr unsigned order = Q;
  static constexpr unsigned characteristic = gfdetail::prime_of(Q);

  constexpr GF() = default;
  constexpr explicit GF(unsigned code) : v_(static_cast<std::uint8_t>(code)) {}

  constexpr unsigned code() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_one() const { return v_ == 1; }
  constexpr GF inv() const { return GF(T.inv[v_]); }

  friend constexpr GF operator+(GF a, GF b) { return GF(T.add[a.v_][b.v_]); }
  friend constexpr GF operator-(GF a, GF b) { return GF(T.add[a.v_][T.neg[b.v_]]); }
  friend constexpr GF operator*(GF a, GF b) { return GF(T.mul[a.v_][b.v_]); }
  friend constexpr GF operator/(GF a, GF b) { return a * b.inv(); }
  friend constexpr GF operator-(GF a) { return GF(T.neg[a.v_]); }
  friend constexpr bool operator==(GF a, GF b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(GF a, GF b) { return a.v_ != b.v_; }
  GF& operator+=(GF o) { return *this = *this + o; }
  GF& operator-=(GF o) { return *this = *this - o; }
  GF& operator*=(GF o) { return *this = *this * o; }

  std::string str() const { return make_field("gf:" + std::to_string(Q)).element(v_).str(); }
  Elem to_elem() const { return make_field("gf:" + std::to_string(Q)).element(v_); }
  static GF from_elem(const Elem& e) { return GF(static_cast<unsigned>(field_of(e).code(e))); }

 private:
  std::uint8_t v_ = 0;
};

// Uniform access to scalars in templated code.
inline Elem zero_like(const Elem& s) { return field_of(s).zero(); }
inline Elem one_like(const Elem& s) { return field_of(s).one(); }
inline std::uint64_t scalar_code(const Elem& s) { return field_of(s).code(s); }
inline Elem scalar_from_code(const Elem& sample, std::uint64_t c) { return field_of(sample).element(c); }
inline std::uint64_t scalar_order(const Elem& s) { return field_of(s).order(); }
inline std::string scalar_str(const Elem& s) { return s.str(); }

template <unsigned Q>
constexpr GF<Q> zero_like(const GF<Q>&) {
  return GF<Q>(0);
}
template <unsigned Q>
constexpr GF<Q> one_like(const GF<Q>&) {
  return GF<Q>(1);
}
template <unsigned Q>
constexpr std::uint64_t scalar_code(const GF<Q>& s) {
  return s.code();
}
template <unsigned Q>
constexpr GF<Q> scalar_from_code(const GF<Q>&, std::uint64_t c) {
  return GF<Q>(static_cast<unsigned>(c));
}
template <unsigned Q>
constexpr std::uint64_t scalar_order(const GF<Q>&) {
  return Q;
}
template <unsigned Q>
std::string scalar_str(const GF<Q>& s) {
  return s.str();
}

}  // namespace heis
