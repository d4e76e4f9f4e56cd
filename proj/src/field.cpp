#include "heis/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace heis {

namespace {

using u64 = std::uint64_t;

// ---- polynomials over GF(p) ------------------------------------------

struct PolyOps {
  u64 p;

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
  u64 inv(u64 a) const { return nt::powmod(a, p - 2, p); }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
      r[i] = static_cast<std::uint32_t>((x + y) % p);
    }
    trim(r);
    return r;
  }
  Poly neg(const Poly& a) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? static_cast<std::uint32_t>(p - a[i]) : 0;
    return r;
  }
  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }
  Poly scale(const Poly& a, u64 c) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint32_t>(a[i] * c % p);
    trim(r);
    return r;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
    }
    Poly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    trim(r);
    return r;
  }
  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    if (b.empty()) throw FieldError("polynomial division by zero");
    Poly q;
    int db = deg(b);
    u64 li = inv(b.back());
    if (deg(a) >= db) q.assign(deg(a) - db + 1, 0);
    while (deg(a) >= db) {
      int shift = deg(a) - db;
      u64 c = a.back() * li % p;
      q[shift] = static_cast<std::uint32_t>(c);
      for (int i = 0; i <= db; ++i) {
        a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - c * b[i] % p) % p);
      }
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  Poly monic(const Poly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }
  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  bool is_square(const Poly& a) const;
  std::optional<Poly> sqrt(const Poly& a) const;
};

std::optional<Poly> PolyOps::sqrt(const Poly& a) const {
  if (a.empty()) return Poly{};
  if (p == 2) {
    Poly r;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i % 2 == 1 && a[i]) return std::nullopt;
    }
    for (std::size_t i = 0; i < a.size(); i += 2) r.push_back(a[i]);
    trim(r);
    return r;
  }
  int n = deg(a);
  if (n % 2) return std::nullopt;
  u64 lc = a.back();
  // square root of the leading coefficient in GF(p)
  u64 s = p;
  for (u64 c = 0; c < p && c < 1000000; ++c) {
    if (c * c % p == lc) {
      s = c;
      break;
    }
  }
  if (s == p) {
    if (nt::powmod(lc, (p - 1) / 2, p) != 1) return std::nullopt;
    throw FieldError("square root in large prime field not supported");
  }
  Poly m = monic(a);
  int half = n / 2;
  Poly h(half + 1, 0);
  h[half] = 1;
  u64 inv2 = inv(2);
  for (int k = half - 1; k >= 0; --k) {
    // coefficient of t^(half+k) in h^2
    u64 acc = 0;
    for (int i = k + 1; i <= half; ++i) {
      int j = half + k - i;
      if (j > k && j <= half) acc = (acc + static_cast<u64>(h[i]) * h[j]) % p;
    }
    u64 target = m[half + k];
    h[k] = static_cast<std::uint32_t>((target + p - acc) % p * inv2 % p);
  }
  trim(h);
  if (mul(h, h) != m) return std::nullopt;
  return scale(h, s);
}

bool PolyOps::is_square(const Poly& a) const { return sqrt(a).has_value(); }

std::string poly_str(const Poly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (!a[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(a[i]);
      continue;
    }
    if (a[i] != 1) out += std::to_string(a[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-' || s[i] == '/') return true;
  }
  return false;
}

// ---- Q ----------------------------------------------------------------

class RationalField final : public FieldImpl {
 public:
  RationalField() { spec_ = "q"; }
  FieldKind kind() const override { return FieldKind::Rationals; }
  u64 characteristic() const override { return 0; }
  bool is_finite() const override { return false; }
  bool is_perfect() const override { return true; }
  Elem zero() const override { return make(Rational(0)); }
  Elem one() const override { return make(Rational(1)); }
  Elem from_bigint(const BigInt& n) const override { return make(Rational(n)); }
  Elem add(const Elem& a, const Elem& b) const override { return make(r(a) + r(b)); }
  Elem sub(const Elem& a, const Elem& b) const override { return make(r(a) - r(b)); }
  Elem mul(const Elem& a, const Elem& b) const override { return make(r(a) * r(b)); }
  Elem neg(const Elem& a) const override { return make(-r(a)); }
  Elem inv(const Elem& a) const override {
    if (r(a) == 0) throw FieldError("division by zero");
    return make(1 / r(a));
  }
  bool is_zero(const Elem& a) const override { return r(a) == 0; }
  std::string str(const Elem& a) const override {
    const Rational& x = r(a);
    BigInt n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
  }
  Tri is_square(const Elem& a) const override {
    const Rational& x = r(a);
    if (x == 0) return Tri::Yes;
    if (x < 0) return Tri::No;
    return tri(nt::is_square_int(boost::multiprecision::numerator(x) * boost::multiprecision::denominator(x)));
  }
  std::optional<Elem> sqrt(const Elem& a) const override {
    const Rational& x = r(a);
    if (x < 0) return std::nullopt;
    BigInt n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    BigInt sn = nt::isqrt(n), sd = nt::isqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return make(Rational(sn, sd));
  }

 private:
  Elem make(Rational x) const { return Elem(this, std::move(x)); }
  static const Rational& r(const Elem& a) { return std::get<Rational>(a.rep()); }
};

// ---- GF(p^k) ----------------------------------------------------------

class FiniteField final : public FieldImpl {
 public:
  FiniteField(u64 p, int k, Poly modulus, bool is_default) : p_(p), k_(k), mod_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (k == 1) {
      spec_ = "gf:" + std::to_string(p);
    } else {
      spec_ = "gf:" + std::to_string(p) + "^" + std::to_string(k);
      if (!is_default) {
        spec_ += ":";
        for (std::size_t i = 0; i < mod_.size(); ++i) spec_ += (i ? "," : "") + std::to_string(mod_[i]);
      }
      build_tables();
    }
  }

  FieldKind kind() const override { return k_ == 1 ? FieldKind::Prime : FieldKind::Extension; }
  u64 characteristic() const override { return p_; }
  bool is_finite() const override { return true; }
  u64 order() const override { return q_; }
  bool is_perfect() const override { return true; }
  int degree() const { return k_; }
  const Poly& modulus() const { return mod_; }

  Elem zero() const override { return make(0); }
  Elem one() const override { return make(1); }
  Elem from_bigint(const BigInt& n) const override {
    BigInt m = n % p_;
    if (m < 0) m += p_;
    return make(static_cast<u64>(m));
  }
  Elem add(const Elem& a, const Elem& b) const override { return make(add_c(c(a), c(b))); }
  Elem sub(const Elem& a, const Elem& b) const override { return make(add_c(c(a), neg_c(c(b)))); }
  Elem neg(const Elem& a) const override { return make(neg_c(c(a))); }
  Elem mul(const Elem& a, const Elem& b) const override {
    u64 x = c(a), y = c(b);
    if (k_ == 1) return make(nt::mulmod(x, y, p_));
    if (!x || !y) return make(0);
    return make(exp_[(static_cast<u64>(log_[x]) + log_[y]) % (q_ - 1)]);
  }
  Elem inv(const Elem& a) const override {
    u64 x = c(a);
    if (!x) throw FieldError("division by zero");
    if (k_ == 1) return make(nt::powmod(x, p_ - 2, p_));
    return make(exp_[(q_ - 1 - log_[x]) % (q_ - 1)]);
  }
  bool is_zero(const Elem& a) const override { return c(a) == 0; }
  std::string str(const Elem& a) const override {
    if (k_ == 1) return std::to_string(c(a));
    return poly_str(to_poly(c(a)), "x");
  }
  std::vector<std::pair<std::string, Elem>> symbols() const override {
    if (k_ == 1) return {};
    return {{"x", make(p_)}};
  }
  Elem element(u64 code) const override {
    if (code >= q_) throw FieldError("element code out of range");
    return make(code);
  }
  u64 code(const Elem& a) const override { return c(a); }

  Poly to_poly(u64 code) const {
    Poly r;
    for (int i = 0; i < k_; ++i) {
      r.push_back(static_cast<std::uint32_t>(code % p_));
      code /= p_;
    }
    PolyOps::trim(r);
    return r;
  }
  u64 from_poly(const Poly& a) const {
    u64 code = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) code = code * p_ + a[i];
    return code;
  }

 private:
  Elem make(u64 v) const { return Elem(this, v); }
  static u64 c(const Elem& a) { return std::get<u64>(a.rep()); }

  u64 add_c(u64 x, u64 y) const {
    if (k_ == 1) {
      u64 s = x + y;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return x ^ y;
    u64 r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
      r += ((x % p_ + y % p_) % p_) * mult;
      x /= p_;
      y /= p_;
      mult *= p_;
    }
    return r;
  }
  u64 neg_c(u64 x) const {
    if (k_ == 1) return x ? p_ - x : 0;
    if (p_ == 2) return x;
    u64 r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
      r += ((p_ - x % p_) % p_) * mult;
      x /= p_;
      mult *= p_;
    }
    return r;
  }

  void build_tables() {
    PolyOps ops{p_};
    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    for (u64 g = p_; g < q_; ++g) {
      Poly gp = to_poly(g);
      Poly cur{1};
      u64 ord = 0;
      bool ok = true;
      std::vector<bool> seen(q_, false);
      for (u64 i = 0; i < q_ - 1; ++i) {
        u64 cc = from_poly(cur);
        if (seen[cc]) {
          ok = false;
          break;
        }
        seen[cc] = true;
        exp_[i] = static_cast<std::uint32_t>(cc);
        log_[cc] = static_cast<std::uint32_t>(i);
        cur = ops.divmod(ops.mul(cur, gp), mod_).second;
        ++ord;
      }
      if (ok && from_poly(cur) == 1) return;
    }
    throw FieldError("no primitive element found (modulus reducible?)");
  }

  u64 p_;
  int k_;
  Poly mod_;
  u64 q_ = 0;
  std::vector<std::uint32_t> exp_, log_;
};

bool poly_irreducible(const Poly& f, u64 p) {
  PolyOps ops{p};
  int k = PolyOps::deg(f);
  if (k <= 0) return false;
  for (int m = 1; m <= k / 2; ++m) {
    u64 count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (u64 code = 0; code < count; ++code) {
      Poly g(m + 1, 0);
      u64 cc = code;
      for (int i = 0; i < m; ++i) {
        g[i] = static_cast<std::uint32_t>(cc % p);
        cc /= p;
      }
      g[m] = 1;
      if (ops.divmod(f, g).second.empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(u64 p, int k) {
  u64 count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (u64 code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    u64 cc = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(cc % p);
      cc /= p;
    }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

// ---- GF(p)(t) ---------------------------------------------------------

class FunctionField final : public FieldImpl {
 public:
  explicit FunctionField(u64 p) : ops_{p} { spec_ = "fp_t:" + std::to_string(p); }
  FieldKind kind() const override { return FieldKind::FunctionField; }
  u64 characteristic() const override { return ops_.p; }
  bool is_finite() const override { return false; }
  bool is_perfect() const override { return false; }
  Elem zero() const override { return make({}, {1}); }
  Elem one() const override { return make({1}, {1}); }
  Elem from_bigint(const BigInt& n) const override {
    BigInt m = n % ops_.p;
    if (m < 0) m += ops_.p;
    Poly a{static_cast<std::uint32_t>(m)};
    PolyOps::trim(a);
    return make(a, {1});
  }
  Elem add(const Elem& a, const Elem& b) const override {
    const RatFunc &x = f(a), &y = f(b);
    if (x.den == y.den) return make(ops_.add(x.num, y.num), x.den);
    return make(ops_.add(ops_.mul(x.num, y.den), ops_.mul(y.num, x.den)), ops_.mul(x.den, y.den));
  }
  Elem sub(const Elem& a, const Elem& b) const override { return add(a, neg(b)); }
  Elem neg(const Elem& a) const override { return Elem(this, RatFunc{ops_.neg(f(a).num), f(a).den}); }
  Elem mul(const Elem& a, const Elem& b) const override {
    const RatFunc &x = f(a), &y = f(b);
    return make(ops_.mul(x.num, y.num), ops_.mul(x.den, y.den));
  }
  Elem inv(const Elem& a) const override {
    if (f(a).num.empty()) throw FieldError("division by zero");
    return make(f(a).den, f(a).num);
  }
  bool is_zero(const Elem& a) const override { return f(a).num.empty(); }
  std::string str(const Elem& a) const override {
    const RatFunc& x = f(a);
    std::string n = poly_str(x.num, "t");
    if (x.den == Poly{1}) return n;
    std::string d = poly_str(x.den, "t");
    if (needs_parens(n) || n.find('*') != std::string::npos) n = "(" + n + ")";
    if (needs_parens(d) || d.find('*') != std::string::npos || d.find('^') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }
  std::vector<std::pair<std::string, Elem>> symbols() const override { return {{"t", make({0, 1}, {1})}}; }

  Tri is_square(const Elem& a) const override {
    const RatFunc& x = f(a);
    if (x.num.empty()) return Tri::Yes;
    return tri(ops_.is_square(ops_.mul(x.num, x.den)));
  }
  std::optional<Elem> sqrt(const Elem& a) const override {
    const RatFunc& x = f(a);
    auto s = ops_.sqrt(ops_.mul(x.num, x.den));
    if (!s) return std::nullopt;
    return make(*s, x.den);
  }

  const PolyOps& ops() const { return ops_; }
  static const RatFunc& f(const Elem& a) { return std::get<RatFunc>(a.rep()); }

 private:
  Elem make(Poly num, Poly den) const {
    PolyOps::trim(num);
    PolyOps::trim(den);
    if (den.empty()) throw FieldError("division by zero");
    if (num.empty()) return Elem(this, RatFunc{{}, {1}});
    Poly g = ops_.gcd(num, den);
    if (g != Poly{1}) {
      num = ops_.divmod(num, g).first;
      den = ops_.divmod(den, g).first;
    }
    u64 li = ops_.inv(den.back());
    return Elem(this, RatFunc{ops_.scale(num, li), ops_.scale(den, li)});
  }

  PolyOps ops_;
};

// ---- L = K[u]/(u^2 + t u + d) -----------------------------------------

class QuadField final : public FieldImpl {
 public:
  QuadField(Field base, Elem t, Elem d) : base_(base), t_(std::move(t)), d_(std::move(d)) {
    spec_ = "quad:" + base_.spec() + ":" + t_.str() + "," + d_.str();
  }
  FieldKind kind() const override { return FieldKind::Quadratic; }
  u64 characteristic() const override { return base_.characteristic(); }
  bool is_finite() const override { return base_.is_finite(); }
  u64 order() const override { return base_.is_finite() ? base_.order() * base_.order() : 0; }
  bool is_perfect() const override { return base_.is_perfect(); }
  Elem zero() const override { return make(base_.zero(), base_.zero()); }
  Elem one() const override { return make(base_.one(), base_.zero()); }
  Elem from_bigint(const BigInt& n) const override { return make(base_.from_bigint(n), base_.zero()); }
  Elem add(const Elem& a, const Elem& b) const override { return make(q(a).a + q(b).a, q(a).b + q(b).b); }
  Elem sub(const Elem& a, const Elem& b) const override { return make(q(a).a - q(b).a, q(a).b - q(b).b); }
  Elem neg(const Elem& a) const override { return make(-q(a).a, -q(a).b); }
  Elem mul(const Elem& a, const Elem& b) const override {
    const QuadVal &x = q(a), &y = q(b);
    // u^2 = -t u - d
    Elem bb = x.b * y.b;
    return make(x.a * y.a - d_ * bb, x.a * y.b + x.b * y.a - t_ * bb);
  }
  Elem conj(const Elem& a) const { return make(q(a).a + t_ * q(a).b, -q(a).b); }
  Elem norm(const Elem& a) const {
    const QuadVal& x = q(a);
    return x.a * x.a + t_ * x.a * x.b + d_ * x.b * x.b;
  }
  Elem inv(const Elem& a) const override {
    Elem n = norm(a);
    if (n.is_zero()) throw FieldError("division by zero");
    Elem ni = n.inv();
    const QuadVal& c = q(conj(a));
    return make(c.a * ni, c.b * ni);
  }
  bool is_zero(const Elem& a) const override { return q(a).a.is_zero() && q(a).b.is_zero(); }
  std::string str(const Elem& a) const override {
    const QuadVal& x = q(a);
    if (x.b.is_zero()) return x.a.str();
    std::string bs;
    if (x.b.is_one()) {
      bs = "u";
    } else {
      std::string s = x.b.str();
      bs = (needs_parens(s) ? "(" + s + ")" : s) + "*u";
    }
    if (x.a.is_zero()) return bs;
    std::string as = x.a.str();
    if (needs_parens(as)) as = "(" + as + ")";
    return as + (bs[0] == '-' ? "" : "+") + bs;
  }
  std::vector<std::pair<std::string, Elem>> symbols() const override {
    std::vector<std::pair<std::string, Elem>> out{{"u", make(base_.zero(), base_.one())}};
    for (auto& [name, e] : base_.impl()->symbols()) out.push_back({name, make(e, base_.zero())});
    return out;
  }
  Elem element(u64 code) const override {
    u64 qb = base_.order();
    return make(base_.element(code % qb), base_.element(code / qb));
  }
  u64 code(const Elem& a) const override { return base_.code(q(a).a) + base_.order() * base_.code(q(a).b); }

  Tri is_square(const Elem& a) const override {
    if (is_finite()) return FieldImpl::is_square(a);
    if (characteristic() == 2) return Tri::Unknown;
    return sqrt_tri(a).first;
  }
  std::optional<Elem> sqrt(const Elem& a) const override {
    if (is_finite()) return FieldImpl::sqrt(a);
    if (characteristic() == 2) return std::nullopt;
    return sqrt_tri(a).second;
  }

  Field base() const { return base_; }
  const Elem& t() const { return t_; }
  const Elem& d() const { return d_; }
  Elem make(Elem a, Elem b) const { return Elem(this, std::make_shared<const QuadVal>(QuadVal{std::move(a), std::move(b)})); }
  static const QuadVal& q(const Elem& a) { return *std::get<std::shared_ptr<const QuadVal>>(a.rep()); }

 private:
  // char != 2, t = 0: (x + y u)^2 = x^2 - d y^2 + 2xy u
  std::pair<Tri, std::optional<Elem>> sqrt_tri(const Elem& a) const {
    const QuadVal& z = q(a);
    Elem two = base_.from_int(2);
    if (z.b.is_zero()) {
      auto r = heis::sqrt_of(z.a);
      if (r) return {Tri::Yes, make(*r, base_.zero())};
      auto s = heis::sqrt_of(-z.a / d_);  // (y u)^2 = -d y^2
      if (s) return {Tri::Yes, make(base_.zero(), *s)};
      if (is_square_base(z.a) == Tri::Unknown) return {Tri::Unknown, std::nullopt};
      return {Tri::No, std::nullopt};
    }
    Elem n = norm(a);
    auto sn = heis::sqrt_of(n);
    if (!sn) return {heis::is_square(n) == Tri::Unknown ? Tri::Unknown : Tri::No, std::nullopt};
    for (const Elem& s : {*sn, -*sn}) {
      Elem x2 = (z.a + s) / two;
      auto x = heis::sqrt_of(x2);
      if (x && !x->is_zero()) {
        Elem y = z.b / (two * *x);
        return {Tri::Yes, make(*x, y)};
      }
    }
    return {Tri::No, std::nullopt};
  }
  static Tri is_square_base(const Elem& a) { return heis::is_square(a); }

  Field base_;
  Elem t_, d_;
};

// ---- expression parser --------------------------------------------------

class Parser {
 public:
  Parser(const FieldImpl* f, std::string s) : f_(f), s_(std::move(s)) { syms_ = f->symbols(); }

  Elem run() {
    Elem e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw FieldError("cannot parse scalar '" + s_ + "' over " + f_->spec() + ": " + why);
  }
  Elem expr() {
    Elem acc = term();
    for (;;) {
      if (eat('+')) {
        acc = f_->add(acc, term());
      } else if (eat('-')) {
        acc = f_->sub(acc, term());
      } else {
        return acc;
      }
    }
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }
  Elem term() {
    Elem acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = f_->mul(acc, unary());
      } else if (eat('/')) {
        acc = f_->mul(acc, f_->inv(unary()));
      } else if (starts_factor()) {
        acc = f_->mul(acc, power());  // implicit product, e.g. 2x
      } else {
        return acc;
      }
    }
  }
  Elem unary() {
    if (eat('-')) return f_->neg(unary());
    if (eat('+')) return unary();
    return power();
  }
  Elem power() {
    Elem base = atom();
    if (eat('^')) {
      bool negative = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      long long e = std::stoll(s_.substr(start, pos_ - start));
      Elem r = f_->pow(base, BigInt(e));
      return negative ? f_->inv(r) : r;
    }
    return base;
  }
  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return f_->from_bigint(BigInt(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (auto& [n, e] : syms_) {
        if (n == name) return e;
      }
      fail("unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const FieldImpl* f_;
  std::string s_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, Elem>> syms_;
};

// ---- registry -----------------------------------------------------------

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, std::unique_ptr<FieldImpl>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldImpl>> r;
  return r;
}
std::map<std::string, const FieldImpl*>& aliases() {
  static std::map<std::string, const FieldImpl*> a;
  return a;
}

const FieldImpl* intern(std::unique_ptr<FieldImpl> f) {
  auto& reg = registry();
  auto it = reg.find(f->spec());
  if (it != reg.end()) return it->second.get();
  const FieldImpl* raw = f.get();
  reg.emplace(f->spec(), std::move(f));
  return raw;
}

u64 parse_u64(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw FieldError("malformed field spec '" + spec + "'");
  }
  return std::stoull(s);
}

std::string trim_copy(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Tri irreducible_quadratic(const Field& base, const Elem& t, const Elem& d) {
  if (base.is_finite()) {
    if (base.order() > (1u << 20)) throw FieldError("base field too large for root search");
    for (u64 c = 0; c < base.order(); ++c) {
      Elem x = base.element(c);
      if ((x * x + t * x + d).is_zero()) return Tri::No;
    }
    return Tri::Yes;
  }
  if (t.is_zero()) {
    Tri sq = is_square(-d);
    if (sq == Tri::Unknown) return Tri::Unknown;
    return sq == Tri::Yes ? Tri::No : Tri::Yes;
  }
  Tri w = wp_member(d / (t * t));
  if (w == Tri::Unknown) return Tri::Unknown;
  return w == Tri::Yes ? Tri::No : Tri::Yes;
}

const FieldImpl* build(const std::string& raw);

const FieldImpl* build_locked(const std::string& raw) {
  auto& al = aliases();
  auto it = al.find(raw);
  if (it != al.end()) return it->second;
  const FieldImpl* f = build(raw);
  al[raw] = f;
  return f;
}

const FieldImpl* build(const std::string& raw) {
  std::string spec = trim_copy(raw);
  if (spec == "q" || spec == "Q") return intern(std::make_unique<RationalField>());
  if (spec.rfind("gf:", 0) == 0) {
    std::string rest = spec.substr(3);
    std::string mod_text;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      mod_text = rest.substr(colon + 1);
      rest = rest.substr(0, colon);
    }
    u64 p = 0;
    int k = 1;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      p = parse_u64(rest.substr(0, caret), spec);
      k = static_cast<int>(parse_u64(rest.substr(caret + 1), spec));
    } else {
      u64 q = parse_u64(rest, spec);
      // accept prime powers written out, e.g. gf:4
      for (u64 c = 2; c <= q; ++c) {
        if (q % c == 0) {
          p = c;
          break;
        }
      }
      if (p < 2) throw FieldError("malformed field spec '" + spec + "'");
      u64 m = q;
      k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      if (m != 1) throw FieldError("field order " + std::to_string(q) + " is not a prime power");
    }
    if (p > 0xffffffffull || !nt::is_prime_u64(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw FieldError("extension degree must be positive");
    if (k == 1) {
      if (!mod_text.empty()) throw FieldError("modulus given for a prime field");
      return intern(std::make_unique<FiniteField>(p, 1, Poly{0, 1}, true));
    }
    double approx = 1;
    for (int i = 0; i < k; ++i) approx *= static_cast<double>(p);
    if (approx > static_cast<double>(1u << 20)) throw FieldError("extension field larger than 2^20 not supported");
    Poly def = default_modulus(p, k);
    Poly mod = def;
    if (!mod_text.empty()) {
      mod.clear();
      std::stringstream ss(mod_text);
      std::string item;
      while (std::getline(ss, item, ',')) mod.push_back(static_cast<std::uint32_t>(parse_u64(trim_copy(item), spec) % p));
      if (static_cast<int>(mod.size()) == k) mod.push_back(1);
      if (static_cast<int>(mod.size()) != k + 1 || mod.back() != 1) {
        throw FieldError("modulus must be monic of degree " + std::to_string(k));
      }
      if (!poly_irreducible(mod, p)) throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    return intern(std::make_unique<FiniteField>(p, k, mod, mod == def));
  }
  if (spec.rfind("fp_t:", 0) == 0) {
    u64 p = parse_u64(spec.substr(5), spec);
    if (p > 0x7fffffffull || !nt::is_prime_u64(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
    return intern(std::make_unique<FunctionField>(p));
  }
  if (spec.rfind("quad:", 0) == 0) {
    std::string rest = spec.substr(5);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw FieldError("malformed field spec '" + spec + "'");
    std::string params = rest.substr(colon + 1);
    auto comma = params.find(',');
    if (comma == std::string::npos) throw FieldError("quad spec needs <t>,<d>");
    Field base(build_locked(rest.substr(0, colon)));
    Elem t = base.parse(params.substr(0, comma));
    Elem d = base.parse(params.substr(comma + 1));
    if (!(t + t).is_zero()) throw FieldError("quad extension requires 2t = 0");
    if (d.is_zero()) throw FieldError("X^2+tX+d with d = 0 is reducible");
    Tri irr = irreducible_quadratic(base, t, d);
    if (irr == Tri::No) throw FieldError("X^2+tX+d is reducible over " + base.spec());
    if (irr == Tri::Unknown) throw FieldError("irreducibility of X^2+tX+d over " + base.spec() + " is undecided");
    return intern(std::make_unique<QuadField>(base, t, d));
  }
  throw FieldError("malformed field spec '" + spec + "'");
}

}  // namespace

// ---- Elem ---------------------------------------------------------------

namespace {
const FieldImpl* common(const Elem& a, const Elem& b) {
  if (!a.field() || a.field() != b.field()) throw FieldError("mixed or uninitialized field elements");
  return a.field();
}
const FieldImpl* own(const Elem& a) {
  if (!a.field()) throw FieldError("uninitialized field element");
  return a.field();
}
}  // namespace

bool Elem::is_zero() const { return own(*this)->is_zero(*this); }
bool Elem::is_one() const { return *this == own(*this)->one(); }
Elem Elem::inv() const { return own(*this)->inv(*this); }
Elem Elem::pow(long long e) const {
  Elem r = own(*this)->pow(*this, BigInt(e < 0 ? -e : e));
  return e < 0 ? r.inv() : r;
}
std::string Elem::str() const { return f_ ? f_->str(*this) : "<null>"; }

Elem& Elem::operator+=(const Elem& o) { return *this = *this + o; }
Elem& Elem::operator-=(const Elem& o) { return *this = *this - o; }
Elem& Elem::operator*=(const Elem& o) { return *this = *this * o; }

Elem operator+(const Elem& a, const Elem& b) { return common(a, b)->add(a, b); }
Elem operator-(const Elem& a, const Elem& b) { return common(a, b)->sub(a, b); }
Elem operator*(const Elem& a, const Elem& b) { return common(a, b)->mul(a, b); }
Elem operator/(const Elem& a, const Elem& b) { return common(a, b)->mul(a, b.inv()); }
Elem operator-(const Elem& a) { return own(a)->neg(a); }

bool operator==(const Elem& a, const Elem& b) {
  if (a.field() != b.field()) return false;
  if (!a.field()) return true;
  if (a.field()->kind() == FieldKind::Quadratic) {
    auto& x = *std::get<std::shared_ptr<const QuadVal>>(a.rep());
    auto& y = *std::get<std::shared_ptr<const QuadVal>>(b.rep());
    return x.a == y.a && x.b == y.b;
  }
  return a.rep() == b.rep();
}

std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.str(); }

// ---- FieldImpl defaults -------------------------------------------------

Elem FieldImpl::element(std::uint64_t) const { throw FieldError("element enumeration needs a finite field"); }
std::uint64_t FieldImpl::code(const Elem&) const { throw FieldError("element codes need a finite field"); }

Elem FieldImpl::pow(const Elem& a, BigInt e) const {
  Elem r = one(), b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Tri FieldImpl::is_square(const Elem& a) const {
  if (!is_finite()) return Tri::Unknown;
  if (is_zero(a) || characteristic() == 2) return Tri::Yes;
  return tri(pow(a, BigInt((order() - 1) / 2)) == one());
}

std::optional<Elem> FieldImpl::sqrt(const Elem& a) const {
  if (!is_finite()) return std::nullopt;
  if (is_zero(a)) return a;
  std::uint64_t q = order();
  if (characteristic() == 2) return pow(a, BigInt(q / 2));
  if (is_square(a) != Tri::Yes) return std::nullopt;
  // Tonelli-Shanks
  std::uint64_t m = q - 1;
  int s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  Elem z = least_nonsquare(Field(this));
  Elem c = pow(z, BigInt(m));
  Elem x = pow(a, BigInt((m + 1) / 2));
  Elem t = pow(a, BigInt(m));
  int r = s;
  while (!(t == one())) {
    int i = 0;
    Elem tt = t;
    while (!(tt == one())) {
      tt = mul(tt, tt);
      ++i;
    }
    Elem b = c;
    for (int j = 0; j < r - i - 1; ++j) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    t = mul(t, c);
    r = i;
  }
  return x;
}

// ---- Field handle ---------------------------------------------------------

namespace {
const FieldImpl* req(const FieldImpl* f) {
  if (!f) throw FieldError("uninitialized field");
  return f;
}
}  // namespace

const std::string& Field::spec() const { return req(f_)->spec(); }
FieldKind Field::kind() const { return req(f_)->kind(); }
std::uint64_t Field::characteristic() const { return req(f_)->characteristic(); }
bool Field::is_finite() const { return req(f_)->is_finite(); }
std::uint64_t Field::order() const { return req(f_)->order(); }
bool Field::is_perfect() const { return req(f_)->is_perfect(); }
Elem Field::zero() const { return req(f_)->zero(); }
Elem Field::one() const { return req(f_)->one(); }
Elem Field::from_int(long long n) const { return req(f_)->from_bigint(BigInt(n)); }
Elem Field::from_bigint(const BigInt& n) const { return req(f_)->from_bigint(n); }
Elem Field::parse(const std::string& s) const { return Parser(req(f_), s).run(); }
Elem Field::element(std::uint64_t code) const { return req(f_)->element(code); }
std::uint64_t Field::code(const Elem& e) const { return req(f_)->code(e); }
std::vector<Elem> Field::elements() const {
  if (!is_finite() || order() > (1u << 20)) throw FieldError("element enumeration needs a small finite field");
  std::vector<Elem> out;
  out.reserve(order());
  for (std::uint64_t c = 0; c < order(); ++c) out.push_back(element(c));
  return out;
}

Field field_of(const Elem& e) { return Field(own(e)); }

Field make_field(const std::string& spec) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  return Field(build_locked(spec));
}

// ---- invariants ---------------------------------------------------------

Tri is_square(const Elem& x) { return own(x)->is_square(x); }
std::optional<Elem> sqrt_of(const Elem& x) { return own(x)->sqrt(x); }

Tri same_square_class(const Elem& x, const Elem& y) {
  if (x.is_zero() || y.is_zero()) return tri(x.is_zero() && y.is_zero());
  return is_square(x * y);
}

int abs_trace(const Elem& x) {
  const FieldImpl* f = own(x);
  if (!f->is_finite() || f->characteristic() != 2) throw FieldError("absolute trace needs a finite field of characteristic 2");
  std::uint64_t q = f->order();
  Elem acc = f->zero(), y = x;
  for (std::uint64_t m = 1; m < q; m *= 2) {
    acc = acc + y;
    y = y * y;
  }
  if (acc.is_zero()) return 0;
  if (acc == f->one()) return 1;
  throw FieldError("absolute trace left the prime field");
}

Tri wp_member(const Elem& x) {
  const FieldImpl* f = own(x);
  if (f->characteristic() != 2) throw FieldError("the set {y+y^2} is only used in characteristic 2");
  if (f->is_finite()) return tri(abs_trace(x) == 0);
  if (f->kind() == FieldKind::FunctionField) {
    const RatFunc& r = FunctionField::f(x);
    if (r.den != Poly{1}) return Tri::Unknown;
    Poly p = r.num;
    while (!p.empty()) {
      int n = static_cast<int>(p.size()) - 1;
      if (n == 0 || n % 2 == 1) return Tri::No;
      int m = n / 2;
      p[n] ^= 1;
      p[m] ^= 1;
      PolyOps::trim(p);
    }
    return Tri::Yes;
  }
  return Tri::Unknown;
}

Tri same_wp_coset(const Elem& x, const Elem& y) { return wp_member(x - y); }

Elem least_nonsquare(const Field& f) {
  if (!f.is_finite() || f.characteristic() == 2) throw FieldError("non-squares need a finite field of odd order");
  for (std::uint64_t c = 2; c < f.order(); ++c) {
    Elem e = f.element(c);
    if (f.impl()->pow(e, BigInt((f.order() - 1) / 2)) != f.one()) return e;
  }
  throw FieldError("no non-square found");
}

namespace {

void verify_tiling(const Field& f, const FieldProfile& prof) {
  if (f.order() > (1u << 16)) return;
  auto elems = f.elements();
  for (std::size_t i = 1; i < elems.size(); ++i) {
    int hits = 0;
    for (auto& r : prof.square_classes.reps) hits += same_square_class(elems[i], r) == Tri::Yes;
    if (hits != 1) throw FieldError("square class representatives do not tile " + f.spec());
  }
  if (f.characteristic() == 2) {
    for (auto& x : elems) {
      int hits = 0;
      for (auto& r : prof.wp_cosets.reps) hits += same_wp_coset(x, r) == Tri::Yes;
      if (hits != 1) throw FieldError("wp coset representatives do not tile " + f.spec());
    }
    // K/K^2 is trivial for a perfect field, so R_+ is a single orbit.
    for (auto& x : elems) {
      if (!sqrt_of(x)) throw FieldError("finite field of characteristic 2 is not perfect?");
    }
  }
}

}  // namespace

FieldProfile profile(const Field& f) {
  FieldProfile p;
  p.field = f;
  p.characteristic = f.characteristic();
  p.is_perfect = f.is_perfect();
  p.is_finite = f.is_finite();
  p.order = f.order();
  if (f.is_finite()) {
    if (p.characteristic == 2) {
      p.square_classes.reps = {f.one()};
      p.wp_cosets.reps = {f.zero()};
      for (std::uint64_t c = 1; c < f.order(); ++c) {
        Elem e = f.element(c);
        if (abs_trace(e) == 1) {
          p.wp_cosets.reps.push_back(e);
          break;
        }
      }
      p.plus_orbits.reps = {f.zero()};
    } else {
      p.square_classes.reps = {f.one(), least_nonsquare(f)};
    }
    verify_tiling(f, p);
    return p;
  }
  auto infinite = [](std::string m) {
    RepSet r;
    r.finite = false;
    r.marker = std::move(m);
    return r;
  };
  if (f.kind() == FieldKind::Rationals) {
    p.square_classes = infinite("square-free integers");
  } else {
    p.square_classes = infinite("infinite; membership via same_square_class");
  }
  if (p.characteristic == 2) {
    p.wp_cosets = infinite("infinite; membership via same_wp_coset (polynomials only)");
    p.plus_orbits = infinite("infinite; field is not perfect");
  }
  return p;
}

Elem quad_element(const Field& l, const Elem& a, const Elem& b) {
  if (l.kind() != FieldKind::Quadratic) throw FieldError("not a quadratic extension");
  auto* q = static_cast<const QuadField*>(l.impl());
  if (a.field() != q->base().impl() || b.field() != q->base().impl()) throw FieldError("coefficients from the wrong field");
  return q->make(a, b);
}

std::optional<Elem> square_class_rep(const Elem& x) {
  if (x.is_zero()) return std::nullopt;
  Field f = field_of(x);
  if (f.kind() == FieldKind::Rationals) {
    auto s = nt::squarefree_class(std::get<Rational>(x.rep()));
    if (!s) return std::nullopt;
    return f.from_bigint(*s);
  }
  if (f.is_finite()) {
    if (f.characteristic() == 2) return f.one();
    if (is_square(x) == Tri::Yes) return f.one();
    return least_nonsquare(f);
  }
  return std::nullopt;
}

}  // namespace heis
