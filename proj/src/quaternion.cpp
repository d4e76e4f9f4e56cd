#include "heis/quaternion.hpp"

#include "heis/search.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace heis {

namespace {

Elem default_t(const Field& k) { return k.characteristic() == 2 ? k.one() : k.zero(); }

// Calls f on nonzero candidates until it returns true. Exhaustive when k is finite.
bool search_quats(const QuatAlgebra& h, int box, const std::function<bool(const Quat&)>& f) {
  return search_vectors(h.field(), 4, box, [&](const Vec<Elem>& v) { return f(h.from_vec(v)); });
}

const char* kSplitMessage =
    "split quaternion algebra: equal norm and trace do not imply conjugacy there "
    "(e.g. [[0,-1],[1,2]] and the identity in 2x2 matrices)";

void require_division(const QuatAlgebra& h) {
  if (h.commutative()) throw QuatError("commutative (inseparable) quaternion algebra: conjugacy solvers are disabled");
  SplitInfo s = h.is_split();
  if (s.split == Tri::Yes) throw SplitAlgebraError(kSplitMessage);
}

}  // namespace

QuatAlgebra::QuatAlgebra(const Field& k, const Elem& d, const Elem& c) : QuatAlgebra(k, d, c, default_t(k)) {}

QuatAlgebra::QuatAlgebra(const Field& k, const Elem& d, const Elem& c, const Elem& t) : k_(k), d_(d), c_(c), t_(t) {
  if (d.is_zero() || c.is_zero()) throw QuatError("quaternion parameters must be nonzero");
  if (!(t + t).is_zero()) throw QuatError("t must satisfy 2t = 0");
  build_table();
  check_associative();
}

QuatAlgebra QuatAlgebra::superscript(const Field& k, const Elem& a, const Elem& b) { return QuatAlgebra(k, -a, -b); }

Quat QuatAlgebra::basis(int i) const {
  Quat x = zero();
  x.c[i] = k_.one();
  return x;
}

void QuatAlgebra::build_table() {
  Elem z = k_.zero(), o = k_.one();
  auto q = [&](Elem a, Elem b, Elem c, Elem d) { return make(a, b, c, d); };
  for (int i = 0; i < 4; ++i) {
    table_[0][i] = basis(i);
    table_[i][0] = basis(i);
  }
  table_[1][1] = q(-d_, -t_, z, z);
  table_[1][2] = q(z, z, t_, -o);
  table_[2][1] = q(z, z, z, o);
  table_[2][2] = q(-c_, z, z, z);
  table_[1][3] = q(z, z, d_, z);
  table_[3][1] = q(z, z, -d_, -t_);
  table_[2][3] = q(z, -c_, z, z);
  table_[3][2] = q(-t_ * c_, c_, z, z);
  table_[3][3] = q(-c_ * d_, z, z, z);
}

void QuatAlgebra::check_associative() const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k)))) {
          throw QuatError("multiplication table is not associative");
        }
      }
    }
  }
}

bool QuatAlgebra::is_zero(const Quat& x) const {
  return std::all_of(x.c.begin(), x.c.end(), [](const Elem& e) { return e.is_zero(); });
}

bool QuatAlgebra::is_scalar(const Quat& x) const { return x.c[1].is_zero() && x.c[2].is_zero() && x.c[3].is_zero(); }

Quat QuatAlgebra::add(const Quat& x, const Quat& y) const {
  Quat r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
  return r;
}
Quat QuatAlgebra::sub(const Quat& x, const Quat& y) const {
  Quat r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] - y.c[i];
  return r;
}
Quat QuatAlgebra::neg(const Quat& x) const {
  Quat r;
  for (int i = 0; i < 4; ++i) r.c[i] = -x.c[i];
  return r;
}
Quat QuatAlgebra::scale(const Elem& s, const Quat& x) const {
  Quat r;
  for (int i = 0; i < 4; ++i) r.c[i] = s * x.c[i];
  return r;
}

Quat QuatAlgebra::mul(const Quat& x, const Quat& y) const {
  Quat r = zero();
  for (int i = 0; i < 4; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (y.c[j].is_zero()) continue;
      Elem s = x.c[i] * y.c[j];
      const Quat& e = table_[i][j];
      for (int k = 0; k < 4; ++k) {
        if (!e.c[k].is_zero()) r.c[k] = r.c[k] + s * e.c[k];
      }
    }
  }
  return r;
}

Quat QuatAlgebra::conj(const Quat& x) const { return make(x.c[0] + t_ * x.c[1], -x.c[1], -x.c[2], -x.c[3]); }

Elem QuatAlgebra::norm(const Quat& x) const {
  const auto& v = x.c;
  return v[0] * v[0] + t_ * v[0] * v[1] + d_ * v[1] * v[1] + c_ * (v[2] * v[2] + t_ * v[2] * v[3] + d_ * v[3] * v[3]);
}

Elem QuatAlgebra::trace(const Quat& x) const { return x.c[0] + x.c[0] + t_ * x.c[1]; }

Elem QuatAlgebra::polar(const Quat& x, const Quat& y) const { return norm(add(x, y)) - norm(x) - norm(y); }

std::optional<Quat> QuatAlgebra::inverse(const Quat& x) const {
  Elem n = norm(x);
  if (n.is_zero()) return std::nullopt;
  return scale(n.inv(), conj(x));
}

std::array<Quat, 3> QuatAlgebra::pure_basis() const {
  if (k_.characteristic() == 2) return {one(), basis(2), basis(3)};
  return {basis(1), basis(2), basis(3)};
}

bool QuatAlgebra::is_pure(const Quat& x) const {
  if (k_.characteristic() == 2) return x.c[1].is_zero();
  return trace(x).is_zero();
}

SplitInfo QuatAlgebra::is_split() const {
  SplitInfo info;
  if (k_.is_finite()) {
    search_quats(*this, 0, [&](const Quat& x) {
      if (!norm(x).is_zero()) return false;
      info.witness = x;
      return true;
    });
    info.split = tri(info.witness.has_value());
    return info;
  }
  if (k_.kind() == FieldKind::Rationals && t_.is_zero()) {
    const Rational& d = std::get<Rational>(d_.rep());
    const Rational& c = std::get<Rational>(c_.rep());
    info.split = nt::legendre_isotropic(Rational(1), d, c);
    if (info.split == Tri::No) return info;
    // witness x0 + x1 h1 + x2 h2 with x0^2 + d x1^2 + c x2^2 = 0
    for (int bound = 1; bound <= 400 && !info.witness; bound *= 2) {
      for (int a = 0; a <= bound && !info.witness; ++a) {
        for (int b = 0; b <= bound && !info.witness; ++b) {
          if (a == 0 && b == 0) continue;
          if (std::max(a, b) <= bound / 2) continue;
          Rational rest = -(d * a * a + c * b * b);
          if (rest < 0) continue;
          BigInt n = boost::multiprecision::numerator(rest), m = boost::multiprecision::denominator(rest);
          if (!nt::is_square_int(n) || !nt::is_square_int(m)) continue;
          Rational x0(nt::isqrt(n), nt::isqrt(m));
          info.witness = make(Elem(k_.impl(), x0), k_.from_int(a), k_.from_int(b), k_.zero());
        }
      }
    }
    if (info.split == Tri::Unknown && info.witness) info.split = Tri::Yes;
    return info;
  }
  info.bounded = true;
  search_quats(*this, 2, [&](const Quat& x) {
    if (!norm(x).is_zero()) return false;
    info.witness = x;
    return true;
  });
  if (info.witness) info.split = Tri::Yes;
  return info;
}

Matrix<Elem> QuatAlgebra::left_matrix(const Quat& a) const {
  Matrix<Elem> m(4, 4, k_.zero());
  for (int j = 0; j < 4; ++j) {
    Quat img = mul(a, basis(j));
    for (int i = 0; i < 4; ++i) m(i, j) = img.c[i];
  }
  return m;
}

Matrix<Elem> QuatAlgebra::right_matrix(const Quat& a) const {
  Matrix<Elem> m(4, 4, k_.zero());
  for (int j = 0; j < 4; ++j) {
    Quat img = mul(basis(j), a);
    for (int i = 0; i < 4; ++i) m(i, j) = img.c[i];
  }
  return m;
}

std::string QuatAlgebra::str(const Quat& x) const {
  static const char* names[4] = {"", "h1", "h2", "h3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i].is_zero()) continue;
    std::string c = x.c[i].str();
    bool compound = false;
    for (std::size_t k = 1; k < c.size(); ++k) compound |= c[k] == '+' || c[k] == '-';
    std::string term;
    if (i == 0) {
      term = compound ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = names[i];
    } else if (c == "-1") {
      term = std::string("-") + names[i];
    } else {
      term = (compound ? "(" + c + ")" : c) + "*" + names[i];
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Quat QuatAlgebra::parse(const std::string& text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw QuatError("empty quaternion");
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == '+' || ch == '-') && depth == 0 && i > start && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  Quat out = zero();
  for (auto term : terms) {
    bool negative = false;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      negative ^= term[0] == '-';
      term.erase(0, 1);
    }
    int idx = 0;
    if (term.size() >= 2 && term[term.size() - 2] == 'h' && term.back() >= '1' && term.back() <= '3') {
      idx = term.back() - '0';
      term.resize(term.size() - 2);
      if (!term.empty() && term.back() == '*') term.pop_back();
    }
    Elem c = k_.one();
    try {
      if (!term.empty()) c = k_.parse(term);
    } catch (const FieldError& e) {
      throw QuatError(e.what());
    }
    out.c[idx] = out.c[idx] + (negative ? -c : c);
  }
  return out;
}

// ---- solvers --------------------------------------------------------------

namespace {

// nonzero elements orthogonal (for f_N) to all of vs
std::vector<Quat> orthogonal_complement(const QuatAlgebra& h, const std::vector<Quat>& vs) {
  const Field& k = h.field();
  Matrix<Elem> g(vs.size(), 4, k.zero());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = h.polar(vs[i], h.basis(j));
  }
  std::vector<Quat> out;
  for (auto& v : nullspace(g)) out.push_back(h.from_vec(v));
  return out;
}

bool conjugates(const QuatAlgebra& h, const Quat& a, const Quat& v, const Quat& x) {
  auto ai = h.inverse(a);
  return ai && h.mul(h.mul(a, v), *ai) == x;
}

// first nonzero combination of the basis that passes the check
std::optional<Quat> pick(const QuatAlgebra& h, const std::vector<Quat>& basis, const std::function<bool(const Quat&)>& ok) {
  for (auto& b : basis) {
    if (ok(b)) return b;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Quat s = h.add(basis[i], basis[j]);
      if (ok(s)) return s;
    }
  }
  return std::nullopt;
}

bool dependent(const QuatAlgebra& h, const Quat& v, const Quat& w) {
  Matrix<Elem> m = Matrix<Elem>::from_rows({h.to_vec(v), h.to_vec(w)}, 4, h.field().zero());
  return rank(m) < 2;
}

}  // namespace

ConjResult conjugate_solver(const QuatAlgebra& h, const Quat& v, const Quat& x) {
  require_division(h);
  if (h.norm(v) != h.norm(x)) return {std::nullopt, "norms differ"};
  if (h.trace(v) != h.trace(x)) return {std::nullopt, "traces differ"};
  if (v == x) return {h.one(), ""};
  Quat a = h.sub(x, h.conj(v));
  if (!h.is_zero(a)) {
    if (conjugates(h, a, v, x)) return {a, ""};
    return {std::nullopt, "candidate x - v~ is not invertible (algebra not a division algebra?)"};
  }
  auto b = pick(h, orthogonal_complement(h, {h.one(), v}), [&](const Quat& c) { return conjugates(h, c, v, x); });
  if (b) return {*b, ""};
  return {std::nullopt, "no conjugator in {1,v}-perp passed verification"};
}

ConjResult pair_conjugate_solver(const QuatAlgebra& h, const Quat& v, const Quat& w, const Quat& x, const Quat& y) {
  require_division(h);
  if (dependent(h, v, w)) return {std::nullopt, "precondition: w lies in Kv"};
  if (dependent(h, x, y)) return {std::nullopt, "precondition: y lies in Kx"};
  if (h.norm(v) != h.norm(x)) return {std::nullopt, "N(v) != N(x)"};
  if (h.norm(w) != h.norm(y)) return {std::nullopt, "N(w) != N(y)"};
  if (h.trace(v) != h.trace(x)) return {std::nullopt, "tr(v) != tr(x)"};
  if (h.trace(w) != h.trace(y)) return {std::nullopt, "tr(w) != tr(y)"};
  if (h.polar(v, w) != h.polar(x, y)) return {std::nullopt, "f_N(v,w) != f_N(x,y)"};
  ConjResult first = conjugate_solver(h, v, x);
  if (!first.a) return first;
  Quat a1 = *first.a;
  Quat w1 = h.mul(h.mul(a1, w), *h.inverse(a1));
  if (w1 == y) return {a1, ""};
  Quat c = h.sub(y, w1);
  auto ci = h.inverse(c);
  if (!ci) return {std::nullopt, "y - w' is not invertible"};
  Quat ca = h.mul(c, a1);
  auto ok = [&](const Quat& b) {
    Quat a = h.mul(b, ca);
    return conjugates(h, a, v, x) && conjugates(h, a, w, y);
  };
  auto b = pick(h, orthogonal_complement(h, {h.one(), x, y}), ok);
  if (!b) return {std::nullopt, "no element of {1,x,y}-perp passed verification"};
  return {h.mul(*b, ca), ""};
}

ZResult z_action_solver(const QuatAlgebra& h, const Quat& v, const Quat& x, int box) {
  require_division(h);
  ZResult out;
  out.bounded = !h.field().is_finite();
  if (h.is_zero(v) || h.is_zero(x)) {
    out.reason = "zero argument";
    return out;
  }
  Elem nv = h.norm(v), nx = h.norm(x), tv = h.trace(v), tx = h.trace(x);
  auto attempt = [&](const Quat& z) {
    Elem nz = h.norm(z);
    if (nz.is_zero() || nx != nv * nz * nz || tx != tv * nz) return false;
    ConjResult r = conjugate_solver(h, h.scale(nz, v), x);
    if (!r.a) return false;
    Quat a = *r.a;
    Quat b = h.mul(z, *h.inverse(a));
    Quat check = h.scale(h.norm(b), h.mul(h.mul(a, v), h.conj(a)));
    if (check != x) return false;
    out.a = a;
    out.b = b;
    out.z = z;
    return true;
  };
  if (attempt(h.one())) return out;
  if (!search_quats(h, box, attempt)) out.reason = "no z found in the search box";
  return out;
}

Matrix<Elem> inner_auto(const QuatAlgebra& h, const Quat& a) {
  auto ai = h.inverse(a);
  if (!ai) throw QuatError("inner automorphism needs a unit");
  return h.left_matrix(a) * h.right_matrix(*ai);
}

std::optional<Matrix<Elem>> pure_part_matrix(const QuatAlgebra& h, const Matrix<Elem>& m) {
  const Field& k = h.field();
  bool char2 = k.characteristic() == 2;
  int skip = char2 ? 1 : 0;  // coordinate that must vanish on Pu H
  std::array<int, 3> keep = char2 ? std::array<int, 3>{0, 2, 3} : std::array<int, 3>{1, 2, 3};
  if (!char2 && !h.t().is_zero()) return std::nullopt;
  Matrix<Elem> out(3, 3, k.zero());
  auto pb = h.pure_basis();
  for (int j = 0; j < 3; ++j) {
    Vec<Elem> img = m.apply(h.to_vec(pb[j]));
    if (!img[skip].is_zero()) return std::nullopt;
    for (int i = 0; i < 3; ++i) out(i, j) = img[keep[i]];
  }
  return out;
}

bool so_check(const QuatAlgebra& h, const Quat& a) {
  Matrix<Elem> m = inner_auto(h, a);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Quat x = h.from_vec(m.col(i)), y = h.from_vec(m.col(j));
      if (h.polar(x, y) != h.polar(h.basis(i), h.basis(j))) return false;
    }
    if (h.norm(h.from_vec(m.col(i))) != h.norm(h.basis(i))) return false;
  }
  auto p = pure_part_matrix(h, m);
  return p && det(*p).is_one();
}

NormGroupInfo norm_group_coset(const QuatAlgebra& h, const Elem& x, int box) {
  if (x.is_zero()) throw QuatError("norm group membership of zero");
  const Field& k = h.field();
  NormGroupInfo info;
  auto represented = [&](const Elem& target) {
    return search_quats(h, box, [&](const Quat& y) { return h.norm(y) == target; });
  };
  if (k.is_finite()) {
    info.member = tri(represented(x));
    Tri sq = is_square(x);
    if (sq == Tri::No) {
      info.square_member = Tri::No;
    } else {
      Elem r = *sqrt_of(x);
      info.square_member = tri(represented(r) || represented(-r));
    }
    return info;
  }
  if (k.kind() == FieldKind::Rationals && h.t().is_zero()) {
    const Rational& d = std::get<Rational>(h.d().rep());
    const Rational& c = std::get<Rational>(h.c().rep());
    const Rational& r = std::get<Rational>(x.rep());
    bool definite = d > 0 && c > 0;
    if (d == 1 && c == 1) {
      // Lagrange: the positive rationals are exactly the norms
      info.member = tri(r > 0);
      info.square_member = is_square(x);
      return info;
    }
    info.bounded = true;
    if (definite && r < 0) {
      info.member = Tri::No;
      info.square_member = Tri::No;
      return info;
    }
    info.member = represented(x) ? Tri::Yes : Tri::Unknown;
    Tri sq = is_square(x);
    if (sq == Tri::No) {
      info.square_member = Tri::No;
    } else {
      Elem s = *sqrt_of(x);
      bool hit = represented(s) || represented(-s);
      info.square_member = hit ? Tri::Yes : Tri::Unknown;
    }
    return info;
  }
  info.bounded = true;
  info.member = represented(x) ? Tri::Yes : Tri::Unknown;
  info.square_member = Tri::Unknown;
  return info;
}

}  // namespace heis
