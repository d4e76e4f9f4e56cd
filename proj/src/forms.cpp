#include "heis/forms.hpp"

#include "heis/exterior.hpp"
#include "heis/quaternion.hpp"
#include "heis/search.hpp"

namespace heis {

namespace {

void require_char2(const Field& k, const char* what) {
  if (k.characteristic() != 2) throw FormError(std::string(what) + " needs characteristic 2");
}

Field field_of_matrix(const Matrix<Elem>& m) { return field_of(m.zero()); }

// x = a^2 + t b^2 in F_2(t); returns (a, b)
std::pair<Elem, Elem> square_coords(const Elem& x) {
  Field k = field_of(x);
  if (k.kind() != FieldKind::FunctionField || k.characteristic() != 2) {
    throw FormError("square coordinates are only implemented for F_2(t)");
  }
  const RatFunc& r = std::get<RatFunc>(x.rep());
  // numerator * denominator, coefficients in F_2
  Poly p(r.num.size() + r.den.size(), 0);
  for (std::size_t i = 0; i < r.num.size(); ++i) {
    for (std::size_t j = 0; j < r.den.size(); ++j) p[i + j] ^= (r.num[i] & r.den[j]) & 1u;
  }
  Elem t = k.parse("t");
  Elem even = k.zero(), odd = k.zero(), pw = k.one();
  for (std::size_t i = 0; i < p.size(); i += 2) {
    if (p[i]) even = even + pw;
    if (i + 1 < p.size() && p[i + 1]) odd = odd + pw;
    pw = pw * t;
  }
  Elem den = k.zero(), pw2 = k.one();
  for (auto c : r.den) {
    if (c) den = den + pw2;
    pw2 = pw2 * t;
  }
  return {even / den, odd / den};
}

Tri norm_member(const QuadExtension& ext, const Elem& x, int box, bool* bounded = nullptr) {
  Tri t = ext.norm_class(x);
  if (t != Tri::Unknown) return t;
  if (bounded) *bounded = true;
  const Field& k = ext.base();
  bool hit = search_vectors(k, 2, box, [&](const Vec<Elem>& v) { return ext.norm(ext.make(v[0], v[1])) == x; });
  return hit ? Tri::Yes : Tri::Unknown;
}

}  // namespace

// ---- general forms -------------------------------------------------------

Matrix<Elem> upper_form(const Matrix<Elem>& m) {
  Matrix<Elem> u(m.rows(), m.cols(), m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    u(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) u(i, j) = m(i, j) + m(j, i);
  }
  return u;
}

Matrix<Elem> transform_form(const Matrix<Elem>& upper, const Matrix<Elem>& a) {
  return upper_form(a.transpose() * upper * a);
}

Elem form_value(const Matrix<Elem>& upper, const Vec<Elem>& v) { return quad_value(upper, v); }

Matrix<Elem> form_polar(const Matrix<Elem>& upper) { return upper + upper.transpose(); }

Diagonalization diagonalize(const Matrix<Elem>& upper) {
  Field k = field_of_matrix(upper);
  if (k.characteristic() == 2) throw FormError("diagonalization needs characteristic != 2");
  std::size_t n = upper.rows();
  Matrix<Elem> g = form_polar(upper);
  auto bil = [&](const Vec<Elem>& x, const Vec<Elem>& y) { return dot(g.left_apply(x), y); };
  // remaining: a basis of the orthogonal complement of what has been chosen
  std::vector<Vec<Elem>> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit_vector(static_cast<int>(i), k.zero(), n));
  Diagonalization out;
  std::vector<Vec<Elem>> chosen;
  while (!rest.empty()) {
    std::optional<Vec<Elem>> pick;
    for (std::size_t i = 0; i < rest.size() && !pick; ++i) {
      if (!bil(rest[i], rest[i]).is_zero()) pick = rest[i];
    }
    for (std::size_t i = 0; i < rest.size() && !pick; ++i) {
      for (std::size_t j = i + 1; j < rest.size() && !pick; ++j) {
        Vec<Elem> s = vec_add(rest[i], rest[j]);
        if (!bil(s, s).is_zero()) pick = s;
      }
    }
    if (!pick) {
      // the form vanishes on what is left
      for (auto& r : rest) {
        chosen.push_back(r);
        out.coeffs.push_back(k.zero());
      }
      break;
    }
    Vec<Elem> v = *pick;
    Elem gv = bil(v, v);
    std::vector<Vec<Elem>> next;
    for (auto& r : rest) {
      Vec<Elem> w = vec_add(r, vec_scale(-(bil(v, r) / gv), v));
      if (!vec_is_zero(w)) next.push_back(w);
    }
    // keep a basis of the complement
    auto sub = Subspace<Elem>::span(next, n, k.zero());
    rest = sub.rows();
    chosen.push_back(v);
    out.coeffs.push_back(form_value(upper, v));
  }
  out.basis = Matrix<Elem>::from_rows(chosen, n, k.zero());
  return out;
}

Isotropy isotropy(const Matrix<Elem>& upper, int box) {
  Field k = field_of_matrix(upper);
  std::size_t n = upper.rows();
  Isotropy out;
  for (std::size_t i = 0; i < n; ++i) {
    if (upper(i, i).is_zero()) {
      out.isotropic = Tri::Yes;
      out.witness = unit_vector(static_cast<int>(i), k.zero(), n);
      return out;
    }
  }
  auto search = [&]() {
    return search_vectors(k, n, box, [&](const Vec<Elem>& v) {
      if (!form_value(upper, v).is_zero()) return false;
      out.witness = v;
      return true;
    });
  };
  if (k.is_finite()) {
    out.isotropic = tri(search());
    return out;
  }
  if (k.characteristic() != 2) {
    Diagonalization dg = diagonalize(upper);
    for (std::size_t i = 0; i < dg.coeffs.size(); ++i) {
      if (dg.coeffs[i].is_zero()) {
        out.isotropic = Tri::Yes;
        out.witness = dg.basis.row(i);
        return out;
      }
    }
    if (n == 1) {
      out.isotropic = Tri::No;
      return out;
    }
    if (n == 2) {
      Elem r = -dg.coeffs[1] / dg.coeffs[0];
      out.isotropic = is_square(r);
      if (auto s = sqrt_of(r)) out.witness = vec_add(vec_scale(*s, dg.basis.row(0)), dg.basis.row(1));
      return out;
    }
    if (n == 3 && k.kind() == FieldKind::Rationals) {
      out.isotropic = nt::legendre_isotropic(std::get<Rational>(dg.coeffs[0].rep()), std::get<Rational>(dg.coeffs[1].rep()),
                                             std::get<Rational>(dg.coeffs[2].rep()));
      if (out.isotropic == Tri::Yes) search();
      return out;
    }
  } else if (n == 2) {
    Elem a = upper(0, 0), b = upper(0, 1), d = upper(1, 1);
    if (b.is_zero()) {
      out.isotropic = is_square(d / a);
      if (auto s = sqrt_of(d / a)) out.witness = Vec<Elem>{*s, k.one()};
      return out;
    }
    // a x^2 + b x y + d y^2 with y = 1, x = (b/a) z: z^2 + z = -ad/b^2
    out.isotropic = wp_member(a * d / (b * b));
    if (out.isotropic == Tri::Yes) {
      out.bounded = true;
      search();
    }
    return out;
  }
  out.bounded = true;
  out.isotropic = search() ? Tri::Yes : Tri::Unknown;
  return out;
}

// ---- binary forms, char 2 ------------------------------------------------

BinaryQForm BinaryQForm::from_matrix(const Matrix<Elem>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw FormError("binary forms need a 2x2 matrix");
  Matrix<Elem> u = upper_form(m);
  return {u(0, 0), u(0, 1), u(1, 1)};
}

Matrix<Elem> BinaryQForm::matrix() const {
  Matrix<Elem> m(2, 2, field_of(a).zero());
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 1) = d;
  return m;
}

bool is_diagonalizable(const BinaryQForm& q) {
  require_char2(field_of(q.a), "is_diagonalizable");
  return q.b.is_zero();
}

ArfInvariant arf(const BinaryQForm& q) {
  if (is_diagonalizable(q)) throw FormError("the Arf invariant needs a non-diagonalizable form");
  Field k = field_of(q.a);
  ArfInvariant out{q.a * q.d / (q.b * q.b), std::nullopt};
  if (k.is_finite()) {
    if (abs_trace(out.value) == 0) {
      out.rep = k.zero();
    } else {
      out.rep = finite_extension_params(k).second;
    }
  } else if (wp_member(out.value) == Tri::Yes) {
    out.rep = k.zero();
  }
  return out;
}

Tri same_arf(const BinaryQForm& q, const BinaryQForm& r) { return same_wp_coset(arf(q).value, arf(r).value); }

BinaryEquivalence binary_equivalent_char2(const BinaryQForm& q, const BinaryQForm& r, int box) {
  if (is_diagonalizable(q) || is_diagonalizable(r)) throw FormError("binary_equivalent_char2 needs non-diagonalizable forms");
  Field k = field_of(q.a);
  BinaryEquivalence out;
  Tri arf_eq = same_arf(q, r);
  if (arf_eq == Tri::No) {
    out.equivalent = Tri::No;
    out.reason = "Arf invariants differ";
    return out;
  }
  // shared nonzero value: v, w with q(v) = r(w) != 0
  std::optional<Vec<Elem>> v, w;
  if (k.is_finite()) {
    std::vector<std::pair<Elem, Vec<Elem>>> rvals;
    search_vectors(k, 2, box, [&](const Vec<Elem>& x) {
      Elem val = r.value(x[0], x[1]);
      if (!val.is_zero()) rvals.push_back({val, x});
      return false;
    });
    search_vectors(k, 2, box, [&](const Vec<Elem>& x) {
      Elem val = q.value(x[0], x[1]);
      if (val.is_zero()) return false;
      for (auto& [rv, y] : rvals) {
        if (rv == val) {
          v = x;
          w = y;
          return true;
        }
      }
      return false;
    });
    if (!v) {
      out.equivalent = Tri::No;
      out.reason = "no shared nonzero value";
      return out;
    }
  } else {
    // bounded: look for a value of q that r also takes
    std::vector<std::pair<Elem, Vec<Elem>>> rvals;
    search_vectors(k, 2, box, [&](const Vec<Elem>& x) {
      Elem val = r.value(x[0], x[1]);
      if (!val.is_zero()) rvals.push_back({val, x});
      return false;
    });
    search_vectors(k, 2, box, [&](const Vec<Elem>& x) {
      Elem val = q.value(x[0], x[1]);
      if (val.is_zero()) return false;
      for (auto& [rv, y] : rvals) {
        if (rv == val) {
          v = x;
          w = y;
          return true;
        }
      }
      return false;
    });
    if (!v) {
      out.reason = "no shared value found in the search box";
      return out;
    }
  }
  if (arf_eq == Tri::Unknown) {
    out.reason = "Arf coset comparison undecided";
    return out;
  }
  // bases starting with v and w
  auto complete = [&](const Vec<Elem>& x) {
    Matrix<Elem> p(2, 2, k.zero());
    p(0, 0) = x[0];
    p(1, 0) = x[1];
    if (x[0].is_zero()) {
      p(0, 1) = k.one();
    } else {
      p(1, 1) = k.one();
    }
    return p;
  };
  Matrix<Elem> p = complete(*v), pr = complete(*w);
  BinaryQForm q1 = BinaryQForm::from_matrix(transform_form(q.matrix(), p));
  BinaryQForm r1 = BinaryQForm::from_matrix(transform_form(r.matrix(), pr));
  Elem a = q1.a, x = q1.b / a, c = q1.d / a, wq = r1.b / a, dd = r1.d / a;
  Elem s = c / (x * x) + dd / (wq * wq);
  std::optional<Elem> kk;
  if (k.is_finite()) {
    for (auto& e : k.elements()) {
      if (e * e + e == s) {
        kk = e;
        break;
      }
    }
  } else {
    search_vectors(k, 1, box, [&](const Vec<Elem>& e) {
      if (e[0] * e[0] + e[0] != s) return false;
      kk = e[0];
      return true;
    });
    if (!kk && s.is_zero()) kk = k.zero();
  }
  if (!kk) {
    out.equivalent = k.is_finite() ? Tri::No : Tri::Unknown;
    out.reason = "no root of k^2 + k = s found";
    return out;
  }
  Matrix<Elem> b(2, 2, k.zero());
  b(0, 0) = k.one();
  b(0, 1) = *kk * wq;
  b(1, 1) = wq / x;
  Matrix<Elem> a_full = p * b * *inverse(pr);
  if (transform_form(q.matrix(), a_full) != r.matrix()) {
    out.reason = "constructed basis change failed verification";
    return out;
  }
  out.equivalent = Tri::Yes;
  out.witness = a_full;
  return out;
}

// ---- omega^(2) -----------------------------------------------------------

Vec<Elem> omega2_act(const Matrix<Elem>& a, const Vec<Elem>& xz) {
  return {a(0, 0) * a(0, 0) * xz[0] + a(0, 1) * a(0, 1) * xz[1], a(1, 0) * a(1, 0) * xz[0] + a(1, 1) * a(1, 1) * xz[1]};
}

int square_rank(const std::vector<Elem>& xs) {
  if (xs.empty()) return 0;
  Field k = field_of(xs[0]);
  require_char2(k, "square_rank");
  bool any = false;
  for (auto& x : xs) any = any || !x.is_zero();
  if (!any) return 0;
  if (k.is_perfect()) return 1;
  std::vector<Vec<Elem>> rows;
  for (auto& x : xs) {
    auto [a, b] = square_coords(x);
    rows.push_back({a, b});
  }
  return static_cast<int>(rank(Matrix<Elem>::from_rows(rows, 2, k.zero())));
}

std::string omega2_orbit(const Elem& x, const Elem& z, Omega2Group g, const std::optional<Elem>& s) {
  Field k = field_of(x);
  require_char2(k, "omega2_orbit");
  if (g == Omega2Group::GL2L) {
    if (k.is_perfect()) throw FormError("a perfect field has no inseparable quadratic extension");
    if (!s || is_square(*s) != Tri::No) throw FormError("GL2L needs L = K(sqrt s) with s a non-square");
    // L^2 = K^2(s) is all of K here ([K:K^2] = 2)
    return x.is_zero() && z.is_zero() ? "zero" : "span = K";
  }
  int r = square_rank({x, z});
  if (r == 0) return "zero";
  if (k.is_perfect() || r == 2) return "span = K";
  Elem y = x.is_zero() ? z : x;
  auto [a, b] = square_coords(y);
  Elem rep = a.is_zero() ? k.parse("t") : k.one() + k.parse("t") * (b / a) * (b / a);
  return "line r=" + rep.str();
}

Tri omega2_same_orbit(const Vec<Elem>& v, const Vec<Elem>& w, Omega2Group g, const std::optional<Elem>& s) {
  return tri(omega2_orbit(v[0], v[1], g, s) == omega2_orbit(w[0], w[1], g, s));
}

// ---- hermitian forms -----------------------------------------------------

HermitianForm::HermitianForm(QuadExtension e, Matrix<Elem> g) : ext(std::move(e)), gram(std::move(g)) {
  if (!ext.separable()) throw FormError("hermitian forms need a separable extension");
  if (gram.rows() != 2 || gram.cols() != 2) throw FormError("hermitian forms here are 2x2");
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (gram(i, j) != ext.conj(gram(j, i))) throw FormError("gram matrix is not hermitian");
    }
  }
}

Elem HermitianForm::sesq(const Vec<Elem>& x, const Vec<Elem>& y) const {
  Elem acc = ext.field().zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) acc = acc + ext.conj(x[i]) * gram(i, j) * y[j];
  }
  return acc;
}

Elem HermitianForm::value(const Vec<Elem>& x) const { return ext.re(sesq(x, x)); }

Matrix<Elem> hermitian_transform(const HermitianForm& h, const Matrix<Elem>& a) {
  Matrix<Elem> bar(2, 2, a.zero());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) bar(i, j) = h.ext.conj(a(j, i));
  }
  return bar * h.gram * a;
}

HermitianDiag hermitian_diagonalize(const HermitianForm& h) {
  const QuadExtension& e = h.ext;
  Field l = e.field(), k = e.base();
  Vec<Elem> e1{l.one(), l.zero()}, e2{l.zero(), l.one()};
  std::vector<Vec<Elem>> tries{e1, e2, {l.one(), l.one()}, {l.one(), e.u()}};
  std::optional<Vec<Elem>> x;
  for (auto& c : tries) {
    if (!h.value(c).is_zero()) {
      x = c;
      break;
    }
  }
  Matrix<Elem> basis = Matrix<Elem>::identity(2, l.one());
  if (!x) return {k.zero(), k.zero(), basis};  // zero form
  Elem hx = h.sesq(*x, *x);
  Vec<Elem> y = x->at(0).is_zero() ? e1 : e2;
  Vec<Elem> v2 = vec_add(y, vec_scale(-(h.sesq(*x, y) / hx), *x));
  basis(0, 0) = (*x)[0];
  basis(1, 0) = (*x)[1];
  basis(0, 1) = v2[0];
  basis(1, 1) = v2[1];
  return {h.value(*x), h.value(v2), basis};
}

Tri hermitian_isotropic(const HermitianForm& h) {
  HermitianDiag dg = hermitian_diagonalize(h);
  if (dg.a.is_zero() || dg.b.is_zero()) return Tri::Yes;
  return norm_member(h.ext, -dg.b / dg.a, 6);
}

Tri hermitian_equivalent(const HermitianForm& g, const HermitianForm& h) {
  HermitianDiag dg = hermitian_diagonalize(g), dh = hermitian_diagonalize(h);
  int rg = !dg.a.is_zero() + !dg.b.is_zero(), rh = !dh.a.is_zero() + !dh.b.is_zero();
  if (rg != rh) return Tri::No;
  if (rg == 0) return Tri::Yes;
  if (rg == 1) {
    Elem a = dg.a.is_zero() ? dg.b : dg.a, c = dh.a.is_zero() ? dh.b : dh.a;
    return norm_member(g.ext, a / c, 6);
  }
  Tri ig = hermitian_isotropic(g), ih = hermitian_isotropic(h);
  if (ig == Tri::Yes && ih == Tri::Yes) return Tri::Yes;
  if ((ig == Tri::Yes && ih == Tri::No) || (ig == Tri::No && ih == Tri::Yes)) return Tri::No;
  if (ig == Tri::Unknown || ih == Tri::Unknown) return Tri::Unknown;
  // both anisotropic
  Tri det_class = norm_member(g.ext, (dg.a * dg.b) / (dh.a * dh.b), 6);
  if (det_class != Tri::Yes) return det_class;
  const QuadExtension& e = g.ext;
  QuatAlgebra quat(e.base(), e.d(), dg.b / dg.a, e.t());
  return norm_group_coset(quat, dh.a / dg.a).member;
}

HermitianClass hermitian_class(const HermitianForm& h) {
  Field k = h.ext.base();
  bool finite = k.is_finite();
  HermitianDiag dg = hermitian_diagonalize(h);
  Matrix<Elem> rep(2, 2, k.zero());
  int rank = !dg.a.is_zero() + !dg.b.is_zero();
  if (rank == 0) return {rep, "zero", true};
  if (rank == 1) {
    Elem a = dg.a.is_zero() ? dg.b : dg.a;
    // every element is a norm over a finite field
    rep(0, 0) = finite ? k.one() : a;
    return {rep, "degenerate", finite};
  }
  Tri iso = hermitian_isotropic(h);
  if (iso == Tri::Yes) {
    rep(0, 0) = k.one();
    rep(1, 1) = -k.one();
    return {rep, "isotropic", true};
  }
  rep(0, 0) = dg.a;
  rep(1, 1) = dg.b;
  return {rep, iso == Tri::No ? "anisotropic" : "undecided", false};
}

// ---- ternary restrictions -------------------------------------------------

std::string to_string(TernaryClass c) {
  switch (c) {
    case TernaryClass::Zero:
      return "Zero";
    case TernaryClass::RankOneSquare:
      return "RankOneSquare";
    case TernaryClass::SplitPair:
      return "SplitPair";
    case TernaryClass::ConicNondegenerate:
      return "ConicNondegenerate";
    case TernaryClass::RadicalAnisotropic:
      return "RadicalAnisotropic";
    case TernaryClass::Anisotropic:
      return "Anisotropic";
  }
  return "?";
}

TernaryResult classify_ternary_form(const Matrix<Elem>& upper) {
  if (upper.rows() != 3) throw FormError("ternary classification needs a 3x3 form");
  Field k = field_of_matrix(upper);
  TernaryResult out;
  auto from_isotropy = [&](TernaryClass iso, TernaryClass aniso) {
    Isotropy i = isotropy(upper);
    out.bounded = i.bounded;
    if (i.isotropic == Tri::Yes) out.label = iso;
    if (i.isotropic == Tri::No) out.label = aniso;
    return out;
  };
  if (upper.is_zero()) {
    out.label = TernaryClass::Zero;
    return out;
  }
  Matrix<Elem> p = form_polar(upper);
  if (k.characteristic() != 2) {
    std::size_t r = rank(p);
    if (r == 1) {
      out.label = TernaryClass::RankOneSquare;
      return out;
    }
    if (r == 2) {
      Diagonalization dg = diagonalize(upper);
      std::vector<Elem> nz;
      for (auto& c : dg.coeffs) {
        if (!c.is_zero()) nz.push_back(c);
      }
      Tri iso = is_square(-nz[1] / nz[0]);
      if (iso == Tri::Yes) out.label = TernaryClass::SplitPair;
      if (iso == Tri::No) out.label = TernaryClass::RadicalAnisotropic;
      return out;
    }
    return from_isotropy(TernaryClass::ConicNondegenerate, TernaryClass::Anisotropic);
  }
  auto rad = nullspace(p);
  if (rad.size() == 3) {
    switch (square_rank({upper(0, 0), upper(1, 1), upper(2, 2)})) {
      case 1:
        out.label = TernaryClass::RankOneSquare;
        break;
      case 2:
        out.label = TernaryClass::RadicalAnisotropic;
        break;
      default:
        out.label = TernaryClass::Anisotropic;
    }
    return out;
  }
  Vec<Elem> r = rad.at(0);
  if (!form_value(upper, r).is_zero()) return from_isotropy(TernaryClass::ConicNondegenerate, TernaryClass::Anisotropic);
  // binary quotient by the singular radical vector
  auto comp = Subspace<Elem>::span({r}, 3, k.zero());
  std::vector<Vec<Elem>> us;
  for (int i = 0; i < 3 && us.size() < 2; ++i) {
    Vec<Elem> e = unit_vector(i, k.zero(), 3);
    if (!comp.contains(e)) {
      us.push_back(e);
      comp = comp + Subspace<Elem>::span({e}, 3, k.zero());
    }
  }
  Elem q1 = form_value(upper, us[0]), q2 = form_value(upper, us[1]), f = dot(p.left_apply(us[0]), us[1]);
  Tri split = wp_member(q1 * q2 / (f * f));
  if (split == Tri::Yes) out.label = TernaryClass::SplitPair;
  if (split == Tri::No) out.label = TernaryClass::RadicalAnisotropic;
  return out;
}

TernaryResult classify_ternary_restriction(const Subspace<Elem>& u) {
  if (u.ambient() != 6 || u.dim() != 3) throw FormError("classify_ternary_restriction needs a plane of dimension 3 in the 6-space");
  return classify_ternary_form(restrict_form(u));
}

// ---- similitudes ------------------------------------------------------------

SimilitudeReport similitude_check(const Matrix<Elem>& upper, const Matrix<Elem>& a) {
  Field k = field_of_matrix(upper);
  std::size_t n = upper.rows();
  Matrix<Elem> b = transform_form(upper, a);
  SimilitudeReport out;
  std::optional<Elem> lambda;
  for (std::size_t i = 0; i < n && !lambda; ++i) {
    for (std::size_t j = i; j < n && !lambda; ++j) {
      if (!upper(i, j).is_zero()) lambda = b(i, j) / upper(i, j);
    }
  }
  if (!lambda) lambda = k.one();  // zero form: everything is an isometry
  bool ok = b == *lambda * upper;
  if (ok && lambda->is_zero() && !upper.is_zero()) ok = false;
  if (ok) {
    out.similitude = true;
    out.multiplier = lambda;
    out.multiplier_square = is_square(*lambda);
    return out;
  }
  // a vector where q(Av) = lambda q(v) fails
  std::vector<Vec<Elem>> cands;
  for (std::size_t i = 0; i < n; ++i) cands.push_back(unit_vector(static_cast<int>(i), k.zero(), n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cands.push_back(vec_add(cands[i], cands[j]));
  }
  for (auto& v : cands) {
    if (form_value(upper, a.apply(v)) != *lambda * form_value(upper, v)) {
      out.witness = v;
      break;
    }
  }
  return out;
}

SimilitudeScan similitude_scan(const Matrix<Elem>& upper, std::uint64_t budget) {
  Field k = field_of_matrix(upper);
  if (!k.is_finite()) throw FormError("similitude scans need a finite field");
  SimilitudeScan out;
  out.anisotropic = isotropy(upper).isotropic == Tri::Yes ? Tri::No : Tri::Yes;
  bool stopped = for_each_gl(k, upper.rows(), [&](const Matrix<Elem>& a) {
    if (out.scanned >= budget) return true;
    ++out.scanned;
    SimilitudeReport r = similitude_check(upper, a);
    if (!r.similitude) return false;
    ++out.similitudes;
    if (r.multiplier->is_one()) ++out.isometries;
    if (r.multiplier_square != Tri::Yes) out.all_multipliers_square = false;
    return false;
  });
  out.complete = !stopped;
  return out;
}

}  // namespace heis
