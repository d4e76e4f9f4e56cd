#include "heis/classify.hpp"

#include <unordered_map>

#include "heis/dispatch.hpp"
#include "heis/forms.hpp"
#include "heis/quadext.hpp"

namespace heis {

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::PointOnQ: return "point:s01";
    case Tag::PointOffQ: return "point:s01+s23";
    case Tag::LineE: return "line:E";
    case Tag::LineT: return "line:T";
    case Tag::LineS: return "line:S";
    case Tag::LineP1: return "line:P1";
    case Tag::PlaneF: return "plane:F";
    case Tag::PlaneJF: return "plane:JF";
    case Tag::PlaneET: return "plane:E+T";
    case Tag::PlaneES: return "plane:E+S";
    case Tag::PlaneTS: return "plane:T+S";
    case Tag::PlaneP2: return "plane:P2";
    case Tag::PlaneP3: return "plane:P3";
    case Tag::Undecided: return "undecided";
  }
  return "?";
}

int tag_dim(Tag t) {
  switch (t) {
    case Tag::PointOnQ:
    case Tag::PointOffQ: return 1;
    case Tag::LineE:
    case Tag::LineT:
    case Tag::LineS:
    case Tag::LineP1: return 2;
    case Tag::Undecided: return 0;
    default: return 3;
  }
}

int OrbitLabel::dim() const {
  int d = tag_dim(tag);
  return perp ? 6 - d : d;
}

bool OrbitLabel::reduced() const {
  if (tag == Tag::PlaneF) return false;
  if (perp && (tag == Tag::LineE || tag == Tag::PointOnQ)) return false;
  return true;
}

std::string OrbitLabel::str() const {
  std::string s = tag_name(tag);
  auto p = [](const std::optional<Elem>& e) { return e ? e->str() : std::string("?"); };
  if (tag == Tag::LineP1 || tag == Tag::PlaneP3) s += "(t=" + p(t) + ",d=" + p(d) + ")";
  if (tag == Tag::PlaneP2) s += "(c=" + p(c) + ",d=" + p(d) + ",t=" + p(t) + ")";
  if (tag == Tag::Undecided && !note.empty()) s += "(" + note + ")";
  return perp ? "perp:" + s : s;
}

FamilyParams<Elem> OrbitLabel::params(const Field& k) const {
  return {c.value_or(k.zero()), d.value_or(k.zero()), t.value_or(k.zero())};
}

Tri same_orbit(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.tag == Tag::Undecided || b.tag == Tag::Undecided) return Tri::Unknown;
  if (a.tag != b.tag || a.perp != b.perp) return Tri::No;
  auto eq = [](const std::optional<Elem>& x, const std::optional<Elem>& y) { return x.has_value() == y.has_value() && (!x || *x == *y); };
  if (eq(a.c, b.c) && eq(a.d, b.d) && eq(a.t, b.t)) return Tri::Yes;
  Field k = field_of(a.d ? *a.d : b.d.value());
  // P2 parameters come from one diagonalization; comparing them needs the
  // quaternion algebras, which is not implemented
  if (a.tag == Tag::PlaneP2) return Tri::Unknown;
  // finite fields and Q carry canonical parameters
  if (k.is_finite() || k.kind() == FieldKind::Rationals) return Tri::No;
  if (a.tag == Tag::LineP1 || a.tag == Tag::PlaneP3) {
    if (*a.t != *b.t) return Tri::No;
    if (k.characteristic() != 2) return same_square_class(*a.d, *b.d);
    if (!a.t->is_zero()) return same_wp_coset(*a.d, *b.d);
  }
  return Tri::Unknown;
}

namespace {

Elem square_class_reduced(const Elem& x) {
  auto r = square_class_rep(x);
  return r ? *r : x;
}

struct ExtParams {
  Tri anisotropic = Tri::Unknown;
  std::optional<Elem> t, d;
};

// a x^2 + b x y + c y^2 anisotropic? If so, (t, d) with L = K[X]/(X^2 + t X + d).
ExtParams binary_ext(const Elem& a, const Elem& b, const Elem& c) {
  Field k = field_of(a);
  ExtParams out;
  if (k.characteristic() != 2) {
    Elem disc = b * b - k.from_int(4) * a * c;
    Tri sq = disc.is_zero() ? Tri::Yes : is_square(disc);
    out.anisotropic = sq == Tri::Unknown ? Tri::Unknown : (sq == Tri::Yes ? Tri::No : Tri::Yes);
    if (out.anisotropic == Tri::Yes) {
      out.t = k.zero();
      out.d = square_class_reduced(-disc / (k.from_int(4) * a * a));
    }
    return out;
  }
  if (a.is_zero() || c.is_zero()) {
    out.anisotropic = Tri::No;
    return out;
  }
  if (b.is_zero()) {
    Tri sq = is_square(c / a);
    out.anisotropic = sq == Tri::Unknown ? Tri::Unknown : (sq == Tri::Yes ? Tri::No : Tri::Yes);
    if (out.anisotropic == Tri::Yes) {
      out.t = k.zero();
      out.d = c / a;
    }
    return out;
  }
  Elem arf_value = a * c / (b * b);
  Tri w = wp_member(arf_value);
  out.anisotropic = w == Tri::Unknown ? Tri::Unknown : (w == Tri::Yes ? Tri::No : Tri::Yes);
  if (out.anisotropic == Tri::Yes) {
    out.t = k.one();
    out.d = k.is_finite() ? finite_extension_params(k).second : arf_value;
  }
  return out;
}

OrbitLabel undecided(const std::string& why) {
  OrbitLabel l;
  l.tag = Tag::Undecided;
  l.note = why;
  return l;
}

OrbitLabel classify_line(const Subspace<Elem>& u) {
  Matrix<Elem> m = restrict_form(u);
  const Elem &a = m(0, 0), &b = m(0, 1), &c = m(1, 1);
  Field k = field_of(a);
  OrbitLabel l;
  if (m.is_zero()) {
    l.tag = Tag::LineE;
    return l;
  }
  if (k.characteristic() != 2) {
    Elem disc = b * b - k.from_int(4) * a * c;
    if (disc.is_zero()) {
      l.tag = Tag::LineT;
      return l;
    }
  } else if (b.is_zero()) {
    // a x^2 + c y^2 is the square of a linear form iff c/a is a square
    Tri sq = a.is_zero() || c.is_zero() ? Tri::Yes : is_square(c / a);
    if (sq == Tri::Yes) {
      l.tag = Tag::LineT;
      return l;
    }
  }
  ExtParams e = binary_ext(a, b, c);
  if (e.anisotropic == Tri::Unknown) return undecided("isotropy of the line");
  if (e.anisotropic == Tri::No) {
    l.tag = Tag::LineS;
    return l;
  }
  l.tag = Tag::LineP1;
  l.t = e.t;
  l.d = e.d;
  return l;
}

// two coordinate vectors completing r to a basis of K^3
std::vector<Vec<Elem>> complement(const Vec<Elem>& r) {
  std::vector<Vec<Elem>> comp;
  for (int i = 0; i < 3 && comp.size() < 2; ++i) {
    auto trial = comp;
    trial.push_back(unit_vector(i, r[0], 3));
    trial.push_back(r);
    if (Subspace<Elem>::span(trial, 3, r[0]).dim() == trial.size()) comp.push_back(trial[trial.size() - 2]);
  }
  return comp;
}

// P3: the radical point and an anisotropic binary complement
OrbitLabel p3_label(const Matrix<Elem>& m) {
  Field k = field_of(m(0, 0));
  OrbitLabel l;
  l.tag = Tag::PlaneP3;
  ExtParams e;
  if (k.characteristic() != 2) {
    Diagonalization dg = diagonalize(m);
    std::vector<Elem> nz;
    for (auto& x : dg.coeffs) {
      if (!x.is_zero()) nz.push_back(x);
    }
    e = binary_ext(nz.at(0), k.zero(), nz.at(1));
  } else {
    Matrix<Elem> g = form_polar(m);
    auto rad = nullspace(g);
    if (rad.size() == 1) {
      auto comp = complement(rad[0]);
      Elem q1 = form_value(m, comp[0]), q2 = form_value(m, comp[1]);
      Elem f = dot(g.left_apply(comp[0]), comp[1]);
      e = binary_ext(q1, f, q2);
    } else {
      // polar form zero: q is additive, pick two values with non-square ratio
      std::vector<Elem> vals{m(0, 0), m(1, 1), m(2, 2)};
      for (std::size_t i = 0; i < 3 && e.anisotropic != Tri::Yes; ++i) {
        for (std::size_t j = 0; j < 3 && e.anisotropic != Tri::Yes; ++j) {
          if (i == j || vals[i].is_zero() || vals[j].is_zero()) continue;
          e = binary_ext(vals[i], k.zero(), vals[j]);
        }
      }
    }
  }
  if (e.anisotropic != Tri::Yes) return undecided("P3 parameters");
  l.t = e.t;
  l.d = e.d;
  return l;
}

OrbitLabel p2_label(const Matrix<Elem>& m) {
  Field k = field_of(m(0, 0));
  OrbitLabel l;
  l.tag = Tag::PlaneP2;
  if (k.characteristic() != 2) {
    // <a1,a2,a3> is similar to <1, aj/ai, ak/ai> for each i; keep the
    // smallest pair so that representatives read back their own parameters
    Diagonalization dg = diagonalize(m);
    auto key = [](const Elem& x) {
      if (auto* r = std::get_if<Rational>(&x.rep())) return std::make_pair(std::string(), Rational(abs(*r) * 2 + (*r < 0 ? 1 : 0)));
      return std::make_pair(x.str(), Rational(0));
    };
    std::optional<std::pair<Elem, Elem>> best;
    for (std::size_t i = 0; i < 3; ++i) {
      Elem x = square_class_reduced(dg.coeffs[(i + 1) % 3] / dg.coeffs[i]);
      Elem y = square_class_reduced(dg.coeffs[(i + 2) % 3] / dg.coeffs[i]);
      if (key(y) < key(x)) std::swap(x, y);
      if (!best || std::make_pair(key(x), key(y)) < std::make_pair(key(best->first), key(best->second))) best = {x, y};
    }
    l.c = best->first;
    l.d = best->second;
    l.t = k.zero();
    return l;
  }
  Matrix<Elem> g = form_polar(m);
  auto rad = nullspace(g);
  if (rad.size() == 1) {
    // c = q(r)/q(u1), d = q(u1) q(u2) / f(u1,u2)^2
    Vec<Elem> r = rad[0];
    auto comp = complement(r);
    Elem q1 = form_value(m, comp[0]), q2 = form_value(m, comp[1]);
    Elem f = dot(g.left_apply(comp[0]), comp[1]);
    l.c = form_value(m, r) / q1;
    l.d = q1 * q2 / (f * f);
    l.t = k.one();
    return l;
  }
  l.c = m(1, 1) / m(0, 0);
  l.d = m(2, 2) / m(0, 0);
  l.t = k.zero();
  return l;
}

OrbitLabel classify_plane(const Subspace<Elem>& u) {
  Matrix<Elem> m = restrict_form(u);
  OrbitLabel l;
  if (m.is_zero()) {
    l.tag = plane_type_F_vs_JF(u) == SingularPlane::F ? Tag::PlaneF : Tag::PlaneJF;
    return l;
  }
  TernaryResult r = classify_ternary_form(m);
  if (!r.label) return undecided("isotropy of the plane");
  switch (*r.label) {
    case TernaryClass::Zero: break;
    case TernaryClass::RankOneSquare: l.tag = Tag::PlaneET; return l;
    case TernaryClass::SplitPair: l.tag = Tag::PlaneES; return l;
    case TernaryClass::ConicNondegenerate: l.tag = Tag::PlaneTS; return l;
    case TernaryClass::RadicalAnisotropic: return p3_label(m);
    case TernaryClass::Anisotropic: return p2_label(m);
  }
  throw ClassifyError("unexpected ternary class");
}

template <class S>
std::string subspace_key(const Subspace<S>& u) {
  std::string key;
  for (auto& x : u.basis().data()) key.push_back(static_cast<char>(scalar_code(x)));
  return key;
}

template <class S>
std::optional<Matrix<S>> bfs_witness(const Subspace<S>& target, const Subspace<S>& rep, const std::vector<Matrix<S>>& gens,
                                     std::size_t budget) {
  std::vector<Matrix<S>> acts;
  for (auto& g : gens) acts.push_back(compound(g).transpose());
  struct Node {
    Subspace<S> u;
    std::size_t parent;
    std::size_t gen;
  };
  std::vector<Node> nodes{{rep, 0, 0}};
  std::unordered_map<std::string, std::size_t> seen{{subspace_key(rep), 0}};
  std::string goal = subspace_key(target);
  std::optional<std::size_t> hit;
  if (seen.count(goal)) hit = 0;
  for (std::size_t head = 0; !hit && head < nodes.size(); ++head) {
    for (std::size_t g = 0; g < acts.size() && !hit; ++g) {
      Subspace<S> next = nodes[head].u.image(acts[g]);
      std::string key = subspace_key(next);
      if (seen.count(key)) continue;
      if (nodes.size() >= budget) return std::nullopt;
      seen.emplace(key, nodes.size());
      nodes.push_back({std::move(next), head, g});
      if (key == goal) hit = nodes.size() - 1;
    }
  }
  if (!hit) return std::nullopt;
  Matrix<S> a = Matrix<S>::identity(4, rep.zero());
  for (std::size_t i = *hit; i != 0; i = nodes[i].parent) a = a * gens[nodes[i].gen];
  return a;
}

}  // namespace

SingularPlane plane_type_F_vs_JF(const Subspace<Elem>& u) {
  if (u.dim() != 3) throw ClassifyError("F/JF test needs a plane");
  if (!restrict_form(u).is_zero()) throw ClassifyError("plane is not totally singular");
  auto rows = u.rows();
  Subspace<Elem> common = quadric_to_line(rows[0]);
  for (std::size_t i = 1; i < rows.size(); ++i) common = common.intersect(quadric_to_line(rows[i]));
  return common.dim() > 0 ? SingularPlane::F : SingularPlane::JF;
}

OrbitLabel classify_subspace(const Subspace<Elem>& u) {
  if (u.ambient() != 6) throw ClassifyError("subspace must lie in the 6-dimensional space of alternating tensors");
  std::size_t n = u.dim();
  if (n == 0 || n == 6) throw ClassifyError("dimension " + std::to_string(n) + " has no orbit label (need 1..5)");
  if (n >= 4) {
    OrbitLabel l = classify_subspace(perp(u));
    l.perp = true;
    return l;
  }
  if (n == 1) {
    OrbitLabel l;
    l.tag = pfaffian(u.rows()[0]).is_zero() ? Tag::PointOnQ : Tag::PointOffQ;
    return l;
  }
  return n == 2 ? classify_line(u) : classify_plane(u);
}

Subspace<Elem> representative(const OrbitLabel& label, const Field& k) {
  return representative(label.tag, label.perp, label.params(k), k.zero());
}

std::vector<OrbitLabel> finite_orbit_labels(const Field& k) {
  if (!k.is_finite()) throw ClassifyError("orbit labels are only listed for finite fields");
  auto [t, d] = finite_extension_params(k);
  std::vector<OrbitLabel> out;
  auto add = [&](Tag tag, bool is_perp) {
    OrbitLabel l;
    l.tag = tag;
    l.perp = is_perp;
    if (tag == Tag::LineP1 || tag == Tag::PlaneP3) {
      l.t = t;
      l.d = d;
    }
    out.push_back(l);
  };
  for (Tag tag : {Tag::PointOnQ, Tag::PointOffQ, Tag::LineE, Tag::LineT, Tag::LineS, Tag::LineP1}) add(tag, false);
  for (Tag tag : {Tag::PlaneF, Tag::PlaneJF, Tag::PlaneET, Tag::PlaneES, Tag::PlaneTS, Tag::PlaneP3}) add(tag, false);
  for (Tag tag : {Tag::LineE, Tag::LineT, Tag::LineS, Tag::LineP1, Tag::PointOnQ, Tag::PointOffQ}) add(tag, true);
  return out;
}

std::vector<Matrix<Elem>> gl4_generators(const Field& k) {
  if (!k.is_finite()) throw ClassifyError("generators of GL4 are only listed for finite fields");
  std::vector<Matrix<Elem>> gens;
  for (auto& a : prime_field_basis(k)) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        Matrix<Elem> m = Matrix<Elem>::identity(4, k.zero());
        m(i, j) = a;
        gens.push_back(m);
      }
    }
  }
  Elem g = primitive_element(k);
  if (!g.is_one()) {
    Matrix<Elem> m = Matrix<Elem>::identity(4, k.zero());
    m(0, 0) = g;
    gens.push_back(m);
  }
  return gens;
}

std::optional<Matrix<Elem>> find_witness(const Subspace<Elem>& u, const OrbitLabel& label, std::size_t budget) {
  Field k = field_of(u.zero());
  if (!k.is_finite()) throw ClassifyError("witness search needs a finite field");
  if (label.tag == Tag::Undecided) throw ClassifyError("no witness for an undecided label");
  Subspace<Elem> rep = representative(label, k);
  auto gens = gl4_generators(k);
  std::optional<Matrix<Elem>> found = with_scalar(k, [&](auto sample) -> std::optional<Matrix<Elem>> {
    using S = decltype(sample);
    std::vector<Matrix<S>> g;
    for (auto& m : gens) g.push_back(convert(m, sample));
    auto a = bfs_witness(convert(u, sample), convert(rep, sample), g, budget);
    if (!a) return std::nullopt;
    return convert(*a, k.zero());
  });
  if (found && act_subspace(*found, rep) != u) throw ClassifyError("witness failed verification");
  return found;
}

}  // namespace heis
