#include "heis/orbits.hpp"

#include <set>

#include "heis/quadext.hpp"
#include "heis/search.hpp"

namespace heis {

std::vector<std::uint64_t> brute_stabilizer(const Subspace<Elem>& u) {
  Field k = field_of(u.zero());
  if (!k.is_finite() || k.order() > 3) throw OrbitError("brute-force stabilizers need GF(2) or GF(3)");
  std::vector<std::uint64_t> out;
  for_each_gl(k, 4, [&](const Matrix<Elem>& a) {
    if (act_subspace(a, u) == u) out.push_back(matrix_code(a));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

OmegaCounts omega_counts(const OrbitLabel& label, const Field& k) {
  if (!k.is_finite()) throw OrbitError("omega counts need a finite field");
  GeneratorSet gs = sigma_generators(label, k);
  Subspace<Elem> kernel = representative(label, k);
  HeisAlgebra<Elem> h(kernel);
  if (!h.reduced()) throw OrbitError("kernel is not reduced");
  std::vector<Matrix<Elem>> zg;
  for (auto& g : gs.gens) zg.push_back(*induced_sigma_prime(g, h).map);
  OmegaCounts out;
  out.omega_v = enumerate_orbits(gs.gens, 4, k.zero()).orbit_count() - 1;
  out.omega_z = enumerate_orbits(zg, h.dim_z(), k.zero()).orbit_count() - 1;
  out.omega = out.omega_v + out.omega_z + 1;
  return out;
}

namespace {

// orbits of GL2(L) on hermitian 2x2 matrices [[a, b], [conj b, c]], a, c in K
int hermitian_classes(const QuadExtension& qe) {
  const Field& l = qe.field();
  auto els = l.elements();
  std::vector<Elem> base;
  for (auto& e : els) {
    if (qe.im(e).is_zero()) base.push_back(e);
  }
  using H = std::array<Elem, 3>;  // a, b, c
  auto key = [&](const H& h) { return std::array<std::uint64_t, 3>{l.code(h[0]), l.code(h[1]), l.code(h[2])}; };
  auto act = [&](const Matrix<Elem>& g, const H& h) {
    Matrix<Elem> m(2, 2, l.zero()), gs(2, 2, l.zero());
    m(0, 0) = h[0];
    m(0, 1) = h[1];
    m(1, 0) = qe.conj(h[1]);
    m(1, 1) = h[2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) gs(i, j) = qe.conj(g(j, i));
    Matrix<Elem> r = g * m * gs;
    return H{r(0, 0), r(0, 1), r(1, 1)};
  };
  std::vector<Matrix<Elem>> gens;
  for (auto& a : qe.additive_basis()) {
    Matrix<Elem> t = Matrix<Elem>::identity(2, l.zero());
    t(0, 1) = a;
    gens.push_back(t);
  }
  Matrix<Elem> w(2, 2, l.zero());
  w(0, 1) = w(1, 0) = l.one();
  gens.push_back(w);
  Matrix<Elem> d = Matrix<Elem>::identity(2, l.zero());
  d(0, 0) = qe.primitive();
  gens.push_back(d);
  std::set<std::array<std::uint64_t, 3>> seen;
  int orbits = 0;
  for (auto& a : base)
    for (auto& b : els)
      for (auto& c : base) {
        H h{a, b, c};
        if (seen.count(key(h))) continue;
        if (!(a.is_zero() && b.is_zero() && c.is_zero())) ++orbits;
        std::vector<H> stack{h};
        seen.insert(key(h));
        while (!stack.empty()) {
          H x = stack.back();
          stack.pop_back();
          for (auto& g : gens) {
            H y = act(g, x);
            if (seen.insert(key(y)).second) stack.push_back(y);
          }
        }
      }
  return orbits;
}

}  // namespace

FieldInvariants field_invariants(const Field& k) {
  if (!k.is_finite()) throw OrbitError("field invariants are counted for finite fields");
  FieldInvariants inv;
  auto els = k.elements();
  std::set<std::uint64_t> squares, wp, frob;
  for (auto& x : els) {
    if (!x.is_zero()) squares.insert(k.code(x * x));
    wp.insert(k.code(x * x + x));
    frob.insert(k.code(x * x));
  }
  std::size_t units = els.size() - 1;
  inv.r_star = static_cast<int>(units / squares.size());
  if (k.characteristic() == 2) {
    inv.r_wp = static_cast<int>(els.size() / wp.size());
    inv.r_plus = static_cast<int>(els.size() / frob.size());
  }
  auto [t, d] = finite_extension_params(k);
  QuadExtension qe(k, t, d);
  std::set<std::uint64_t> norms;
  for (auto& x : qe.field().elements()) {
    if (!x.is_zero()) {
      norms.insert(k.code(qe.norm(x)));
      norms.insert(k.code(-qe.norm(x)));
    }
  }
  inv.r_n = static_cast<int>(units / norms.size());
  inv.hf = hermitian_classes(qe);
  return inv;
}

std::size_t TableReport::checked() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return !r.skipped; }));
}

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return !r.skipped && !r.pass; }));
}

namespace {

OrbitLabel find_label(const Field& k, Tag tag, bool perp) {
  for (auto& l : finite_orbit_labels(k)) {
    if (l.tag == tag && l.perp == perp) return l;
  }
  throw OrbitError("no label " + tag_name(tag));
}

}  // namespace

std::vector<OrbitLabel> scan_labels(const Field& k) {
  std::vector<OrbitLabel> out;
  for (Tag t : {Tag::PointOnQ, Tag::PointOffQ, Tag::LineE, Tag::LineT, Tag::LineS, Tag::PlaneJF, Tag::PlaneET, Tag::PlaneES,
                Tag::PlaneTS, Tag::LineP1, Tag::PlaneP3}) {
    out.push_back(find_label(k, t, false));
  }
  return out;
}

TableReport verify_table(const Field& k) {
  if (!k.is_finite()) throw OrbitError("table verification needs a finite field");
  if (k.order() > 16) throw OrbitError("table verification supports fields of order at most 16");
  TableReport rep;
  rep.field = k.spec();
  rep.inv = field_invariants(k);
  const auto& inv = rep.inv;
  bool even = k.characteristic() == 2;
  struct Spec {
    Tag tag;
    bool perp;
    std::string formula;
    int v, z;
  };
  int rs = inv.r_star, rw = inv.r_wp;
  std::vector<Spec> specs{
      {Tag::PointOnQ, false, "6", 2, 3},
      {Tag::PointOffQ, true, "3", 1, 1},
      even ? Spec{Tag::PointOffQ, false, "4+|R+|+|Rwp|", 1, 2 + inv.r_plus + rw} : Spec{Tag::PointOffQ, false, "3+|R*|", 1, 1 + rs},
      {Tag::LineE, false, "7", 3, 3},
      {Tag::LineT, false, "6", 2, 3},
      {Tag::LineT, true, "5", 2, 2},
      {Tag::LineS, false, "5", 2, 2},
      {Tag::LineS, true, "5", 2, 2},
      {Tag::PlaneJF, false, "4", 2, 1},
      {Tag::PlaneET, false, "6", 3, 2},
      {Tag::PlaneES, false, "8", 4, 3},
      even ? Spec{Tag::PlaneTS, false, "4+|R*|+|Rwp|", 2, 1 + rs + rw} : Spec{Tag::PlaneTS, false, "4+|R*|", 2, 1 + rs},
      {Tag::LineP1, true, "3", 1, 1},
      {Tag::LineP1, false, "2+HF", 1, inv.hf},
      {Tag::PlaneP3, false, "4+|RN|", 2, 1 + inv.r_n},
  };
  for (auto& s : specs) {
    TableRow row;
    OrbitLabel l = find_label(k, s.tag, s.perp);
    row.kernel = l.str();
    row.formula = s.formula;
    row.expected = {static_cast<std::size_t>(s.v), static_cast<std::size_t>(s.z), static_cast<std::size_t>(s.v + s.z + 1)};
    row.got = omega_counts(l, k);
    row.pass = row.got.omega_v == row.expected.omega_v && row.got.omega_z == row.expected.omega_z &&
               row.got.omega == row.expected.omega;
    rep.rows.push_back(row);
  }
  for (auto [name, note] : {std::pair{"line:P1 (inseparable)", "finite fields are perfect"},
                            std::pair{"plane:P2 (char 2, t=1)", "no quaternion division algebra over a finite field"},
                            std::pair{"plane:P2 (t=0)", "no quaternion division algebra over a finite field"},
                            std::pair{"plane:P2 (char 2, t=0)", "no quaternion division algebra over a finite field"}}) {
    TableRow row;
    row.kernel = name;
    row.skipped = true;
    row.note = note;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace heis
