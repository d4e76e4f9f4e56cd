#include "heis/heisenberg.hpp"

#include <algorithm>
#include <array>

#include "heis/dispatch.hpp"
#include "heis/quadext.hpp"

namespace heis {

namespace {

using M = Matrix<Elem>;

struct Scalars {
  std::vector<Elem> add;   // spans K additively over the prime field (finite)
  std::vector<Elem> mult;  // generates K^x (finite)
};

void push_unique(std::vector<Elem>& v, const Elem& e) {
  if (std::find(v.begin(), v.end(), e) == v.end()) v.push_back(e);
}

Scalars scalars_for(const Field& k, const std::vector<Elem>& extra) {
  Scalars s;
  if (k.is_finite()) {
    s.add = prime_field_basis(k);
    Elem g = primitive_element(k);
    if (!g.is_one()) s.mult.push_back(g);
    return s;
  }
  std::vector<Elem> pool{k.one(), -k.one(), k.from_int(2), k.from_int(3)};
  if (k.kind() == FieldKind::FunctionField) pool.push_back(k.parse("t"));
  for (auto& e : extra) pool.push_back(e);
  for (auto& e : pool) {
    if (e.is_zero()) continue;
    push_unique(s.add, e);
    if (!e.is_one()) push_unique(s.mult, e);
  }
  return s;
}

M id(std::size_t n, const Field& k) { return M::identity(n, k.zero()); }

M transvection(int i, int j, const Elem& a, const Field& k) {
  M m = id(4, k);
  m(i, j) = a;
  return m;
}

M diag4(const std::vector<Elem>& d, const Field& k) {
  M m(4, 4, k.zero());
  for (int i = 0; i < 4; ++i) m(i, i) = d[i];
  return m;
}

M block_diag(const M& a, const M& b) {
  M m(4, 4, a.zero());
  m.set_block(0, 0, a);
  m.set_block(2, 2, b);
  return m;
}

M blocks(const M& a, const M& b, const M& c, const M& d) {
  M m(4, 4, a.zero());
  m.set_block(0, 0, a);
  m.set_block(0, 2, b);
  m.set_block(2, 0, c);
  m.set_block(2, 2, d);
  return m;
}

std::vector<M> gl2_gens(const Scalars& s, const Field& k) {
  std::vector<M> out;
  for (auto& a : s.add) {
    M m = id(2, k);
    m(0, 1) = a;
    out.push_back(m);
  }
  M w(2, 2, k.zero());
  w(0, 1) = w(1, 0) = k.one();
  out.push_back(w);
  for (auto& g : s.mult) {
    M m = id(2, k);
    m(0, 0) = g;
    out.push_back(m);
  }
  return out;
}

M swap12(const M& g) {
  M n = g;
  for (int c = 0; c < 4; ++c) std::swap(n(1, c), n(2, c));
  for (int r = 0; r < 4; ++r) std::swap(n(r, 1), n(r, 2));
  return n;
}

}  // namespace

std::string predicate_name(Tag tag) { return "stabilizer-shape:" + tag_name(tag); }

GeneratorSet sigma_generators(const OrbitLabel& label, const Field& k) {
  if (label.tag == Tag::Undecided) throw HeisError("undecided label has no stabilizer");
  if (!label.reduced()) throw HeisError("kernel " + label.str() + " is not reduced");
  FamilyParams<Elem> p = label.params(k);
  std::vector<Elem> extra;
  for (auto& e : {p.c, p.d, p.t}) extra.push_back(e);
  Scalars s = scalars_for(k, extra);
  auto g2 = gl2_gens(s, k);
  M i2 = id(2, k), z2(2, 2, k.zero());
  GeneratorSet out;
  out.predicate = predicate_name(label.tag);
  auto& g = out.gens;
  auto add_transvections = [&](std::initializer_list<std::pair<int, int>> pos) {
    for (auto [i, j] : pos) {
      for (auto& a : s.add) g.push_back(transvection(i, j, a, k));
    }
  };
  switch (label.tag) {
    case Tag::PointOnQ:
      for (auto& a : g2) {
        g.push_back(block_diag(a, i2));
        g.push_back(block_diag(i2, a));
      }
      add_transvections({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
      break;
    case Tag::PointOffQ: {
      // similitudes of s02 + s13, moved over by b1 <-> b2
      std::vector<M> h;
      for (auto& a : g2) h.push_back(block_diag(a, inverse(a)->transpose()));
      for (auto& c : s.mult) h.push_back(block_diag(c * i2, i2));
      for (auto& a : s.add) {
        for (auto x : {std::pair{0, 0}, std::pair{1, 1}, std::pair{0, 1}}) {
          M sym = z2;
          sym(x.first, x.second) = a;
          sym(x.second, x.first) = a;
          h.push_back(blocks(i2, z2, sym, i2));
          h.push_back(blocks(i2, sym, z2, i2));
        }
      }
      for (auto& m : h) g.push_back(swap12(m));
      break;
    }
    case Tag::LineE:
      for (auto& c : s.mult) {
        g.push_back(diag4({c, k.one(), k.one(), k.one()}, k));
        g.push_back(diag4({k.one(), k.one(), k.one(), c}, k));
      }
      for (auto& a : g2) {
        M m = id(4, k);
        m.set_block(1, 1, a);
        g.push_back(m);
      }
      add_transvections({{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
      break;
    case Tag::LineT:
      for (auto& a : g2) {
        M b = a;
        b(0, 1) = -b(0, 1);
        b(1, 0) = -b(1, 0);
        g.push_back(block_diag(a, b));
      }
      for (auto& c : s.mult) g.push_back(block_diag(i2, c * i2));
      add_transvections({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
      break;
    case Tag::LineS:
      for (auto& a : g2) {
        g.push_back(block_diag(a, i2));
        g.push_back(block_diag(i2, a));
      }
      g.push_back(blocks(z2, i2, i2, z2));
      break;
    case Tag::PlaneJF:
      for (auto& c : s.mult) {
        g.push_back(diag4({c, k.one(), k.one(), k.one()}, k));
        g.push_back(diag4({k.one(), c, k.one(), k.one()}, k));
      }
      add_transvections({{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {1, 0}, {2, 0}, {3, 0}});
      break;
    case Tag::PlaneET:
      for (auto& a : g2) {
        M m = id(4, k);
        m.set_block(1, 1, a);
        m(3, 3) = det(a);
        g.push_back(m);
      }
      for (auto& c : s.mult) g.push_back(diag4({c, k.one(), k.one(), c.inv()}, k));
      add_transvections({{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
      break;
    case Tag::PlaneES: {
      for (auto& c : s.mult) {
        for (int i = 0; i < 4; ++i) {
          std::vector<Elem> d(4, k.one());
          d[i] = c;
          g.push_back(diag4(d, k));
        }
      }
      add_transvections({{0, 1}, {0, 3}, {2, 1}, {2, 3}});
      M sw(4, 4, k.zero());
      sw(0, 2) = sw(1, 3) = sw(2, 0) = sw(3, 1) = k.one();
      g.push_back(sw);
      break;
    }
    case Tag::PlaneTS: {
      M pc = shape::ts_conjugator(k.zero()), pt = pc.transpose();
      for (auto& a : g2) {
        g.push_back(pc * shape::kron(a, i2) * pt);
        g.push_back(pc * shape::kron(i2, a) * pt);
      }
      break;
    }
    case Tag::LineP1:
    case Tag::PlaneP3: {
      QuadExtension qe(k, p.t, p.d);
      std::vector<Elem> ladd, lmult;
      if (k.is_finite()) {
        ladd = qe.additive_basis();
        lmult = {qe.primitive()};
      } else {
        for (auto& a : s.add) ladd.push_back(qe.make(a, k.zero()));
        ladd.push_back(qe.u());
        lmult = {qe.u(), qe.make(k.one(), k.one())};
        for (auto& c : s.mult) lmult.push_back(qe.make(c, k.zero()));
      }
      M xi = qe.xi_matrix();
      g.push_back(block_diag(xi, xi));
      if (label.tag == Tag::LineP1) {
        for (auto& a : ladd) g.push_back(blocks(i2, qe.embed(a), z2, i2));
        g.push_back(blocks(z2, i2, i2, z2));
        for (auto& c : lmult) g.push_back(block_diag(qe.embed(c), i2));
      } else {
        for (auto& c : lmult) {
          g.push_back(block_diag(qe.embed(c), i2));
          g.push_back(block_diag(i2, qe.embed(c)));
        }
        add_transvections({{0, 2}, {0, 3}, {1, 2}, {1, 3}});
      }
      break;
    }
    case Tag::PlaneP2: {
      if (k.is_finite()) throw HeisError("no anisotropic planes over a finite field");
      shape::WModel<Elem> w(p);
      M one = i2;
      std::vector<std::pair<M, M>> samples{{w.u, z2}, {one + w.u, z2}, {z2, one}, {z2, w.u}, {one, one}, {one, w.u}};
      for (auto& c : s.mult) samples.push_back({c * one, z2});
      for (auto& [a, b] : samples) {
        g.push_back(w.left(a, b));
        g.push_back(w.right(a, b));
      }
      break;
    }
    case Tag::PlaneF:
    case Tag::Undecided: break;
  }
  // every generator must stabilize the kernel
  Subspace<Elem> kernel = representative(label, k);
  for (auto& m : g) {
    if (act_subspace(m, kernel) != kernel) throw HeisError("generator does not stabilize " + label.str() + ":\n" + mat_str(m));
  }
  return out;
}

Tri isomorphic(const HeisAlgebra<Elem>& a, const HeisAlgebra<Elem>& b) {
  if (a.dim_v() != 4 || b.dim_v() != 4) throw HeisError("isomorphism test needs dim V = 4");
  if (!a.reduced() || !b.reduced()) throw HeisError("isomorphism test needs reduced algebras");
  if (a.dim_z() != b.dim_z()) return Tri::No;
  return same_orbit(classify_subspace(a.kernel()), classify_subspace(b.kernel()));
}

ExhaustiveAut exhaustive_automorphisms_gf2(const Subspace<Elem>& kernel, bool parallel) {
  Field k = field_of(kernel.zero());
  if (k.order() != 2) throw HeisError("exhaustive automorphism search is for GF(2)");
  HeisAlgebra<GF<2>> h(convert(kernel, GF<2>{}));
  const unsigned dz = static_cast<unsigned>(h.dim_z()), dim = 4 + dz;
  // elements as bit masks: bits 0..3 for V, 4.. for Z
  auto to_vec = [](unsigned bits, unsigned n) {
    Vec<GF<2>> v;
    for (unsigned i = 0; i < n; ++i) v.push_back(GF<2>(bits >> i & 1));
    return v;
  };
  std::array<std::array<unsigned, 16>, 16> br{};
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      Vec<GF<2>> z = h.beta(to_vec(a, 4), to_vec(b, 4));
      for (unsigned i = 0; i < dz; ++i) br[a][b] |= z[i].code() << i;
    }
  }
  auto bracket = [&](unsigned x, unsigned y) { return br[x & 15][y & 15] << 4; };
  // z_k = [b_i, b_j] for some pair
  std::vector<std::pair<unsigned, unsigned>> zpair(dz);
  for (unsigned kk = 0; kk < dz; ++kk) {
    bool found = false;
    for (unsigned i = 0; i < 4 && !found; ++i) {
      for (unsigned j = i + 1; j < 4 && !found; ++j) {
        if (br[1u << i][1u << j] == 1u << kk) {
          zpair[kk] = {i, j};
          found = true;
        }
      }
    }
    if (!found) throw HeisError("no basis bracket hits a Z basis vector");
  }
  auto full_rank = [&](std::vector<unsigned> rows) {
    unsigned r = 0;
    for (unsigned bit = 0; bit < dim; ++bit) {
      unsigned piv = r;
      while (piv < rows.size() && !(rows[piv] >> bit & 1)) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[r], rows[piv]);
      for (unsigned i = 0; i < rows.size(); ++i) {
        if (i != r && (rows[i] >> bit & 1)) rows[i] ^= rows[r];
      }
      ++r;
    }
    return r == dim;
  };
  auto is_aut = [&](const std::vector<unsigned>& img) {
    auto phi = [&](unsigned x) {
      unsigned y = 0;
      for (unsigned i = 0; i < dim; ++i) {
        if (x >> i & 1) y ^= img[i];
      }
      return y;
    };
    for (unsigned i = 0; i < dim; ++i) {
      for (unsigned j = i + 1; j < dim; ++j) {
        if (bracket(img[i], img[j]) != phi(bracket(1u << i, 1u << j))) return false;
      }
    }
    return full_rank(img);
  };
  const unsigned taus = 1u << (4 * dz);
  std::vector<std::uint8_t> hit(1u << 16, 0);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : count) if (parallel)
  for (int s = 0; s < (1 << 16); ++s) {
    std::vector<unsigned> img(dim);
    for (unsigned j = 0; j < 4; ++j) img[j] = static_cast<unsigned>(s) >> (4 * j) & 15;  // column j = sigma b_j
    for (unsigned kk = 0; kk < dz; ++kk) img[4 + kk] = bracket(img[zpair[kk].first], img[zpair[kk].second]);
    if (!is_aut(img)) continue;
    hit[s] = 1;
    for (unsigned t = 0; t < taus; ++t) {
      std::vector<unsigned> with_tau = img;
      for (unsigned j = 0; j < 4; ++j) with_tau[j] |= (t >> (dz * j) & ((1u << dz) - 1)) << 4;
      if (is_aut(with_tau)) ++count;
    }
  }
  ExhaustiveAut out;
  out.count = count;
  for (unsigned s = 0; s < (1u << 16); ++s) {
    if (!hit[s]) continue;
    Matrix<Elem> sigma(4, 4, k.zero());
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j) sigma(i, j) = k.from_int(s >> (4 * j + i) & 1);
    out.sigmas.push_back(matrix_code(sigma));
  }
  std::sort(out.sigmas.begin(), out.sigmas.end());
  return out;
}

}  // namespace heis
