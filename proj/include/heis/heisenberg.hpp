#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heis/classify.hpp"

namespace heis {

struct HeisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index pairs i<j of a basis of K^n, in lexicographic order (kPairs for n = 4).
inline std::vector<std::pair<int, int>> wedge_pairs(std::size_t n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    for (int j = i + 1; j < static_cast<int>(n); ++j) out.push_back({i, j});
  }
  return out;
}

// The Lie algebra V x Z with Z = Lambda^2 V / kernel and [(v,x),(w,y)] = (0, v^w + kernel).
// Elements are vectors of length dim V + dim Z; Z uses the unit vectors at the
// non-pivot coordinates of the kernel as coset representatives.
template <class S>
class HeisAlgebra {
 public:
  HeisAlgebra(const Subspace<S>& kernel, std::size_t vdim = 4) : n_(vdim), pairs_(wedge_pairs(vdim)), kernel_(kernel) {
    if (vdim != 2 && vdim != 4) throw HeisError("dim V must be 2 or 4");
    if (kernel.ambient() != pairs_.size()) throw HeisError("kernel lives in the wrong space");
    if (kernel.dim() == pairs_.size()) throw HeisError("kernel is all of Lambda^2");
    std::vector<bool> piv(pairs_.size(), false);
    for (auto p : kernel.pivots()) piv[p] = true;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (!piv[i]) zidx_.push_back(i);
    }
  }

  std::size_t dim_v() const { return n_; }
  std::size_t dim_z() const { return zidx_.size(); }
  std::size_t dim() const { return n_ + zidx_.size(); }
  const Subspace<S>& kernel() const { return kernel_; }
  S zero() const { return kernel_.zero(); }

  Tensor<S> wedge_n(const Vec<S>& v, const Vec<S>& w) const {
    Tensor<S> t;
    for (auto [i, j] : pairs_) t.push_back(v[i] * w[j] - v[j] * w[i]);
    return t;
  }
  // coordinates of x + kernel
  Vec<S> project(const Tensor<S>& x) const {
    Vec<S> r = kernel_.reduce(x), z;
    for (auto i : zidx_) z.push_back(r[i]);
    return z;
  }
  Tensor<S> lift(const Vec<S>& z) const {
    Tensor<S> t(pairs_.size(), zero());
    for (std::size_t k = 0; k < zidx_.size(); ++k) t[zidx_[k]] = z[k];
    return t;
  }
  Vec<S> beta(const Vec<S>& v, const Vec<S>& w) const { return project(wedge_n(v, w)); }

  Vec<S> v_part(const Vec<S>& a) const { return Vec<S>(a.begin(), a.begin() + n_); }
  Vec<S> z_part(const Vec<S>& a) const { return Vec<S>(a.begin() + n_, a.end()); }
  Vec<S> make(const Vec<S>& v, const Vec<S>& z) const {
    Vec<S> a = v;
    a.insert(a.end(), z.begin(), z.end());
    return a;
  }
  Vec<S> bracket(const Vec<S>& a, const Vec<S>& b) const {
    return make(Vec<S>(n_, zero()), beta(v_part(a), v_part(b)));
  }

  // row i: the coordinates of beta(b_i, b_j) for j = 0..n-1, concatenated
  Matrix<S> contraction() const {
    Matrix<S> m(n_, n_ * dim_z(), zero());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Vec<S> z = beta(unit_vector(static_cast<int>(i), zero(), n_), unit_vector(static_cast<int>(j), zero(), n_));
        for (std::size_t k = 0; k < z.size(); ++k) m(i, j * dim_z() + k) = z[k];
      }
    }
    return m;
  }
  // no nonzero v with beta(v, V) = 0
  bool reduced() const { return rank(contraction()) == n_; }

  Subspace<S> center() const {
    std::vector<Vec<S>> rows;
    for (auto& v : nullspace(contraction().transpose())) rows.push_back(make(v, Vec<S>(dim_z(), zero())));
    for (std::size_t k = 0; k < dim_z(); ++k) rows.push_back(unit_vector(static_cast<int>(n_ + k), zero(), dim()));
    return Subspace<S>::span(rows, dim(), zero());
  }
  Subspace<S> commutator() const {
    std::vector<Vec<S>> rows;
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i + 1; j < dim(); ++j) {
        rows.push_back(bracket(unit_vector(static_cast<int>(i), zero(), dim()), unit_vector(static_cast<int>(j), zero(), dim())));
      }
    }
    return Subspace<S>::span(rows, dim(), zero());
  }
  Subspace<S> z_subspace() const {
    std::vector<Vec<S>> rows;
    for (std::size_t k = 0; k < dim_z(); ++k) rows.push_back(unit_vector(static_cast<int>(n_ + k), zero(), dim()));
    return Subspace<S>::span(rows, dim(), zero());
  }

  // matrix of X -> s X s' on Lambda^2 (column convention)
  Matrix<S> lambda2(const Matrix<S>& s) const {
    Matrix<S> c(pairs_.size(), pairs_.size(), zero());
    for (std::size_t r = 0; r < pairs_.size(); ++r) {
      auto [i, j] = pairs_[r];
      for (std::size_t q = 0; q < pairs_.size(); ++q) {
        auto [k, l] = pairs_[q];
        c(r, q) = s(i, k) * s(j, l) - s(i, l) * s(j, k);
      }
    }
    return c;
  }

 private:
  std::size_t n_;
  std::vector<std::pair<int, int>> pairs_;
  Subspace<S> kernel_;
  std::vector<std::size_t> zidx_;
};

template <class S>
struct SigmaPrime {
  std::optional<Matrix<S>> map;
  // on failure: a kernel vector and its image outside the kernel
  Tensor<S> witness, image;
};

// The map on Z induced by sigma, if sigma stabilizes the kernel.
template <class S>
SigmaPrime<S> induced_sigma_prime(const Matrix<S>& sigma, const HeisAlgebra<S>& h) {
  SigmaPrime<S> out;
  Matrix<S> c = h.lambda2(sigma);
  for (auto& x : h.kernel().rows()) {
    Tensor<S> y = c.apply(x);
    if (!h.kernel().contains(y)) {
      out.witness = x;
      out.image = y;
      return out;
    }
  }
  Matrix<S> m(h.dim_z(), h.dim_z(), h.zero());
  for (std::size_t k = 0; k < h.dim_z(); ++k) {
    Vec<S> col = h.project(c.apply(h.lift(unit_vector(static_cast<int>(k), h.zero(), h.dim_z()))));
    for (std::size_t r = 0; r < h.dim_z(); ++r) m(r, k) = col[r];
  }
  out.map = m;
  return out;
}

// (v, z) -> (sigma v, sigma' z + tau v)
template <class S>
struct Automorphism {
  Matrix<S> sigma, sigma_prime, tau;

  Vec<S> apply(const Vec<S>& a) const {
    std::size_t n = sigma.rows();
    Vec<S> v(a.begin(), a.begin() + n), z(a.begin() + n, a.end());
    Vec<S> out = sigma.apply(v);
    Vec<S> zz = vec_add(sigma_prime.apply(z), tau.apply(v));
    out.insert(out.end(), zz.begin(), zz.end());
    return out;
  }
  // this after o
  Automorphism compose(const Automorphism& o) const {
    return {sigma * o.sigma, sigma_prime * o.sigma_prime, sigma_prime * o.tau + tau * o.sigma};
  }
  Automorphism inverse() const {
    Matrix<S> si = *heis::inverse(sigma), pi = *heis::inverse(sigma_prime);
    return {si, pi, (zero_like(sigma.zero()) - one_like(sigma.zero())) * (pi * tau * si)};
  }
  Matrix<S> matrix() const {
    std::size_t n = sigma.rows(), m = sigma_prime.rows();
    Matrix<S> out(n + m, n + m, sigma.zero());
    out.set_block(0, 0, sigma);
    out.set_block(n, 0, tau);
    out.set_block(n, n, sigma_prime);
    return out;
  }
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.sigma == b.sigma && a.sigma_prime == b.sigma_prime && a.tau == b.tau;
  }
};

// Linear map on the algebra preserving the bracket on all basis pairs.
template <class S>
bool preserves_bracket(const Matrix<S>& phi, const HeisAlgebra<S>& h) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      Vec<S> a = unit_vector(static_cast<int>(i), h.zero(), h.dim()), b = unit_vector(static_cast<int>(j), h.zero(), h.dim());
      if (h.bracket(phi.apply(a), phi.apply(b)) != phi.apply(h.bracket(a, b))) return false;
    }
  }
  return true;
}

template <class S>
Automorphism<S> make_automorphism(const HeisAlgebra<S>& h, const Matrix<S>& sigma, const Matrix<S>& tau) {
  if (det(sigma).is_zero()) throw HeisError("sigma is singular");
  if (tau.rows() != h.dim_z() || tau.cols() != h.dim_v()) throw HeisError("tau has the wrong shape");
  auto sp = induced_sigma_prime(sigma, h);
  if (!sp.map) throw HeisError("sigma does not stabilize the kernel");
  Automorphism<S> a{sigma, *sp.map, tau};
  if (!preserves_bracket(a.matrix(), h)) throw HeisError("bracket not preserved");
  return a;
}

// ---- stabilizers of the orbit representatives ------------------------------

struct GeneratorSet {
  std::vector<Matrix<Elem>> gens;
  std::string predicate;  // name of the membership test that describes the group
};

// Generators of the stabilizer of the kernel of a reduced label (perp labels
// share the group of the non-perp kernel). Finite fields: elementary
// parameters, so the group is generated; infinite fields: sample parameters.
// Throws HeisError for non-reduced or undecided labels.
GeneratorSet sigma_generators(const OrbitLabel& label, const Field& k);

std::string predicate_name(Tag tag);

namespace shape {

template <class S>
Matrix<S> blk(const Matrix<S>& m, int i, int j) {
  return m.block(2 * i, 2 * j, 2, 2);
}

template <class S>
bool proportional(const Matrix<S>& a, const Matrix<S>& b) {
  // a = c b for some c (b nonzero)
  S c = zero_like(a.zero());
  bool found = false;
  for (std::size_t i = 0; i < b.data().size(); ++i) {
    if (!b.data()[i].is_zero()) {
      c = a.data()[i] / b.data()[i];
      found = true;
      break;
    }
  }
  if (!found) return a.is_zero();
  return a == c * b;
}

template <class S>
bool in_l(const Matrix<S>& x, const FamilyParams<S>& p) {
  return x(0, 1) == zero_like(p.d) - p.d * x(1, 0) && x(1, 1) == x(0, 0) + p.t * x(1, 0);
}

template <class S>
Matrix<S> xi_times(const Matrix<S>& m, const FamilyParams<S>& p) {
  // diag(xi, xi) m with xi = [[1,t],[0,-1]]
  Matrix<S> r = m;
  for (std::size_t c = 0; c < 4; ++c) {
    for (int b = 0; b < 2; ++b) {
      S x = m(2 * b, c), y = m(2 * b + 1, c);
      r(2 * b, c) = x + p.t * y;
      r(2 * b + 1, c) = zero_like(x) - y;
    }
  }
  return r;
}

template <class S>
bool zeros_at(const Matrix<S>& m, std::initializer_list<std::pair<int, int>> pos) {
  for (auto [i, j] : pos) {
    if (!m(i, j).is_zero()) return false;
  }
  return true;
}

// the change of basis taking <s02, s03+s12, s13> to T+S
template <class S>
Matrix<S> ts_conjugator(const S& sample) {
  Matrix<S> p(4, 4, zero_like(sample));
  p(0, 0) = p(3, 3) = p(2, 1) = one_like(sample);
  p(1, 2) = zero_like(sample) - one_like(sample);
  return p;
}

template <class S>
Matrix<S> kron(const Matrix<S>& g, const Matrix<S>& a) {
  Matrix<S> r(4, 4, g.zero());
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + i2, 2 * j1 + j2) = g(i1, j1) * a(i2, j2);
  return r;
}

// quaternion pieces for W: u = [[0,-d],[1,t]], bar(A) = xi A xi^-1
template <class S>
struct WModel {
  Matrix<S> u, xi;
  S c;
  explicit WModel(const FamilyParams<S>& p) : u(2, 2, p.c), xi(2, 2, p.c), c(p.c) {
    S one = one_like(p.c);
    u(0, 1) = zero_like(one) - p.d;
    u(1, 0) = one;
    u(1, 1) = p.t;
    xi(0, 0) = one;
    xi(0, 1) = p.t;
    xi(1, 1) = zero_like(one) - one;
  }
  Matrix<S> bar(const Matrix<S>& a) const { return xi * a * xi; }  // xi is an involution
  Matrix<S> left(const Matrix<S>& a, const Matrix<S>& b) const {
    Matrix<S> m(4, 4, c);
    m.set_block(0, 0, a);
    m.set_block(0, 2, (zero_like(c) - c) * bar(b));
    m.set_block(2, 0, b);
    m.set_block(2, 2, bar(a));
    return m;
  }
  Matrix<S> right(const Matrix<S>& a, const Matrix<S>& b) const {
    Matrix<S> bx = b * xi;
    Matrix<S> m(4, 4, c);
    m.set_block(0, 0, a);
    m.set_block(0, 2, (zero_like(c) - c) * bx);
    m.set_block(2, 0, bx);
    m.set_block(2, 2, a);
    return m;
  }
  // lambda of the basis 1, u, I, I u
  std::vector<Matrix<S>> left_basis() const {
    Matrix<S> one = Matrix<S>::identity(2, c), zero(2, 2, c);
    return {left(one, zero), left(u, zero), left(zero, one), left(zero, u)};
  }
};

}  // namespace shape

// Closed-form test for membership of an invertible m in the stabilizer of the
// representative kernel of `tag`; m is assumed invertible.
template <class S>
bool membership_shape(Tag tag, const Matrix<S>& m, const FamilyParams<S>& p) {
  using namespace shape;
  switch (tag) {
    case Tag::PointOnQ: return blk(m, 1, 0).is_zero();
    case Tag::PointOffQ: {
      // conjugate by b1 <-> b2, then the similitude condition for s02 + s13
      Matrix<S> n = m;
      for (int c = 0; c < 4; ++c) std::swap(n(1, c), n(2, c));
      for (int r = 0; r < 4; ++r) std::swap(n(r, 1), n(r, 2));
      Matrix<S> j(4, 4, m.zero());
      j(0, 2) = j(1, 3) = one_like(m.zero());
      j(2, 0) = j(3, 1) = zero_like(m.zero()) - one_like(m.zero());
      Matrix<S> g = n * j * n.transpose();
      return g == g(0, 2) * j;
    }
    case Tag::LineE: return zeros_at(m, {{1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
    case Tag::LineT: {
      if (!blk(m, 1, 0).is_zero()) return false;
      Matrix<S> a = blk(m, 0, 0);
      a(0, 1) = zero_like(a(0, 1)) - a(0, 1);
      a(1, 0) = zero_like(a(1, 0)) - a(1, 0);
      return proportional(blk(m, 1, 1), a);
    }
    case Tag::LineS:
      return (blk(m, 0, 1).is_zero() && blk(m, 1, 0).is_zero()) || (blk(m, 0, 0).is_zero() && blk(m, 1, 1).is_zero());
    case Tag::LineP1:
    case Tag::PlaneP3: {
      auto fits = [&](const Matrix<S>& x) {
        if (tag == Tag::PlaneP3) return blk(x, 1, 0).is_zero() && in_l(blk(x, 0, 0), p) && in_l(blk(x, 1, 1), p);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (!in_l(blk(x, i, j), p)) return false;
        return true;
      };
      return fits(m) || fits(xi_times(m, p));
    }
    case Tag::PlaneJF: return zeros_at(m, {{0, 1}, {0, 2}, {0, 3}});
    case Tag::PlaneET:
      return zeros_at(m, {{1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}) &&
             m(3, 3) * m(0, 0) == m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    case Tag::PlaneES:
      return zeros_at(m, {{0, 2}, {1, 0}, {1, 2}, {1, 3}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}) ||
             zeros_at(m, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}, {3, 0}, {3, 2}, {3, 3}});
    case Tag::PlaneTS: {
      Matrix<S> pc = ts_conjugator(m.zero());
      Matrix<S> n = pc.transpose() * m * pc;
      Matrix<S> r(4, 4, m.zero());
      for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + j1, 2 * i2 + j2) = n(2 * i1 + i2, 2 * j1 + j2);
      return rank(r) == 1;
    }
    case Tag::PlaneP2: {
      // m normalizes lambda(H)
      WModel<S> w(p);
      auto basis = w.left_basis();
      Matrix<S> flat(4, 16, m.zero());
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 16; ++k) flat(i, k) = basis[i].data()[k];
      Subspace<S> span = Subspace<S>::from_matrix(flat);
      Matrix<S> mi = *inverse(m);
      for (auto& b : basis) {
        Matrix<S> c = m * b * mi;
        if (!span.contains(Vec<S>(c.data().begin(), c.data().end()))) return false;
      }
      return true;
    }
    case Tag::PlaneF:
    case Tag::Undecided: break;
  }
  throw HeisError("no stabilizer description for " + tag_name(tag));
}

template <class S>
bool membership_predicate(Tag tag, const Matrix<S>& m, const FamilyParams<S>& p) {
  return !det(m).is_zero() && membership_shape(tag, m, p);
}

// Same-labelled kernels give isomorphic algebras; Unknown where the labels
// cannot be compared. Both algebras must be reduced with dim V = 4.
Tri isomorphic(const HeisAlgebra<Elem>& a, const HeisAlgebra<Elem>& b);

// Every bracket-preserving linear bijection of the algebra over GF(2), found by
// running over all 4x4 V-parts sigma; the Z-images are forced by the bracket.
// For each sigma that works, all Z-parts tau of the basis images are checked
// too; tau never enters the bracket test, so a failing sigma is checked with
// tau = 0 only.
struct ExhaustiveAut {
  std::uint64_t count = 0;              // automorphisms found
  std::vector<std::uint64_t> sigmas;    // matrix codes of the V-parts, sorted
};
// The sigma loop runs under OpenMP unless parallel is false.
ExhaustiveAut exhaustive_automorphisms_gf2(const Subspace<Elem>& kernel, bool parallel = true);

}  // namespace heis
