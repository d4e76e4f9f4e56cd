#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heis/gf.hpp"

namespace heis {

template <class S>
using Vec = std::vector<S>;

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& sample)
      : rows_(rows), cols_(cols), zero_(zero_like(sample)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const S& sample) {
    Matrix m(n, n, sample);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(sample);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows, std::size_t cols, const S& sample) {
    Matrix m(rows.size(), cols, sample);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<S> row(std::size_t i) const { return Vec<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<S> col(std::size_t j) const {
    Vec<S> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<Vec<S>> row_list() const {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

  bool is_zero() const {
    for (auto& x : data_) {
      if (!(x == zero_)) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (x == a.zero_) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }
  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // row vector times matrix
  Vec<S> left_apply(const Vec<S>& v) const {
    Vec<S> out(cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (v[i] == zero_) continue;
      for (std::size_t j = 0; j < cols_; ++j) out[j] = out[j] + v[i] * (*this)(i, j);
    }
    return out;
  }
  Vec<S> apply(const Vec<S>& v) const {
    Vec<S> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    }
    return out;
  }

  const std::vector<S>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  S zero_{};
  std::vector<S> data_;
};

// In-place reduced row echelon form; returns pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const S zero = m.zero();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == zero) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    S inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == zero) continue;
      S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
  return rref(m).size();
}

template <class S>
S det(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  const S zero = m.zero();
  S acc = one_like(zero);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == zero) ++piv;
    if (piv == n) return zero;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      acc = -acc;
    }
    acc = acc * m(c, c);
    S inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == zero) continue;
      S f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return acc;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n, m.zero());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<S>::identity(n, m.zero()));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

// Basis (as rows) of {x : m x = 0}.
template <class S>
std::vector<Vec<S>> nullspace(Matrix<S> m) {
  auto piv = rref(m);
  const S zero = m.zero();
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec<S>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec<S> v(m.cols(), zero);
    v[free] = one_like(zero);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
    out.push_back(v);
  }
  return out;
}

// Solve x m = b for a row vector x (m has rows = len x).
template <class S>
std::optional<Vec<S>> solve_left(const Matrix<S>& m, const Vec<S>& b) {
  // x m = b  <=>  m' x' = b'
  Matrix<S> t = m.transpose();
  Matrix<S> aug(t.rows(), t.cols() + 1, m.zero());
  aug.set_block(0, 0, t);
  for (std::size_t i = 0; i < t.rows(); ++i) aug(i, t.cols()) = b[i];
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == t.cols()) return std::nullopt;
  Vec<S> x(t.cols(), m.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, t.cols());
  return x;
}

// Row space in canonical (reduced echelon) form.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const S& sample) : n_(ambient), basis_(0, ambient, sample) {}

  static Subspace span(const std::vector<Vec<S>>& rows, std::size_t ambient, const S& sample) {
    Subspace s(ambient, sample);
    if (rows.empty()) return s;
    Matrix<S> m = Matrix<S>::from_rows(rows, ambient, sample);
    auto piv = rref(m);
    s.basis_ = m.block(0, 0, piv.size(), ambient);
    s.pivots_ = piv;
    return s;
  }
  static Subspace whole(std::size_t ambient, const S& sample) {
    return from_matrix(Matrix<S>::identity(ambient, sample));
  }
  static Subspace from_matrix(const Matrix<S>& m) {
    return span(m.row_list(), m.cols(), m.zero());
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec<S>> rows() const { return basis_.row_list(); }
  S zero() const { return basis_.zero(); }

  bool contains(const Vec<S>& v) const {
    Vec<S> r = reduce(v);
    for (auto& x : r) {
      if (!(x == basis_.zero())) return false;
    }
    return true;
  }
  // v minus its projection along pivots; zero iff v is in the space
  Vec<S> reduce(Vec<S> v) const {
    for (std::size_t r = 0; r < dim(); ++r) {
      S f = v[pivots_[r]];
      if (f == basis_.zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = v[j] - f * basis_(r, j);
    }
    return v;
  }
  // coordinates of v in the echelon basis (v assumed inside)
  Vec<S> coords(const Vec<S>& v) const {
    Vec<S> c;
    for (std::size_t r = 0; r < dim(); ++r) c.push_back(v[pivots_[r]]);
    return c;
  }

  Subspace operator+(const Subspace& o) const {
    auto rs = rows();
    for (auto& r : o.rows()) rs.push_back(r);
    return span(rs, n_, basis_.zero());
  }
  Subspace intersect(const Subspace& o) const {
    // x = a B = b C  ->  nullspace of [B; -C] transposed
    if (dim() == 0 || o.dim() == 0) return Subspace(n_, basis_.zero());
    std::size_t d1 = dim(), d2 = o.dim();
    Matrix<S> st(n_, d1 + d2, basis_.zero());
    for (std::size_t i = 0; i < d1; ++i) {
      for (std::size_t j = 0; j < n_; ++j) st(j, i) = basis_(i, j);
    }
    for (std::size_t i = 0; i < d2; ++i) {
      for (std::size_t j = 0; j < n_; ++j) st(j, d1 + i) = -o.basis_(i, j);
    }
    std::vector<Vec<S>> out;
    for (auto& k : nullspace(st)) {
      Vec<S> a(k.begin(), k.begin() + static_cast<long>(d1));
      out.push_back(basis_.left_apply(a));
    }
    return span(out, n_, basis_.zero());
  }
  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i) {
      if (!contains(o.basis_.row(i))) return false;
    }
    return true;
  }
  // {x : b G x' = 0 for all basis rows b}
  Subspace annihilator(const Matrix<S>& gram) const {
    if (dim() == 0) return whole(n_, basis_.zero());
    return span(nullspace(basis_ * gram), n_, basis_.zero());
  }
  // image under row-vector action v -> v M
  Subspace image(const Matrix<S>& m) const {
    if (dim() == 0) return Subspace(m.cols(), basis_.zero());
    return from_matrix(basis_ * m);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  Matrix<S> basis_;
  std::vector<std::size_t> pivots_;
};

template <class S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S acc = zero_like(a.at(0));
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

template <class S>
Vec<S> vec_scale(const S& s, const Vec<S>& a) {
  Vec<S> r = a;
  for (auto& x : r) x = s * x;
  return r;
}
template <class S>
bool vec_is_zero(const Vec<S>& a) {
  for (auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// Convert between backends (Elem <-> GF<Q>).
template <class T, class S>
Matrix<T> convert(const Matrix<S>& m, const T& sample) {
  Matrix<T> r(m.rows(), m.cols(), sample);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = scalar_from_code(sample, scalar_code(m(i, j)));
  }
  return r;
}
template <class T, class S>
Subspace<T> convert(const Subspace<S>& u, const T& sample) {
  if (u.dim() == 0) return Subspace<T>(u.ambient(), sample);
  return Subspace<T>::from_matrix(convert(u.basis(), sample));
}

template <class S>
std::string mat_str(const Matrix<S>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + scalar_str(m(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace heis
