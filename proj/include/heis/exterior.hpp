#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "heis/linalg.hpp"

namespace heis {

// Coordinates of an alternating tensor on K^4 in the order s01,s02,s03,s12,s13,s23.
constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<const char*, 6> kPairNames{"s01", "s02", "s03", "s12", "s13", "s23"};

constexpr int pair_index(int i, int j) {
  for (int k = 0; k < 6; ++k) {
    if (kPairs[k].first == i && kPairs[k].second == j) return k;
  }
  return -1;
}

template <class S>
using Tensor = Vec<S>;

template <class S>
Tensor<S> basis_tensor(int k, const S& sample) {
  Tensor<S> t(6, zero_like(sample));
  t[k] = one_like(sample);
  return t;
}

template <class S>
Vec<S> unit_vector(int i, const S& sample, std::size_t n = 4) {
  Vec<S> v(n, zero_like(sample));
  v[i] = one_like(sample);
  return v;
}

template <class S>
Tensor<S> wedge(const Vec<S>& v, const Vec<S>& w) {
  Tensor<S> t;
  t.reserve(6);
  for (auto [i, j] : kPairs) t.push_back(v[i] * w[j] - v[j] * w[i]);
  return t;
}

template <class S>
Matrix<S> skew_matrix(const Tensor<S>& x) {
  Matrix<S> m(4, 4, x[0]);
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    m(i, j) = x[k];
    m(j, i) = -x[k];
  }
  return m;
}

template <class S>
Tensor<S> tensor_of(const Matrix<S>& m) {
  Tensor<S> t;
  for (auto [i, j] : kPairs) t.push_back(m(i, j));
  return t;
}

template <class S>
S pfaffian(const Tensor<S>& x) {
  return x[0] * x[5] - x[1] * x[4] + x[2] * x[3];
}

template <class S>
S polar(const Tensor<S>& x, const Tensor<S>& y) {
  return x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1] + x[2] * y[3] + x[3] * y[2];
}

// Gram matrix J of the polar form: polar(x,y) = x J y'.
template <class S>
Matrix<S> polar_gram(const S& sample) {
  Matrix<S> j(6, 6, sample);
  S one = one_like(sample);
  j(0, 5) = j(5, 0) = one;
  j(1, 4) = j(4, 1) = -one;
  j(2, 3) = j(3, 2) = one;
  return j;
}

// Upper form matrix in the rearranged basis s01,s02,s03,s23,-s13,s12.
template <class S>
struct PfaffianContext {
  Matrix<S> rearrange;  // y = rearrange * x
  Matrix<S> m_pf;
  Matrix<S> j;

  explicit PfaffianContext(const S& sample) : rearrange(6, 6, sample), m_pf(6, 6, sample), j(6, 6, sample) {
    S one = one_like(sample);
    const int src[6] = {0, 1, 2, 5, 4, 3};
    for (int r = 0; r < 6; ++r) rearrange(r, src[r]) = r == 4 ? -one : one;
    for (int i = 0; i < 3; ++i) m_pf(i, i + 3) = one;
    j = m_pf + m_pf.transpose();
  }
  S pf(const Tensor<S>& x) const {
    Vec<S> y = rearrange.apply(x);
    return dot(m_pf.left_apply(y), y);
  }

 private:
  static S dot(const Vec<S>& a, const Vec<S>& b) {
    S acc = zero_like(a[0]);
    for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
  }
};

// 6x6 matrix of X -> A X A' on coordinates (column convention).
template <class S>
Matrix<S> compound(const Matrix<S>& a) {
  Matrix<S> c(6, 6, a.zero());
  for (int r = 0; r < 6; ++r) {
    auto [i, j] = kPairs[r];
    for (int s = 0; s < 6; ++s) {
      auto [k, l] = kPairs[s];
      c(r, s) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
    }
  }
  return c;
}

template <class S>
Tensor<S> act(const Matrix<S>& a, const Tensor<S>& x) {
  return compound(a).apply(x);
}

template <class S>
Subspace<S> act_subspace(const Matrix<S>& a, const Subspace<S>& u) {
  return u.image(compound(a).transpose());
}

template <class S>
Subspace<S> perp(const Subspace<S>& u) {
  return u.annihilator(polar_gram(u.zero()));
}

template <class S>
Subspace<S> tensor_span(const std::vector<Tensor<S>>& ts, const S& sample) {
  return Subspace<S>::span(ts, 6, sample);
}

template <class S>
Tensor<S> line_to_quadric(const Vec<S>& v, const Vec<S>& w) {
  Tensor<S> t = wedge(v, w);
  if (vec_is_zero(t)) throw std::invalid_argument("vectors are dependent");
  return t;
}

// Column space of the skew matrix of a decomposable tensor.
template <class S>
Subspace<S> quadric_to_line(const Tensor<S>& x) {
  if (vec_is_zero(x)) throw std::invalid_argument("zero tensor");
  if (!pfaffian(x).is_zero()) throw std::invalid_argument("tensor is not on the Klein quadric");
  return Subspace<S>::from_matrix(skew_matrix(x).transpose());
}

// q|U as an upper triangular matrix in the echelon basis of U.
template <class S>
Matrix<S> restrict_form(const Subspace<S>& u) {
  std::size_t d = u.dim();
  Matrix<S> m(d, d, u.zero());
  auto rows = u.rows();
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = pfaffian(rows[i]);
    for (std::size_t j = i + 1; j < d; ++j) m(i, j) = polar(rows[i], rows[j]);
  }
  return m;
}

// Symmetric polar Gram matrix of q|U.
template <class S>
Matrix<S> restrict_polar(const Subspace<S>& u) {
  std::size_t d = u.dim();
  Matrix<S> m(d, d, u.zero());
  auto rows = u.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = polar(rows[i], rows[j]);
  }
  return m;
}

template <class S>
S quad_value(const Matrix<S>& upper, const Vec<S>& x) {
  S acc = zero_like(upper.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i; j < x.size(); ++j) acc = acc + upper(i, j) * x[i] * x[j];
  }
  return acc;
}

// ---- JSON (dynamic scalars) ----------------------------------------------

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json scalar_json(const Elem& e);
Elem scalar_from_json(const Field& f, const nlohmann::json& j);
nlohmann::json subspace_to_json(const Subspace<Elem>& u, const Field& f);
// Accepts {"field"?, "ambient"?, "basis": [[...], ...]}; scalars as strings or integers.
Subspace<Elem> subspace_from_json(const nlohmann::json& j, const Field& f);
nlohmann::json matrix_to_json(const Matrix<Elem>& m);
Matrix<Elem> matrix_from_json(const nlohmann::json& j, const Field& f);

// "s01+s23", "s03-s12+2*s13"; coefficients are parsed over f.
Tensor<Elem> parse_tensor(const std::string& s, const Field& f);
std::string tensor_str(const Tensor<Elem>& x);

}  // namespace heis
