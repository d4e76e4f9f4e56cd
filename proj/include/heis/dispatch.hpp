#pragma once

#include <utility>

#include "heis/gf.hpp"
#include "heis/linalg.hpp"

namespace heis {

// Calls f with a sample scalar: GF<Q>{} when k is the default table field
// gf:Q (Q <= 16), otherwise k.zero().
template <class F>
decltype(auto) with_scalar(const Field& k, F&& f) {
  if (k.is_finite() && k.order() <= 16 && k == make_field("gf:" + std::to_string(k.order()))) {
    switch (k.order()) {
      case 2: return f(GF<2>{});
      case 3: return f(GF<3>{});
      case 4: return f(GF<4>{});
      case 5: return f(GF<5>{});
      case 7: return f(GF<7>{});
      case 8: return f(GF<8>{});
      case 9: return f(GF<9>{});
      case 11: return f(GF<11>{});
      case 13: return f(GF<13>{});
      case 16: return f(GF<16>{});
      default: break;
    }
  }
  return f(k.zero());
}

template <class S>
S to_scalar(const Elem& e, const S& sample) {
  if constexpr (std::is_same_v<S, Elem>) {
    (void)sample;
    return e;
  } else {
    return S::from_elem(e);
  }
}

template <class S>
Elem to_elem(const S& s, const Field& k) {
  if constexpr (std::is_same_v<S, Elem>) {
    (void)k;
    return s;
  } else {
    return k.element(s.code());
  }
}

// 4 bits per entry, row-major; 4x4 matrices over fields with q <= 16.
template <class S>
std::uint64_t matrix_code(const Matrix<S>& m) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < m.data().size(); ++i) c |= scalar_code(m.data()[i]) << (4 * i);
  return c;
}

template <class S>
Matrix<S> matrix_from_code(std::uint64_t c, std::size_t n, const S& sample) {
  Matrix<S> m(n, n, sample);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar_from_code(sample, (c >> (4 * (i * n + j))) & 15);
  return m;
}

}  // namespace heis
