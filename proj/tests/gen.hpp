#pragma once

#include <random>

#include "heis/field.hpp"

namespace heis::testgen {

inline Elem random_elem(const Field& f, std::mt19937_64& rng, int box = 5) {
  if (f.is_finite()) return f.element(rng() % f.order());
  std::uniform_int_distribution<int> small(-box, box);
  switch (f.kind()) {
    case FieldKind::Rationals: {
      int den = 0;
      while (den == 0) den = small(rng);
      return f.from_int(small(rng)) / f.from_int(den);
    }
    case FieldKind::FunctionField: {
      Elem t = f.parse("t");
      auto poly = [&](int deg) {
        Elem acc = f.zero();
        for (int i = 0; i <= deg; ++i) acc = acc * t + f.from_int(small(rng));
        return acc;
      };
      Elem den = poly(static_cast<int>(rng() % 3));
      if (den.is_zero()) den = f.one();
      return poly(static_cast<int>(rng() % 4)) / den;
    }
    default: {
      Elem u = f.parse("u");
      Field base = field_of(f.parse("1"));
      (void)base;
      Elem a = f.from_int(small(rng)), b = f.from_int(small(rng));
      return a + b * u;
    }
  }
}

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng, int box = 5) {
  for (;;) {
    Elem e = random_elem(f, rng, box);
    if (!e.is_zero()) return e;
  }
}

}  // namespace heis::testgen

#include "heis/exterior.hpp"

namespace heis::testgen {

template <class S>
Matrix<S> random_matrix(std::size_t r, std::size_t c, const S& sample, std::mt19937_64& rng) {
  Matrix<S> m(r, c, sample);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if constexpr (std::is_same_v<S, Elem>) {
        m(i, j) = random_elem(field_of(sample), rng);
      } else {
        m(i, j) = S(static_cast<unsigned>(rng() % scalar_order(sample)));
      }
    }
  }
  return m;
}

template <class S>
Matrix<S> random_invertible(std::size_t n, const S& sample, std::mt19937_64& rng) {
  for (;;) {
    Matrix<S> m = random_matrix(n, n, sample, rng);
    if (!det(m).is_zero()) return m;
  }
}

template <class S>
Subspace<S> random_subspace(std::size_t ambient, std::size_t dim, const S& sample, std::mt19937_64& rng) {
  for (;;) {
    Matrix<S> m = random_matrix(dim, ambient, sample, rng);
    auto u = Subspace<S>::from_matrix(m);
    if (u.dim() == dim) return u;
  }
}

}  // namespace heis::testgen
