#pragma once

#include <functional>

#include "heis/linalg.hpp"

namespace heis {

// Scalars of "height" exactly r: +-r for Q and quadratic fields, polynomials
// c0 + c1 t with max |ci| = r for function fields. Finite fields: r = 0 only.
std::vector<Elem> small_scalars(const Field& k, int r);

// Visits nonzero vectors of K^n until f returns true. Finite fields: every
// vector in code order. Infinite fields: vectors built from small_scalars up to
// height `box`, by height and then by number of nonzero entries.
// Returns whether f ever returned true.
bool search_vectors(const Field& k, std::size_t n, int box, const std::function<bool(const Vec<Elem>&)>& f);

// All elements of GL_n(K) for finite K, in code order of the entries.
// Stops early when f returns true; returns false when the group was exhausted.
bool for_each_gl(const Field& k, std::size_t n, const std::function<bool(const Matrix<Elem>&)>& f);

}  // namespace heis
