#pragma once

#include "heis/linalg.hpp"

namespace heis {

// L = K[u]/(u^2 + t u + d) with 2t = 0, together with its 2x2 matrix model.
class QuadExtension {
 public:
  QuadExtension(const Field& base, const Elem& t, const Elem& d);

  const Field& base() const { return base_; }
  const Field& field() const { return l_; }
  const Elem& t() const { return t_; }
  const Elem& d() const { return d_; }
  bool separable() const { return base_.characteristic() != 2 || !t_.is_zero(); }

  Elem u() const;
  Elem make(const Elem& a, const Elem& b) const;  // a + b u
  Elem re(const Elem& x) const;                    // a
  Elem im(const Elem& x) const;                    // b

  Elem conj(const Elem& x) const;  // a + t b - b u
  Elem norm(const Elem& x) const;  // conj(x) x, lies in K
  Elem trace(const Elem& x) const;
  // membership of x in N(L^x); finite fields always, Q via a ternary isotropy test
  Tri norm_class(const Elem& x) const;
  Tri same_norm_class(const Elem& x, const Elem& y) const;

  Matrix<Elem> u_matrix() const;      // [[0,-d],[1,t]]
  Matrix<Elem> xi_matrix() const;     // [[1,t],[0,-1]]
  Matrix<Elem> delta_matrix() const;  // diag(d,-1)
  Matrix<Elem> embed(const Elem& x) const;
  // inverse of embed; nullopt if the 2x2 matrix is not in the image
  std::optional<Elem> unembed(const Matrix<Elem>& m) const;

  // primitive element and an additive basis over the prime field (finite L only)
  Elem primitive() const;
  std::vector<Elem> additive_basis() const;

 private:
  Field base_, l_;
  Elem t_, d_;
};

// Smallest primitive element of a finite field, by code.
Elem primitive_element(const Field& f);
// Basis of F_q over F_p as elements of f.
std::vector<Elem> prime_field_basis(const Field& f);

// Parameters (t,d) of the anisotropic binary forms used for P_L over a finite field:
// t = 0 with -d a non-square (odd q), t = 1 with Tr(d) = 1 (even q).
std::pair<Elem, Elem> finite_extension_params(const Field& f);

}  // namespace heis
