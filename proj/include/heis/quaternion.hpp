#pragma once

#include <array>
#include <optional>
#include <string>

#include "heis/linalg.hpp"

namespace heis {

struct QuatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a solver that needs a division algebra gets a split one.
struct SplitAlgebraError : QuatError {
  using QuatError::QuatError;
};

struct Quat {
  std::array<Elem, 4> c;  // x0 + x1 h1 + x2 h2 + x3 h3
  bool operator==(const Quat& o) const { return c == o.c; }
  bool operator!=(const Quat& o) const { return !(*this == o); }
};

struct SplitInfo {
  Tri split = Tri::Unknown;
  std::optional<Quat> witness;  // nonzero element of norm 0
  bool bounded = false;         // answer came from a bounded search
};

// H^{-d,-c}: h1^2 = -t h1 - d, h2^2 = -c, h2 h1 = h3, h1 h2 = t h2 - h3.
class QuatAlgebra {
 public:
  // t = 0 in characteristic != 2, t = 1 in characteristic 2
  QuatAlgebra(const Field& k, const Elem& d, const Elem& c);
  QuatAlgebra(const Field& k, const Elem& d, const Elem& c, const Elem& t);
  // H^{a,b} in the usual superscript notation, i.e. d = -a, c = -b
  static QuatAlgebra superscript(const Field& k, const Elem& a, const Elem& b);

  const Field& field() const { return k_; }
  const Elem& d() const { return d_; }
  const Elem& c() const { return c_; }
  const Elem& t() const { return t_; }
  bool commutative() const { return k_.characteristic() == 2 && t_.is_zero(); }

  Quat make(const Elem& x0, const Elem& x1, const Elem& x2, const Elem& x3) const { return Quat{{x0, x1, x2, x3}}; }
  Quat scalar(const Elem& s) const { return make(s, k_.zero(), k_.zero(), k_.zero()); }
  Quat basis(int i) const;
  Quat zero() const { return scalar(k_.zero()); }
  Quat one() const { return scalar(k_.one()); }
  Quat from_vec(const Vec<Elem>& v) const { return make(v[0], v[1], v[2], v[3]); }
  Vec<Elem> to_vec(const Quat& x) const { return Vec<Elem>(x.c.begin(), x.c.end()); }
  bool is_zero(const Quat& x) const;
  bool is_scalar(const Quat& x) const;

  Quat add(const Quat& x, const Quat& y) const;
  Quat sub(const Quat& x, const Quat& y) const;
  Quat neg(const Quat& x) const;
  Quat scale(const Elem& s, const Quat& x) const;
  Quat mul(const Quat& x, const Quat& y) const;
  Quat conj(const Quat& x) const;  // the involution x -> x~
  Elem norm(const Quat& x) const;
  Elem trace(const Quat& x) const;
  Elem polar(const Quat& x, const Quat& y) const;  // f_N(x,y) = N(x+y) - N(x) - N(y)
  std::optional<Quat> inverse(const Quat& x) const;

  // Pu H: trace zero part (char != 2) or K 1 + K h2 + K h3 (char 2)
  std::array<Quat, 3> pure_basis() const;
  bool is_pure(const Quat& x) const;

  SplitInfo is_split() const;

  // x -> a x and x -> x a as 4x4 matrices in the basis 1,h1,h2,h3 (column convention)
  Matrix<Elem> left_matrix(const Quat& a) const;
  Matrix<Elem> right_matrix(const Quat& a) const;

  std::string str(const Quat& x) const;
  Quat parse(const std::string& s) const;

 private:
  void build_table();
  void check_associative() const;

  Field k_;
  Elem d_, c_, t_;
  std::array<std::array<Quat, 4>, 4> table_;  // h_i h_j
};

struct ConjResult {
  std::optional<Quat> a;
  std::string reason;  // empty on success
};

// a with a v a^-1 = x when N and tr agree (division algebras only).
ConjResult conjugate_solver(const QuatAlgebra& h, const Quat& v, const Quat& x);
// a with a v a^-1 = x and a w a^-1 = y.
ConjResult pair_conjugate_solver(const QuatAlgebra& h, const Quat& v, const Quat& w, const Quat& x, const Quat& y);

struct ZResult {
  std::optional<Quat> a, b, z;
  bool bounded = true;
  std::string reason;
};
// (a,b) with a v a~ N(b) = x, searching z with N(x) = N(v) N(z)^2 and tr(x) = tr(v) N(z)
// over integer coordinates in [-box, box] (or all of H when K is finite).
ZResult z_action_solver(const QuatAlgebra& h, const Quat& v, const Quat& x, int box = 10);

Matrix<Elem> inner_auto(const QuatAlgebra& h, const Quat& a);
// matrix of an algebra automorphism restricted to Pu H; nullopt if Pu H is not preserved
std::optional<Matrix<Elem>> pure_part_matrix(const QuatAlgebra& h, const Matrix<Elem>& m);
bool so_check(const QuatAlgebra& h, const Quat& a);

struct NormGroupInfo {
  Tri member = Tri::Unknown;         // x in N(H^x)
  Tri square_member = Tri::Unknown;  // x in {N(y)^2}
  bool bounded = false;
};
NormGroupInfo norm_group_coset(const QuatAlgebra& h, const Elem& x, int box = 10);

}  // namespace heis
