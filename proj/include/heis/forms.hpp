#pragma once

#include <optional>
#include <string>

#include "heis/quadext.hpp"

namespace heis {

struct FormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- general quadratic forms v -> v' M v, stored upper triangular -------

Matrix<Elem> upper_form(const Matrix<Elem>& m);
// upper(A' M A): the form in the basis given by the columns of A
Matrix<Elem> transform_form(const Matrix<Elem>& upper, const Matrix<Elem>& a);
Elem form_value(const Matrix<Elem>& upper, const Vec<Elem>& v);
Matrix<Elem> form_polar(const Matrix<Elem>& upper);  // M + M'

// Orthogonal basis (rows) and the values of q on it. char != 2.
struct Diagonalization {
  std::vector<Elem> coeffs;
  Matrix<Elem> basis;
};
Diagonalization diagonalize(const Matrix<Elem>& upper);

struct Isotropy {
  Tri isotropic = Tri::Unknown;
  std::optional<Vec<Elem>> witness;
  bool bounded = false;  // decided (or left open) by a bounded search
};
// Nonzero v with q(v) = 0. Exact for finite fields, and over Q for n <= 3.
Isotropy isotropy(const Matrix<Elem>& upper, int box = 6);

// ---- binary forms in characteristic 2 -----------------------------------

struct BinaryQForm {
  Elem a, b, d;  // [[a,b],[0,d]]: a x^2 + b x y + d y^2

  static BinaryQForm from_matrix(const Matrix<Elem>& m);
  Matrix<Elem> matrix() const;
  Elem value(const Elem& x, const Elem& y) const { return a * x * x + b * x * y + d * y * y; }
  bool operator==(const BinaryQForm&) const = default;
};

bool is_diagonalizable(const BinaryQForm& q);

struct ArfInvariant {
  Elem value;               // det M / tr(iM)^2
  std::optional<Elem> rep;  // canonical coset representative when known
};
ArfInvariant arf(const BinaryQForm& q);
Tri same_arf(const BinaryQForm& q, const BinaryQForm& r);

struct BinaryEquivalence {
  Tri equivalent = Tri::Unknown;
  std::optional<Matrix<Elem>> witness;  // A with upper(A' M_q A) = M_r
  std::string reason;
};
BinaryEquivalence binary_equivalent_char2(const BinaryQForm& q, const BinaryQForm& r, int box = 6);

// ---- diagonal forms in characteristic 2 ---------------------------------

// (x,z) -> (a^2 x + b^2 z, c^2 x + d^2 z). GL2L uses squares from L = K(sqrt s).
enum class Omega2Group { GL2K, GL2L };
Vec<Elem> omega2_act(const Matrix<Elem>& a, const Vec<Elem>& xz);
// "zero", "span = K", or "line r=<rep>" for the square-field line through x,z
std::string omega2_orbit(const Elem& x, const Elem& z, Omega2Group g, const std::optional<Elem>& s = std::nullopt);
Tri omega2_same_orbit(const Vec<Elem>& v, const Vec<Elem>& w, Omega2Group g, const std::optional<Elem>& s = std::nullopt);

// ---- hermitian forms -----------------------------------------------------

struct HermitianForm {
  QuadExtension ext;
  Matrix<Elem> gram;  // over L, gram = conj(gram)'

  HermitianForm(QuadExtension e, Matrix<Elem> g);
  Elem value(const Vec<Elem>& x) const;  // h(x,x), lies in K
  Elem sesq(const Vec<Elem>& x, const Vec<Elem>& y) const;
};

// conj(A)' M A
Matrix<Elem> hermitian_transform(const HermitianForm& h, const Matrix<Elem>& a);

struct HermitianDiag {
  Elem a, b;           // in K
  Matrix<Elem> basis;  // columns; hermitian_transform(h, basis) = diag(a, b)
};
HermitianDiag hermitian_diagonalize(const HermitianForm& h);
Tri hermitian_isotropic(const HermitianForm& h);
Tri hermitian_equivalent(const HermitianForm& g, const HermitianForm& h);

struct HermitianClass {
  Matrix<Elem> rep;  // over K, diagonal
  std::string kind;  // zero | degenerate | isotropic | anisotropic
  bool canonical = false;
};
HermitianClass hermitian_class(const HermitianForm& h);

// ---- ternary restrictions of the Pfaffian ------------------------------

enum class TernaryClass { Zero, RankOneSquare, SplitPair, ConicNondegenerate, RadicalAnisotropic, Anisotropic };
std::string to_string(TernaryClass c);

struct TernaryResult {
  std::optional<TernaryClass> label;  // nullopt: isotropy left open
  bool bounded = false;
};
TernaryResult classify_ternary_form(const Matrix<Elem>& upper);
TernaryResult classify_ternary_restriction(const Subspace<Elem>& u);

// dimension of the span of xs over the subfield of squares (char 2)
int square_rank(const std::vector<Elem>& xs);

// ---- similitudes ---------------------------------------------------------

struct SimilitudeReport {
  bool similitude = false;
  std::optional<Elem> multiplier;
  Tri multiplier_square = Tri::Unknown;
  std::optional<Vec<Elem>> witness;  // v with q(Av) != lambda q(v)
};
SimilitudeReport similitude_check(const Matrix<Elem>& upper, const Matrix<Elem>& a);

struct SimilitudeScan {
  std::uint64_t scanned = 0, similitudes = 0, isometries = 0;
  bool all_multipliers_square = true;
  bool complete = false;
  Tri anisotropic = Tri::Unknown;
};
// Exhaustive scan of GL_n(K) for finite K, at most `budget` matrices.
SimilitudeScan similitude_scan(const Matrix<Elem>& upper, std::uint64_t budget);

}  // namespace heis
