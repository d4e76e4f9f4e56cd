#pragma once

#include <optional>
#include <string>

#include "heis/labels.hpp"

namespace heis {

struct ClassifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrbitLabel {
  Tag tag = Tag::Undecided;
  bool perp = false;  // the subspace is the perp of the tagged one (dims 4, 5)
  // family parameters: t, d for P1 and P3; c, d, t for P2
  std::optional<Elem> c, d, t;
  std::string note;  // why a label is undecided
  std::optional<Matrix<Elem>> witness;  // A with A.rep = U, finite fields

  int dim() const;
  // false exactly for F, E-perp and <s01>-perp
  bool reduced() const;
  // "point:s01", "line:P1(t=0,d=1)", "perp:line:S", ...
  std::string str() const;
  FamilyParams<Elem> params(const Field& k) const;
};

// Same tag and perp flag; parameters compared where that is decidable.
Tri same_orbit(const OrbitLabel& a, const OrbitLabel& b);

OrbitLabel classify_subspace(const Subspace<Elem>& u);

enum class SingularPlane { F, JF };
SingularPlane plane_type_F_vs_JF(const Subspace<Elem>& u);

// The stored representative for a label (perp applied).
Subspace<Elem> representative(const OrbitLabel& label, const Field& k);

// A with act_subspace(A, representative(label)) == u, by BFS over the
// orbit of the representative. Finite fields only; nullopt when the budget
// (number of visited subspaces) runs out before u is reached.
std::optional<Matrix<Elem>> find_witness(const Subspace<Elem>& u, const OrbitLabel& label,
                                         std::size_t budget = 2'000'000);

// One label per GL4-orbit of subspaces of dimension 1..5 over a finite field
// (P2 is empty there; P1 and P3 use finite_extension_params).
std::vector<OrbitLabel> finite_orbit_labels(const Field& k);

// Transvections I + a E_ij with a in an additive basis over the prime field,
// and diag(g,1,1,1) for a primitive g (finite fields).
std::vector<Matrix<Elem>> gl4_generators(const Field& k);

}  // namespace heis
