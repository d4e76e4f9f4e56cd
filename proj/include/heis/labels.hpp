#pragma once

#include <optional>
#include <string>

#include "heis/exterior.hpp"

namespace heis {

// Orbit types of subspaces of Lambda^2(K^4). Dimensions 4 and 5 are the perps
// of dimensions 2 and 1 and reuse these tags with a perp flag.
enum class Tag {
  PointOnQ,   // <s01>
  PointOffQ,  // <s01+s23>
  LineE,
  LineT,
  LineS,
  LineP1,  // anisotropic line, parameters t, d
  PlaneF,
  PlaneJF,
  PlaneET,
  PlaneES,
  PlaneTS,
  PlaneP2,  // anisotropic plane, parameters c, d, t
  PlaneP3,  // radical point plus anisotropic line, parameters t, d
  Undecided,
};

std::string tag_name(Tag t);
int tag_dim(Tag t);

// Family parameters; unused ones stay zero.
template <class S>
struct FamilyParams {
  S c, d, t;
};

template <class S>
FamilyParams<S> no_params(const S& sample) {
  return {zero_like(sample), zero_like(sample), zero_like(sample)};
}

namespace repdetail {

template <class S>
Tensor<S> tensor(const S& sample, std::initializer_list<std::pair<int, S>> terms) {
  Tensor<S> x(6, zero_like(sample));
  for (auto& [k, c] : terms) x[k] = x[k] + c;
  return x;
}

}  // namespace repdetail

// The stored representative for a tag (perp = false).
template <class S>
Subspace<S> representative(Tag tag, const FamilyParams<S>& p, const S& sample) {
  using repdetail::tensor;
  S one = one_like(sample);
  enum { s01, s02, s03, s12, s13, s23 };
  auto e = [&](int k) { return basis_tensor(k, sample); };
  std::vector<Tensor<S>> rows;
  switch (tag) {
    case Tag::PointOnQ: rows = {e(s01)}; break;
    case Tag::PointOffQ: rows = {tensor(sample, {{s01, one}, {s23, one}})}; break;
    case Tag::LineE: rows = {e(s01), e(s02)}; break;
    case Tag::LineT: rows = {e(s01), tensor(sample, {{s03, one}, {s12, one}})}; break;
    case Tag::LineS: rows = {e(s01), e(s23)}; break;
    case Tag::LineP1:
    case Tag::PlaneP3:
      // P_L = <d s02 - s13, d s03 + d s12 - t s13>, P_L^0 = P_L + <s01>
      rows = {tensor(sample, {{s02, p.d}, {s13, -one}}), tensor(sample, {{s03, p.d}, {s12, p.d}, {s13, -p.t}})};
      if (tag == Tag::PlaneP3) rows.push_back(e(s01));
      break;
    case Tag::PlaneF: rows = {e(s01), e(s02), e(s03)}; break;
    case Tag::PlaneJF: rows = {e(s12), e(s13), e(s23)}; break;
    case Tag::PlaneET: rows = {e(s01), e(s02), tensor(sample, {{s03, one}, {s12, one}})}; break;
    case Tag::PlaneES: rows = {e(s01), e(s02), e(s23)}; break;
    case Tag::PlaneTS: rows = {e(s01), tensor(sample, {{s03, one}, {s12, one}}), e(s23)}; break;
    case Tag::PlaneP2:
      // W = <s03 - s12, c s01 - s23, s13 + d s02 + t s03>
      rows = {tensor(sample, {{s03, one}, {s12, -one}}), tensor(sample, {{s01, p.c}, {s23, -one}}),
              tensor(sample, {{s13, one}, {s02, p.d}, {s03, p.t}})};
      break;
    case Tag::Undecided: throw std::invalid_argument("no representative for an undecided label");
  }
  return tensor_span(rows, sample);
}

template <class S>
Subspace<S> representative(Tag tag, bool is_perp, const FamilyParams<S>& p, const S& sample) {
  Subspace<S> u = representative(tag, p, sample);
  return is_perp ? perp(u) : u;
}

}  // namespace heis
