#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "heis/dispatch.hpp"
#include "heis/heisenberg.hpp"

namespace heis {

struct OrbitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// vectors of K^n coded base q, coordinate 0 least significant
template <class S>
std::uint64_t vec_code(const Vec<S>& v) {
  std::uint64_t q = scalar_order(v.at(0)), c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * q + scalar_code(v[i]);
  return c;
}

template <class S>
Vec<S> vec_from_code(std::uint64_t c, std::size_t n, const S& sample) {
  std::uint64_t q = scalar_order(sample);
  Vec<S> v;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(scalar_from_code(sample, c % q));
    c /= q;
  }
  return v;
}

struct OrbitReport {
  std::size_t space_size = 0;
  // least code of each orbit, ascending, with the orbit sizes
  std::vector<std::uint64_t> reps, sizes;
  std::size_t orbit_count() const { return reps.size(); }
};

// Orbits of the group generated by gens acting on K^n by v -> g v.
template <class S>
OrbitReport enumerate_orbits(const std::vector<Matrix<S>>& gens, std::size_t n, const S& sample,
                             std::uint64_t budget = 10'000'000) {
  std::uint64_t q = scalar_order(sample), total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > budget) throw OrbitError("space too large for orbit enumeration");
  }
  std::vector<std::vector<std::uint32_t>> img(gens.size(), std::vector<std::uint32_t>(total));
  for (std::uint64_t c = 0; c < total; ++c) {
    Vec<S> v = vec_from_code(c, n, sample);
    for (std::size_t g = 0; g < gens.size(); ++g) img[g][c] = static_cast<std::uint32_t>(vec_code(gens[g].apply(v)));
  }
  std::vector<std::int64_t> orbit(total, -1);
  OrbitReport rep;
  rep.space_size = total;
  for (std::uint64_t c = 0; c < total; ++c) {
    if (orbit[c] >= 0) continue;
    std::int64_t id = static_cast<std::int64_t>(rep.reps.size());
    std::vector<std::uint64_t> stack{c};
    orbit[c] = id;
    std::uint64_t size = 0;
    while (!stack.empty()) {
      std::uint64_t x = stack.back();
      stack.pop_back();
      ++size;
      for (auto& t : img) {
        if (orbit[t[x]] < 0) {
          orbit[t[x]] = id;
          stack.push_back(t[x]);
        }
      }
    }
    rep.reps.push_back(c);  // codes are visited in ascending order
    rep.sizes.push_back(size);
  }
  // partition check: every orbit closed under every generator
  for (auto& t : img) {
    for (std::uint64_t c = 0; c < total; ++c) {
      if (orbit[t[c]] != orbit[c]) throw OrbitError("generator image left its orbit");
    }
  }
  return rep;
}

// All subspaces of K^n of dimension d (finite K), as reduced echelon bases.
template <class S>
std::vector<Subspace<S>> all_subspaces(std::size_t n, std::size_t d, const S& sample) {
  std::vector<Subspace<S>> out;
  std::uint64_t q = scalar_order(sample);
  std::vector<std::size_t> piv(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t from) {
    if (i == d) {
      // free entries: right of the pivot in each row, outside other pivot columns
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = piv[r] + 1; c < n; ++c) {
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
        }
      }
      std::uint64_t count = 1;
      for (std::size_t f = 0; f < free.size(); ++f) count *= q;
      for (std::uint64_t code = 0; code < count; ++code) {
        Matrix<S> m(d, n, sample);
        for (std::size_t r = 0; r < d; ++r) m(r, piv[r]) = one_like(sample);
        std::uint64_t x = code;
        for (auto [r, c] : free) {
          m(r, c) = scalar_from_code(sample, x % q);
          x /= q;
        }
        out.push_back(Subspace<S>::from_matrix(m));
      }
      return;
    }
    for (std::size_t c = from; c + (d - i) <= n; ++c) {
      piv[i] = c;
      choose(i + 1, c + 1);
    }
  };
  if (d == 0) return {Subspace<S>(n, sample)};
  choose(0, 0);
  return out;
}

template <class S>
std::vector<std::uint64_t> subspace_key(const Subspace<S>& u) {
  std::vector<std::uint64_t> k;
  for (auto& r : u.rows()) k.push_back(vec_code(r));
  return k;
}

// Orbits of the group generated by gens (4x4) on d-dimensional subspaces of Lambda^2.
template <class S>
std::vector<std::size_t> subspace_orbit_sizes(const std::vector<Matrix<S>>& gens, std::size_t d, const S& sample) {
  auto subs = all_subspaces(6, d, sample);
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index[subspace_key(subs[i])] = i;
  std::vector<std::size_t> parent(subs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& g : gens) {
    Matrix<S> ct = compound(g).transpose();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::size_t j = index.at(subspace_key(subs[i].image(ct)));
      parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < subs.size(); ++i) ++sizes[find(i)];
  std::vector<std::size_t> out;
  for (auto& [r, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

// The group generated by gens (4x4, finite field), as sorted matrix codes.
template <class S>
std::vector<std::uint64_t> generate_group(const std::vector<Matrix<S>>& gens, std::size_t budget = 5'000'000) {
  if (gens.empty()) throw OrbitError("no generators");
  const S sample = gens[0].zero();
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier{matrix_code(Matrix<S>::identity(4, sample))};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto c : frontier) {
      Matrix<S> m = matrix_from_code(c, 4, sample);
      for (auto& g : gens) {
        std::uint64_t x = matrix_code(m * g);
        if (seen.insert(x).second) {
          if (seen.size() > budget) throw OrbitError("group closure exceeded its budget");
          next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// A subset of gens generating the same group: greedy, keeping a generator
// only when it enlarges the group generated so far.
template <class S>
std::vector<Matrix<S>> prune_generators(const std::vector<Matrix<S>>& gens) {
  std::vector<Matrix<S>> kept;
  std::size_t order = 1;
  for (auto& g : gens) {
    kept.push_back(g);
    std::size_t o = generate_group(kept).size();
    if (o == order) {
      kept.pop_back();
    } else {
      order = o;
    }
  }
  return kept;
}

// ---- GL4 scans -------------------------------------------------------------

// Visits every element of GL4(K), K finite, as column vectors coded base q.
// With parallel set the outer loop over the first column runs under OpenMP;
// visit(thread_state, m) must then only touch its own state. Returns the
// per-first-column states in order so merging is deterministic.
template <class S, class State, class Visit>
std::vector<State> scan_gl4(const S& sample, const State& init, Visit&& visit, bool parallel,
                            std::uint64_t first_columns = ~std::uint64_t{0}) {
  const std::uint64_t q = scalar_order(sample), nv = q * q * q * q;
  std::vector<std::array<S, 4>> vecs(nv);
  for (std::uint64_t c = 0; c < nv; ++c) {
    Vec<S> v = vec_from_code(c, 4, sample);
    for (int i = 0; i < 4; ++i) vecs[c][i] = v[i];
  }
  // add and scale tables on codes
  std::vector<std::uint32_t> add(nv * nv), scale(q * nv);
  for (std::uint64_t a = 0; a < nv; ++a) {
    for (std::uint64_t b = 0; b < nv; ++b) {
      Vec<S> s(4, sample);
      for (int i = 0; i < 4; ++i) s[i] = vecs[a][i] + vecs[b][i];
      add[a * nv + b] = static_cast<std::uint32_t>(vec_code(s));
    }
    for (std::uint64_t k = 0; k < q; ++k) {
      Vec<S> s(4, sample);
      for (int i = 0; i < 4; ++i) s[i] = scalar_from_code(sample, k) * vecs[a][i];
      scale[k * nv + a] = static_cast<std::uint32_t>(vec_code(s));
    }
  }
  auto grow = [&](const std::vector<std::uint32_t>& span, std::uint32_t v) {
    std::vector<std::uint32_t> out;
    out.reserve(span.size() * q);
    for (std::uint64_t k = 0; k < q; ++k) {
      std::uint32_t kv = scale[k * nv + v];
      for (auto x : span) out.push_back(add[x * nv + kv]);
    }
    return out;
  };
  const std::uint64_t n0 = std::min<std::uint64_t>(nv - 1, first_columns);
  std::vector<State> states(n0, init);
  auto body = [&](std::uint64_t i0) {
    State& st = states[i0];
    std::uint32_t c0 = static_cast<std::uint32_t>(i0 + 1);
    std::array<S, 16> m;
    auto put = [&](int j, std::uint32_t c) {
      for (int i = 0; i < 4; ++i) m[4 * i + j] = vecs[c][i];
    };
    put(0, c0);
    std::vector<char> in1(nv, 0), in2(nv, 0), in3(nv, 0);
    auto s1 = grow({0}, c0);
    for (auto x : s1) in1[x] = 1;
    for (std::uint32_t c1 = 1; c1 < nv; ++c1) {
      if (in1[c1]) continue;
      put(1, c1);
      auto s2 = grow(s1, c1);
      for (auto x : s2) in2[x] = 1;
      for (std::uint32_t c2 = 1; c2 < nv; ++c2) {
        if (in2[c2]) continue;
        put(2, c2);
        auto s3 = grow(s2, c2);
        for (auto x : s3) in3[x] = 1;
        for (std::uint32_t c3 = 1; c3 < nv; ++c3) {
          if (in3[c3]) continue;
          put(3, c3);
          visit(st, m);
        }
        for (auto x : s3) in3[x] = 0;
      }
      for (auto x : s2) in2[x] = 0;
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i0 = 0; i0 < static_cast<std::int64_t>(n0); ++i0) body(static_cast<std::uint64_t>(i0));
  } else {
    for (std::uint64_t i0 = 0; i0 < n0; ++i0) body(i0);
  }
  return states;
}

template <class S>
std::array<S, 36> compound_array(const std::array<S, 16>& m) {
  std::array<S, 36> c;
  for (int r = 0; r < 6; ++r) {
    auto [i, j] = kPairs[r];
    for (int s = 0; s < 6; ++s) {
      auto [k, l] = kPairs[s];
      c[6 * r + s] = m[4 * i + k] * m[4 * j + l] - m[4 * i + l] * m[4 * j + k];
    }
  }
  return c;
}

// A kernel prepared for fast stabilization tests.
template <class S>
struct ScanKernel {
  std::string name;
  Tag tag = Tag::Undecided;
  FamilyParams<S> params;
  std::vector<std::array<S, 6>> basis, ann;  // U and the dot-annihilator of U

  ScanKernel(std::string n, Tag t, const FamilyParams<S>& p, const Subspace<S>& u) : name(std::move(n)), tag(t), params(p) {
    // U and its perp have the same stabilizer; test the smaller one
    Subspace<S> w = u.dim() > 3 ? perp(u) : u;
    auto arr = [](const Vec<S>& v) {
      std::array<S, 6> a;
      std::copy(v.begin(), v.end(), a.begin());
      return a;
    };
    for (auto& r : w.rows()) basis.push_back(arr(r));
    for (auto& r : nullspace(w.basis())) ann.push_back(arr(r));
  }

  bool stabilized(const std::array<S, 36>& c) const {
    for (auto& x : basis) {
      std::array<S, 6> y;
      for (int r = 0; r < 6; ++r) {
        S acc = zero_like(x[0]);
        for (int s = 0; s < 6; ++s) acc = acc + c[6 * r + s] * x[s];
        y[r] = acc;
      }
      for (auto& a : ann) {
        S acc = zero_like(x[0]);
        for (int r = 0; r < 6; ++r) acc = acc + a[r] * y[r];
        if (!acc.is_zero()) return false;
      }
    }
    return true;
  }
};

struct ScanCount {
  std::uint64_t total = 0, stabilizer = 0, predicate = 0, mismatches = 0;
  std::uint64_t first_mismatch = 0;  // matrix code
};

// Direct stabilization against membership_shape for every kernel over all of
// GL4(K) (or the matrices whose first column code is <= first_columns).
template <class S>
std::vector<ScanCount> predicate_scan(const std::vector<ScanKernel<S>>& ks, bool parallel,
                                      std::uint64_t first_columns = ~std::uint64_t{0}) {
  const S sample = zero_like(ks.at(0).params.c);
  auto states = scan_gl4(
      sample, std::vector<ScanCount>(ks.size()),
      [&](std::vector<ScanCount>& st, const std::array<S, 16>& m) {
        auto c = compound_array(m);
        Matrix<S> mm(4, 4, sample);
        for (int i = 0; i < 16; ++i) mm(i / 4, i % 4) = m[i];
        for (std::size_t k = 0; k < ks.size(); ++k) {
          bool a = ks[k].stabilized(c), b = membership_shape(ks[k].tag, mm, ks[k].params);
          auto& s = st[k];
          ++s.total;
          s.stabilizer += a;
          s.predicate += b;
          if (a != b && s.mismatches++ == 0) s.first_mismatch = matrix_code(mm);
        }
      },
      parallel, first_columns);
  std::vector<ScanCount> out(ks.size());
  for (auto& st : states) {
    for (std::size_t k = 0; k < ks.size(); ++k) {
      if (out[k].mismatches == 0 && st[k].mismatches > 0) out[k].first_mismatch = st[k].first_mismatch;
      out[k].total += st[k].total;
      out[k].stabilizer += st[k].stabilizer;
      out[k].predicate += st[k].predicate;
      out[k].mismatches += st[k].mismatches;
    }
  }
  return out;
}

// Stabilizer of u in GL4(K) by a plain scan with act_subspace (the slow
// reference), as sorted matrix codes.
std::vector<std::uint64_t> brute_stabilizer(const Subspace<Elem>& u);

// ---- omega counts and the table ----------------------------------------------

struct OmegaCounts {
  std::size_t omega_v = 0, omega_z = 0, omega = 0;
};

// Nonzero orbits of the stabilizer on V and on Z = Lambda^2 / kernel, for a
// reduced label over a finite field.
OmegaCounts omega_counts(const OrbitLabel& label, const Field& k);

struct FieldInvariants {
  int r_star = 0;  // |K^x / K^x2|
  int r_wp = 0;    // |K / {x^2 + x}|, characteristic 2
  int r_plus = 0;  // |K / {x^2}|, characteristic 2
  int hf = 0;      // nonzero classes of hermitian 2x2 forms over L/K
  int r_n = 0;     // |K^x / N(L^x)<-1>|
};
FieldInvariants field_invariants(const Field& k);

struct TableRow {
  std::string kernel;   // label string of the kernel
  std::string formula;  // expected omega as a formula in the invariants
  OmegaCounts expected, got;
  bool skipped = false, pass = false;
  std::string note;
};

struct TableReport {
  std::string field;
  FieldInvariants inv;
  std::vector<TableRow> rows;
  std::size_t checked() const;
  std::size_t failures() const;
};

TableReport verify_table(const Field& k);

// The stabilizer kernels used for the predicate scans: the nine point, line
// and plane types with a reduced kernel, plus P1 and P3.
std::vector<OrbitLabel> scan_labels(const Field& k);

}  // namespace heis
