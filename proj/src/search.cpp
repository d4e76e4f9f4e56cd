#include "heis/search.hpp"

#include <algorithm>

namespace heis {

std::vector<Elem> small_scalars(const Field& k, int r) {
  if (k.is_finite()) {
    if (r == 0) return k.elements();
    return {};
  }
  if (k.kind() == FieldKind::FunctionField) {
    std::vector<Elem> out;
    Elem t = k.parse("t");
    long long p = static_cast<long long>(k.characteristic());
    // coefficients live in F_p, so heights stop at (p-1)/2 (or 1 for p = 2)
    long long top = std::max<long long>(1, (p - 1) / 2);
    if (r > top) return out;
    for (long long a = -r; a <= r; ++a) {
      for (long long b = -r; b <= r; ++b) {
        if (std::max(std::llabs(a), std::llabs(b)) != r) continue;
        if (p == 2 && (a < 0 || b < 0)) continue;
        out.push_back(k.from_int(a) + k.from_int(b) * t);
      }
    }
    return out;
  }
  if (r == 0) return {k.zero()};
  return {k.from_int(r), k.from_int(-r)};
}

bool search_vectors(const Field& k, std::size_t n, int box, const std::function<bool(const Vec<Elem>&)>& f) {
  if (k.is_finite()) {
    std::uint64_t q = k.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    std::vector<Elem> elems = k.elements();
    Vec<Elem> v(n, k.zero());
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = elems[c % q];
        c /= q;
      }
      if (f(v)) return true;
    }
    return false;
  }
  std::vector<Elem> pool;
  std::vector<int> level;
  for (int r = 1; r <= box; ++r) {
    if (r == 1) {
      for (auto& e : small_scalars(k, 0)) {
        pool.push_back(e);
        level.push_back(0);
      }
    }
    auto shell = small_scalars(k, r);
    if (shell.empty()) break;
    for (auto& e : shell) {
      pool.push_back(e);
      level.push_back(r);
    }
    std::vector<std::pair<int, Vec<Elem>>> batch;
    std::vector<std::size_t> idx(n, 0);
    std::size_t m = pool.size();
    bool done = n == 0;
    while (!done) {
      int top = 0, nz = 0;
      for (std::size_t i = 0; i < n; ++i) {
        top = std::max(top, level[idx[i]]);
        nz += level[idx[i]] > 0;
      }
      if (top == r) {
        Vec<Elem> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(pool[idx[i]]);
        batch.push_back({nz, std::move(v)});
      }
      std::size_t i = n;
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++idx[i] < m) break;
        idx[i] = 0;
      }
    }
    std::stable_sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [nz, v] : batch) {
      if (f(v)) return true;
    }
  }
  return false;
}

bool for_each_gl(const Field& k, std::size_t n, const std::function<bool(const Matrix<Elem>&)>& f) {
  if (!k.is_finite()) throw FieldError("GL_n enumeration needs a finite field");
  std::uint64_t q = k.order();
  std::vector<Elem> elems = k.elements();
  std::size_t cells = n * n;
  std::vector<std::uint64_t> idx(cells, 0);
  Matrix<Elem> m(n, n, k.zero());
  while (true) {
    for (std::size_t c = 0; c < cells; ++c) m(c / n, c % n) = elems[idx[c]];
    if (!det(m).is_zero() && f(m)) return true;
    std::size_t c = cells;
    while (c > 0) {
      --c;
      if (++idx[c] < q) break;
      idx[c] = 0;
      if (c == 0) return false;
    }
  }
}

}  // namespace heis
