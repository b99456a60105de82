// Test-side brute-force oracles.  These deliberately use naive enumeration
// strategies (pivot-set RREF generation, direct point scans) distinct from
// any counting path in the library, so formula and oracle stay independent.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hesslab/linalg.hpp"

namespace test_oracle {

using hesslab::PrimeField;
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

// Visit every k-dimensional subspace of F_q^n once, as a reduced row echelon
// matrix, by choosing a pivot set and filling the free entries.  Needs only
// the residue count, so q = 2 is fine here.
inline void visit_subspaces(std::int64_t q, int n, int k,
                            const std::function<void(const Mat&)>& visit) {
  std::vector<int> pivots(k);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      // free positions: row r, column c with c > pivots[r], c not a pivot
      std::vector<std::pair<int, int>> free_pos;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c) {
          bool is_pivot = false;
          for (int t = 0; t < k; ++t)
            if (pivots[t] == c) is_pivot = true;
          if (!is_pivot) free_pos.push_back({r, c});
        }
      Mat m(k, Vec(n, 0));
      for (int r = 0; r < k; ++r) m[r][pivots[r]] = 1;
      std::vector<std::int64_t> fill(free_pos.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m[free_pos[t].first][free_pos[t].second] = fill[t];
        visit(m);
        std::size_t t = 0;
        while (t < fill.size() && ++fill[t] == q) fill[t++] = 0;
        if (t == fill.size()) break;
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
    if (k == 0) visit(Mat{});
  };
  if (k == 0) {
    visit(Mat{});
    return;
  }
  choose(0, 0);
}

inline std::int64_t count_subspaces(std::int64_t q, int n, int k) {
  std::int64_t c = 0;
  visit_subspaces(q, n, k, [&](const Mat&) { ++c; });
  return c;
}

inline std::int64_t form_value(const PrimeField& f, const Mat& gram, const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (gram[i][j] && b[j]) s = f.add(s, f.mul(f.mul(a[i], gram[i][j]), b[j]));
  }
  return s;
}

inline std::int64_t count_isotropic_subspaces(const PrimeField& f, const Mat& gram, int k) {
  const int n = static_cast<int>(gram.size());
  std::int64_t count = 0;
  visit_subspaces(f.modulus(), n, k, [&](const Mat& m) {
    for (int r = 0; r < k; ++r)
      for (int s = r; s < k; ++s)
        if (form_value(f, gram, m[r], m[s]) != 0) return;
    ++count;
  });
  return count;
}

// Points of the projective quadric {Q(v) = 0} for the given Gram matrix.
inline std::int64_t count_quadric_points(const PrimeField& f, const Mat& gram) {
  const int n = static_cast<int>(gram.size());
  const std::int64_t q = f.modulus();
  std::int64_t count = 0;
  Vec v(n, 0);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      if (form_value(f, gram, v, v) == 0) ++count;
      int c = lead + 1;
      while (c < n && ++v[c] == q) v[c++] = 0;
      if (c == n) break;
    }
  }
  return count;
}

// Standard split / plus / minus Gram matrices over F_q.
inline Mat split_gram(const PrimeField&, int d) {
  Mat g(d, Vec(d, 0));
  int l = d / 2;
  for (int i = 0; i < l; ++i) g[2 * i][2 * i + 1] = g[2 * i + 1][2 * i] = 1;
  if (d % 2 == 1) g[d - 1][d - 1] = 1;
  return g;
}

inline Mat minus_gram(const PrimeField& f, int d) {
  // (l-1) hyperbolic planes plus the anisotropic plane x^2 - eps y^2.
  Mat g(d, Vec(d, 0));
  int l = d / 2;
  for (int i = 0; i + 1 < l; ++i) g[2 * i][2 * i + 1] = g[2 * i + 1][2 * i] = 1;
  std::int64_t eps = 0;
  for (std::int64_t t = 2; t < f.modulus(); ++t)
    if (f.legendre(t) == -1) {
      eps = t;
      break;
    }
  g[d - 2][d - 2] = 1;
  g[d - 1][d - 1] = f.neg(eps);
  return g;
}

}  // namespace test_oracle
