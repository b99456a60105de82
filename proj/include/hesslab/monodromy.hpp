// The monodromy catalog for N = 2n+1: dimensions of the irreducible local
// systems E_ij and Etilde_ij attached to families of quadric intersections
// and their double covers, the decompositions of the primitive cohomology of
// X_m and of the anti-invariants of Xtilde_m, and the identification layer
// relating E_{i,0}, Etilde_{n+1,j} with the classical L_i and F_j.
#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesslab/common.hpp"

namespace hesslab {

enum class MonoFamily { E, Etilde };

inline const char* to_string(MonoFamily f) { return f == MonoFamily::E ? "E" : "Etilde"; }

// A class of characters chi of I_N (ambient = N) or I_{N+1} (ambient = N+1,
// where requires_last pins N+1 into the support).  Characters in one class
// share |chi| = size; the class size is what enters every dimension below.
struct CharacterClass {
  int ambient = 0;            // N or N+1
  int size = 0;               // |chi|, even
  bool requires_last = false; // ambient = N+1 and N+1 in supp(chi)

  Int count() const {
    if (size % 2 != 0) throw std::invalid_argument("CharacterClass: |chi| must be even");
    if (requires_last) return binomial(ambient - 1, size - 1);
    return binomial(ambient, size);
  }
};

// Dimension of the irreducible Sp(2g)-representation with fundamental weight
// w_j: C(2g, j) - C(2g, j-2).
inline Int sp_fundamental_dim(int g, int j) {
  if (g < 0 || j < 0) throw std::invalid_argument("sp_fundamental_dim: negative argument");
  if (j > g) throw std::invalid_argument("sp_fundamental_dim: not a fundamental weight");
  return binomial(2 * g, j) - binomial(2 * g, j - 2);
}

struct MonoLabel {
  MonoFamily family = MonoFamily::E;
  int i = 0;
  int j = 0;
  int N = 0;  // odd ambient, N = 2n+1
  Int dim = 0;

  std::string to_string() const {
    std::ostringstream os;
    os << (family == MonoFamily::E ? "E" : "~E") << "(" << i << "," << j << ")";
    return os.str();
  }

  bool operator==(const MonoLabel& o) const {
    return family == o.family && i == o.i && j == o.j && N == o.N;
  }
};

inline std::ostream& operator<<(std::ostream& os, const MonoLabel& l) {
  return os << l.to_string();
}

// dim E_ij = C(N, 2i) * sp_dim(i-1, j); dim Etilde_ij = C(N, 2i-1) * sp_dim(i-1, j).
inline Int dim_label(MonoFamily family, int N, int i, int j) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("dim_label: N must be odd and >= 3");
  int n = (N - 1) / 2;
  int imax = family == MonoFamily::E ? n : n + 1;
  if (i < 1 || i > imax) throw std::invalid_argument("dim_label: i out of range");
  if (j < 0 || j > i - 1) throw std::invalid_argument("dim_label: j out of range");
  CharacterClass cls;
  cls.size = 2 * i;
  if (family == MonoFamily::E) {
    cls.ambient = N;
  } else {
    cls.ambient = N + 1;
    cls.requires_last = true;
  }
  return cls.count() * sp_fundamental_dim(i - 1, j);
}

inline MonoLabel make_label(MonoFamily family, int N, int i, int j) {
  return {family, i, j, N, dim_label(family, N, i, j)};
}

// A multiplicity-free decomposition into MonoLabels.
struct DecompositionTable {
  std::string source;
  int N = 0;
  int m = 0;
  std::vector<MonoLabel> summands;
  Int total_dim = 0;
};

namespace detail {

// Both decompositions share the j-range: j = N-m-1 mod 2,
// 0 <= j <= min{N-m-1, 2i-2-(N-m-1)}.
inline void append_summands(DecompositionTable& t, MonoFamily family, int N, int m, int two_i_max) {
  const int r = N - m - 1;
  for (int i = (N - m + 2) / 2; 2 * i <= two_i_max; ++i) {
    const int l = std::min(r, 2 * i - 2 - r);
    for (int j = r % 2; j <= l; j += 2) {
      t.summands.push_back(make_label(family, N, i, j));
      t.total_dim += t.summands.back().dim;
    }
  }
}

}  // namespace detail

// Decomposition of the primitive middle cohomology of a smooth intersection
// of m quadrics in P^{N-1}: E_ij over N-m+1 <= 2i <= N.
inline DecompositionTable decompose_X(int N, int m) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("decompose_X: N must be odd and >= 3");
  if (m < 1 || m > N - 1) throw std::invalid_argument("decompose_X: m out of range");
  DecompositionTable t;
  t.source = "X(" + std::to_string(m) + ")";
  t.N = N;
  t.m = m;
  detail::append_summands(t, MonoFamily::E, N, m, N);
  return t;
}

// Decomposition of the anti-invariant part of the primitive cohomology of
// the double cover Xtilde_m: Etilde_ij over N-m+1 <= 2i <= N+1.
inline DecompositionTable decompose_Xtilde_minus(int N, int m) {
  if (N < 3 || N % 2 == 0)
    throw std::invalid_argument("decompose_Xtilde_minus: N must be odd and >= 3");
  if (m < 1 || m > N - 1) throw std::invalid_argument("decompose_Xtilde_minus: m out of range");
  DecompositionTable t;
  t.source = "XtildeMinus(" + std::to_string(m) + ")";
  t.N = N;
  t.m = m;
  detail::append_summands(t, MonoFamily::Etilde, N, m, N + 1);
  return t;
}

// The deduplicated catalog of pairwise non-isomorphic local systems:
// E_ij (i in [1,n], j in [0,i-1]), Etilde_ij (i in [1,n+1], j in [1,i-1])
// and Etilde_{n+1,0}.  Cardinality n(n+1) + 1.
inline std::vector<MonoLabel> catalog(int N) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("catalog: N must be odd and >= 3");
  int n = (N - 1) / 2;
  std::vector<MonoLabel> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= i - 1; ++j) out.push_back(make_label(MonoFamily::E, N, i, j));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= i - 1; ++j) out.push_back(make_label(MonoFamily::Etilde, N, i, j));
  out.push_back(make_label(MonoFamily::Etilde, N, n + 1, 0));
  return out;
}

// Named classical systems appearing in the identification layer.
struct IdentSide {
  enum class Kind { Mono, L, F, TrivialSheaf } kind = Kind::Mono;
  MonoLabel mono;  // valid when kind == Mono
  int index = 0;   // L_index or F_index
  Int dim = 0;

  std::string to_string() const {
    switch (kind) {
      case Kind::Mono: return mono.to_string();
      case Kind::L: return "L(" + std::to_string(index) + ")";
      case Kind::F: return "F(" + std::to_string(index) + ")";
      case Kind::TrivialSheaf: return "C";
    }
    return "?";
  }
};

struct Identification {
  IdentSide lhs, rhs;
};

// dim L_i = C(2n+1, i); dim F_j = sp_fundamental_dim(n, j) (primitive j-th
// wedge of H^1 of a genus-n hyperelliptic curve).
inline Int dim_L(int N, int i) { return binomial(N, i); }
inline Int dim_F(int N, int j) { return sp_fundamental_dim((N - 1) / 2, j); }

// All identifications among E_{i,0}, Etilde_{i,j} and the L/F systems:
//   E_{i,0} = L_{2i} (2i <= n), E_{i,0} = L_{2n-2i+1} (2i >= n+1),
//   Etilde_{n+1,j} = F_j (1 <= j <= n), Etilde_{n+1,0} = C,
//   E_{i,0} = Etilde_{n+1-i,0}.
// Dimension equality is enforced on every pair.
inline std::vector<Identification> identifications(int N) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("identifications: N must be odd and >= 3");
  int n = (N - 1) / 2;
  std::vector<Identification> out;
  auto mono_side = [&](MonoFamily f, int i, int j) {
    IdentSide s;
    s.kind = IdentSide::Kind::Mono;
    s.mono = make_label(f, N, i, j);
    s.dim = s.mono.dim;
    return s;
  };
  auto named_side = [&](IdentSide::Kind k, int idx, Int dim) {
    IdentSide s;
    s.kind = k;
    s.index = idx;
    s.dim = std::move(dim);
    return s;
  };
  for (int i = 1; i <= n; ++i) {
    int li = 2 * i <= n ? 2 * i : 2 * n - 2 * i + 1;
    out.push_back({mono_side(MonoFamily::E, i, 0),
                   named_side(IdentSide::Kind::L, li, dim_L(N, li))});
  }
  for (int j = 1; j <= n; ++j)
    out.push_back({mono_side(MonoFamily::Etilde, n + 1, j),
                   named_side(IdentSide::Kind::F, j, dim_F(N, j))});
  out.push_back({mono_side(MonoFamily::Etilde, n + 1, 0),
                 named_side(IdentSide::Kind::TrivialSheaf, 0, 1)});
  for (int i = 1; i <= n; ++i)
    out.push_back({mono_side(MonoFamily::E, i, 0), mono_side(MonoFamily::Etilde, n + 1 - i, 0)});
  for (const Identification& id : out)
    if (id.lhs.dim != id.rhs.dim)
      throw std::logic_error("identifications: dimension mismatch on " + id.lhs.to_string() +
                             " = " + id.rhs.to_string());
  return out;
}

}  // namespace hesslab
