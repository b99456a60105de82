// The four Hessenberg families over the split pair: image partitions of the
// nilpotent-cone families, first-principles dimensions via exact rank
// computation, fiber reduction to order-2 base points, and fiber Poincare
// polynomials from the affine pavings.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hesslab/common.hpp"
#include "hesslab/linalg.hpp"
#include "hesslab/partition.hpp"
#include "hesslab/poincare.hpp"

namespace hesslab {

// E and O are the nilpotent-supported families; Eperp/Operp their orthogonal
// complements (full support).
enum class Flavor { E, O, Eperp, Operp };

inline const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::E: return "E";
    case Flavor::O: return "O";
    case Flavor::Eperp: return "Eperp";
    case Flavor::Operp: return "Operp";
  }
  return "?";
}

struct FamilyDescriptor {
  Flavor flavor = Flavor::E;
  int l = 1;  // step parameter
  int N = 3;  // odd ambient dimension
};

namespace detail {

inline void check_family(int l, int N) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("hessenberg: N must be odd and >= 3");
  if (l < 1 || 2 * l > N - 1) throw std::invalid_argument("hessenberg: l out of range");
}

}  // namespace detail

// Image partition of the family over the nilpotent cone:
//   E: 3^{l-1} 2 1^{N+1-3l}   if 3l <= N+1, else 3^{N-2l} 2^{3l-N}
//   O: 3^{l-1} 1^{N+3-3l}     if 3l <= N+1, else 3^{N-2l} 2^{3l-N}
inline Partition image_partition(Flavor flavor, int l, int N) {
  detail::check_family(l, N);
  if (flavor != Flavor::E && flavor != Flavor::O)
    throw std::invalid_argument("image_partition: defined for flavors E and O");
  Partition p;
  if (3 * l <= N + 1)
    p = flavor == Flavor::E ? Partition::from_exponents(l - 1, 1, N + 1 - 3 * l)
                            : Partition::from_exponents(l - 1, 0, N + 3 - 3 * l);
  else
    p = Partition::from_exponents(N - 2 * l, 3 * l - N, 0);
  if (p.n_total() != N) throw std::logic_error("image_partition: not a partition of N");
  return p;
}

namespace detail {

// Dimension of the subspace of g_1 (self-adjoint traceless operators for the
// antidiagonal form <e_a, e_b> = delta_{a+b,N+1}) cut out by the family's
// linear conditions, via exact rank computation over Q.
//
// Parameterize g_1-candidates as x = J S with S symmetric (J the antidiagonal
// permutation): then x is automatically self-adjoint, and the entry, trace
// and flag conditions are linear in the upper triangle of S.
inline long constrained_selfadjoint_dim(Flavor flavor, int l, int N) {
  const int dimS = N * (N + 1) / 2;
  auto sym_index = [&](int a, int b) {  // 0-indexed, unordered
    if (a > b) std::swap(a, b);
    return a * N - a * (a - 1) / 2 + (b - a);
  };
  RationalField f;
  std::vector<std::vector<Rat>> rows;
  auto add_entry_row = [&](int r, int c) {
    // x[r][c] = S[N-1-r][c]
    std::vector<Rat> row(dimS, Rat(0));
    row[sym_index(N - 1 - r, c)] = 1;
    rows.push_back(std::move(row));
  };
  const bool e_like = flavor == Flavor::E || flavor == Flavor::Eperp;
  // x e_c = 0 for the first l basis vectors
  for (int c = 0; c < l; ++c)
    for (int r = 0; r < N; ++r) add_entry_row(r, c);
  // x maps span{e_1..e_w} into span{e_1..e_{l-1}}, w = N-l (E) or N-l+1 (O)
  const int w = e_like ? N - l : N - l + 1;
  for (int c = 0; c < w; ++c)
    for (int r = l - 1; r < N; ++r) add_entry_row(r, c);
  // trace: sum_r S[N-1-r][r] = 0
  {
    std::vector<Rat> row(dimS, Rat(0));
    for (int r = 0; r < N; ++r) row[sym_index(N - 1 - r, r)] += 1;
    rows.push_back(std::move(row));
  }
  RatMatrix m(rows.size(), dimS);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < dimS; ++c) m.at(r, c) = rows[r][c];
  const long dim_sub = dimS - static_cast<long>(m.rank(f));
  if (flavor == Flavor::E || flavor == Flavor::O) return dim_sub;
  return (dimS - 1) - dim_sub;  // orthogonal complement inside g_1
}

}  // namespace detail

// dim K/P_l for the two-step isotropic flag (V_{l-1} in V_l):
// l(N-l) - l(l+1)/2 + l - 1.
inline long flag_dimension(int l, int N) {
  detail::check_family(l, N);
  return static_cast<long>(l) * (N - l) - static_cast<long>(l) * (l + 1) / 2 + l - 1;
}

// Dimension of the total space of the family: dim K/P_l plus the fiber
// dimension of the Hessenberg bundle, the latter computed from first
// principles as an exact rank.
inline long family_dimension(Flavor flavor, int l, int N) {
  detail::check_family(l, N);
  return flag_dimension(l, N) + detail::constrained_selfadjoint_dim(flavor, l, N);
}

inline Partition image_partition(const FamilyDescriptor& d) {
  return image_partition(d.flavor, d.l, d.N);
}

inline long family_dimension(const FamilyDescriptor& d) {
  return family_dimension(d.flavor, d.l, d.N);
}

struct FiberQuery {
  Flavor flavor = Flavor::E;
  int m = 1;
  int N = 3;
  Partition partition;
};

// Fiber reduction: over x of type 3^i 2^j 1^k the fiber of the step-m family
// agrees with the fiber of the step-(m-i) family over a point of type
// 2^j 1^k in dimension N-3i.  Returns nullopt when i > m (empty fiber).
inline std::optional<FiberQuery> fiber_reduce(const FiberQuery& q) {
  if (q.partition.max_part() > 3)
    throw std::invalid_argument("fiber_reduce: partition must have parts <= 3");
  if (q.partition.n_total() != q.N)
    throw std::invalid_argument("fiber_reduce: partition does not fit N");
  const int i = q.partition.multiplicity(3);
  const int j = q.partition.multiplicity(2);
  if (i > q.m) return std::nullopt;
  FiberQuery r;
  r.flavor = q.flavor;
  r.m = q.m - i;
  r.N = q.N - 3 * i;
  r.partition = Partition::from_exponents(0, j, r.N - 2 * j);
  return r;
}

namespace detail {

// Split-type counts: odd-dimensional spaces are type-free, even-dimensional
// ones of the standard representative are hyperbolic.
inline PoincarePolynomial ogr_split(int k, int d) {
  return ogr_count(k, d, d % 2 == 1 ? Witt::Split : Witt::Plus);
}

inline PoincarePolynomial quadric_split(int D) {
  if (D < 0) return PoincarePolynomial::zero();
  return quadric_count(D, D % 2 == 0 ? Witt::Plus : Witt::Split);
}

// Isotropic lines in a D-dimensional quadratic space whose form has a radical
// of dimension r (a cone over the nondegenerate quadric of the complement):
// P^{r-1} plus q^r times the smooth quadric of dimension D - r - 2.
inline PoincarePolynomial isotropic_line_count(int D, int r) {
  if (D <= 0) return PoincarePolynomial::zero();
  PoincarePolynomial res = projective_count(r - 1);
  PoincarePolynomial smooth = quadric_split(D - r - 2);
  if (!smooth.is_zero()) res += PoincarePolynomial::power(r) * smooth;
  return res;
}

}  // namespace detail

// Point-count polynomial of the E-flavor fiber over x of type 2^j 1^{N-2j}:
// pieces indexed by k = dim(V_m cap Im x), each contributing
//   q^{(m-k)(j-k)} * OGr(j-k, Im x) * OGr(m-k, Sigma) * P^{m-j+k-1}
// over the nonemptiness range max{m+j-N/2, j/2, j+1-m} <= k <= min{j, m}.
// The affine factor counts the lifts of the Sigma-part of V_m modulo
// V_m cap Im x, i.e. Hom(V_m/(V_m cap Im x), Im x/(V_m cap Im x)).
inline PoincarePolynomial upsilon_poincare(int N, int m, int j) {
  if (N < 0 || m < 0 || j < 0 || 2 * j > N)
    throw std::invalid_argument("upsilon_poincare: invalid parameters");
  const long lo = std::max({ceil_div(2L * (m + j) - N, 2), (j + 1L) / 2, j + 1L - m, 0L});
  const long hi = std::min<long>(j, m);
  PoincarePolynomial total;
  for (long k = lo; k <= hi; ++k) {
    PoincarePolynomial piece = PoincarePolynomial::power(static_cast<int>((m - k) * (j - k)));
    piece = piece * detail::ogr_split(static_cast<int>(j - k), j);
    piece = piece * detail::ogr_split(static_cast<int>(m - k), N - 2 * j);
    piece = piece * projective_count(static_cast<int>(m - j + k - 1));
    total += piece;
  }
  return total;
}

// Point-count polynomial of the O-flavor fiber over x of type 2^j 1^{N-2j}:
// pieces indexed by k = dim(V_{m-1} cap Im x), each contributing
//   q^{(m-k-1)(j-k)} * OGr(j-k, Im x) * OGr(m-k-1, Sigma) * {isotropic lines}
// over max{m+j-N/2-1, j/2, j+1-m} <= k <= min{j, m-1}.  The affine factor
// counts lifts exactly as in upsilon_poincare; the line variety lives in
// (V_{m-1}^perp cap ker x)/V_{m-1}, of dimension N-2m+2-j+k with a radical
// of dimension j-k.
inline PoincarePolynomial gamma_poincare(int N, int m, int j) {
  if (N < 0 || m < 0 || j < 0 || 2 * j > N)
    throw std::invalid_argument("gamma_poincare: invalid parameters");
  const long lo = std::max({ceil_div(2L * (m + j) - N - 2, 2), (j + 1L) / 2, j + 1L - m, 0L});
  const long hi = std::min<long>(j, m - 1);
  PoincarePolynomial total;
  for (long k = lo; k <= hi; ++k) {
    PoincarePolynomial piece = PoincarePolynomial::power(static_cast<int>((m - k - 1) * (j - k)));
    piece = piece * detail::ogr_split(static_cast<int>(j - k), j);
    piece = piece * detail::ogr_split(static_cast<int>(m - k - 1), N - 2 * j);
    const int line_space_dim = static_cast<int>(N - 2 * m + 2 - j + k);
    piece = piece * detail::isotropic_line_count(line_space_dim, static_cast<int>(j - k));
    total += piece;
  }
  return total;
}

// Poincare polynomial of the step-m fiber over x of type 3^i 2^j 1^k: reduce,
// then evaluate the order-2 piece formulas.  Empty fibers give the zero
// polynomial.
inline PoincarePolynomial fiber_poincare(Flavor flavor, int m, int N, const Partition& p) {
  if (flavor != Flavor::E && flavor != Flavor::O)
    throw std::invalid_argument("fiber_poincare: defined for flavors E and O");
  FiberQuery q{flavor, m, N, p};
  std::optional<FiberQuery> red = fiber_reduce(q);
  if (!red) return PoincarePolynomial::zero();
  const int j = red->partition.multiplicity(2);
  return flavor == Flavor::E ? upsilon_poincare(red->N, red->m, j)
                             : gamma_poincare(red->N, red->m, j);
}

}  // namespace hesslab
