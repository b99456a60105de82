// Exact arithmetic over odd prime fields and the brute-force enumeration
// oracles: Hessenberg fiber flag counts for standard nilpotent
// representatives, quadric-intersection and double-cover point counts,
// hyperelliptic curve counts, and the configuration-equivalence check.
//
// Every oracle here is an independent counting route used to validate the
// closed formulas elsewhere in the library; none of them share code with the
// formula side.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "hesslab/common.hpp"
#include "hesslab/hessenberg.hpp"
#include "hesslab/linalg.hpp"
#include "hesslab/partition.hpp"

namespace hesslab {

using FqVector = std::vector<std::int64_t>;

// Enumeration budgets, measured in coarse work units.  Exceeding a budget
// raises BudgetExceeded; results are never silently truncated.
struct OracleBudget {
  std::uint64_t flag_work = 2'000'000'000;        // fiber flag enumeration
  std::uint64_t projective_points = 10'000'000;   // projective point scans
};

// A nilpotent element of order <= 3 in standard block form, together with
// the symmetric bilinear form making it self-adjoint.  Within the 2-part and
// 1-part blocks the pairing constants alternate in sign so that every induced
// form on Im x, ker x / Im x and their relatives is split over F_p.
struct NilpotentRep {
  PrimeField field;
  FqMatrix x;
  FqMatrix gram;
  Partition partition;
};

inline NilpotentRep nilpotent_representative(const Partition& p, std::int64_t prime) {
  if (p.max_part() > 3)
    throw std::invalid_argument("nilpotent_representative: parts must be <= 3");
  PrimeField f(prime);
  const int N = p.n_total();
  FqMatrix x(N, N, 0), g(N, N, 0);
  int b = 0, two_blocks = 0, one_blocks = 0;
  for (int part : p.parts()) {
    if (part == 3) {
      x.at(b + 1, b) = 1;
      x.at(b + 2, b + 1) = 1;
      g.at(b, b + 2) = g.at(b + 2, b) = 1;
      g.at(b + 1, b + 1) = 1;
    } else if (part == 2) {
      std::int64_t sign = two_blocks++ % 2 == 0 ? 1 : prime - 1;
      x.at(b + 1, b) = 1;
      g.at(b, b + 1) = g.at(b + 1, b) = sign;
    } else {
      g.at(b, b) = one_blocks++ % 2 == 0 ? 1 : prime - 1;
    }
    b += part;
  }
  return {std::move(f), std::move(x), std::move(g), p};
}

namespace detail {

inline std::int64_t vec_dot(const PrimeField& f, const FqVector& a, const FqVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

inline FqVector mat_apply(const PrimeField& f, const FqMatrix& m, const FqVector& v) {
  FqVector r(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) && v[j]) s = f.add(s, f.mul(m.at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

// Reduce v against RREF rows (with the given pivot columns); returns the
// coefficient vector and leaves the residual in v.
inline FqVector reduce_against(const PrimeField& f, const std::vector<FqVector>& rows,
                               const std::vector<int>& pivots, FqVector& v) {
  FqVector coeff(rows.size(), 0);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    std::int64_t c = v[pivots[t]];
    if (c == 0) continue;
    coeff[t] = c;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (rows[t][j]) v[j] = f.sub(v[j], f.mul(c, rows[t][j]));
  }
  return coeff;
}

inline bool is_zero_vec(const FqVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Bring a set of spanning rows into RREF; returns pivot columns.
inline std::vector<int> rref_rows(const PrimeField& f, std::vector<FqVector>& rows) {
  std::vector<int> pivots;
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::int64_t inv = f.inv(rows[rank][c]);
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::int64_t factor = rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Kernel of the linear map given by rows (as a matrix acting on column
// vectors v: rows * v = 0); returns a basis.
inline std::vector<FqVector> kernel_of_rows(const PrimeField& f, std::vector<FqVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<int> pivots = rref_rows(f, rows);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FqVector> ker;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    FqVector v(cols, 0);
    v[fc] = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) v[pivots[t]] = f.neg(rows[t][fc]);
    ker.push_back(std::move(v));
  }
  return ker;
}

// Depth-first enumeration of totally isotropic m-dimensional subspaces of
// F_p^kappa with respect to the symmetric form gk, visiting each subspace
// once through its reduced row echelon basis.  Linear conditions
// (orthogonality to the rows already chosen) are solved before enumerating,
// so only the quadratic condition is tested per candidate.
class IsotropicSubspaceEnum {
 public:
  IsotropicSubspaceEnum(const PrimeField& f, const std::vector<FqVector>& gk, int m,
                        std::uint64_t* work, std::uint64_t budget)
      : f_(f), gk_(gk), kappa_(static_cast<int>(gk.size())), m_(m), work_(work), budget_(budget) {}

  void run(const std::function<void(const std::vector<FqVector>&)>& visit) {
    visit_ = &visit;
    if (m_ == 0) {
      (*visit_)(rows_);
      return;
    }
    extend(-1);
  }

 private:
  void extend(int last_pivot) {
    for (int p = last_pivot + 1; p < kappa_; ++p) {
      bool clear = true;
      for (const FqVector& r : rows_)
        if (r[p] != 0) {
          clear = false;
          break;
        }
      if (!clear) continue;
      try_pivot(p);
    }
  }

  void try_pivot(int p) {
    const int u = kappa_ - 1 - p;  // free coordinates p+1..kappa-1
    // Linear system: for each chosen row t, <v, row_t> = 0 with v_p = 1.
    std::vector<FqVector> sys;
    FqVector rhs;
    for (const FqVector& r : rows_) {
      FqVector g = apply_form(r);
      FqVector eq(u, 0);
      for (int c = 0; c < u; ++c) eq[c] = g[p + 1 + c];
      sys.push_back(std::move(eq));
      rhs.push_back(f_.neg(g[p]));
    }
    FqVector particular(u, 0);
    std::vector<FqVector> ker;
    if (!sys.empty()) {
      std::vector<FqVector> aug = sys;
      for (std::size_t t = 0; t < aug.size(); ++t) aug[t].push_back(rhs[t]);
      std::vector<FqVector> red = aug;
      std::vector<int> pivots = rref_rows(f_, red);
      for (int c : pivots)
        if (c == u) return;  // inconsistent: no candidate over this pivot
      for (std::size_t t = 0; t < red.size(); ++t) particular[pivots[t]] = red[t][u];
      ker = kernel_of_rows(f_, sys);
    } else {
      ker = kernel_of_rows(f_, std::vector<FqVector>(1, FqVector(u, 0)));
    }
    const std::size_t s = ker.size();

    // Base vector and quadratic form data on the parameter space.
    FqVector base(kappa_, 0);
    base[p] = 1;
    for (int c = 0; c < u; ++c) base[p + 1 + c] = particular[c];
    std::vector<FqVector> dirs;
    for (const FqVector& k : ker) {
      FqVector d(kappa_, 0);
      for (int c = 0; c < u; ++c) d[p + 1 + c] = k[c];
      dirs.push_back(std::move(d));
    }
    FqVector gbase = apply_form(base);
    const std::int64_t q00 = vec_dot(f_, gbase, base);
    FqVector lin(s, 0);
    std::vector<FqVector> quad(s, FqVector(s, 0));
    std::vector<FqVector> gdirs;
    for (std::size_t a = 0; a < s; ++a) {
      lin[a] = f_.add(vec_dot(f_, gbase, dirs[a]), vec_dot(f_, gbase, dirs[a]));
      gdirs.push_back(apply_form(dirs[a]));
    }
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b <= a; ++b) {
        std::int64_t v = vec_dot(f_, gdirs[a], dirs[b]);
        quad[a][b] = quad[b][a] = v;
      }

    // Odometer over theta in F_p^s, testing Q(base + sum theta_a dirs_a) = 0.
    const std::int64_t q = f_.modulus();
    FqVector theta(s, 0);
    while (true) {
      charge(s * s + kappa_);
      std::int64_t val = q00;
      for (std::size_t a = 0; a < s; ++a) {
        if (theta[a] == 0) continue;
        val = f_.add(val, f_.mul(theta[a], lin[a]));
        std::int64_t inner = 0;
        for (std::size_t b = 0; b < s; ++b)
          if (theta[b]) inner = f_.add(inner, f_.mul(theta[b], quad[a][b]));
        val = f_.add(val, f_.mul(theta[a], inner));
      }
      if (val == 0) {
        FqVector v = base;
        for (std::size_t a = 0; a < s; ++a)
          if (theta[a])
            for (int c = p; c < kappa_; ++c)
              if (dirs[a][c]) v[c] = f_.add(v[c], f_.mul(theta[a], dirs[a][c]));
        rows_.push_back(std::move(v));
        if (static_cast<int>(rows_.size()) == m_)
          (*visit_)(rows_);
        else
          extend(p);
        rows_.pop_back();
      }
      // advance odometer
      std::size_t a = 0;
      while (a < s && ++theta[a] == q) theta[a++] = 0;
      if (a == s) break;
    }
  }

  FqVector apply_form(const FqVector& v) const {
    FqVector r(kappa_, 0);
    for (int i = 0; i < kappa_; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < kappa_; ++j)
        if (gk_[i][j] && v[j]) s = f_.add(s, f_.mul(gk_[i][j], v[j]));
      r[i] = s;
    }
    return r;
  }

  void charge(std::uint64_t units) {
    *work_ += units;
    if (*work_ > budget_) throw BudgetExceeded("oracle too large");
  }

  const PrimeField& f_;
  const std::vector<FqVector>& gk_;
  int kappa_;
  int m_;
  std::uint64_t* work_;
  std::uint64_t budget_;
  std::vector<FqVector> rows_;
  const std::function<void(const std::vector<FqVector>&)>* visit_ = nullptr;
};

}  // namespace detail

// Number of isotropic two-step flags (V_{m-1} in V_m) over F_p satisfying the
// flavor's Hessenberg conditions for the given nilpotent representative:
//   E: x V_m = 0 and x V_m^perp in V_{m-1}
//   O: x V_m = 0 and x V_{m-1}^perp in V_{m-1}
inline Int brute_fiber_count(Flavor flavor, int m, const NilpotentRep& rep,
                             const OracleBudget& budget = {}) {
  if (flavor != Flavor::E && flavor != Flavor::O)
    throw std::invalid_argument("brute_fiber_count: defined for flavors E and O");
  const PrimeField& f = rep.field;
  const std::int64_t q = f.modulus();
  const int N = static_cast<int>(rep.x.rows());
  if (m < 1 || m > 3 || N > 9 || q > 5) throw BudgetExceeded("oracle too large");

  // Work inside ker x: enumerate isotropic subspaces in kernel coordinates.
  std::vector<FqVector> xrows(N, FqVector(N, 0));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) xrows[r][c] = rep.x.at(r, c);
  std::vector<FqVector> kbasis = detail::kernel_of_rows(f, xrows);
  const int kappa = static_cast<int>(kbasis.size());
  if (m > kappa) return 0;

  std::vector<FqVector> gk(kappa, FqVector(kappa, 0));
  for (int a = 0; a < kappa; ++a) {
    FqVector gb = detail::mat_apply(f, rep.gram, kbasis[a]);
    for (int b = 0; b < kappa; ++b) gk[a][b] = detail::vec_dot(f, gb, kbasis[b]);
  }

  Int count = 0;
  std::uint64_t work = 0;
  auto leaf = [&](const std::vector<FqVector>& rows) {
    work += 2000;
    if (work > budget.flag_work) throw BudgetExceeded("oracle too large");
    // Ambient RREF basis of V_m; all coefficients below refer to it.
    std::vector<FqVector> rref;
    for (const FqVector& r : rows) {
      FqVector v(N, 0);
      for (int a = 0; a < kappa; ++a)
        if (r[a])
          for (int c = 0; c < N; ++c)
            if (kbasis[a][c]) v[c] = f.add(v[c], f.mul(r[a], kbasis[a][c]));
      rref.push_back(std::move(v));
    }
    std::vector<int> pivots = detail::rref_rows(f, rref);
    // V_m^perp: kernel of (B G).
    std::vector<FqVector> bg;
    for (const FqVector& v : rref) bg.push_back(detail::mat_apply(f, rep.gram, v));
    std::vector<FqVector> perp = detail::kernel_of_rows(f, bg);
    // T = x(V_m^perp), expressed in coordinates of V_m (must lie inside).
    std::vector<FqVector> t_coeffs;
    for (const FqVector& w : perp) {
      FqVector xw = detail::mat_apply(f, rep.x, w);
      if (detail::is_zero_vec(xw)) continue;
      FqVector coeff = detail::reduce_against(f, rref, pivots, xw);
      if (!detail::is_zero_vec(xw)) return;  // T not inside V_m: no flag here
      t_coeffs.push_back(std::move(coeff));
    }
    if (flavor == Flavor::E) {
      // Count hyperplanes of V_m containing span(T).
      std::vector<FqVector> tc = t_coeffs;
      detail::rref_rows(f, tc);
      const int s = static_cast<int>(tc.size());
      Int qe = 1;
      for (int i = 0; i < m - s; ++i) qe *= q;
      count += (qe - 1) / (q - 1);
      return;
    }
    // Flavor O: test each hyperplane V_{m-1} = ker(phi) cap V_m.
    // V_{m-1}^perp = V_m^perp + <u_phi> with u_phi . (G B^T) = phi, where the
    // rows of D^T = B G are exactly bg.  Particular solutions u_s solve
    // D^T u_s = e_s.
    std::vector<FqVector> usol;
    {
      std::vector<FqVector> aug = bg;
      for (int t = 0; t < m; ++t) {
        for (int s2 = 0; s2 < m; ++s2) aug[t].push_back(t == s2 ? 1 : 0);
      }
      std::vector<int> apiv = detail::rref_rows(f, aug);
      usol.assign(m, FqVector(N, 0));
      for (std::size_t t = 0; t < aug.size(); ++t) {
        if (apiv[t] >= N) return;  // cannot happen: D has full rank
        for (int s2 = 0; s2 < m; ++s2) usol[s2][apiv[t]] = aug[t][N + s2];
      }
    }
    // Enumerate canonical covectors phi on F^m.
    FqVector phi(m, 0);
    std::function<void(int)> scan = [&](int lead) {
      if (lead == m) return;
      phi.assign(m, 0);
      phi[lead] = 1;
      FqVector free(m - lead - 1, 0);
      while (true) {
        for (int c = 0; c < m - lead - 1; ++c) phi[lead + 1 + c] = free[c];
        bool ok = true;
        for (const FqVector& tcv : t_coeffs)
          if (detail::vec_dot(f, tcv, phi) != 0) {
            ok = false;
            break;
          }
        if (ok) {
          FqVector u(N, 0);
          for (int s2 = 0; s2 < m; ++s2)
            if (phi[s2])
              for (int c = 0; c < N; ++c)
                if (usol[s2][c]) u[c] = f.add(u[c], f.mul(phi[s2], usol[s2][c]));
          FqVector xu = detail::mat_apply(f, rep.x, u);
          FqVector coeff = detail::reduce_against(f, rref, pivots, xu);
          if (detail::is_zero_vec(xu) && detail::vec_dot(f, coeff, phi) == 0) count += 1;
        }
        int c = 0;
        while (c < m - lead - 1 && ++free[c] == q) free[c++] = 0;
        if (c == m - lead - 1) break;
      }
      scan(lead + 1);
    };
    scan(0);
  };

  detail::IsotropicSubspaceEnum en(f, gk, m, &work, budget.flag_work);
  en.run(leaf);
  return count;
}

// A pairwise-distinct tuple over F_p (the finite shadow of a regular
// semisimple element) with its discriminant factors d_i.
struct RegularTuple {
  std::int64_t p = 3;
  FqVector a;

  void validate() const {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a[i] == a[j]) throw std::invalid_argument("RegularTuple: entries must be distinct");
  }

  FqVector discriminants(const PrimeField& f) const {
    FqVector d(a.size(), 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i) d[i] = f.mul(d[i], f.sub(a[j], a[i]));
    return d;
  }
};

inline RegularTuple random_regular_tuple(std::int64_t p, int n, std::mt19937_64& rng) {
  if (n > p) throw std::invalid_argument("random_regular_tuple: need n <= p");
  RegularTuple t;
  t.p = p;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  while (static_cast<int>(t.a.size()) < n) {
    std::int64_t v = dist(rng);
    if (std::find(t.a.begin(), t.a.end(), v) == t.a.end()) t.a.push_back(v);
  }
  return t;
}

namespace detail {

// Visit canonical representatives (first nonzero coordinate = 1) of P^{dim-1}
// over F_p.
template <class Visit>
void scan_projective(const PrimeField& f, int dim, std::uint64_t budget, Visit&& visit) {
  const std::int64_t q = f.modulus();
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i < dim; ++i) {
    total += power;
    power *= static_cast<std::uint64_t>(q);
  }
  if (total > budget) throw BudgetExceeded("oracle too large");
  FqVector v(dim, 0);
  for (int lead = dim - 1; lead >= 0; --lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      visit(const_cast<const FqVector&>(v));
      int c = lead + 1;
      while (c < dim && ++v[c] == q) v[c++] = 0;
      if (c == dim) break;
    }
  }
}

}  // namespace detail

// Number of F_p points of the intersection X_{m,a} of the quadrics
// sum_i a_i^k v_i^2 = 0 (k = 0..m-1) in P^{N-1}; with doubled set, of the
// double cover Xtilde_{m,a} in P^N cut out additionally by
// sum_i a_i^m v_i^2 - eps^2 = 0.
inline Int count_quadric_intersection(int N, int m, const RegularTuple& a, bool doubled,
                                      const OracleBudget& budget = {}) {
  if (static_cast<int>(a.a.size()) != N)
    throw std::invalid_argument("count_quadric_intersection: tuple size != N");
  if (m < 1 || m > N) throw std::invalid_argument("count_quadric_intersection: m out of range");
  a.validate();
  PrimeField f(a.p);
  // powers[k][i] = a_i^k
  std::vector<FqVector> powers(m + 1, FqVector(N, 1));
  for (int k = 1; k <= m; ++k)
    for (int i = 0; i < N; ++i) powers[k][i] = f.mul(powers[k - 1][i], a.a[i]);
  Int count = 0;
  const int dim = doubled ? N + 1 : N;
  detail::scan_projective(f, dim, budget.projective_points, [&](const FqVector& v) {
    FqVector sq(N);
    for (int i = 0; i < N; ++i) sq[i] = f.mul(v[i], v[i]);
    for (int k = 0; k < m; ++k)
      if (detail::vec_dot(f, powers[k], sq) != 0) return;
    if (doubled) {
      std::int64_t last = detail::vec_dot(f, powers[m], sq);
      if (f.sub(last, f.mul(v[N], v[N])) != 0) return;
    }
    count += 1;
  });
  return count;
}

// Point count of the smooth projective hyperelliptic curve
// y^2 = prod (x - b_i): the affine character sum plus the points at
// infinity dictated by the degree parity.  include_infinity_branch marks
// infinity as a branch point; the total branch divisor must have even size.
inline Int count_hyperelliptic(const FqVector& branch, bool include_infinity_branch,
                               std::int64_t prime) {
  PrimeField f(prime);
  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j)
      if (f.from_int(branch[i]) == f.from_int(branch[j]))
        throw std::invalid_argument("count_hyperelliptic: repeated branch points");
  if ((branch.size() + (include_infinity_branch ? 1 : 0)) % 2 != 0)
    throw std::invalid_argument("count_hyperelliptic: branch divisor must have even size");
  Int count = 0;
  for (std::int64_t x = 0; x < prime; ++x) {
    std::int64_t fx = 1;
    for (std::int64_t b : branch) fx = f.mul(fx, f.sub(f.from_int(x), f.from_int(b)));
    count += 1 + f.legendre(fx);
  }
  count += branch.size() % 2 == 1 ? 1 : 2;  // monic leading coefficient
  return count;
}

// Configuration equivalence at desk scale, over any exact field: builds the
// linear system V_{m,a}, the triangular change of basis A from the elementary
// symmetric functions, and checks that the composite map sends the scaled
// coordinate hyperplanes d_i * v_i to the standard hyperplanes
// H_{a,i} = (1, a_i, ..., a_i^{N-m-1}) and the residual hyperplane H_inf to
// the last coordinate.
template <class F>
bool configuration_check(const F& f, int m, const std::vector<typename F::Element>& a) {
  using E = typename F::Element;
  const int N = static_cast<int>(a.size());
  if (m < 1 || m > N - 1) throw std::invalid_argument("configuration_check: m out of range");
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (f.is_zero(f.sub(a[i], a[j])))
        throw std::invalid_argument("configuration_check: tuple must be regular");
  const int d = N - m;

  // d_i = prod_{j != i} (a_j - a_i)
  std::vector<E> disc(N, f.one());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (j != i) disc[i] = f.mul(disc[i], f.sub(a[j], a[i]));

  // elementary symmetric functions s_0..s_N
  std::vector<E> sym(N + 1, f.zero());
  sym[0] = f.one();
  for (int i = 0; i < N; ++i)
    for (int k = std::min(i + 1, N); k >= 1; --k)
      sym[k] = f.add(sym[k], f.mul(sym[k - 1], a[i]));

  // A[i][j] = (-1)^{i-1} s_{j-i} for j >= i (1-indexed); triangular.
  Matrix<F> A(d, d, f.zero());
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      E v = sym[j - i];
      if (i % 2 == 0) v = f.neg(v);
      A.at(i - 1, j - 1) = v;
    }
  Matrix<F> Ainv = A.inverse(f);

  // Vandermonde M[i][j] = a_i^j; c = M^{-1} w expresses a covector w in the
  // power basis u_j = (a_1^j, ..., a_N^j).
  Matrix<F> M(N, N, f.zero());
  for (int i = 0; i < N; ++i) {
    E pw = f.one();
    for (int j = 0; j < N; ++j) {
      M.at(i, j) = pw;
      pw = f.mul(pw, a[i]);
    }
  }
  Matrix<F> Minv = M.inverse(f);

  auto map_covector = [&](const std::vector<E>& w) {
    // c = Minv * w; y_r = (-1)^{r-1} c_{N-r}; z = y * Ainv
    std::vector<E> c(N, f.zero());
    for (int i = 0; i < N; ++i) {
      E s = f.zero();
      for (int j = 0; j < N; ++j) s = f.add(s, f.mul(Minv.at(i, j), w[j]));
      c[i] = s;
    }
    std::vector<E> y(d, f.zero());
    for (int r = 1; r <= d; ++r) {
      E v = c[N - r];
      if (r % 2 == 0) v = f.neg(v);
      y[r - 1] = v;
    }
    std::vector<E> z(d, f.zero());
    for (int j = 0; j < d; ++j) {
      E s = f.zero();
      for (int r = 0; r < d; ++r) s = f.add(s, f.mul(y[r], Ainv.at(r, j)));
      z[j] = s;
    }
    return z;
  };

  for (int i = 0; i < N; ++i) {
    std::vector<E> w(N, f.zero());
    w[i] = disc[i];
    std::vector<E> z = map_covector(w);
    E pw = f.one();
    for (int j = 0; j < d; ++j) {
      if (!f.is_zero(f.sub(z[j], pw))) return false;
      pw = f.mul(pw, a[i]);
    }
  }
  std::vector<E> winf(N, f.zero());
  for (int i = 0; i < N; ++i) {
    E pw = f.one();
    for (int k = 0; k < m; ++k) pw = f.mul(pw, a[i]);
    winf[i] = pw;
  }
  std::vector<E> z = map_covector(winf);
  for (int j = 0; j < d; ++j) {
    E want = j == d - 1 ? f.one() : f.zero();
    if (!f.is_zero(f.sub(z[j], want))) return false;
  }
  return true;
}

inline bool configuration_check(int m, const RegularTuple& a) {
  PrimeField f(a.p);
  std::vector<std::int64_t> elems(a.a.begin(), a.a.end());
  return configuration_check(f, m, elems);
}

// Two-route identity for the double cover: the direct projective count of
// Xtilde_{m,a} must equal the fiber sum over X_{m,a} of 1 + eta(<a^m v, v>).
inline bool double_cover_consistency(int N, int m, const RegularTuple& a,
                                     const OracleBudget& budget = {}) {
  PrimeField f(a.p);
  Int lhs = count_quadric_intersection(N, m, a, true, budget);
  std::vector<FqVector> powers(m + 1, FqVector(N, 1));
  for (int k = 1; k <= m; ++k)
    for (int i = 0; i < N; ++i) powers[k][i] = f.mul(powers[k - 1][i], a.a[i]);
  Int rhs = 0;
  detail::scan_projective(f, N, budget.projective_points, [&](const FqVector& v) {
    FqVector sq(N);
    for (int i = 0; i < N; ++i) sq[i] = f.mul(v[i], v[i]);
    for (int k = 0; k < m; ++k)
      if (detail::vec_dot(f, powers[k], sq) != 0) return;
    rhs += 1 + f.legendre(detail::vec_dot(f, powers[m], sq));
  });
  return lhs == rhs;
}

}  // namespace hesslab
