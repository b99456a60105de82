// Point-count / Poincare polynomials in q for Grassmannians, orthogonal
// Grassmannians, projective spaces and smooth quadrics.  For affinely paved
// varieties the F_q point count and the Poincare polynomial coincide, so one
// type serves both roles.
#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesslab/common.hpp"

namespace hesslab {

// Polynomial in q with nonnegative integer coefficients.  Any operation that
// would produce a negative coefficient throws: paving counts cannot go
// negative.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;

  explicit PoincarePolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    for (const Int& x : c_)
      if (x < 0) throw std::domain_error("negative coefficient in count polynomial");
    trim();
  }

  static PoincarePolynomial zero() { return PoincarePolynomial(); }
  static PoincarePolynomial one() { return constant(1); }

  static PoincarePolynomial constant(Int v) {
    PoincarePolynomial p;
    if (v < 0) throw std::domain_error("negative coefficient in count polynomial");
    if (v != 0) p.c_ = {std::move(v)};
    return p;
  }

  // q^k
  static PoincarePolynomial power(int k) {
    if (k < 0) throw std::domain_error("negative exponent");
    PoincarePolynomial p;
    p.c_.assign(k + 1, 0);
    p.c_[k] = 1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  const std::vector<Int>& coeffs() const { return c_; }

  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
  }

  Int evaluate(const Int& q) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
  }

  bool palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
  }

  PoincarePolynomial& operator+=(const PoincarePolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  PoincarePolynomial& operator-=(const PoincarePolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      c_[i] -= o.c_[i];
      if (c_[i] < 0) throw std::domain_error("negative coefficient in count polynomial");
    }
    trim();
    return *this;
  }

  friend PoincarePolynomial operator+(PoincarePolynomial a, const PoincarePolynomial& b) {
    a += b;
    return a;
  }
  friend PoincarePolynomial operator-(PoincarePolynomial a, const PoincarePolynomial& b) {
    a -= b;
    return a;
  }

  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    PoincarePolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  bool operator==(const PoincarePolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const PoincarePolynomial& o) const { return c_ != o.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0)
        os << c_[i];
      else {
        if (c_[i] != 1) os << c_[i] << "*";
        os << "q";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;  // c_[i] = coefficient of q^i; no trailing zeros
};

inline std::ostream& operator<<(std::ostream& os, const PoincarePolynomial& p) {
  return os << p.to_string();
}

// Gaussian binomial [n choose k]_q, the point count of Gr(k, n) over F_q.
// Zero polynomial for k > n.  Computed by the q-Pascal recurrence
// [n k] = [n-1 k-1] + q^k [n-1 k].
inline PoincarePolynomial gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
  if (k > n) return PoincarePolynomial::zero();
  if (k > n - k) k = n - k;
  std::vector<PoincarePolynomial> row(k + 1, PoincarePolynomial::zero());
  row[0] = PoincarePolynomial::one();
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(m, k); j >= 1; --j)
      row[j] = row[j - 1] + PoincarePolynomial::power(j) * row[j];
  return row[k];
}

// 1 + q + ... + q^D; zero polynomial for D < 0.
inline PoincarePolynomial projective_count(int D) {
  if (D < 0) return PoincarePolynomial::zero();
  return PoincarePolynomial(std::vector<Int>(D + 1, 1));
}

// Witt type of a nondegenerate quadratic space over F_q.  Split is the odd-
// dimensional case; Plus/Minus the hyperbolic and non-hyperbolic even cases.
enum class Witt { Split, Plus, Minus };

inline const char* to_string(Witt w) {
  switch (w) {
    case Witt::Split: return "split";
    case Witt::Plus: return "plus";
    case Witt::Minus: return "minus";
  }
  return "?";
}

// Point count of a smooth quadric of dimension D (in P^{D+1}).
// Odd D: sum q^i.  Even D: sum q^i +- q^{D/2} by type.
inline PoincarePolynomial quadric_count(int D, Witt type = Witt::Split) {
  if (D < 0) return PoincarePolynomial::zero();
  PoincarePolynomial p = projective_count(D);
  if (D % 2 == 0) {
    switch (type) {
      case Witt::Plus:
        p += PoincarePolynomial::power(D / 2);
        break;
      case Witt::Minus:
        p -= PoincarePolynomial::power(D / 2);
        break;
      case Witt::Split:
        throw std::invalid_argument("quadric_count: even dimension needs Plus or Minus");
    }
  }
  return p;
}

// Point count of the orthogonal Grassmannian OGr(k, d): isotropic k-planes in
// a d-dimensional quadratic space of the given Witt type.
//   d = 2l+1: [l k]_q prod_{i=l-k+1}^{l} (q^i + 1)
//   d = 2l, Plus: [l k]_q prod_{i=l-k}^{l-1} (q^i + 1)
//   d = 2l, Minus: [l-1 k]_q prod_{i=l-k+1}^{l} (q^i + 1)
inline PoincarePolynomial ogr_count(int k, int d, Witt type) {
  if (k < 0 || d < 0) throw std::invalid_argument("ogr_count: negative argument");
  if (2 * k > d) throw std::invalid_argument("ogr_count: no isotropic subspace of that dimension");
  if (d % 2 == 1 && type != Witt::Split)
    throw std::invalid_argument("ogr_count: odd dimension is Split");
  if (d % 2 == 0 && type == Witt::Split)
    throw std::invalid_argument("ogr_count: even dimension needs Plus or Minus");
  if (k == 0) return PoincarePolynomial::one();
  const int l = d / 2;
  PoincarePolynomial p;
  int lo, hi;
  if (d % 2 == 1) {
    p = gaussian_binomial(l, k);
    lo = l - k + 1;
    hi = l;
  } else if (type == Witt::Plus) {
    p = gaussian_binomial(l, k);
    lo = l - k;
    hi = l - 1;
  } else {
    p = gaussian_binomial(l - 1, k);
    lo = l - k + 1;
    hi = l;
  }
  for (int i = lo; i <= hi; ++i)
    p = p * (PoincarePolynomial::power(i) + PoincarePolynomial::one());
  return p;
}

}  // namespace hesslab
