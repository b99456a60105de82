// Exact dense linear algebra over a field, templated on the field model.
// Two models are provided: PrimeField (odd prime, elements in int64) and
// RationalField (arbitrary-precision rationals).  Everything is exact; no
// floating point.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hesslab/common.hpp"

namespace hesslab {

// Arithmetic in F_p for an odd prime p.  Elements are canonical residues in
// [0, p).  Products of residues fit in int64 for every p used here.
class PrimeField {
 public:
  using Element = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("PrimeField: p must be an odd prime");
    for (std::int64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) throw std::invalid_argument("PrimeField: p must be an odd prime");
    legendre_.assign(static_cast<std::size_t>(p), 0);
    for (std::int64_t t = 1; t < p; ++t) legendre_[static_cast<std::size_t>(t * t % p)] = 1;
    for (std::int64_t t = 1; t < p; ++t)
      if (legendre_[static_cast<std::size_t>(t)] == 0) legendre_[static_cast<std::size_t>(t)] = -1;
  }

  std::int64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  bool is_zero(Element a) const { return a == 0; }

  Element add(Element a, Element b) const {
    Element r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Element sub(Element a, Element b) const {
    Element r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return a * b % p_; }

  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }

  // Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0.
  int legendre(Element a) const { return legendre_[static_cast<std::size_t>(a)]; }

 private:
  std::int64_t p_;
  std::vector<int> legendre_;  // memoized table
};

// Exact rationals as a field model.
class RationalField {
 public:
  using Element = Rat;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return Rat(v); }
  bool is_zero(const Element& a) const { return a == 0; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
};

// Dense row-major matrix over a field model F.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Element fill = Element())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix multiply(const F& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix r(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Element& aik = a.at(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
      }
    return r;
  }

  // In-place Gaussian elimination to row echelon form; returns the rank.
  std::size_t echelonize(const F& f) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t piv = rank;
      while (piv < rows_ && f.is_zero(at(piv, col))) ++piv;
      if (piv == rows_) continue;
      if (piv != rank)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(rank, c));
      Element pinv = f.inv(at(rank, col));
      for (std::size_t c = col; c < cols_; ++c) at(rank, c) = f.mul(at(rank, c), pinv);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == rank || f.is_zero(at(r, col))) continue;
        Element factor = at(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          at(r, c) = f.sub(at(r, c), f.mul(factor, at(rank, c)));
      }
      ++rank;
    }
    return rank;
  }

  std::size_t rank(const F& f) const {
    Matrix copy = *this;
    return copy.echelonize(f);
  }

  // Basis of the right kernel {x : A x = 0}, as rows of the result.
  Matrix kernel_basis(const F& f) const {
    Matrix red = *this;
    red.echelonize(f);
    std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      if (!f.is_zero(red.at(r, c))) {
        pivot_of_col[c] = r;
        ++r;
      }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col[c] == SIZE_MAX) free_cols.push_back(c);
    Matrix ker(free_cols.size(), cols_, f.zero());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::size_t fc = free_cols[k];
      ker.at(k, fc) = f.one();
      for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pr = pivot_of_col[c];
        if (pr != SIZE_MAX) ker.at(k, c) = f.neg(red.at(pr, fc));
      }
    }
    return ker;
  }

  // Inverse of a square matrix; throws if singular.
  Matrix inverse(const F& f) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix inverse: not square");
    Matrix aug(rows_, 2 * cols_, f.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_ + r) = f.one();
    }
    aug.echelonize(f);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        bool want_one = r == c;
        const Element& v = aug.at(r, c);
        if (want_one ? !f.is_zero(f.sub(v, f.one())) : !f.is_zero(v))
          throw std::domain_error("Matrix inverse: singular");
      }
    Matrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> a_;
};

using FqMatrix = Matrix<PrimeField>;
using RatMatrix = Matrix<RationalField>;

}  // namespace hesslab
