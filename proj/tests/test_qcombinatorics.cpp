#include <catch2/catch_amalgamated.hpp>

#include "hesslab/poincare.hpp"
#include "test_oracles.hpp"

using namespace hesslab;

TEST_CASE("polynomial arithmetic basics") {
  PoincarePolynomial p({1, 2});
  CHECK(p.evaluate(3) == 7);
  CHECK((p * p).coeffs() == std::vector<Int>({1, 4, 4}));
  CHECK(p.to_string() == "1 + 2*q");
  CHECK(PoincarePolynomial::zero().is_zero());
  CHECK(PoincarePolynomial::power(3).degree() == 3);
  CHECK_THROWS_AS(PoincarePolynomial({1, -1}), std::domain_error);
  // subtraction producing a negative coefficient is a hard error
  CHECK_THROWS_AS(PoincarePolynomial({1}) - PoincarePolynomial({2}), std::domain_error);
}

TEST_CASE("gaussian binomial frozen values") {
  CHECK(gaussian_binomial(2, 1).coeffs() == std::vector<Int>({1, 1}));
  CHECK(gaussian_binomial(4, 2).coeffs() == std::vector<Int>({1, 1, 2, 1, 1}));
  CHECK(gaussian_binomial(4, 2).evaluate(2) == 35);
  CHECK(gaussian_binomial(4, 2).evaluate(3) == 130);
  CHECK(gaussian_binomial(7, 0) == PoincarePolynomial::one());
  CHECK(gaussian_binomial(3, 5).is_zero());
}

TEST_CASE("gaussian binomial against subspace enumeration") {
  for (std::int64_t q : {2, 3}) {
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(gaussian_binomial(n, k).evaluate(q) == test_oracle::count_subspaces(q, n, k));
  }
}

TEST_CASE("gaussian binomial symmetry") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
      CHECK(gaussian_binomial(n, k).palindromic());
    }
}

TEST_CASE("projective_count") {
  CHECK(projective_count(0) == PoincarePolynomial::one());
  CHECK(projective_count(1).coeffs() == std::vector<Int>({1, 1}));
  CHECK(projective_count(3).evaluate(3) == 40);
  CHECK(projective_count(-1).is_zero());
}

TEST_CASE("quadric counts, frozen and against enumeration") {
  CHECK(quadric_count(1).coeffs() == std::vector<Int>({1, 1}));
  CHECK(quadric_count(2, Witt::Plus).coeffs() == std::vector<Int>({1, 2, 1}));
  CHECK(quadric_count(2, Witt::Minus).coeffs() == std::vector<Int>({1, 0, 1}));
  CHECK(quadric_count(2, Witt::Plus).evaluate(3) == 16);
  CHECK(quadric_count(2, Witt::Minus).evaluate(3) == 10);
  CHECK_THROWS_AS(quadric_count(2, Witt::Split), std::invalid_argument);

  for (std::int64_t q : {3, 5}) {
    PrimeField f(q);
    for (int D = 0; D <= 5; ++D) {
      if (D % 2 == 1) {
        CHECK(quadric_count(D).evaluate(q) ==
              test_oracle::count_quadric_points(f, test_oracle::split_gram(f, D + 2)));
      } else {
        CHECK(quadric_count(D, Witt::Plus).evaluate(q) ==
              test_oracle::count_quadric_points(f, test_oracle::split_gram(f, D + 2)));
        CHECK(quadric_count(D, Witt::Minus).evaluate(q) ==
              test_oracle::count_quadric_points(f, test_oracle::minus_gram(f, D + 2)));
      }
    }
  }
}

TEST_CASE("ogr_count frozen values") {
  CHECK(ogr_count(1, 3, Witt::Split).coeffs() == std::vector<Int>({1, 1}));
  CHECK(ogr_count(1, 3, Witt::Split).evaluate(3) == 4);
  CHECK(ogr_count(1, 5, Witt::Split).coeffs() == std::vector<Int>({1, 1, 1, 1}));
  CHECK(ogr_count(1, 5, Witt::Split).evaluate(3) == 40);
  CHECK(ogr_count(0, 6, Witt::Plus) == PoincarePolynomial::one());
  CHECK(ogr_count(0, 7, Witt::Split) == PoincarePolynomial::one());
  CHECK_THROWS_AS(ogr_count(3, 5, Witt::Split), std::invalid_argument);
  CHECK_THROWS_AS(ogr_count(1, 4, Witt::Split), std::invalid_argument);
  CHECK_THROWS_AS(ogr_count(1, 5, Witt::Plus), std::invalid_argument);
}

TEST_CASE("ogr_count against isotropic subspace enumeration") {
  for (std::int64_t q : {3, 5}) {
    PrimeField f(q);
    const int dmax = q == 3 ? 7 : 6;
    for (int d = 1; d <= dmax; ++d)
      for (int k = 0; 2 * k <= d; ++k) {
        if (d % 2 == 1) {
          CHECK(ogr_count(k, d, Witt::Split).evaluate(q) ==
                test_oracle::count_isotropic_subspaces(f, test_oracle::split_gram(f, d), k));
        } else {
          CHECK(ogr_count(k, d, Witt::Plus).evaluate(q) ==
                test_oracle::count_isotropic_subspaces(f, test_oracle::split_gram(f, d), k));
          CHECK(ogr_count(k, d, Witt::Minus).evaluate(q) ==
                test_oracle::count_isotropic_subspaces(f, test_oracle::minus_gram(f, d), k));
        }
      }
  }
}

TEST_CASE("ogr_count degree formula, split odd") {
  for (int l = 1; l <= 6; ++l) {
    int d = 2 * l + 1;
    for (int k = 1; k <= l; ++k)
      CHECK(ogr_count(k, d, Witt::Split).degree() == k * (d - k) - k * (k + 1) / 2);
  }
}

TEST_CASE("counts and Poincare polynomials coincide for paved varieties") {
  // evaluation at 1 gives the Euler characteristic / total Betti number
  CHECK(gaussian_binomial(4, 2).evaluate(1) == 6);   // chi of Gr(2,4)
  CHECK(quadric_count(2, Witt::Plus).evaluate(1) == 4);
  CHECK(projective_count(5).evaluate(1) == 6);
}
