// Shared scalar types and small numeric helpers used across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hesslab {

// All counts, dimensions and polynomial coefficients are exact integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

inline long ceil_div(long a, long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Thrown by enumeration oracles when the requested work exceeds the budget.
// Callers surface this as a "skipped" status, never as a silent truncation.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hesslab
