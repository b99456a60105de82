// Independent cohomology oracle for smooth complete intersections in
// projective space: Euler characteristics by exact power-series coefficient
// extraction, and primitive middle Betti numbers via weak Lefschetz.
#pragma once

#include <stdexcept>
#include <vector>

#include "hesslab/common.hpp"

namespace hesslab {

// A complete intersection of the given degrees in P^{ambient_dim}.
struct CIProfile {
  int ambient_dim = 0;              // K, the ambient P^K
  std::vector<int> degrees;         // hypersurface degrees, nonempty

  CIProfile(int K, std::vector<int> degs) : ambient_dim(K), degrees(std::move(degs)) {
    if (degrees.empty()) throw std::invalid_argument("CIProfile: degrees must be nonempty");
    for (int d : degrees)
      if (d < 1) throw std::invalid_argument("CIProfile: degrees must be positive");
    if (dim() < 0) throw std::invalid_argument("CIProfile: negative dimension");
  }

  int dim() const { return ambient_dim - static_cast<int>(degrees.size()); }
};

// Euler characteristic: chi = (prod d_i) * [z^D] (1+z)^{K+1} / prod (1 + d_i z),
// truncated exactly at degree D.
inline Int ci_euler(const CIProfile& profile) {
  const int D = profile.dim();
  const int K = profile.ambient_dim;
  // series (1+z)^{K+1} up to z^D
  std::vector<Int> s(D + 1);
  for (int i = 0; i <= D; ++i) s[i] = binomial(K + 1, i);
  // divide by (1 + d z) for each degree: t_i = s_i - d * t_{i-1}
  for (int d : profile.degrees) {
    std::vector<Int> t(D + 1);
    for (int i = 0; i <= D; ++i) t[i] = s[i] - (i > 0 ? Int(d) * t[i - 1] : Int(0));
    s = std::move(t);
  }
  Int chi = s[D];
  for (int d : profile.degrees) chi *= d;
  return chi;
}

// Dimension of the primitive middle cohomology.  Away from the middle degree
// a smooth complete intersection has the Betti numbers of projective space,
// which converts chi into the middle Betti number:
//   D even: b_D = chi - D, primitive = b_D - 1
//   D odd:  b_D = (D+1) - chi, primitive = b_D
//   D = 0:  number of points minus 1.
inline Int primitive_middle_betti(const CIProfile& profile) {
  const int D = profile.dim();
  const Int chi = ci_euler(profile);
  Int prim;
  if (D == 0)
    prim = chi - 1;
  else if (D % 2 == 0)
    prim = chi - D - 1;
  else
    prim = Int(D + 1) - chi;
  if (prim < 0) throw std::domain_error("primitive_middle_betti: inconsistent profile");
  return prim;
}

}  // namespace hesslab
