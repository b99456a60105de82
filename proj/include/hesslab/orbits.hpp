// Nilpotent K-orbit calculus for the split pair (SL(N), SO(N)), N odd.
// Orbits are indexed by partitions of N; this module provides dimensions,
// parity, gap predicates and the equivariant local-system labels carried by
// orbits of order <= 3.
#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hesslab/partition.hpp"

namespace hesslab {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Complex dimension of the K-orbit O_lambda: half the ambient SL(N)-orbit
// dimension, (N^2 - sum (lambda^t_i)^2) / 2.  Only defined for odd N.
inline long orbit_dimension(const Partition& p) {
  int n = p.n_total();
  if (n % 2 == 0) throw std::invalid_argument("orbit_dimension: N must be odd");
  const Partition tp = transpose(p);
  long s = 0;
  for (int t : tp.parts()) s += static_cast<long>(t) * t;
  return (static_cast<long>(n) * n - s) / 2;
}

// Parity classification for orbits of order <= 3: O_{3^k 2^l 1^r} is
// odd-dimensional iff k is odd and l is even.
inline Parity orbit_parity(const Partition& p) {
  if (p.max_part() > 3) throw std::domain_error("orbit_parity: outside N_1^3");
  int k = p.multiplicity(3), l = p.multiplicity(2);
  return (k % 2 == 1 && l % 2 == 0) ? Parity::Odd : Parity::Even;
}

// True iff some integer in [1, max part] is absent from the parts.
inline bool has_gaps(const Partition& p) {
  for (int i = 1; i <= p.max_part(); ++i)
    if (p.multiplicity(i) == 0) return true;
  return false;
}

// Kinds of irreducible K-equivariant local systems on order-<=3 orbits.
// E1/E2/E3 follow the character convention for the component group
// A_K(x) = {1, g1, g2, g1 g2}: E1 <-> (g1,g2) = (-1,+1), E2 <-> (-1,-1),
// E3 <-> (+1,-1), where g1 is carried by the 3-part blocks and g2 by the
// 2-part blocks.  OrbitNontrivial is the unique nontrivial system on
// orbits of order 2.
enum class SystemKind { Trivial, E1, E2, E3, OrbitNontrivial };

inline const char* to_string(SystemKind k) {
  switch (k) {
    case SystemKind::Trivial: return "trivial";
    case SystemKind::E1: return "E1";
    case SystemKind::E2: return "E2";
    case SystemKind::E3: return "E3";
    case SystemKind::OrbitNontrivial: return "nontrivial";
  }
  return "?";
}

struct LocalSystemLabel {
  SystemKind kind = SystemKind::Trivial;
  Partition orbit;

  bool operator==(const LocalSystemLabel& o) const {
    return kind == o.kind && orbit == o.orbit;
  }
  bool operator<(const LocalSystemLabel& o) const {
    if (orbit != o.orbit) return orbit < o.orbit;
    return static_cast<int>(kind) < static_cast<int>(o.kind);
  }
};

// The irreducible K-equivariant local systems on O_p, p of order <= 3.
// The component group A_K(x) is (Z/2)^(d-1) for d distinct part sizes, so
// there are 2^(d-1) systems in total.
inline std::vector<LocalSystemLabel> local_systems(const Partition& p) {
  if (p.max_part() > 3) throw std::domain_error("local_systems: unsupported outside N_1^3");
  int a = p.multiplicity(3), b = p.multiplicity(2), c = p.multiplicity(1);
  std::vector<LocalSystemLabel> out;
  out.push_back({SystemKind::Trivial, p});
  if (a > 0 && b > 0 && c > 0) {
    out.push_back({SystemKind::E1, p});
    out.push_back({SystemKind::E2, p});
    out.push_back({SystemKind::E3, p});
  } else if (a > 0 && c > 0) {
    out.push_back({SystemKind::E1, p});
  } else if (a > 0 && b > 0) {
    out.push_back({SystemKind::E3, p});
  } else if (b > 0 && c > 0) {
    out.push_back({SystemKind::OrbitNontrivial, p});
  }
  return out;
}

struct OrbitDescriptor {
  Partition partition;
  long dim = 0;
  Parity parity = Parity::Even;
  bool order3 = false;
  bool gaps = false;
};

inline OrbitDescriptor describe_orbit(const Partition& p) {
  OrbitDescriptor d;
  d.partition = p;
  d.dim = orbit_dimension(p);
  d.parity = d.dim % 2 == 0 ? Parity::Even : Parity::Odd;
  d.order3 = p.max_part() <= 3;
  d.gaps = has_gaps(p);
  return d;
}

// All order-<=3 orbits for N = 2n+1, largest first.
inline std::vector<OrbitDescriptor> orbits_n3(int n) {
  if (n < 1) throw std::invalid_argument("orbits_n3: n must be >= 1");
  std::vector<OrbitDescriptor> out;
  for (const Partition& p : partitions_of(2 * n + 1, 3)) out.push_back(describe_orbit(p));
  return out;
}

}  // namespace hesslab
