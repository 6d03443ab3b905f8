#pragma once

#include <vector>

#include "tropint/hull.hpp"
#include "tropint/numeric.hpp"

namespace tropint {

struct LatticePolytope {
  int ambient_dim = 0;
  int dim = 0;                 // intrinsic dimension, <= ambient_dim
  std::vector<IVec> vertices;  // irredundant, lexicographically sorted

  bool operator==(const LatticePolytope& o) const = default;
};

// Irredundant vertex hull. Ambient dimension capped at 4. Throws
// dimension_too_large / empty_input.
LatticePolytope convex_hull(const std::vector<IVec>& points);

// max over pairs of the l1 distance; 0 for singletons. Throws empty_input.
Int l1_diameter(const std::vector<IVec>& support);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// Exact Euclidean volume; 0 for lower-dimensional polytopes.
Rat volume(const LatticePolytope& p);

// n! * volume(P), checked integral.
Rat normalized_volume(const LatticePolytope& p);

// Normalized mixed volume n!*MV(P1..Pn) by inclusion-exclusion over subset
// Minkowski sums. Expects exactly n polytopes in R^n.
Rat mixed_volume_ie(const std::vector<LatticePolytope>& ps, int threads = 1);

// Same quantity by exact polynomial interpolation of Vol(l1 P1 + ... + ln Pn)
// on the grid {1..n+1}^n, extracting the multilinear coefficient.
Rat mixed_volume_interp(const std::vector<LatticePolytope>& ps);

// MV itself (the unnormalized value), derived accessor.
Rat mixed_volume_unnormalized(const std::vector<LatticePolytope>& ps);

// conv{0, e1, ..., en}: Newton polytope of a tropical hyperplane.
LatticePolytope standard_simplex(int n);

// conv of d * standard simplex vertices.
LatticePolytope dilated_simplex(int n, int d);

}  // namespace tropint
