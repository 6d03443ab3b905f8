#pragma once

#include <vector>

#include "tropint/lattice.hpp"
#include "tropint/numeric.hpp"

namespace tropint {

// Supporting hyperplane <normal, x> <= offset, normal outward and primitive
// (gcd of normal entries and offset divided out jointly is NOT applied; the
// normal alone is primitive so lattice data on facets stays meaningful).
struct HullPlane {
  IVec normal;
  Int offset;
};

struct Hull {
  int ambient = 0;
  int dim = 0;                // affine dimension of the point set
  std::vector<int> vertices;  // indices into the input list, sorted, irredundant
  Rat volume = Rat(0);        // Euclidean volume; 0 when dim < ambient
  std::vector<HullPlane> planes;  // distinct facet hyperplanes (full-dim case only)
};

// Exact convex hull of integer points, dimensions 1..5. Handles repeated
// points and lower-dimensional configurations. Throws empty_input.
Hull convex_hull_points(const std::vector<IVec>& pts);

// Volume-only entry point (same exactness, skips vertex filtering).
Rat hull_volume(const std::vector<IVec>& pts);

}  // namespace tropint
