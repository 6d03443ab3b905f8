#pragma once

#include <cstdint>
#include <vector>

#include "tropint/tropical.hpp"

namespace tropint {

// Degree-1 balanced tree: a 3-valent star in R^2 (rays (1,1),(-1,0),(0,-1)),
// or the 2-vertex 4-ray tree in R^3 with rays -e1,-e2,-e3,(1,1,1) split 2/2.
struct TropicalLine {
  int ambient_dim = 0;
  std::vector<QVec> vertices;  // 1 vertex (n = 2) or 2 vertices (n = 3)
  // rays as (vertex index, primitive direction)
  std::vector<std::pair<int, IVec>> rays;
  // n = 3: the pair {i, j} whose rays share the first vertex; the bounded
  // edge then runs in direction e_i + e_j. {-1, -1} for n = 2.
  std::pair<int, int> combinatorial_type{-1, -1};
};

// Seeded sampling with rational vertex coordinates in [-box, box]^n.
TropicalLine random_tropical_line(int n, uint64_t seed, long box = 20);

// Edges of the tree as parametrized pieces {base + t*dir : 0 <= t (<= hi)}.
struct LineEdge {
  QVec base;
  IVec dir;
  bool bounded = false;
  Rat hi;  // parameter of the far endpoint when bounded
};

std::vector<LineEdge> line_edges(const TropicalLine& l);

struct LineIntersection {
  QVec point;
  bool transverse = false;
};

// All intersection points of the line's edges with the hypersurface cells;
// transverse means relative interior of one edge and one facet with
// complementary direction spans.
std::vector<LineIntersection> line_hypersurface_intersections(const TropicalLine& l,
                                                              const HypersurfaceComplex& h);

struct DegreeReport {
  std::vector<IVec> support;
  Int diameter_bound;
  long max_transverse_count = 0;
  long samples = 0;
  long discarded = 0;  // lines with any non-transverse contact, resampled away
  bool bound_satisfied = false;
};

// Samples lines, counts transverse-only intersections of the transverse
// samples, reports the max against the l1-diameter bound.
DegreeReport empirical_degree(const TropicalPolynomial& p, long samples, uint64_t seed,
                              int threads = 1);

// True iff every leaf-to-leaf tree path has coordinatewise monotone
// arc-length parametrization.
bool geodesic_monotonicity_check(const TropicalLine& l);

}  // namespace tropint
