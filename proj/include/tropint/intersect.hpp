#pragma once

#include <vector>

#include "tropint/tropical.hpp"

namespace tropint {

struct IntersectionPoint {
  QVec location;
  Int multiplicity;
  std::vector<IVec> contributing_normals;
  std::vector<Int> contributing_weights;
};

// (prod weights) * |det(normals)|, asserted equal against the SNF lattice
// index. Throws not_transverse on a singular normal matrix.
Int transverse_multiplicity(const std::vector<IVec>& normals, const std::vector<Int>& weights);

// Stable intersection of two plane tropical curves. Transverse configurations
// are intersected facet pair by facet pair; anything degenerate (endpoint
// contacts, overlapping facets) goes through the perturbation limit.
std::vector<IntersectionPoint> stable_intersection_2d(const HypersurfaceComplex& h1,
                                                      const HypersurfaceComplex& h2,
                                                      bool* used_perturbation = nullptr);

// Ordinary transverse intersections of h1 with h2 translated by eps*v.
// Throws non_generic_perturbation when any contact is not a proper crossing.
std::vector<IntersectionPoint> perturbation_oracle_2d(const HypersurfaceComplex& h1,
                                                      const HypersurfaceComplex& h2, const IVec& v,
                                                      const Rat& eps);

// Runs the oracle at two epsilons, requires identical crossing combinatorics
// (shrinking both up to 5 times), extrapolates the crossing locations to the
// eps -> 0 limit and clusters them into stable intersection points.
std::vector<IntersectionPoint> perturbed_stable_points(const HypersurfaceComplex& h1,
                                                       const HypersurfaceComplex& h2,
                                                       const IVec& v);

struct MixedCell {
  std::vector<SubdivisionFace> summands;  // one per input polynomial, shared witness
  int total_dim = 0;                      // dim of the Minkowski sum cell
  std::vector<IVec> sum_points;           // support of the cell in the sum subdivision
  QVec witness;

  int summand_dim_total() const;
  // dim of the sum equals the sum of summand dims equals n
  bool fully_mixed(int ambient_dim) const;
  // every summand contributes an edge: the cells that carry multiplicity
  bool all_summands_edges() const;
};

// Cells of the mixed subdivision of the Minkowski sum of the Newton
// polytopes, induced by the combined lifting. n <= 3, k <= n inputs.
std::vector<MixedCell> mixed_cells(const std::vector<TropicalPolynomial>& ps);

// Total stable intersection multiplicity of r hypersurfaces cut down by
// n - r generic tropical hyperplanes (standard-simplex supports), computed as
// the sum of fully mixed cell volumes and asserted against the normalized
// mixed volume. Throws non_generic_instance on coarse (tied) liftings.
Rat bernstein_total(const std::vector<TropicalPolynomial>& ps,
                    const std::vector<TropicalPolynomial>& linear_space);

struct BezoutRow {
  std::vector<int> subset;
  Rat value;
};

struct BezoutBound {
  std::vector<BezoutRow> rows;
  Rat max_value;
  std::vector<int> witness_subset;
};

// max over r-subsets of nMV(D_i1, ..., D_ir, Simplex x (n-r)).
BezoutBound bezout_bound(const std::vector<std::vector<IVec>>& supports, int r, int n);

struct LocalBoundCheck {
  std::vector<int> subsystem;
  Int multiplicity;
  Rat bound;
  bool ok = false;
};

// Selects an independent subsystem among the local normals, forms the
// determinant multiplicity with the linear-space normals, and compares it
// with the mixed-volume bound of the selected Newton polytopes.
LocalBoundCheck local_multiplicity_bound_check(const std::vector<IVec>& normals,
                                               const std::vector<Int>& weights,
                                               const std::vector<IVec>& l_normals,
                                               const std::vector<std::vector<IVec>>& supports);

}  // namespace tropint
