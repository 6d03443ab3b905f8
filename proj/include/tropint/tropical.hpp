#pragma once

#include <vector>

#include "tropint/lattice.hpp"
#include "tropint/numeric.hpp"
#include "tropint/polytope.hpp"

namespace tropint {

struct Term {
  IVec exponent;
  Rat coefficient;
};

// max-plus polynomial p(x) = max over terms of <x, exponent> + coefficient
struct TropicalPolynomial {
  int ambient_dim = 0;
  std::vector<Term> terms;

  std::vector<IVec> support() const;
};

// Validates: at least one term, exponents of length n, pairwise distinct.
TropicalPolynomial make_polynomial(int n, std::vector<Term> terms);

struct EvalResult {
  Rat value;
  std::vector<int> argmax;  // term indices attaining the max, sorted
};

EvalResult evaluate(const TropicalPolynomial& p, const QVec& x);

bool on_hypersurface(const TropicalPolynomial& p, const QVec& x);

// p(x) + q(x) as one tropical polynomial: exponents are sums, coefficient of
// a sum exponent is the max over decompositions of the coefficient sums.
TropicalPolynomial tropical_product(const TropicalPolynomial& p, const TropicalPolynomial& q);

// Faces of the regular subdivision induced by the coefficient lifting (upper
// hull). Every face carries a witness x with argmax(p, x) exactly the face's
// term set; for maximal faces of a full-dimensional Newton polytope the
// witness is the dual vertex of the hypersurface.
struct SubdivisionFace {
  std::vector<int> term_ids;  // sorted
  int dim = 0;
  QVec witness;
};

struct RegularSubdivision {
  int ambient_dim = 0;
  int newton_dim = 0;
  std::vector<SubdivisionFace> faces;  // all faces, every dimension
  std::vector<int> maximal;            // indices of faces with dim == newton_dim
};

RegularSubdivision regular_subdivision_full(const TropicalPolynomial& p);

// Maximal cells only.
std::vector<SubdivisionFace> regular_subdivision(const TropicalPolynomial& p);

struct Facet {
  int face_id = 0;         // index into subdivision.faces (a dim-1 face)
  IVec dual_u, dual_v;     // endpoints of the dual edge, u lexicographically first
  IVec primitive_normal;   // primitive(v - u)
  Int weight;              // lattice length of [u, v]
  QVec base;               // point in the relative interior of the facet
  std::vector<IVec> directions;  // saturated basis of the facet's direction space
};

struct ComplexVertex {
  int face_id = 0;  // dual full-dimensional cell
  QVec location;
};

struct ComplexEdge {
  int face_id = 0;  // dual 2-dimensional cell (n == 3)
  QVec base;
  IVec direction;  // primitive
};

struct HypersurfaceComplex {
  TropicalPolynomial poly;
  int ambient_dim = 0;
  RegularSubdivision subdivision;
  std::vector<Facet> facets;
  std::vector<ComplexVertex> vertices;  // n <= 3 and full-dim Newton polytope
  std::vector<ComplexEdge> edges;       // n == 3 only
  bool full_complex = false;
};

// Facets for any n <= 4; full cell incidence and a balancing check for n <= 3.
HypersurfaceComplex hypersurface(const TropicalPolynomial& p);

// Throws errc::internal if a weighted balancing sum fails to close; callable
// directly by tests, also run during construction for n <= 3.
void verify_balancing(const HypersurfaceComplex& h);

// Parametrization of a 2-d facet as {base + t*dir : lo <= t <= hi}, bounds
// optional (rays and lines).
struct ParamInterval {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
};

ParamInterval facet_interval_2d(const HypersurfaceComplex& h, int facet_id);

struct LinkCone {
  std::vector<IVec> generators;  // conical generators, every one lies on the link
  std::vector<IVec> span_basis;  // basis of the cone's linear span
  IVec sample;                   // primitive direction in the relative interior
};

struct LinkFan {
  std::vector<LinkCone> cones;  // maximal cones (facets of the localized fan)
};

// Fan of direction cones of all cells of H through omega; throws
// point_not_on_hypersurface when argmax at omega is a singleton.
LinkFan link_at(const HypersurfaceComplex& h, const QVec& omega);

}  // namespace tropint
