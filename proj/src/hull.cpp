#include "tropint/hull.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace tropint {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Int hi(static_cast<unsigned long>(u >> 64));
  Int lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  Int r = (hi << 64) + lo;
  return neg ? Int(-r) : r;
}

template <class C, class W>
struct Traits;

template <>
struct Traits<long, i128> {
  static i128 widen(long v) { return v; }
  static i128 gcd(i128 a, i128 b) { return gcd128(a, b); }
  static Int mpz(i128 v) { return to_mpz(v); }
};

template <>
struct Traits<Int, Int> {
  static const Int& widen(const Int& v) { return v; }
  static Int gcd(const Int& a, const Int& b) { return ::gcd(a, b); }
  static const Int& mpz(const Int& v) { return v; }
};

// determinant of a small matrix by cofactor expansion (n <= 5 in practice)
template <class W>
W small_det(const std::vector<std::vector<W>>& m, int n) {
  if (n == 0) return W(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  W det(0);
  std::vector<std::vector<W>> minor(n - 1, std::vector<W>(n - 1));
  for (int j = 0; j < n; ++j) {
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    W term = m[0][j] * small_det(minor, n - 1);
    det += (j % 2 == 0) ? term : W(-term);
  }
  return det;
}

// Incremental beneath-beyond hull with simplicial facets and strict
// visibility. Correct for degenerate (coplanar, collinear) inputs: points on
// a facet hyperplane are never "visible" through it, and a point outside the
// hull is strictly outside at least one facet.
template <class C, class W>
struct Core {
  using T = Traits<C, W>;
  int dim;
  const std::vector<std::vector<C>>& pts;

  struct Facet {
    std::vector<int> vs;  // dim vertex ids
    std::vector<W> normal;
    W offset;
  };
  std::vector<Facet> facets;
  std::vector<C> ref;  // (dim+1) * interior point, for orienting new facets

  Core(int d, const std::vector<std::vector<C>>& p) : dim(d), pts(p) {}

  // outward-oriented hyperplane through the dim points `vs`; `inside` must
  // end up strictly on the <= side (inside is pre-scaled by `scale`)
  bool plane_through(const std::vector<int>& vs, const std::vector<C>& inside, int scale,
                     Facet& out) {
    std::vector<std::vector<W>> dirs(dim - 1, std::vector<W>(dim));
    for (int i = 1; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        dirs[i - 1][j] = T::widen(pts[vs[i]][j]) - T::widen(pts[vs[0]][j]);
    std::vector<W> n(dim);
    std::vector<std::vector<W>> minor(dim - 1, std::vector<W>(dim - 1));
    bool nonzero = false;
    for (int j = 0; j < dim; ++j) {
      for (int r = 0; r < dim - 1; ++r) {
        int cc = 0;
        for (int c = 0; c < dim; ++c) {
          if (c == j) continue;
          minor[r][cc++] = dirs[r][c];
        }
      }
      W d = small_det(minor, dim - 1);
      n[j] = (j % 2 == 0) ? d : W(-d);
      if (n[j] != 0) nonzero = true;
    }
    if (!nonzero) return false;  // degenerate simplex
    W g(0);
    for (int j = 0; j < dim; ++j) g = T::gcd(g, n[j]);
    for (int j = 0; j < dim; ++j) n[j] /= g;
    W c(0);
    for (int j = 0; j < dim; ++j) c += n[j] * T::widen(pts[vs[0]][j]);
    W side(0);
    for (int j = 0; j < dim; ++j) side += n[j] * T::widen(inside[j]);
    side -= W(scale) * c;
    if (side == 0) return false;  // reference on the plane: degenerate
    if (side > 0) {
      for (int j = 0; j < dim; ++j) n[j] = W(-n[j]);
      c = W(-c);
    }
    out.vs = vs;
    out.normal = std::move(n);
    out.offset = c;
    return true;
  }

  W eval(const Facet& f, int p) const {
    W s(0);
    for (int j = 0; j < dim; ++j) s += f.normal[j] * T::widen(pts[p][j]);
    return s - f.offset;
  }

  void build(const std::vector<int>& simplex, const std::vector<int>& rest) {
    ref.assign(dim, C(0));
    for (int v : simplex)
      for (int j = 0; j < dim; ++j) ref[j] += pts[v][j];
    int scale = dim + 1;
    for (int omit = 0; omit <= dim; ++omit) {
      std::vector<int> vs;
      for (int i = 0; i <= dim; ++i)
        if (i != omit) vs.push_back(simplex[i]);
      Facet f;
      if (!plane_through(vs, ref, scale, f))
        fail(errc::internal, "degenerate initial simplex in hull");
      facets.push_back(std::move(f));
    }
    for (int p : rest) insert(p, scale);
  }

  void insert(int p, int scale) {
    std::vector<char> visible(facets.size(), 0);
    bool any = false;
    for (size_t i = 0; i < facets.size(); ++i) {
      if (eval(facets[i], p) > 0) {
        visible[i] = 1;
        any = true;
      }
    }
    if (!any) return;  // inside or on the boundary
    // horizon = ridges incident to exactly one visible facet
    std::map<std::vector<int>, std::pair<int, int>> ridge_count;  // ridge -> (#visible, #total)
    for (size_t i = 0; i < facets.size(); ++i) {
      for (int omit = 0; omit < dim; ++omit) {
        std::vector<int> ridge;
        for (int k = 0; k < dim; ++k)
          if (k != omit) ridge.push_back(facets[i].vs[k]);
        std::sort(ridge.begin(), ridge.end());
        auto& rc = ridge_count[ridge];
        if (visible[i]) rc.first++;
        rc.second++;
      }
    }
    std::vector<Facet> next;
    for (size_t i = 0; i < facets.size(); ++i)
      if (!visible[i]) next.push_back(std::move(facets[i]));
    for (auto& [ridge, rc] : ridge_count) {
      if (rc.first >= 1 && rc.second != 2)
        fail(errc::internal, "hull boundary is not a closed pseudomanifold");
      if (rc.first != 1) continue;
      std::vector<int> vs = ridge;
      vs.push_back(p);
      Facet f;
      if (!plane_through(vs, ref, scale, f))
        fail(errc::internal, "degenerate horizon cone facet in hull");
      next.push_back(std::move(f));
    }
    facets = std::move(next);
  }

  Rat volume(int base_vertex) const {
    Int total = 0;
    std::vector<std::vector<W>> m(dim, std::vector<W>(dim));
    for (const auto& f : facets) {
      bool has_base = false;
      for (int v : f.vs)
        if (v == base_vertex) has_base = true;
      if (has_base) continue;
      for (int r = 0; r < dim; ++r)
        for (int j = 0; j < dim; ++j)
          m[r][j] = T::widen(pts[f.vs[r]][j]) - T::widen(pts[base_vertex][j]);
      W d = small_det(m, dim);
      total += T::mpz(d < 0 ? W(-d) : d);
    }
    Int fact = 1;
    for (int i = 2; i <= dim; ++i) fact *= i;
    return make_rat(total, fact);
  }

  // distinct supporting hyperplanes + irredundant vertex ids (local ids)
  void extract(std::vector<HullPlane>& planes, std::vector<int>& verts) const {
    std::map<std::pair<IVec, Int>, char> seen;
    std::set<int> candidates;
    for (const auto& f : facets) {
      IVec n(dim);
      for (int j = 0; j < dim; ++j) n[j] = T::mpz(f.normal[j]);
      Int c = T::mpz(f.offset);
      auto key = std::make_pair(n, c);
      if (seen.emplace(key, 1).second) planes.push_back(HullPlane{n, c});
      for (int v : f.vs) candidates.insert(v);
    }
    // a boundary point is a vertex iff the facet hyperplanes through it
    // have normals of full rank
    for (int v : candidates) {
      std::vector<IVec> through;
      for (const auto& pl : planes) {
        Int val = 0;
        for (int j = 0; j < dim; ++j) val += pl.normal[j] * T::mpz(T::widen(pts[v][j]));
        if (val == pl.offset) through.push_back(pl.normal);
      }
      if (rank_of_vectors(through) == dim) verts.push_back(v);
    }
  }
};

template <class C, class W>
void run_core(int dim, const std::vector<std::vector<C>>& pts, const std::vector<int>& simplex,
              Rat& volume, std::vector<HullPlane>& planes, std::vector<int>& verts) {
  Core<C, W> core(dim, pts);
  std::vector<char> in_simplex(pts.size(), 0);
  for (int v : simplex) in_simplex[v] = 1;
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (!in_simplex[i]) rest.push_back(i);
  core.build(simplex, rest);
  volume = core.volume(simplex[0]);
  core.extract(planes, verts);
}

constexpr long kFastCoordBound = 1'000'000;

}  // namespace

Hull convex_hull_points(const std::vector<IVec>& pts) {
  if (pts.empty()) fail(errc::empty_input, "convex hull of an empty point set");
  int ambient = static_cast<int>(pts[0].size());
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != ambient)
      fail(errc::dimension_mismatch, "points of mixed dimension");

  // dedupe, remembering the first original index of each distinct point
  std::map<IVec, int> first_index;
  std::vector<IVec> uniq;
  std::vector<int> orig;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (first_index.emplace(pts[i], i).second) {
      uniq.push_back(pts[i]);
      orig.push_back(i);
    }
  }

  Hull h;
  h.ambient = ambient;

  // greedy affinely independent subset
  std::vector<int> basis_pts = {0};
  std::vector<IVec> dirs;
  for (int i = 1; i < static_cast<int>(uniq.size()); ++i) {
    dirs.push_back(sub(uniq[i], uniq[0]));
    if (rank_of_vectors(dirs) == static_cast<int>(dirs.size()))
      basis_pts.push_back(i);
    else
      dirs.pop_back();
  }
  int d = static_cast<int>(basis_pts.size()) - 1;
  h.dim = d;

  if (d == 0) {
    h.vertices = {orig[0]};
    h.volume = 0;
    return h;
  }

  std::vector<IVec> work = uniq;
  bool intrinsic = (d < ambient);
  if (intrinsic) {
    std::vector<IVec> sat = saturate(dirs, ambient);
    IntMatrix b = IntMatrix::from_columns(sat);
    work.clear();
    for (const auto& p : uniq) {
      QVec rhs = to_qvec(sub(p, uniq[0]));
      auto y = solve_rational(b, rhs);
      if (!y) fail(errc::internal, "point off its own affine hull");
      IVec iy(d);
      for (int j = 0; j < d; ++j) {
        if ((*y)[j].get_den() != 1) fail(errc::internal, "non-integral saturated coordinate");
        iy[j] = (*y)[j].get_num();
      }
      work.push_back(iy);
    }
    // recompute the affine basis in intrinsic coordinates (same indices work)
  }

  if (d > 5) fail(errc::dimension_too_large, "hull supported up to dimension 5");

  bool fast = true;
  for (const auto& p : work)
    for (const auto& c : p)
      if (abs(c) > kFastCoordBound) fast = false;

  Rat vol;
  std::vector<HullPlane> planes;
  std::vector<int> verts;
  if (fast) {
    std::vector<std::vector<long>> fp(work.size(), std::vector<long>(d));
    for (size_t i = 0; i < work.size(); ++i)
      for (int j = 0; j < d; ++j) fp[i][j] = work[i][j].get_si();
    run_core<long, i128>(d, fp, basis_pts, vol, planes, verts);
  } else {
    run_core<Int, Int>(d, work, basis_pts, vol, planes, verts);
  }

  h.volume = intrinsic ? Rat(0) : vol;
  if (!intrinsic) h.planes = std::move(planes);
  for (int v : verts) h.vertices.push_back(orig[v]);
  std::sort(h.vertices.begin(), h.vertices.end());
  return h;
}

Rat hull_volume(const std::vector<IVec>& pts) { return convex_hull_points(pts).volume; }

}  // namespace tropint
