#include "tropint/intersect.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropint/hull.hpp"

namespace tropint {

namespace {

Rat cross_q(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Int cross_i(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

struct Seg {
  QVec base;
  IVec dir;  // primitive
  ParamInterval ivl;
  IVec normal;
  Int weight;
};

std::vector<Seg> facet_segments(const HypersurfaceComplex& h, const QVec& shift) {
  std::vector<Seg> segs;
  for (int i = 0; i < static_cast<int>(h.facets.size()); ++i) {
    Seg s;
    s.base = q_add(h.facets[i].base, shift);
    s.dir = h.facets[i].directions[0];
    s.ivl = facet_interval_2d(h, i);
    s.normal = h.facets[i].primitive_normal;
    s.weight = h.facets[i].weight;
    segs.push_back(std::move(s));
  }
  return segs;
}

bool strictly_inside(const ParamInterval& iv, const Rat& t) {
  if (iv.has_lo && !(t > iv.lo)) return false;
  if (iv.has_hi && !(t < iv.hi)) return false;
  return true;
}

bool closed_inside(const ParamInterval& iv, const Rat& t) {
  if (iv.has_lo && t < iv.lo) return false;
  if (iv.has_hi && t > iv.hi) return false;
  return true;
}

struct Crossing {
  int i, j;
  QVec loc;
  Int mult;
};

struct CrossScan {
  std::vector<Crossing> crossings;
  bool degenerate = false;
};

// all contacts between facets of h1 and facets of h2 shifted by `shift`;
// proper relative-interior crossings are recorded, anything else flags the
// configuration as degenerate
CrossScan scan_crossings(const HypersurfaceComplex& h1, const HypersurfaceComplex& h2,
                         const QVec& shift) {
  CrossScan out;
  auto s1 = facet_segments(h1, QVec(2, Rat(0)));
  auto s2 = facet_segments(h2, shift);
  for (int i = 0; i < static_cast<int>(s1.size()); ++i) {
    for (int j = 0; j < static_cast<int>(s2.size()); ++j) {
      const Seg& a = s1[i];
      const Seg& b = s2[j];
      Int cx = cross_i(a.dir, b.dir);
      QVec delta = q_sub(b.base, a.base);
      if (cx == 0) {
        // parallel: degenerate only if collinear with overlapping extents
        if (cross_q(delta, to_qvec(a.dir)) != 0) continue;
        int k = (a.dir[0] != 0) ? 0 : 1;
        Rat t0 = delta[k] / Rat(a.dir[k]);
        Rat lam = Rat(b.dir[k]) / Rat(a.dir[k]);
        // b's extent mapped into a's parameter
        ParamInterval jb;
        if (lam > 0) {
          jb.has_lo = b.ivl.has_lo;
          if (jb.has_lo) jb.lo = t0 + lam * b.ivl.lo;
          jb.has_hi = b.ivl.has_hi;
          if (jb.has_hi) jb.hi = t0 + lam * b.ivl.hi;
        } else {
          jb.has_lo = b.ivl.has_hi;
          if (jb.has_lo) jb.lo = t0 + lam * b.ivl.hi;
          jb.has_hi = b.ivl.has_lo;
          if (jb.has_hi) jb.hi = t0 + lam * b.ivl.lo;
        }
        bool separated = (a.ivl.has_hi && jb.has_lo && a.ivl.hi < jb.lo) ||
                         (jb.has_hi && a.ivl.has_lo && jb.hi < a.ivl.lo);
        if (!separated) out.degenerate = true;
        continue;
      }
      Rat t = cross_q(delta, to_qvec(b.dir)) / Rat(cx);
      Rat s = cross_q(delta, to_qvec(a.dir)) / Rat(cx);
      if (!closed_inside(a.ivl, t) || !closed_inside(b.ivl, s)) continue;
      if (strictly_inside(a.ivl, t) && strictly_inside(b.ivl, s)) {
        Crossing c;
        c.i = i;
        c.j = j;
        c.loc = {a.base[0] + t * Rat(a.dir[0]), a.base[1] + t * Rat(a.dir[1])};
        c.mult = transverse_multiplicity({a.normal, b.normal}, {a.weight, b.weight});
        out.crossings.push_back(std::move(c));
      } else {
        out.degenerate = true;  // endpoint contact: a vertex lies on the other curve
      }
    }
  }
  return out;
}

IntersectionPoint make_point(const HypersurfaceComplex& h1, const HypersurfaceComplex& h2,
                             const Crossing& c, QVec loc) {
  IntersectionPoint p;
  p.location = std::move(loc);
  p.multiplicity = c.mult;
  p.contributing_normals = {h1.facets[c.i].primitive_normal, h2.facets[c.j].primitive_normal};
  p.contributing_weights = {h1.facets[c.i].weight, h2.facets[c.j].weight};
  return p;
}

void sort_points(std::vector<IntersectionPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const IntersectionPoint& a, const IntersectionPoint& b) {
    if (a.location[0] != b.location[0]) return a.location[0] < b.location[0];
    if (a.location[1] != b.location[1]) return a.location[1] < b.location[1];
    return a.multiplicity < b.multiplicity;
  });
}

const std::vector<IVec>& shift_candidates() {
  static const std::vector<IVec> vs = [] {
    std::vector<IVec> v;
    auto mk = [&](long x, long y) {
      v.push_back(IVec{Int(x), Int(y)});
    };
    mk(1, 2);
    mk(3, 1);
    mk(2, 5);
    mk(5, 3);
    mk(1, 7);
    mk(7, 2);
    return v;
  }();
  return vs;
}

void check_2d(const HypersurfaceComplex& h1, const HypersurfaceComplex& h2) {
  if (h1.ambient_dim != 2 || h2.ambient_dim != 2)
    fail(errc::dimension_mismatch, "stable intersection implemented in the plane");
}

}  // namespace

Int transverse_multiplicity(const std::vector<IVec>& normals, const std::vector<Int>& weights) {
  if (normals.size() != weights.size() || normals.empty())
    fail(errc::dimension_mismatch, "normals and weights must pair up");
  int n = static_cast<int>(normals[0].size());
  if (static_cast<int>(normals.size()) != n)
    fail(errc::dimension_mismatch, "need n normals in R^n");
  Int det = determinant(IntMatrix::from_columns(normals));
  if (det == 0) fail(errc::not_transverse, "normal vectors are linearly dependent");
  Int mult = abs(det);
  // cross-check: the determinant must agree with the lattice index
  if (lattice_index(normals, n) != mult)
    fail(errc::internal, "determinant and lattice index disagree");
  for (const auto& w : weights) {
    if (w <= 0) fail(errc::dimension_mismatch, "weights must be positive");
    mult *= w;
  }
  return mult;
}

std::vector<IntersectionPoint> stable_intersection_2d(const HypersurfaceComplex& h1,
                                                      const HypersurfaceComplex& h2,
                                                      bool* used_perturbation) {
  check_2d(h1, h2);
  CrossScan scan = scan_crossings(h1, h2, QVec(2, Rat(0)));
  if (used_perturbation) *used_perturbation = scan.degenerate;
  if (!scan.degenerate) {
    std::vector<IntersectionPoint> pts;
    for (const auto& c : scan.crossings) pts.push_back(make_point(h1, h2, c, c.loc));
    sort_points(pts);
    return pts;
  }
  Error last(errc::non_generic_perturbation, "no generic shift direction found");
  for (const auto& v : shift_candidates()) {
    try {
      return perturbed_stable_points(h1, h2, v);
    } catch (const Error& e) {
      if (e.code() != errc::non_generic_perturbation) throw;
      last = e;
    }
  }
  throw last;
}

std::vector<IntersectionPoint> perturbation_oracle_2d(const HypersurfaceComplex& h1,
                                                      const HypersurfaceComplex& h2, const IVec& v,
                                                      const Rat& eps) {
  check_2d(h1, h2);
  if (eps <= 0) fail(errc::non_generic_perturbation, "epsilon must be positive");
  QVec shift = {eps * Rat(v[0]), eps * Rat(v[1])};
  CrossScan scan = scan_crossings(h1, h2, shift);
  if (scan.degenerate)
    fail(errc::non_generic_perturbation, "shifted configuration is not transverse");
  std::vector<IntersectionPoint> pts;
  for (const auto& c : scan.crossings) pts.push_back(make_point(h1, h2, c, c.loc));
  sort_points(pts);
  return pts;
}

std::vector<IntersectionPoint> perturbed_stable_points(const HypersurfaceComplex& h1,
                                                       const HypersurfaceComplex& h2,
                                                       const IVec& v) {
  check_2d(h1, h2);
  Rat e1 = make_rat(1, 997);
  Rat e2 = make_rat(1, 9973);
  const Rat shrink = make_rat(1, 1000);
  for (int attempt = 0; attempt < 5; ++attempt, e1 *= shrink, e2 *= shrink) {
    CrossScan a, b;
    try {
      QVec sh1 = {e1 * Rat(v[0]), e1 * Rat(v[1])};
      QVec sh2 = {e2 * Rat(v[0]), e2 * Rat(v[1])};
      a = scan_crossings(h1, h2, sh1);
      b = scan_crossings(h1, h2, sh2);
    } catch (const Error&) {
      continue;
    }
    if (a.degenerate || b.degenerate) continue;
    auto key = [](const Crossing& c) { return std::make_pair(c.i, c.j); };
    std::map<std::pair<int, int>, const Crossing*> ma, mb;
    for (const auto& c : a.crossings) ma[key(c)] = &c;
    for (const auto& c : b.crossings) mb[key(c)] = &c;
    bool same = ma.size() == mb.size() && a.crossings.size() == ma.size() &&
                b.crossings.size() == mb.size();
    if (same)
      for (const auto& [k, ptr] : ma)
        if (!mb.count(k)) same = false;
    if (!same) continue;  // combinatorics disagree between the epsilons

    // linear extrapolation of each crossing to eps -> 0, exact
    std::map<QVec, IntersectionPoint> clusters;
    for (const auto& [k, ca] : ma) {
      const Crossing* cb = mb.at(k);
      QVec limit(2);
      for (int t = 0; t < 2; ++t)
        limit[t] = (e2 * ca->loc[t] - e1 * cb->loc[t]) / (e2 - e1);
      auto it = clusters.find(limit);
      if (it == clusters.end()) {
        IntersectionPoint p = make_point(h1, h2, *ca, limit);
        clusters.emplace(limit, std::move(p));
      } else {
        it->second.multiplicity += ca->mult;
        it->second.contributing_normals.push_back(h1.facets[ca->i].primitive_normal);
        it->second.contributing_normals.push_back(h2.facets[ca->j].primitive_normal);
        it->second.contributing_weights.push_back(h1.facets[ca->i].weight);
        it->second.contributing_weights.push_back(h2.facets[ca->j].weight);
      }
    }
    std::vector<IntersectionPoint> pts;
    for (auto& [loc, p] : clusters) pts.push_back(std::move(p));
    sort_points(pts);
    return pts;
  }
  fail(errc::non_generic_perturbation, "no epsilon made the shifted configuration transverse");
}

int MixedCell::summand_dim_total() const {
  int s = 0;
  for (const auto& f : summands) s += f.dim;
  return s;
}

bool MixedCell::fully_mixed(int ambient_dim) const {
  return total_dim == summand_dim_total() && total_dim == ambient_dim;
}

bool MixedCell::all_summands_edges() const {
  for (const auto& f : summands)
    if (f.dim != 1) return false;
  return true;
}

std::vector<MixedCell> mixed_cells(const std::vector<TropicalPolynomial>& ps) {
  if (ps.empty()) fail(errc::empty_input, "mixed cells of an empty system");
  int n = ps[0].ambient_dim;
  if (n > 3) fail(errc::dimension_too_large, "mixed cells support ambient dimension <= 3");
  if (static_cast<int>(ps.size()) > n)
    fail(errc::dimension_mismatch, "more polynomials than the ambient dimension");
  for (const auto& p : ps)
    if (p.ambient_dim != n) fail(errc::dimension_mismatch, "mixed ambient dimensions");

  TropicalPolynomial q = ps[0];
  for (size_t i = 1; i < ps.size(); ++i) q = tropical_product(q, ps[i]);
  RegularSubdivision rs = regular_subdivision_full(q);

  std::vector<MixedCell> cells;
  for (int mi : rs.maximal) {
    const auto& face = rs.faces[mi];
    MixedCell cell;
    cell.total_dim = face.dim;
    cell.witness = face.witness;
    for (int id : face.term_ids) cell.sum_points.push_back(q.terms[id].exponent);
    for (const auto& p : ps) {
      auto ev = evaluate(p, face.witness);
      SubdivisionFace f;
      f.term_ids = ev.argmax;
      f.witness = face.witness;
      std::vector<IVec> dirs;
      for (size_t k = 1; k < ev.argmax.size(); ++k)
        dirs.push_back(sub(p.terms[ev.argmax[k]].exponent, p.terms[ev.argmax[0]].exponent));
      f.dim = rank_of_vectors(dirs);
      cell.summands.push_back(std::move(f));
    }
    // the cell support is exactly the sumset of the summand supports
    std::set<IVec> sumset;
    std::vector<IVec> acc = {IVec(n, Int(0))};
    for (size_t pi = 0; pi < ps.size(); ++pi) {
      std::vector<IVec> next;
      for (const auto& a : acc)
        for (int id : cell.summands[pi].term_ids)
          next.push_back(add(a, ps[pi].terms[id].exponent));
      acc = std::move(next);
    }
    for (auto& s : acc) sumset.insert(std::move(s));
    std::set<IVec> cellset(cell.sum_points.begin(), cell.sum_points.end());
    if (sumset != cellset) fail(errc::internal, "mixed cell is not the sumset of its summands");
    cells.push_back(std::move(cell));
  }
  return cells;
}

Rat bernstein_total(const std::vector<TropicalPolynomial>& ps,
                    const std::vector<TropicalPolynomial>& linear_space) {
  if (ps.empty()) fail(errc::empty_input, "no hypersurfaces given");
  int n = ps[0].ambient_dim;
  int r = static_cast<int>(ps.size());
  if (static_cast<int>(linear_space.size()) != n - r)
    fail(errc::invalid_codimension, "linear space must contribute n - r hyperplanes");
  LatticePolytope simplex = standard_simplex(n);
  for (const auto& l : linear_space) {
    if (l.ambient_dim != n) fail(errc::dimension_mismatch, "mixed ambient dimensions");
    if (convex_hull(l.support()) != simplex)
      fail(errc::dimension_mismatch, "linear-space factors need standard-simplex supports");
  }

  std::vector<TropicalPolynomial> all = ps;
  for (const auto& l : linear_space) all.push_back(l);
  auto cells = mixed_cells(all);

  Rat total(0);
  for (const auto& cell : cells) {
    if (cell.summand_dim_total() > n)
      fail(errc::non_generic_instance,
           "coarse top cell in the mixed subdivision; perturb coefficients");
    if (cell.all_summands_edges()) total += hull_volume(cell.sum_points);
  }

  std::vector<LatticePolytope> tuple;
  for (const auto& p : ps) tuple.push_back(convex_hull(p.support()));
  for (int i = r; i < n; ++i) tuple.push_back(simplex);
  if (total != mixed_volume_ie(tuple))
    fail(errc::internal, "fully mixed cell volumes disagree with the mixed volume");
  return total;
}

BezoutBound bezout_bound(const std::vector<std::vector<IVec>>& supports, int r, int n) {
  int k = static_cast<int>(supports.size());
  if (r < 1 || r > std::min(k, n))
    fail(errc::invalid_codimension, "codimension r must satisfy 1 <= r <= min(k, n)");
  std::vector<LatticePolytope> deltas;
  for (const auto& s : supports) {
    if (s.empty() || static_cast<int>(s[0].size()) != n)
      fail(errc::dimension_mismatch, "support dimension mismatch");
    deltas.push_back(convex_hull(s));
  }
  LatticePolytope simplex = standard_simplex(n);

  BezoutBound out;
  std::vector<int> subset(r);
  for (int i = 0; i < r; ++i) subset[i] = i;
  while (true) {
    std::vector<LatticePolytope> tuple;
    for (int i : subset) tuple.push_back(deltas[i]);
    for (int i = r; i < n; ++i) tuple.push_back(simplex);
    Rat value = mixed_volume_ie(tuple);
    if (out.rows.empty() || value > out.max_value) {
      out.max_value = value;
      out.witness_subset = subset;
    }
    out.rows.push_back(BezoutRow{subset, value});
    int i = r - 1;
    while (i >= 0 && subset[i] == k - r + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

LocalBoundCheck local_multiplicity_bound_check(const std::vector<IVec>& normals,
                                               const std::vector<Int>& weights,
                                               const std::vector<IVec>& l_normals,
                                               const std::vector<std::vector<IVec>>& supports) {
  if (normals.empty() || normals.size() != weights.size() || normals.size() != supports.size())
    fail(errc::dimension_mismatch, "normals, weights and supports must pair up");
  int n = static_cast<int>(normals[0].size());
  int r = n - static_cast<int>(l_normals.size());
  if (r < 1) fail(errc::invalid_codimension, "too many linear-space normals");

  LocalBoundCheck out;
  out.subsystem = select_independent_subsystem(normals, r);

  std::vector<IVec> mat;
  std::vector<Int> w;
  for (int i : out.subsystem) {
    mat.push_back(normals[i]);
    w.push_back(weights[i]);
  }
  for (const auto& m : l_normals) {
    mat.push_back(m);
    w.push_back(1);
  }
  out.multiplicity = transverse_multiplicity(mat, w);

  std::vector<LatticePolytope> tuple;
  for (int i : out.subsystem) tuple.push_back(convex_hull(supports[i]));
  LatticePolytope simplex = standard_simplex(n);
  for (int i = r; i < n; ++i) tuple.push_back(simplex);
  out.bound = mixed_volume_ie(tuple);
  out.ok = Rat(out.multiplicity) <= out.bound;
  return out;
}

}  // namespace tropint
