#include "tropint/degree.hpp"

#include <algorithm>
#include <map>

#include "tropint/parallel.hpp"
#include "tropint/rng.hpp"

namespace tropint {

namespace {

IVec unit(int n, int i, long sign = 1) {
  IVec e(n, Int(0));
  e[i] = sign;
  return e;
}

QVec random_point(Rng& rng, int n, long box) {
  QVec x(n);
  for (int j = 0; j < n; ++j) x[j] = rng.uniform_rat(-box, box, 12);
  return x;
}

}  // namespace

TropicalLine random_tropical_line(int n, uint64_t seed, long box) {
  if (n != 2 && n != 3) fail(errc::unsupported_dimension, "tropical lines live in R^2 or R^3");
  Rng rng(seed);
  TropicalLine l;
  l.ambient_dim = n;
  if (n == 2) {
    l.vertices.push_back(random_point(rng, 2, box));
    l.rays.emplace_back(0, IVec{Int(1), Int(1)});
    l.rays.emplace_back(0, unit(2, 0, -1));
    l.rays.emplace_back(0, unit(2, 1, -1));
    return l;
  }
  int type = static_cast<int>(rng.uniform_int(0, 2));  // {0,1}, {0,2}, {1,2}
  int i = (type == 2) ? 1 : 0;
  int j = (type == 0) ? 1 : 2;
  int k = 3 - i - j;
  QVec a = random_point(rng, 3, box);
  Rat t = rng.uniform_rat(1, 10, 12);
  QVec b = a;
  b[i] += t;
  b[j] += t;
  l.vertices = {a, b};
  l.combinatorial_type = {i, j};
  l.rays.emplace_back(0, unit(3, i, -1));
  l.rays.emplace_back(0, unit(3, j, -1));
  l.rays.emplace_back(1, unit(3, k, -1));
  l.rays.emplace_back(1, IVec{Int(1), Int(1), Int(1)});
  return l;
}

std::vector<LineEdge> line_edges(const TropicalLine& l) {
  std::vector<LineEdge> edges;
  for (const auto& [vi, dir] : l.rays) edges.push_back(LineEdge{l.vertices[vi], dir, false, Rat(0)});
  if (l.ambient_dim == 3) {
    auto [i, j] = l.combinatorial_type;
    IVec dir(3, Int(0));
    dir[i] = 1;
    dir[j] = 1;
    Rat t = l.vertices[1][i] - l.vertices[0][i];
    edges.push_back(LineEdge{l.vertices[0], dir, true, t});
  }
  return edges;
}

std::vector<LineIntersection> line_hypersurface_intersections(const TropicalLine& l,
                                                              const HypersurfaceComplex& h) {
  if (l.ambient_dim != h.ambient_dim)
    fail(errc::dimension_mismatch, "line and hypersurface dimensions differ");
  const TropicalPolynomial& p = h.poly;
  int n = l.ambient_dim;

  std::map<QVec, bool> found;  // location -> transverse
  auto record = [&](const QVec& x, bool transverse) {
    auto it = found.find(x);
    if (it == found.end())
      found.emplace(x, transverse);
    else if (it->second != transverse)
      fail(errc::internal, "conflicting transversality classification at a point");
  };

  for (const auto& edge : line_edges(l)) {
    for (const auto& fac : h.facets) {
      const auto& face = h.subdivision.faces[fac.face_id];
      Int slope = dot(fac.primitive_normal, edge.dir);
      Rat lam = q_dot_iq(fac.primitive_normal, fac.base);
      Rat at_base = q_dot_iq(fac.primitive_normal, edge.base);
      if (slope == 0) {
        if (at_base != lam) continue;
        // edge line inside the facet hyperplane: find the overlap with the
        // closed facet and flag it
        bool empty = false;
        bool has_lo = true, has_hi = edge.bounded;
        Rat lo(0), hi = edge.hi;
        int a0 = face.term_ids[0];
        for (int ti = 0; ti < static_cast<int>(p.terms.size()) && !empty; ++ti) {
          if (std::find(face.term_ids.begin(), face.term_ids.end(), ti) != face.term_ids.end())
            continue;
          IVec diff = sub(p.terms[ti].exponent, p.terms[a0].exponent);
          Rat c0 = q_dot_iq(diff, edge.base) + p.terms[ti].coefficient - p.terms[a0].coefficient;
          Int sl = dot(diff, edge.dir);
          if (sl == 0) {
            if (c0 > 0) empty = true;
            continue;
          }
          Rat bound = -c0 / Rat(sl);
          if (sl > 0) {
            if (!has_hi || bound < hi) {
              has_hi = true;
              hi = bound;
            }
          } else {
            if (!has_lo || bound > lo) {
              has_lo = true;
              lo = bound;
            }
          }
        }
        if (empty || (has_lo && has_hi && lo > hi)) continue;
        Rat t_wit = has_lo ? lo : (has_hi ? hi : Rat(0));
        QVec x = edge.base;
        for (int c = 0; c < n; ++c) x[c] += t_wit * Rat(edge.dir[c]);
        record(x, false);
        continue;
      }
      Rat t = (lam - at_base) / Rat(slope);
      if (t < 0) continue;
      if (edge.bounded && t > edge.hi) continue;
      QVec x = edge.base;
      for (int c = 0; c < n; ++c) x[c] += t * Rat(edge.dir[c]);
      auto ev = evaluate(p, x);
      // the closed facet is argmax containing the dual edge support
      if (!std::includes(ev.argmax.begin(), ev.argmax.end(), face.term_ids.begin(),
                         face.term_ids.end()))
        continue;
      bool strict = (t > 0) && (!edge.bounded || t < edge.hi);
      bool relint = (ev.argmax == face.term_ids);
      record(x, strict && relint);
    }
  }

  std::vector<LineIntersection> out;
  for (auto& [x, tr] : found) out.push_back(LineIntersection{x, tr});
  return out;
}

DegreeReport empirical_degree(const TropicalPolynomial& p, long samples, uint64_t seed,
                              int threads) {
  int n = p.ambient_dim;
  if (n != 2 && n != 3) fail(errc::unsupported_dimension, "degree sampling needs n in {2, 3}");
  if (samples < 1) fail(errc::empty_input, "need at least one sample");

  DegreeReport rep;
  rep.support = p.support();
  rep.diameter_bound = l1_diameter(rep.support);
  rep.samples = samples;

  HypersurfaceComplex h = hypersurface(p);
  // per-sample counts, -1 for discarded; seeds derived per index so any
  // thread count reproduces the serial run
  std::vector<long> counts(static_cast<size_t>(samples), 0);
  parallel_for(samples, threads, [&](long s) {
    TropicalLine line = random_tropical_line(n, mix_seed(seed, static_cast<uint64_t>(s)));
    auto pts = line_hypersurface_intersections(line, h);
    bool degenerate = false;
    long count = 0;
    for (const auto& q : pts) {
      if (!q.transverse) degenerate = true;
      ++count;
    }
    counts[static_cast<size_t>(s)] = degenerate ? -1 : count;
  });
  for (long c : counts) {
    if (c < 0)
      ++rep.discarded;
    else if (c > rep.max_transverse_count)
      rep.max_transverse_count = c;
  }
  rep.bound_satisfied = Int(rep.max_transverse_count) <= rep.diameter_bound;
  return rep;
}

bool geodesic_monotonicity_check(const TropicalLine& l) {
  int n = l.ambient_dim;
  // leaf = ray index; path between two leaves as an ordered list of edge
  // directions (rays truncated anywhere; only directions matter)
  auto path_dirs = [&](int ra, int rb) {
    std::vector<IVec> dirs;
    dirs.push_back(negate(l.rays[ra].second));  // walking in from leaf a
    int va = l.rays[ra].first, vb = l.rays[rb].first;
    if (va != vb) {
      auto [i, j] = l.combinatorial_type;
      IVec e(n, Int(0));
      e[i] = 1;
      e[j] = 1;
      // bounded edge goes vertex 0 -> vertex 1 in direction e_i + e_j
      dirs.push_back(va == 0 ? e : negate(e));
    }
    dirs.push_back(l.rays[rb].second);
    return dirs;
  };
  for (int a = 0; a < static_cast<int>(l.rays.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(l.rays.size()); ++b) {
      auto dirs = path_dirs(a, b);
      for (int c = 0; c < n; ++c) {
        int sign = 0;
        for (const auto& d : dirs) {
          if (d[c] == 0) continue;
          int s = (d[c] > 0) ? 1 : -1;
          if (sign != 0 && s != sign) return false;
          sign = s;
        }
      }
    }
  return true;
}

}  // namespace tropint
