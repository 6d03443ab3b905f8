#include "tropint/polytope.hpp"

#include <algorithm>

#include "tropint/lattice.hpp"
#include "tropint/parallel.hpp"

namespace tropint {

namespace {

void check_ambient(int n) {
  if (n > 4) fail(errc::dimension_too_large, "polytope operations support ambient dimension <= 4");
}

// all points of the Minkowski sum of the chosen vertex sets
std::vector<IVec> sum_points(const std::vector<const std::vector<IVec>*>& vertex_sets,
                             const std::vector<Int>& scales) {
  std::vector<IVec> acc = {IVec(vertex_sets.empty() ? 0 : (*vertex_sets[0])[0].size(), Int(0))};
  for (size_t k = 0; k < vertex_sets.size(); ++k) {
    std::vector<IVec> next;
    next.reserve(acc.size() * vertex_sets[k]->size());
    for (const auto& a : acc)
      for (const auto& v : *vertex_sets[k]) {
        IVec s(a.size());
        for (size_t j = 0; j < a.size(); ++j) s[j] = a[j] + scales[k] * v[j];
        next.push_back(std::move(s));
      }
    acc = std::move(next);
  }
  return acc;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_tuple(const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) fail(errc::empty_input, "mixed volume of an empty tuple");
  int n = ps[0].ambient_dim;
  if (static_cast<int>(ps.size()) != n)
    fail(errc::dimension_mismatch, "mixed volume needs exactly n polytopes in R^n");
  for (const auto& p : ps)
    if (p.ambient_dim != n) fail(errc::dimension_mismatch, "mixed ambient dimensions");
  check_ambient(n);
}

}  // namespace

LatticePolytope convex_hull(const std::vector<IVec>& points) {
  if (points.empty()) fail(errc::empty_input, "convex hull of an empty point set");
  check_ambient(static_cast<int>(points[0].size()));
  Hull h = convex_hull_points(points);
  LatticePolytope p;
  p.ambient_dim = h.ambient;
  p.dim = h.dim;
  for (int v : h.vertices) p.vertices.push_back(points[v]);
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

Int l1_diameter(const std::vector<IVec>& support) {
  if (support.empty()) fail(errc::empty_input, "l1 diameter of an empty support");
  Int best = 0;
  for (size_t i = 0; i < support.size(); ++i)
    for (size_t j = i + 1; j < support.size(); ++j) {
      Int d = l1_norm(sub(support[i], support[j]));
      if (d > best) best = d;
    }
  return best;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim != q.ambient_dim)
    fail(errc::dimension_mismatch, "Minkowski sum of polytopes in different spaces");
  std::vector<IVec> pts;
  pts.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) pts.push_back(add(a, b));
  return convex_hull(pts);
}

Rat volume(const LatticePolytope& p) {
  if (p.dim < p.ambient_dim) return Rat(0);
  return hull_volume(p.vertices);
}

Rat normalized_volume(const LatticePolytope& p) {
  Rat nv = volume(p) * Rat(factorial(p.ambient_dim));
  if (nv.get_den() != 1)
    fail(errc::non_integral_normalized_volume, "normalized volume came out non-integral");
  return nv;
}

Rat mixed_volume_ie(const std::vector<LatticePolytope>& ps, int threads) {
  check_tuple(ps);
  int n = static_cast<int>(ps.size());
  long subsets = (1L << n) - 1;
  std::vector<Rat> signed_volumes(static_cast<size_t>(subsets));
  parallel_for(subsets, threads, [&](long s) {
    unsigned mask = static_cast<unsigned>(s) + 1;
    std::vector<const std::vector<IVec>*> sets;
    std::vector<Int> scales;
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sets.push_back(&ps[i].vertices);
        scales.push_back(1);
        ++size;
      }
    Rat v = hull_volume(sum_points(sets, scales));
    signed_volumes[static_cast<size_t>(s)] = ((n - size) % 2 == 0) ? v : -v;
  });
  Rat total = 0;
  for (const auto& v : signed_volumes) total += v;
  return total;
}

Rat mixed_volume_interp(const std::vector<LatticePolytope>& ps) {
  check_tuple(ps);
  int n = static_cast<int>(ps.size());
  // weights w with sum_t w_t t^k = [k == 1], t = 1..n+1: inverse Vandermonde row
  int m = n + 1;
  std::vector<QVec> vand(m, QVec(m + 1, Rat(0)));
  for (int k = 0; k < m; ++k) {
    for (int t = 0; t < m; ++t) {
      Int pw = 1;
      for (int e = 0; e < k; ++e) pw *= (t + 1);
      vand[k][t] = Rat(pw);
    }
    vand[k][m] = (k == 1) ? Rat(1) : Rat(0);
  }
  // gaussian elimination on the rational tableau
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int r = c; r < m; ++r)
      if (vand[r][c] != 0) {
        piv = r;
        break;
      }
    std::swap(vand[piv], vand[c]);
    Rat inv = vand[c][c];
    for (int j = c; j <= m; ++j) vand[c][j] /= inv;
    for (int r = 0; r < m; ++r) {
      if (r == c || vand[r][c] == 0) continue;
      Rat f = vand[r][c];
      for (int j = c; j <= m; ++j) vand[r][j] -= f * vand[c][j];
    }
  }
  QVec w(m);
  for (int t = 0; t < m; ++t) w[t] = vand[t][m];

  Rat coeff = 0;
  std::vector<int> lambda(n, 1);
  while (true) {
    std::vector<const std::vector<IVec>*> sets;
    std::vector<Int> scales;
    Rat weight = 1;
    for (int i = 0; i < n; ++i) {
      sets.push_back(&ps[i].vertices);
      scales.push_back(lambda[i]);
      weight *= w[lambda[i] - 1];
    }
    if (weight != 0) coeff += weight * hull_volume(sum_points(sets, scales));
    int i = 0;
    for (; i < n; ++i) {
      if (lambda[i] < m) {
        ++lambda[i];
        break;
      }
      lambda[i] = 1;
    }
    if (i == n) break;
  }
  return coeff;
}

Rat mixed_volume_unnormalized(const std::vector<LatticePolytope>& ps) {
  return mixed_volume_ie(ps) / Rat(factorial(static_cast<int>(ps.size())));
}

LatticePolytope standard_simplex(int n) { return dilated_simplex(n, 1); }

LatticePolytope dilated_simplex(int n, int d) {
  std::vector<IVec> pts;
  pts.emplace_back(n, Int(0));
  for (int i = 0; i < n; ++i) {
    IVec e(n, Int(0));
    e[i] = d;
    pts.push_back(e);
  }
  return convex_hull(pts);
}

}  // namespace tropint
