#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tropint/polytope.hpp"

using namespace tropint;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LatticePolytope random_polytope(std::mt19937_64& rng, int n, int npts, long box) {
  std::vector<IVec> pts;
  for (int i = 0; i < npts; ++i) {
    IVec p(n);
    for (int j = 0; j < n; ++j) p[j] = static_cast<long>(rng() % (2 * box + 1)) - box;
    pts.push_back(p);
  }
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("convex hull examples") {
  auto t = convex_hull({iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({1, 1})});
  CHECK(t.dim == 2);
  CHECK(t.vertices == std::vector<IVec>{iv({0, 0}), iv({0, 2}), iv({2, 0})});

  auto pt = convex_hull({iv({3, 5})});
  CHECK(pt.dim == 0);
  CHECK(pt.vertices == std::vector<IVec>{iv({3, 5})});

  auto seg = convex_hull({iv({0, 0}), iv({1, 0}), iv({2, 0})});
  CHECK(seg.dim == 1);
  CHECK(seg.vertices == std::vector<IVec>{iv({0, 0}), iv({2, 0})});

  CHECK_THROWS_AS(convex_hull({}), Error);
  CHECK_THROWS_AS(convex_hull({IVec(5, Int(0))}), Error);
}

TEST_CASE("hull idempotence on random polytopes") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 60; ++it) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto p = random_polytope(rng, n, 3 + static_cast<int>(rng() % 8), 5);
    auto q = convex_hull(p.vertices);
    CHECK(q == p);
  }
}

TEST_CASE("l1 diameter examples and monotonicity") {
  CHECK(l1_diameter({iv({0, 0})}) == 0);
  CHECK(l1_diameter({iv({0, 0}), iv({2, 1})}) == 3);
  CHECK(l1_diameter({iv({0, 0}), iv({3, 0}), iv({0, 3})}) == 6);
  CHECK_THROWS_AS(l1_diameter({}), Error);

  std::mt19937_64 rng(22);
  for (int it = 0; it < 50; ++it) {
    std::vector<IVec> small, big;
    int k = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k + 3; ++i) {
      IVec p = iv({static_cast<long>(rng() % 11), static_cast<long>(rng() % 11)});
      big.push_back(p);
      if (i < k) small.push_back(p);
    }
    CHECK(l1_diameter(small) <= l1_diameter(big));
  }
}

TEST_CASE("minkowski sum examples") {
  auto seg_x = convex_hull({iv({0, 0}), iv({1, 0})});
  auto seg_y = convex_hull({iv({0, 0}), iv({0, 1})});
  auto square = minkowski_sum(seg_x, seg_y);
  CHECK(square.vertices ==
        std::vector<IVec>{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})});

  auto tri = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  auto shift = convex_hull({iv({3, 4})});
  auto moved = minkowski_sum(tri, shift);
  CHECK(moved.vertices == std::vector<IVec>{iv({3, 4}), iv({3, 5}), iv({4, 4})});

  auto pentagon = minkowski_sum(tri, square);
  CHECK(pentagon.vertices == std::vector<IVec>{iv({0, 0}), iv({0, 2}), iv({1, 2}),
                                               iv({2, 0}), iv({2, 1})});
}

TEST_CASE("volume examples") {
  auto cube = convex_hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}),
                           iv({1, 1, 0}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})});
  CHECK(volume(cube) == Rat(1));

  auto tri = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  CHECK(volume(tri) == make_rat(1, 2));

  auto square = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  auto pentagon = minkowski_sum(tri, square);
  CHECK(volume(pentagon) == make_rat(7, 2));

  auto seg = convex_hull({iv({0, 0}), iv({4, 2})});
  CHECK(volume(seg) == Rat(0));
}

TEST_CASE("volume is translation invariant and monotone under inclusion") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<IVec> pts;
    int k = n + 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      IVec p(n);
      for (int j = 0; j < n; ++j) p[j] = static_cast<long>(rng() % 13) - 6;
      pts.push_back(p);
    }
    auto big = convex_hull(pts);
    std::vector<IVec> subset(pts.begin(), pts.begin() + (n + 1 + static_cast<int>(rng() % (k - n - 1))));
    auto small = convex_hull(subset);
    CHECK(volume(small) <= volume(big));

    IVec t(n);
    for (int j = 0; j < n; ++j) t[j] = static_cast<long>(rng() % 21) - 10;
    std::vector<IVec> moved;
    for (const auto& p : pts) moved.push_back(add(p, t));
    CHECK(volume(convex_hull(moved)) == volume(big));
  }
}

TEST_CASE("normalized volume examples") {
  auto tri = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  CHECK(normalized_volume(tri) == Rat(1));
  auto square = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  CHECK(normalized_volume(square) == Rat(2));
  // the parallelotope spanned by (1,1),(1,-1) has Euclidean volume |det| = 2
  auto para = convex_hull({iv({0, 0}), iv({1, 1}), iv({1, -1}), iv({2, 0})});
  CHECK(volume(para) == Rat(2));
}

TEST_CASE("mixed volume examples, both algorithms") {
  auto seg_x = convex_hull({iv({0, 0}), iv({1, 0})});
  auto seg_y = convex_hull({iv({0, 0}), iv({0, 1})});
  auto tri = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  auto square = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});

  CHECK(mixed_volume_ie({seg_x, seg_y}) == Rat(1));
  CHECK(mixed_volume_ie({tri, tri}) == Rat(1));
  CHECK(mixed_volume_ie({tri, square}) == Rat(2));

  CHECK(mixed_volume_interp({seg_x, seg_y}) == Rat(1));
  CHECK(mixed_volume_interp({tri, tri}) == Rat(1));
  CHECK(mixed_volume_interp({tri, square}) == Rat(2));

  // diagonal specialization: nMV(P,...,P) = n! Vol(P)
  CHECK(mixed_volume_ie({square, square}) == Rat(2));
  CHECK(mixed_volume_interp({square, square}) == Rat(2));

  // a point argument kills the multilinear term
  auto pt = convex_hull({iv({2, 3})});
  CHECK(mixed_volume_ie({tri, pt}) == Rat(0));
  CHECK(mixed_volume_interp({tri, pt}) == Rat(0));

  CHECK(mixed_volume_unnormalized({tri, tri}) == make_rat(1, 2));
}

TEST_CASE("two-oracle agreement, symmetry, multilinearity") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 25; ++it) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<LatticePolytope> ps;
    for (int i = 0; i < n; ++i) ps.push_back(random_polytope(rng, n, 3 + static_cast<int>(rng() % 4), 3));
    Rat ie = mixed_volume_ie(ps);
    CHECK(ie == mixed_volume_interp(ps));

    auto perm = ps;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mixed_volume_ie(perm) == ie);

    // nMV(P1 + P1', P2, ...) = nMV(P1, P2, ...) + nMV(P1', P2, ...)
    auto extra = random_polytope(rng, n, 3, 3);
    auto lhs = ps;
    lhs[0] = minkowski_sum(ps[0], extra);
    auto rhs = ps;
    rhs[0] = extra;
    CHECK(mixed_volume_ie(lhs) == ie + mixed_volume_ie(rhs));
  }
}

TEST_CASE("2-d volumes agree with the lattice point count") {
  // area = interior + boundary/2 - 1 for lattice polygons, an oracle fully
  // independent of the triangulation route
  std::mt19937_64 rng(25);
  for (int it = 0; it < 40; ++it) {
    std::vector<IVec> pts;
    int k = 3 + static_cast<int>(rng() % 7);
    for (int i = 0; i < k; ++i)
      pts.push_back(iv({static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4}));
    Hull h = convex_hull_points(pts);
    if (h.dim < 2) continue;
    long interior = 0, boundary = 0;
    for (long x = -4; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y) {
        IVec p = iv({x, y});
        bool inside = true, on_edge = false;
        for (const auto& pl : h.planes) {
          Int v = dot(pl.normal, p);
          if (v > pl.offset) inside = false;
          if (v == pl.offset) on_edge = true;
        }
        if (!inside) continue;
        if (on_edge)
          ++boundary;
        else
          ++interior;
      }
    CHECK(h.volume == Rat(interior) + make_rat(boundary, 2) - 1);
  }
}

TEST_CASE("hulls of degenerate point sets") {
  std::mt19937_64 rng(26);
  for (int it = 0; it < 40; ++it) {
    int n = 2 + static_cast<int>(rng() % 3);
    int d = 1 + static_cast<int>(rng() % (n - 1));  // genuine rank deficit
    // map random d-dim lattice points through an integer matrix into Z^n
    IntMatrix m(n, d);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = static_cast<long>(rng() % 7) - 3;
    std::vector<IVec> pts;
    for (int i = 0; i < 8; ++i) {
      IVec y(d);
      for (int c = 0; c < d; ++c) y[c] = static_cast<long>(rng() % 9) - 4;
      IVec p(n, Int(0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < d; ++c) p[r] += m.at(r, c) * y[c];
      pts.push_back(p);
      pts.push_back(p);  // duplicates must be harmless
    }
    auto hull1 = convex_hull(pts);
    CHECK(hull1.dim <= d);
    CHECK(volume(hull1) == Rat(0));
    CHECK(convex_hull(hull1.vertices) == hull1);
  }
}

TEST_CASE("huge coordinates take the arbitrary-precision hull path") {
  // scale the pentagon by 10^7: volume scales by 10^14
  auto tri = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  auto square = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  auto pentagon = minkowski_sum(tri, square);
  Int s = 10000000;
  std::vector<IVec> scaled;
  for (const auto& v : pentagon.vertices) scaled.push_back({v[0] * s, v[1] * s});
  auto big = convex_hull(scaled);
  CHECK(big.vertices.size() == pentagon.vertices.size());
  CHECK(volume(big) == make_rat(7, 2) * Rat(s) * Rat(s));

  // and in 3-d: a scaled simplex
  Int t = 3000000;
  auto simplex_big = convex_hull({iv({0, 0, 0}), IVec{t, Int(0), Int(0)},
                                  IVec{Int(0), t, Int(0)}, IVec{Int(0), Int(0), t}});
  CHECK(volume(simplex_big) == Rat(t) * Rat(t) * Rat(t) / 6);
}
