#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tropint/intersect.hpp"
#include "tropint/rng.hpp"

using namespace tropint;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TropicalPolynomial line_poly(const Rat& a, const Rat& b, const Rat& c) {
  return make_polynomial(2, {Term{iv({1, 0}), a}, Term{iv({0, 1}), b}, Term{iv({0, 0}), c}});
}

// all lattice points of d * standard triangle, seeded coefficients
TropicalPolynomial dense_curve(int d, Rng& rng) {
  std::vector<Term> terms;
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j + i <= d; ++j)
      terms.push_back(Term{iv({i, j}), make_rat(rng.uniform_int(-2000, 2000), 997)});
  return make_polynomial(2, std::move(terms));
}

TropicalPolynomial square_curve(Rng& rng) {
  std::vector<Term> terms;
  for (long i = 0; i <= 1; ++i)
    for (long j = 0; j <= 1; ++j)
      terms.push_back(Term{iv({i, j}), make_rat(rng.uniform_int(-2000, 2000), 997)});
  return make_polynomial(2, std::move(terms));
}

Int total_multiplicity(const std::vector<IntersectionPoint>& pts) {
  Int t = 0;
  for (const auto& p : pts) t += p.multiplicity;
  return t;
}

Rat nmv_of(const TropicalPolynomial& p, const TropicalPolynomial& q) {
  return mixed_volume_ie({convex_hull(p.support()), convex_hull(q.support())});
}

}  // namespace

TEST_CASE("transverse multiplicity examples") {
  CHECK(transverse_multiplicity({iv({1, 0}), iv({0, 1})}, {Int(1), Int(1)}) == 1);
  CHECK(transverse_multiplicity({iv({1, 1}), iv({1, -1})}, {Int(1), Int(1)}) == 2);
  CHECK(transverse_multiplicity({iv({1, 1}), iv({1, -1})}, {Int(2), Int(3)}) == 12);
  CHECK_THROWS_AS(transverse_multiplicity({iv({1, 0}), iv({2, 0})}, {Int(1), Int(1)}), Error);
}

TEST_CASE("two generic tropical lines meet once") {
  auto h1 = hypersurface(line_poly(Rat(0), Rat(0), Rat(0)));
  auto h2 = hypersurface(line_poly(Rat(-1), Rat(-2), Rat(0)));
  auto pts = stable_intersection_2d(h1, h2);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].location == QVec{Rat(1), Rat(1)});
  CHECK(pts[0].multiplicity == 1);
}

TEST_CASE("self stable intersection of a tropical line") {
  auto h = hypersurface(line_poly(Rat(0), Rat(0), Rat(0)));
  auto pts = stable_intersection_2d(h, h);
  CHECK(total_multiplicity(pts) == 1);
  REQUIRE(pts.size() == 1);
  // the limit point is the vertex of the line
  CHECK(pts[0].location == QVec{Rat(0), Rat(0)});
}

TEST_CASE("triangle-square generic curves meet with total 2") {
  Rng rng(1001);
  auto p1 = dense_curve(1, rng);
  auto p2 = square_curve(rng);
  auto pts = stable_intersection_2d(hypersurface(p1), hypersurface(p2));
  CHECK(Rat(total_multiplicity(pts)) == nmv_of(p1, p2));
  CHECK(nmv_of(p1, p2) == Rat(2));
}

TEST_CASE("perturbation oracle on overlapping identical lines") {
  auto h = hypersurface(line_poly(Rat(0), Rat(0), Rat(0)));
  auto pts = perturbation_oracle_2d(h, h, iv({1, 2}), make_rat(1, 1000));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 1);
  CHECK(pts[0].location == QVec{make_rat(1, 1000), make_rat(1, 1000)});

  // shift along the shared diagonal facet is not generic
  CHECK_THROWS_AS(perturbation_oracle_2d(h, h, iv({1, 1}), make_rat(1, 1000)), Error);
}

TEST_CASE("oracle equals stable intersection on transverse instances") {
  Rng rng(1002);
  int done = 0;
  while (done < 12) {
    auto p1 = dense_curve(1 + static_cast<int>(rng.uniform_int(0, 1)), rng);
    auto p2 = square_curve(rng);
    auto h1 = hypersurface(p1);
    auto h2 = hypersurface(p2);
    auto stable = stable_intersection_2d(h1, h2);
    std::vector<IntersectionPoint> o1, o2;
    try {
      o1 = perturbed_stable_points(h1, h2, iv({1, 2}));
      o2 = perturbed_stable_points(h1, h2, iv({3, 1}));
    } catch (const Error& e) {
      if (e.code() == errc::non_generic_perturbation) continue;
      throw;
    }
    REQUIRE(stable.size() == o1.size());
    REQUIRE(stable.size() == o2.size());
    for (size_t i = 0; i < stable.size(); ++i) {
      CHECK(stable[i].location == o1[i].location);
      CHECK(stable[i].multiplicity == o1[i].multiplicity);
      CHECK(stable[i].location == o2[i].location);
      CHECK(stable[i].multiplicity == o2[i].multiplicity);
    }
    ++done;
  }
}

TEST_CASE("bernstein equality on random generic instances") {
  Rng rng(1003);
  int done = 0;
  while (done < 10) {
    auto p1 = dense_curve(1 + static_cast<int>(rng.uniform_int(0, 1)), rng);
    auto p2 = dense_curve(1 + static_cast<int>(rng.uniform_int(0, 1)), rng);
    auto pts = stable_intersection_2d(hypersurface(p1), hypersurface(p2));
    CHECK(Rat(total_multiplicity(pts)) == nmv_of(p1, p2));
    ++done;
  }
}

TEST_CASE("mixed cells of two generic lines") {
  auto p1 = line_poly(make_rat(3, 997), make_rat(-5, 997), Rat(0));
  auto p2 = line_poly(make_rat(-11, 997), make_rat(7, 997), make_rat(1, 997));
  auto cells = mixed_cells({p1, p2});
  int fully = 0;
  for (const auto& c : cells)
    if (c.fully_mixed(2) && c.all_summands_edges()) {
      ++fully;
      CHECK(hull_volume(c.sum_points) == Rat(1));
    }
  CHECK(fully == 1);
}

TEST_CASE("identical polynomials give no type-(1,1) cells") {
  auto p = line_poly(make_rat(3, 997), make_rat(-5, 997), Rat(0));
  auto cells = mixed_cells({p, p});
  for (const auto& c : cells) CHECK_FALSE(c.all_summands_edges());
}

TEST_CASE("triangle-square mixed cells sum to the mixed volume") {
  Rng rng(1004);
  auto p1 = dense_curve(1, rng);
  auto p2 = square_curve(rng);
  auto cells = mixed_cells({p1, p2});
  Rat total(0);
  for (const auto& c : cells)
    if (c.all_summands_edges()) total += hull_volume(c.sum_points);
  CHECK(total == Rat(2));
}

TEST_CASE("bernstein totals for curve degrees and linear cuts") {
  Rng rng(1005);
  auto p2 = dense_curve(2, rng);
  auto p3 = dense_curve(3, rng);
  CHECK(bernstein_total({p2, p3}, {}) == Rat(6));

  // one cubic cut by a generic tropical line
  auto l = line_poly(make_rat(rng.uniform_int(-500, 500), 997),
                     make_rat(rng.uniform_int(-500, 500), 997), Rat(0));
  CHECK(bernstein_total({p3}, {l}) == Rat(3));

  auto s1 = square_curve(rng);
  auto s2 = square_curve(rng);
  CHECK(bernstein_total({s1, s2}, {}) == Rat(2));
}

TEST_CASE("bernstein rejects tied liftings") {
  auto p = line_poly(Rat(0), Rat(0), Rat(0));
  CHECK_THROWS_AS(bernstein_total({p, p}, {}), Error);
}

TEST_CASE("bezout bound examples") {
  std::vector<IVec> d2 = {iv({0, 0}), iv({2, 0}), iv({0, 2})};
  std::vector<IVec> d5 = {iv({0, 0}), iv({5, 0}), iv({0, 5})};
  auto b = bezout_bound({d2, d5}, 1, 2);
  CHECK(b.max_value == Rat(5));
  CHECK(b.witness_subset == std::vector<int>{1});
  REQUIRE(b.rows.size() == 2);
  CHECK(b.rows[0].value == Rat(2));

  std::vector<IVec> sq = {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})};
  auto b2 = bezout_bound({sq, sq, sq}, 2, 2);
  CHECK(b2.max_value == Rat(2));
  CHECK(b2.rows.size() == 3);

  std::vector<IVec> tri = {iv({0, 0}), iv({1, 0}), iv({0, 1})};
  auto b3 = bezout_bound({tri, sq}, 2, 2);
  CHECK(b3.rows.size() == 1);
  CHECK(b3.max_value == Rat(2));

  CHECK_THROWS_AS(bezout_bound({sq, sq}, 3, 2), Error);
}

TEST_CASE("local multiplicity bound check") {
  std::vector<IVec> tri = {iv({0, 0}), iv({1, 0}), iv({0, 1})};
  auto res = local_multiplicity_bound_check({iv({1, 0}), iv({2, 0}), iv({0, 1})},
                                            {Int(1), Int(1), Int(1)}, {}, {tri, tri, tri});
  CHECK(res.subsystem == std::vector<int>{0, 2});
  CHECK(res.multiplicity == 1);
  CHECK(res.bound >= Rat(1));
  CHECK(res.ok);

  // unimodular normals: multiplicity 1
  auto res2 = local_multiplicity_bound_check({iv({1, 0}), iv({0, 1})}, {Int(1), Int(1)}, {},
                                             {tri, tri});
  CHECK(res2.multiplicity == 1);
  CHECK(res2.ok);

  // rank-deficient normals with r too large propagate the error
  CHECK_THROWS_AS(local_multiplicity_bound_check({iv({1, 0}), iv({2, 0})}, {Int(1), Int(1)}, {},
                                                 {tri, tri}),
                  Error);
}

TEST_CASE("mixed cell volume equals the transverse multiplicity") {
  Rng rng(1006);
  auto p1 = dense_curve(2, rng);
  auto p2 = square_curve(rng);
  auto h1 = hypersurface(p1);
  auto h2 = hypersurface(p2);
  auto pts = stable_intersection_2d(h1, h2);
  auto cells = mixed_cells({p1, p2});
  for (const auto& pt : pts) {
    // the dual mixed cell is the sum of the two dual edges; find it
    REQUIRE(pt.contributing_normals.size() == 2);
    auto ev1 = evaluate(p1, pt.location);
    auto ev2 = evaluate(p2, pt.location);
    bool matched = false;
    for (const auto& c : cells) {
      if (c.summands[0].term_ids == ev1.argmax && c.summands[1].term_ids == ev2.argmax) {
        matched = true;
        CHECK(Rat(pt.multiplicity) == hull_volume(c.sum_points));
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("bernstein totals in three variables") {
  Rng rng(1007);
  auto plane = [&](int d) {
    std::vector<Term> terms;
    terms.push_back(Term{IVec{Int(0), Int(0), Int(0)}, make_rat(rng.uniform_int(-900, 900), 997)});
    for (int i = 0; i < 3; ++i) {
      IVec e(3, Int(0));
      e[i] = d;
      terms.push_back(Term{e, make_rat(rng.uniform_int(-900, 900), 997)});
    }
    return make_polynomial(3, std::move(terms));
  };
  // three generic tropical planes meet once
  CHECK(bernstein_total({plane(1), plane(1), plane(1)}, {}) == Rat(1));
  // a dilated surface with two generic hyperplane cuts
  CHECK(bernstein_total({plane(2)}, {plane(1), plane(1)}) == Rat(2));
}

TEST_CASE("bezout bounds in three variables") {
  std::vector<IVec> tet = {IVec{Int(0), Int(0), Int(0)}, IVec{Int(1), Int(0), Int(0)},
                           IVec{Int(0), Int(1), Int(0)}, IVec{Int(0), Int(0), Int(1)}};
  std::vector<IVec> tet2 = {IVec{Int(0), Int(0), Int(0)}, IVec{Int(2), Int(0), Int(0)},
                            IVec{Int(0), Int(2), Int(0)}, IVec{Int(0), Int(0), Int(2)}};
  auto b = bezout_bound({tet, tet2, tet}, 2, 3);
  // subsets {0,1},{0,2},{1,2}: nMV with one simplex factor: 2, 1, 2
  REQUIRE(b.rows.size() == 3);
  CHECK(b.max_value == Rat(2));
  auto b1 = bezout_bound({tet2}, 1, 3);
  CHECK(b1.max_value == Rat(2));
}

TEST_CASE("stable intersection with an empty hypersurface") {
  auto single = make_polynomial(2, {Term{iv({2, 1}), Rat(3)}});
  auto h_empty = hypersurface(single);
  CHECK(h_empty.facets.empty());
  auto h_line = hypersurface(line_poly(Rat(0), Rat(0), Rat(0)));
  CHECK(stable_intersection_2d(h_empty, h_line).empty());
  CHECK(stable_intersection_2d(h_line, h_empty).empty());
}

TEST_CASE("negative exponents are first-class") {
  // binomial curves: the diagonal and antidiagonal lines, crossing with
  // multiplicity |det| = 2
  auto p1 = make_polynomial(2, {Term{iv({1, 1}), Rat(0)}, Term{iv({0, 0}), Rat(0)}});
  auto p2 = make_polynomial(2, {Term{iv({1, -1}), Rat(0)}, Term{iv({0, 0}), Rat(0)}});
  auto pts = stable_intersection_2d(hypersurface(p1), hypersurface(p2));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 2);
  CHECK(Rat(pts[0].multiplicity) == nmv_of(p1, p2));

  // parallel binomial curves never meet
  auto p3 = make_polynomial(2, {Term{iv({2, 2}), Rat(1)}, Term{iv({0, 0}), Rat(0)}});
  CHECK(stable_intersection_2d(hypersurface(p1), hypersurface(p3)).empty());
  CHECK(nmv_of(p1, p3) == Rat(0));
}

TEST_CASE("dimension guards") {
  std::vector<Term> t4 = {Term{IVec(4, Int(0)), Rat(0)}, Term{IVec(4, Int(1)), Rat(0)}};
  auto p4 = make_polynomial(4, t4);
  CHECK_THROWS_AS(mixed_cells({p4}), Error);

  auto a = convex_hull({iv({0, 0}), iv({1, 0})});
  auto b = convex_hull({iv({0, 0, 0}), iv({1, 0, 0})});
  CHECK_THROWS_AS(minkowski_sum(a, b), Error);
}

TEST_CASE("self and near-self stable intersections match the mixed volume") {
  Rng rng(1008);
  for (int it = 0; it < 8; ++it) {
    auto p = dense_curve(1 + static_cast<int>(rng.uniform_int(0, 1)), rng);
    auto h = hypersurface(p);
    // fully overlapping: self-intersection
    CHECK(Rat(total_multiplicity(stable_intersection_2d(h, h))) == nmv_of(p, p));
    // same curve, shifted coefficients: still fully overlapping
    auto terms = p.terms;
    for (auto& t : terms) t.coefficient += make_rat(5, 7);
    auto h2 = hypersurface(make_polynomial(2, terms));
    CHECK(Rat(total_multiplicity(stable_intersection_2d(h, h2))) == nmv_of(p, p));
    // translated curve: facets stay parallel, another degenerate family
    auto moved = p.terms;
    for (auto& t : moved)
      t.coefficient += Rat(t.exponent[0]) * make_rat(1, 3) + Rat(t.exponent[1]) * make_rat(2, 5);
    auto h3 = hypersurface(make_polynomial(2, moved));
    CHECK(Rat(total_multiplicity(stable_intersection_2d(h, h3))) == nmv_of(p, p));
  }
}

TEST_CASE("mixed-degree bernstein in three variables") {
  Rng rng(1009);
  auto surf = [&](int d) {
    std::vector<Term> terms;
    terms.push_back(Term{IVec{Int(0), Int(0), Int(0)}, make_rat(rng.uniform_int(-900, 900), 997)});
    for (int i = 0; i < 3; ++i) {
      IVec e(3, Int(0));
      e[i] = d;
      terms.push_back(Term{e, make_rat(rng.uniform_int(-900, 900), 997)});
    }
    return make_polynomial(3, std::move(terms));
  };
  CHECK(bernstein_total({surf(2), surf(1)}, {surf(1)}) == Rat(2));
  CHECK(bernstein_total({surf(2), surf(3)}, {surf(1)}) == Rat(6));
}

TEST_CASE("product hypersurface is the union of the factors") {
  Rng rng(1010);
  auto p = dense_curve(2, rng);
  auto q = square_curve(rng);
  auto pq = tropical_product(p, q);
  for (int it = 0; it < 60; ++it) {
    QVec x = {make_rat(rng.uniform_int(-4000, 4000), 991),
              make_rat(rng.uniform_int(-4000, 4000), 991)};
    CHECK(on_hypersurface(pq, x) == (on_hypersurface(p, x) || on_hypersurface(q, x)));
  }
  // and on-curve points keep the tie in the product
  auto h = hypersurface(p);
  for (const auto& f : h.facets) CHECK(on_hypersurface(pq, f.base));
}
