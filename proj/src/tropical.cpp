#include "tropint/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropint/hull.hpp"

namespace tropint {

namespace {

// linear functional over Q on integer points
Rat eval_functional(const QVec& w, const IVec& p) { return q_dot_iq(p, w); }

// select subset of points by ids
std::vector<IVec> select(const std::vector<IVec>& pts, const std::vector<int>& ids) {
  std::vector<IVec> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(pts[i]);
  return out;
}

struct FaceRec {
  std::vector<int> ids;  // sorted indices into the point list handed in
  int dim = 0;
  QVec exposer;  // maximized exactly on ids among the point list
};

// All faces of conv(pts) (pts distinct), each with an exact exposing
// functional. Dimension of pts can be anything up to 5 after intrinsic
// reduction.
std::vector<FaceRec> enumerate_faces(const std::vector<IVec>& pts) {
  int ambient = static_cast<int>(pts[0].size());
  int m = static_cast<int>(pts.size());

  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;

  std::vector<IVec> dirs;
  for (int i = 1; i < m; ++i) {
    dirs.push_back(sub(pts[i], pts[0]));
    if (rank_of_vectors(dirs) != static_cast<int>(dirs.size())) dirs.pop_back();
  }
  int d = static_cast<int>(dirs.size());

  std::vector<FaceRec> out;
  out.push_back(FaceRec{all, d, QVec(ambient, Rat(0))});
  if (d == 0) return out;

  std::vector<IVec> work = pts;
  IntMatrix basis_t;  // transpose of the intrinsic basis, for mapping back
  bool intrinsic = (d < ambient);
  if (intrinsic) {
    std::vector<IVec> sat = saturate(dirs, ambient);
    IntMatrix b = IntMatrix::from_columns(sat);
    basis_t = IntMatrix(d, ambient);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < ambient; ++c) basis_t.at(r, c) = b.at(c, r);
    work.clear();
    for (const auto& p : pts) {
      auto y = solve_rational(b, to_qvec(sub(p, pts[0])));
      if (!y) fail(errc::internal, "face point off its own affine hull");
      IVec iy(d);
      for (int j = 0; j < d; ++j) {
        if ((*y)[j].get_den() != 1) fail(errc::internal, "non-integral intrinsic coordinate");
        iy[j] = (*y)[j].get_num();
      }
      work.push_back(iy);
    }
  }

  Hull h = convex_hull_points(work);
  std::set<std::vector<int>> seen;
  seen.insert(all);
  std::vector<FaceRec> faces_work;

  for (const auto& plane : h.planes) {
    std::vector<int> on_ids;
    for (int i = 0; i < m; ++i)
      if (dot(plane.normal, work[i]) == plane.offset) on_ids.push_back(i);
    auto sub_faces = enumerate_faces(select(work, on_ids));
    for (auto& f : sub_faces) {
      std::vector<int> global;
      global.reserve(f.ids.size());
      for (int i : f.ids) global.push_back(on_ids[i]);
      std::sort(global.begin(), global.end());
      if (!seen.insert(global).second) continue;

      // compose: phi = M * plane.normal + psi, M large enough that points off
      // the plane stay strictly below; the plane gap is an integer >= 1
      Rat mstar;
      bool first = true;
      for (int i : global) {
        Rat v = eval_functional(f.exposer, work[i]);
        if (first || v > mstar) mstar = v;
        first = false;
      }
      Rat m_bound(1);
      for (int i = 0; i < m; ++i) {
        Int gap = plane.offset - dot(plane.normal, work[i]);
        if (gap == 0) continue;
        Rat need = (eval_functional(f.exposer, work[i]) - mstar) / Rat(gap) + Rat(1);
        if (need > m_bound) m_bound = need;
      }
      QVec phi(d);
      for (int j = 0; j < d; ++j) phi[j] = m_bound * Rat(plane.normal[j]) + f.exposer[j];
      faces_work.push_back(FaceRec{std::move(global), f.dim, std::move(phi)});
    }
  }

  for (auto& f : faces_work) {
    if (intrinsic) {
      auto z = solve_rational(basis_t, f.exposer);
      if (!z) fail(errc::internal, "cannot lift exposing functional");
      f.exposer = *z;
    }
    out.push_back(std::move(f));
  }
  return out;
}

Int lcm_of_denominators(const TropicalPolynomial& p) {
  Int l = 1;
  for (const auto& t : p.terms) l = lcm(l, Int(t.coefficient.get_den()));
  return l;
}

}  // namespace

std::vector<IVec> TropicalPolynomial::support() const {
  std::vector<IVec> s;
  s.reserve(terms.size());
  for (const auto& t : terms) s.push_back(t.exponent);
  return s;
}

TropicalPolynomial make_polynomial(int n, std::vector<Term> terms) {
  if (terms.empty()) fail(errc::empty_input, "tropical polynomial needs at least one term");
  std::set<IVec> seen;
  for (const auto& t : terms) {
    if (static_cast<int>(t.exponent.size()) != n)
      fail(errc::dimension_mismatch, "exponent length does not match the variable count");
    if (!seen.insert(t.exponent).second)
      fail(errc::parse_error, "duplicate exponent " + ivec_str(t.exponent));
  }
  TropicalPolynomial p;
  p.ambient_dim = n;
  p.terms = std::move(terms);
  return p;
}

EvalResult evaluate(const TropicalPolynomial& p, const QVec& x) {
  if (static_cast<int>(x.size()) != p.ambient_dim)
    fail(errc::dimension_mismatch, "evaluation point has the wrong dimension");
  EvalResult r;
  for (int i = 0; i < static_cast<int>(p.terms.size()); ++i) {
    Rat v = q_dot_iq(p.terms[i].exponent, x) + p.terms[i].coefficient;
    if (i == 0 || v > r.value) {
      r.value = v;
      r.argmax.assign(1, i);
    } else if (v == r.value) {
      r.argmax.push_back(i);
    }
  }
  return r;
}

bool on_hypersurface(const TropicalPolynomial& p, const QVec& x) {
  return evaluate(p, x).argmax.size() >= 2;
}

TropicalPolynomial tropical_product(const TropicalPolynomial& p, const TropicalPolynomial& q) {
  if (p.ambient_dim != q.ambient_dim)
    fail(errc::dimension_mismatch, "product of polynomials in different spaces");
  std::map<IVec, Rat> best;
  for (const auto& a : p.terms)
    for (const auto& b : q.terms) {
      IVec e = add(a.exponent, b.exponent);
      Rat c = a.coefficient + b.coefficient;
      auto it = best.find(e);
      if (it == best.end())
        best.emplace(std::move(e), c);
      else if (c > it->second)
        it->second = c;
    }
  std::vector<Term> terms;
  terms.reserve(best.size());
  for (auto& [e, c] : best) terms.push_back(Term{e, c});
  return make_polynomial(p.ambient_dim, std::move(terms));
}

RegularSubdivision regular_subdivision_full(const TropicalPolynomial& p) {
  int n = p.ambient_dim;
  if (n > 4) fail(errc::dimension_too_large, "subdivisions support ambient dimension <= 4");
  int m = static_cast<int>(p.terms.size());
  std::vector<IVec> exps = p.support();

  RegularSubdivision rs;
  rs.ambient_dim = n;

  if (m == 1) {
    rs.newton_dim = 0;
    rs.faces.push_back(SubdivisionFace{{0}, 0, QVec(n, Rat(0))});
    rs.maximal = {0};
    return rs;
  }

  // intrinsic reduction of the support
  std::vector<IVec> dirs;
  for (int i = 1; i < m; ++i) {
    dirs.push_back(sub(exps[i], exps[0]));
    if (rank_of_vectors(dirs) != static_cast<int>(dirs.size())) dirs.pop_back();
  }
  int d = static_cast<int>(dirs.size());
  rs.newton_dim = d;

  std::vector<IVec> work = exps;
  IntMatrix basis_t;
  bool intrinsic = (d < n);
  if (intrinsic) {
    std::vector<IVec> sat = saturate(dirs, n);
    IntMatrix b = IntMatrix::from_columns(sat);
    basis_t = IntMatrix(d, n);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < n; ++c) basis_t.at(r, c) = b.at(c, r);
    work.clear();
    for (const auto& e : exps) {
      auto y = solve_rational(b, to_qvec(sub(e, exps[0])));
      if (!y) fail(errc::internal, "support point off its own affine hull");
      IVec iy(d);
      for (int j = 0; j < d; ++j) {
        if ((*y)[j].get_den() != 1) fail(errc::internal, "non-integral support coordinate");
        iy[j] = (*y)[j].get_num();
      }
      work.push_back(iy);
    }
  }

  // affine lifting gives the trivial subdivision: faces of the Newton polytope
  {
    IntMatrix sys(m, d + 1);
    QVec rhs(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < d; ++j) sys.at(i, j) = work[i][j];
      sys.at(i, d) = 1;
      rhs[i] = p.terms[i].coefficient;
    }
    auto fit = solve_rational(sys, rhs);
    if (fit) {
      QVec grad(fit->begin(), fit->begin() + d);
      auto faces = enumerate_faces(work);
      for (auto& f : faces) {
        QVec x_work = q_sub(f.exposer, grad);
        rs.faces.push_back(SubdivisionFace{f.ids, f.dim, std::move(x_work)});
      }
    } else {
      // genuine lifted hull: lift by D * coefficient to stay integral
      Int dnm = lcm_of_denominators(p);
      std::vector<IVec> lifted(m);
      for (int i = 0; i < m; ++i) {
        IVec l = work[i];
        Rat scaled = p.terms[i].coefficient * Rat(dnm);
        l.push_back(scaled.get_num());
        lifted[i] = std::move(l);
      }
      Hull h = convex_hull_points(lifted);
      if (h.dim != d + 1) fail(errc::internal, "lifted support is unexpectedly degenerate");

      std::set<std::vector<int>> seen;
      for (const auto& plane : h.planes) {
        if (plane.normal[d] <= 0) continue;  // upper hull only
        std::vector<int> on_ids;
        for (int i = 0; i < m; ++i)
          if (dot(plane.normal, lifted[i]) == plane.offset) on_ids.push_back(i);
        auto sub_faces = enumerate_faces(select(lifted, on_ids));
        for (auto& f : sub_faces) {
          std::vector<int> global;
          for (int i : f.ids) global.push_back(on_ids[i]);
          std::sort(global.begin(), global.end());
          if (!seen.insert(global).second) continue;

          Rat mstar;
          bool first = true;
          for (int i : global) {
            Rat v = eval_functional(f.exposer, lifted[i]);
            if (first || v > mstar) mstar = v;
            first = false;
          }
          Rat m_bound(1);
          for (int i = 0; i < m; ++i) {
            Int gap = plane.offset - dot(plane.normal, lifted[i]);
            if (gap == 0) continue;
            Rat need = (eval_functional(f.exposer, lifted[i]) - mstar) / Rat(gap) + Rat(1);
            if (need > m_bound) m_bound = need;
          }
          // keep the last component positive so the functional is (x, t>0)
          Rat tcomp = f.exposer[d];
          if (tcomp < 0) {
            Rat need = -tcomp / Rat(plane.normal[d]) + Rat(1);
            if (need > m_bound) m_bound = need;
          }
          QVec phi(d + 1);
          for (int j = 0; j <= d; ++j) phi[j] = m_bound * Rat(plane.normal[j]) + f.exposer[j];
          if (phi[d] <= 0) fail(errc::internal, "upper-hull exposer lost positivity");

          // functional (z, zt) on lifts (e, D c) matches x = z / (zt * D)
          QVec x_work(d);
          Rat denom = phi[d] * Rat(dnm);
          for (int j = 0; j < d; ++j) x_work[j] = phi[j] / denom;
          rs.faces.push_back(SubdivisionFace{std::move(global), f.dim, std::move(x_work)});
        }
      }
    }
  }

  if (intrinsic) {
    for (auto& f : rs.faces) {
      auto z = solve_rational(basis_t, f.witness);
      if (!z) fail(errc::internal, "cannot lift subdivision witness");
      f.witness = *z;
    }
  }

  std::sort(rs.faces.begin(), rs.faces.end(), [](const SubdivisionFace& a, const SubdivisionFace& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.term_ids < b.term_ids;
  });
  for (int i = 0; i < static_cast<int>(rs.faces.size()); ++i)
    if (rs.faces[i].dim == d) rs.maximal.push_back(i);

  // exactness self-check: the witness must reproduce the face on the nose
  for (const auto& f : rs.faces) {
    auto ev = evaluate(p, f.witness);
    if (ev.argmax != f.term_ids)
      fail(errc::internal, "subdivision witness does not expose its face");
  }
  return rs;
}

std::vector<SubdivisionFace> regular_subdivision(const TropicalPolynomial& p) {
  RegularSubdivision rs = regular_subdivision_full(p);
  std::vector<SubdivisionFace> cells;
  for (int i : rs.maximal) cells.push_back(rs.faces[i]);
  return cells;
}

HypersurfaceComplex hypersurface(const TropicalPolynomial& p) {
  int n = p.ambient_dim;
  if (n > 4) fail(errc::dimension_too_large, "hypersurfaces support ambient dimension <= 4");
  HypersurfaceComplex h;
  h.poly = p;
  h.ambient_dim = n;
  h.subdivision = regular_subdivision_full(p);
  h.full_complex = (n <= 3);

  for (int fi = 0; fi < static_cast<int>(h.subdivision.faces.size()); ++fi) {
    const auto& f = h.subdivision.faces[fi];
    if (f.dim != 1) continue;
    std::vector<IVec> pts;
    for (int id : f.term_ids) pts.push_back(p.terms[id].exponent);
    IVec u = *std::min_element(pts.begin(), pts.end());
    IVec v = *std::max_element(pts.begin(), pts.end());
    Facet fac;
    fac.face_id = fi;
    fac.dual_u = u;
    fac.dual_v = v;
    IVec delta = sub(v, u);
    fac.weight = content(delta);
    fac.primitive_normal = primitive(delta);
    fac.base = f.witness;
    std::vector<IVec> rows;
    for (size_t k = 1; k < pts.size(); ++k) rows.push_back(sub(pts[k], pts[0]));
    fac.directions = integer_kernel(IntMatrix::from_rows(rows));
    h.facets.push_back(std::move(fac));
  }

  if (h.full_complex && h.subdivision.newton_dim == n) {
    for (int fi = 0; fi < static_cast<int>(h.subdivision.faces.size()); ++fi) {
      const auto& f = h.subdivision.faces[fi];
      if (f.dim == n) h.vertices.push_back(ComplexVertex{fi, f.witness});
    }
  }
  if (h.full_complex && n == 3 && h.subdivision.newton_dim >= 2) {
    // 1-dimensional cells of the complex, dual to dim-2 subdivision faces
    // (maximal ones when the Newton polytope is planar)
    for (int fi = 0; fi < static_cast<int>(h.subdivision.faces.size()); ++fi) {
      const auto& f = h.subdivision.faces[fi];
      if (f.dim != 2) continue;
      std::vector<IVec> rows;
      const auto& ids = f.term_ids;
      for (size_t k = 1; k < ids.size(); ++k)
        rows.push_back(sub(p.terms[ids[k]].exponent, p.terms[ids[0]].exponent));
      auto kern = integer_kernel(IntMatrix::from_rows(rows));
      if (kern.size() != 1) fail(errc::internal, "complex edge with bad direction space");
      h.edges.push_back(ComplexEdge{fi, f.witness, kern[0]});
    }
  }

  if (h.full_complex) verify_balancing(h);
  return h;
}

namespace {

bool support_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

void verify_balancing(const HypersurfaceComplex& h) {
  int n = h.ambient_dim;
  if (n == 2) {
    for (const auto& vtx : h.vertices) {
      const auto& cell = h.subdivision.faces[vtx.face_id];
      IVec sum(2, Int(0));
      for (const auto& fac : h.facets) {
        const auto& edge_face = h.subdivision.faces[fac.face_id];
        if (!support_subset(edge_face.term_ids, cell.term_ids)) continue;
        const IVec& dir = fac.directions[0];
        // orient away from the vertex: base - location = t * dir, t != 0
        QVec delta = q_sub(fac.base, vtx.location);
        int k = 0;
        while (k < 2 && dir[k] == 0) ++k;
        if (k == 2) fail(errc::internal, "zero facet direction");
        Rat t = delta[k] / Rat(dir[k]);
        if (t == 0) fail(errc::internal, "facet base point coincides with a vertex");
        IVec out = (t > 0) ? dir : negate(dir);
        for (int j = 0; j < 2; ++j) sum[j] += fac.weight * out[j];
      }
      if (!is_zero_vec(sum))
        fail(errc::internal, "balancing failed at vertex " + qvec_str(vtx.location));
    }
  } else if (n == 3) {
    for (const auto& edge : h.edges) {
      const auto& cell2 = h.subdivision.faces[edge.face_id];
      const IVec& ell = edge.direction;
      IVec sum(3, Int(0));
      for (const auto& fac : h.facets) {
        const auto& edge_face = h.subdivision.faces[fac.face_id];
        if (!support_subset(edge_face.term_ids, cell2.term_ids)) continue;
        // complete ell to a Z-basis {ell, u} of the facet's tangent lattice
        IntMatrix b2 = IntMatrix::from_columns(fac.directions);
        auto lam = solve_rational(b2, to_qvec(ell));
        if (!lam) fail(errc::internal, "edge direction outside facet span");
        Int l0 = (*lam)[0].get_num(), l1 = (*lam)[1].get_num();
        if ((*lam)[0].get_den() != 1 || (*lam)[1].get_den() != 1)
          fail(errc::internal, "edge direction not integral in facet basis");
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), l0.get_mpz_t(), l1.get_mpz_t());
        if (g != 1 && g != -1) fail(errc::internal, "edge direction imprimitive in facet lattice");
        // u = -t*b0 + s*b1 gives det [[l0, -t], [l1, s]] = l0 s + l1 t = g
        IVec u(3);
        for (int j = 0; j < 3; ++j) u[j] = -t * fac.directions[0][j] + s * fac.directions[1][j];
        // orient u into the facet
        IntMatrix lu = IntMatrix::from_columns({ell, u});
        auto ab = solve_rational(lu, q_sub(fac.base, edge.base));
        if (!ab) fail(errc::internal, "facet base not in the edge-facet plane");
        if ((*ab)[1] == 0) fail(errc::internal, "facet base on the complex edge line");
        if ((*ab)[1] < 0)
          for (int j = 0; j < 3; ++j) u[j] = -u[j];
        for (int j = 0; j < 3; ++j) sum[j] += fac.weight * u[j];
      }
      if (!is_zero_vec(sum) && rank_of_vectors({sum, ell}) > 1)
        fail(errc::internal, "balancing failed along an edge of the complex");
    }
  }
}

ParamInterval facet_interval_2d(const HypersurfaceComplex& h, int facet_id) {
  if (h.ambient_dim != 2) fail(errc::dimension_mismatch, "facet intervals are 2-d only");
  const Facet& fac = h.facets[facet_id];
  const auto& face = h.subdivision.faces[fac.face_id];
  const IVec& dir = fac.directions[0];
  const TropicalPolynomial& p = h.poly;
  int a0 = face.term_ids[0];
  ParamInterval iv;
  for (int i = 0; i < static_cast<int>(p.terms.size()); ++i) {
    if (std::find(face.term_ids.begin(), face.term_ids.end(), i) != face.term_ids.end()) continue;
    // <x(t), beta - alpha0> + c_beta - c_alpha0 <= 0
    IVec diff = sub(p.terms[i].exponent, p.terms[a0].exponent);
    Rat at0 = q_dot_iq(diff, fac.base) + p.terms[i].coefficient - p.terms[a0].coefficient;
    Int slope = dot(diff, dir);
    if (slope == 0) {
      if (at0 > 0) fail(errc::internal, "facet base violates its own cell inequalities");
      continue;
    }
    Rat bound = -at0 / Rat(slope);
    if (slope > 0) {
      if (!iv.has_hi || bound < iv.hi) {
        iv.has_hi = true;
        iv.hi = bound;
      }
    } else {
      if (!iv.has_lo || bound > iv.lo) {
        iv.has_lo = true;
        iv.lo = bound;
      }
    }
  }
  return iv;
}

LinkFan link_at(const HypersurfaceComplex& h, const QVec& omega) {
  const TropicalPolynomial& p = h.poly;
  auto ev = evaluate(p, omega);
  if (ev.argmax.size() < 2)
    fail(errc::point_not_on_hypersurface, "argmax is a singleton at " + qvec_str(omega));
  int n = p.ambient_dim;

  std::vector<Term> local;
  for (int id : ev.argmax) local.push_back(Term{p.terms[id].exponent, Rat(0)});
  TropicalPolynomial q = make_polynomial(n, local);

  LinkFan fan;
  if (n == 1) return fan;  // links of points on a 1-d hypersurface are trivial

  RegularSubdivision rq = regular_subdivision_full(q);
  for (const auto& f : rq.faces) {
    if (f.dim != 1) continue;
    const IVec& alpha0 = q.terms[f.term_ids[0]].exponent;
    std::vector<IVec> rows;
    for (size_t k = 1; k < f.term_ids.size(); ++k)
      rows.push_back(sub(q.terms[f.term_ids[k]].exponent, alpha0));
    LinkCone cone;
    cone.span_basis = integer_kernel(IntMatrix::from_rows(rows));

    // integerize the witness: argmax is scale invariant for the local fan
    Int dnm = 1;
    for (const auto& c : f.witness) dnm = lcm(dnm, Int(c.get_den()));
    IVec sample(n);
    for (int j = 0; j < n; ++j) sample[j] = Int(f.witness[j].get_num() * (dnm / f.witness[j].get_den()));
    if (is_zero_vec(sample)) {
      // dual of the whole (1-dimensional) Newton polytope: the cone is the
      // full orthogonal subspace, any basis direction is interior
      sample = cone.span_basis[0];
    }
    cone.sample = primitive(sample);

    // conical generators: boundary directions of the dual cone plus the sample
    std::vector<IVec> gens;
    std::vector<IVec> constraints;  // <u, gamma - alpha0> <= 0 for gamma off the edge
    for (int i = 0; i < static_cast<int>(q.terms.size()); ++i) {
      if (std::find(f.term_ids.begin(), f.term_ids.end(), i) != f.term_ids.end()) continue;
      IVec c = sub(q.terms[i].exponent, alpha0);
      if (!is_zero_vec(c)) constraints.push_back(c);
    }
    auto in_cone = [&](const IVec& u) {
      for (const auto& r : rows)
        if (dot(r, u) != 0) return false;
      for (const auto& c : constraints)
        if (dot(c, u) > 0) return false;
      return true;
    };
    if (n == 2) {
      const IVec& w = cone.span_basis[0];
      if (in_cone(w)) gens.push_back(w);
      IVec mw = negate(w);
      if (in_cone(mw)) gens.push_back(mw);
    } else {
      const IVec& w1 = cone.span_basis[0];
      const IVec& w2 = cone.span_basis[1];
      std::vector<std::pair<Int, Int>> hs;
      for (const auto& c : constraints) {
        Int h1 = dot(c, w1), h2 = dot(c, w2);
        if (h1 != 0 || h2 != 0) hs.emplace_back(h1, h2);
      }
      std::set<IVec> cand;
      if (hs.empty()) {
        cand.insert(w1);
        cand.insert(negate(w1));
        cand.insert(w2);
        cand.insert(negate(w2));
      } else {
        for (const auto& [h1, h2] : hs) {
          for (int sgn : {1, -1}) {
            Int s1 = -sgn * h2, s2 = sgn * h1;
            IVec u(3);
            for (int j = 0; j < 3; ++j) u[j] = s1 * w1[j] + s2 * w2[j];
            if (!is_zero_vec(u) && in_cone(u)) cand.insert(primitive(u));
          }
        }
      }
      for (const auto& u : cand) gens.push_back(u);
    }
    gens.push_back(cone.sample);
    cone.generators = std::move(gens);
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace tropint
