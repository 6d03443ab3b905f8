#include "tropint/svg.hpp"

#include <algorithm>
#include <sstream>

namespace tropint {

namespace {

// fixed 3-decimal rendering of an exact rational, round half up
std::string dec3(const Rat& x) {
  Int num = x.get_num() * 2000 + x.get_den();
  Int den = x.get_den() * 2;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  bool neg = q < 0;
  Int a = abs(q);
  Int whole = a / 1000, frac = a % 1000;
  std::ostringstream os;
  if (neg && (whole != 0 || frac != 0)) os << "-";
  os << whole.get_str();
  std::string f = frac.get_str();
  os << "." << std::string(3 - f.size(), '0') << f;
  return os.str();
}

struct Mapper {
  Rat xmin, xmax, ymin, ymax;
  int size;
  int margin = 20;

  Rat sx(const Rat& x) const {
    return Rat(margin) + (x - xmin) / (xmax - xmin) * Rat(size - 2 * margin);
  }
  Rat sy(const Rat& y) const {
    return Rat(size - margin) - (y - ymin) / (ymax - ymin) * Rat(size - 2 * margin);
  }
};

struct Clip {
  bool ok = false;
  Rat t0, t1;
};

// intersect {base + t dir} with the box, starting from the facet's own
// parameter interval
Clip clip_to_box(const QVec& base, const IVec& dir, const ParamInterval& ivl, const Mapper& m) {
  bool has_lo = ivl.has_lo, has_hi = ivl.has_hi;
  Rat lo = ivl.has_lo ? ivl.lo : Rat(0), hi = ivl.has_hi ? ivl.hi : Rat(0);
  auto add = [&](const Rat& a, const Int& b, const Rat& bound_lo, const Rat& bound_hi) -> bool {
    // bound_lo <= a + t b <= bound_hi
    if (b == 0) return a >= bound_lo && a <= bound_hi;
    Rat t_at_lo = (bound_lo - a) / Rat(b), t_at_hi = (bound_hi - a) / Rat(b);
    Rat tl = std::min(t_at_lo, t_at_hi), th = std::max(t_at_lo, t_at_hi);
    if (!has_lo || tl > lo) {
      has_lo = true;
      lo = tl;
    }
    if (!has_hi || th < hi) {
      has_hi = true;
      hi = th;
    }
    return true;
  };
  Clip c;
  if (!add(base[0], dir[0], m.xmin, m.xmax)) return c;
  if (!add(base[1], dir[1], m.ymin, m.ymax)) return c;
  if (!has_lo || !has_hi || lo > hi) return c;
  c.ok = true;
  c.t0 = lo;
  c.t1 = hi;
  return c;
}

void draw_curve(std::ostringstream& os, const HypersurfaceComplex& h, const Mapper& m,
                const QVec& shift, const std::string& color) {
  for (int i = 0; i < static_cast<int>(h.facets.size()); ++i) {
    const auto& fac = h.facets[i];
    QVec base = q_add(fac.base, shift);
    Clip c = clip_to_box(base, fac.directions[0], facet_interval_2d(h, i), m);
    if (!c.ok) continue;
    QVec p0 = {base[0] + c.t0 * Rat(fac.directions[0][0]), base[1] + c.t0 * Rat(fac.directions[0][1])};
    QVec p1 = {base[0] + c.t1 * Rat(fac.directions[0][0]), base[1] + c.t1 * Rat(fac.directions[0][1])};
    os << "  <line x1=\"" << dec3(m.sx(p0[0])) << "\" y1=\"" << dec3(m.sy(p0[1])) << "\" x2=\""
       << dec3(m.sx(p1[0])) << "\" y2=\"" << dec3(m.sy(p1[1])) << "\" stroke=\"" << color
       << "\" stroke-width=\"" << fac.weight.get_str() << ".5\"/>\n";
  }
  for (const auto& v : h.vertices) {
    QVec loc = q_add(v.location, shift);
    if (loc[0] < m.xmin || loc[0] > m.xmax || loc[1] < m.ymin || loc[1] > m.ymax) continue;
    os << "  <circle cx=\"" << dec3(m.sx(loc[0])) << "\" cy=\"" << dec3(m.sy(loc[1]))
       << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }
}

void draw_newton_inset(std::ostringstream& os, const HypersurfaceComplex& h, int size) {
  // support and subdivision edges scaled into a corner box
  Int exmin = 0, exmax = 0, eymin = 0, eymax = 0;
  bool first = true;
  for (const auto& t : h.poly.terms) {
    if (first || t.exponent[0] < exmin) exmin = t.exponent[0];
    if (first || t.exponent[0] > exmax) exmax = t.exponent[0];
    if (first || t.exponent[1] < eymin) eymin = t.exponent[1];
    if (first || t.exponent[1] > eymax) eymax = t.exponent[1];
    first = false;
  }
  Rat span = Rat(std::max(Int(exmax - exmin), Int(eymax - eymin)));
  if (span == 0) span = 1;
  int inset = 150, pad = 12;
  Rat ox(size - inset - pad), oy(pad);
  auto px = [&](const Int& e) { return dec3(ox + Rat(pad) + Rat(e - exmin) / span * Rat(inset - 2 * pad)); };
  auto py = [&](const Int& e) {
    return dec3(oy + Rat(inset - pad) - Rat(e - eymin) / span * Rat(inset - 2 * pad));
  };
  os << "  <rect x=\"" << dec3(ox) << "\" y=\"" << dec3(oy) << "\" width=\"" << inset
     << "\" height=\"" << inset << "\" fill=\"white\" stroke=\"#999\"/>\n";
  for (const auto& f : h.subdivision.faces) {
    if (f.dim != 1) continue;
    std::vector<IVec> pts;
    for (int id : f.term_ids) pts.push_back(h.poly.terms[id].exponent);
    IVec u = *std::min_element(pts.begin(), pts.end());
    IVec v = *std::max_element(pts.begin(), pts.end());
    os << "  <line x1=\"" << px(u[0]) << "\" y1=\"" << py(u[1]) << "\" x2=\"" << px(v[0])
       << "\" y2=\"" << py(v[1]) << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  }
  for (const auto& t : h.poly.terms)
    os << "  <circle cx=\"" << px(t.exponent[0]) << "\" cy=\"" << py(t.exponent[1])
       << "\" r=\"2.5\" fill=\"#d33\"/>\n";
}

void check_2d_svg(const HypersurfaceComplex& h) {
  if (h.ambient_dim != 2) fail(errc::dimension_mismatch, "svg output is 2-d only");
}

std::string header(int size) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string render_hypersurface_svg(const HypersurfaceComplex& h, const SvgOptions& opt) {
  check_2d_svg(h);
  Mapper m{opt.box[0], opt.box[1], opt.box[2], opt.box[3], opt.size};
  std::ostringstream os;
  os << header(opt.size);
  draw_curve(os, h, m, QVec(2, Rat(0)), "#1f5fbf");
  draw_newton_inset(os, h, opt.size);
  os << "</svg>\n";
  return os.str();
}

std::string render_intersection_svg(const HypersurfaceComplex& h1, const HypersurfaceComplex& h2,
                                    const std::vector<IntersectionPoint>& pts,
                                    const SvgOptions& opt) {
  check_2d_svg(h1);
  check_2d_svg(h2);
  Mapper m{opt.box[0], opt.box[1], opt.box[2], opt.box[3], opt.size};
  std::ostringstream os;
  os << header(opt.size);
  draw_curve(os, h1, m, QVec(2, Rat(0)), "#1f5fbf");
  draw_curve(os, h2, m, QVec(2, Rat(0)), "#c23b22");
  for (const auto& p : pts) {
    if (p.location[0] < m.xmin || p.location[0] > m.xmax || p.location[1] < m.ymin ||
        p.location[1] > m.ymax)
      continue;
    Int r = 3 + 2 * (p.multiplicity > 5 ? Int(5) : p.multiplicity);
    os << "  <circle cx=\"" << dec3(m.sx(p.location[0])) << "\" cy=\""
       << dec3(m.sy(p.location[1])) << "\" r=\"" << r.get_str()
       << "\" fill=\"none\" stroke=\"#111\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropint
