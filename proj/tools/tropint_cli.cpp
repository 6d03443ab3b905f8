#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "tropint/degree.hpp"
#include "tropint/intersect.hpp"
#include "tropint/io.hpp"
#include "tropint/svg.hpp"

using namespace tropint;
using nlohmann::json;

namespace {

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
      return 2;
    case errc::dimension_too_large:
    case errc::unsupported_dimension:
      return 3;
    case errc::dimension_mismatch:
    case errc::invalid_codimension:
    case errc::empty_input:
    case errc::not_square:
    case errc::zero_vector:
    case errc::rank_deficient:
    case errc::insufficient_rank:
    case errc::not_transverse:
    case errc::point_not_on_hypersurface:
      return 4;
    case errc::non_generic_instance:
    case errc::non_generic_perturbation:
      return 5;
    default:
      return 1;
  }
}

struct Common {
  std::string input;
  std::string out;
  std::string svg;
  int threads = 1;
  long samples = -1;
  long long seed = -1;
  int poly = 0;
};

uint64_t resolve_seed(const Common& c, const SystemFile& sf) {
  if (c.seed >= 0) return static_cast<uint64_t>(c.seed);
  if (sf.seed) return *sf.seed;
  if (const char* env = std::getenv("TROPINT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(errc::parse_error, "TROPINT_SEED is not a decimal integer");
    }
  }
  return 0;
}

long resolve_samples(const Common& c, const SystemFile& sf) {
  if (c.samples > 0) return c.samples;
  if (sf.samples) return *sf.samples;
  return 200;
}

SvgOptions svg_options(const SystemFile& sf) {
  SvgOptions opt;
  if (sf.box) opt.box = *sf.box;
  return opt;
}

void emit(const Common& c, const json& report) {
  std::string text = dump_report(report);
  if (c.out.empty())
    std::cout << text;
  else
    write_atomic(c.out, text);
}

const TropicalPolynomial& pick_poly(const SystemFile& sf, int index) {
  if (index < 0 || index >= static_cast<int>(sf.polynomials.size()))
    fail(errc::dimension_mismatch, "polynomial index out of range");
  return sf.polynomials[index];
}

json facet_json(const Facet& f) {
  json j;
  j["base"] = j_qvec(f.base);
  json dirs = json::array();
  for (const auto& d : f.directions) dirs.push_back(j_ivec(d));
  j["directions"] = dirs;
  j["primitive_normal"] = j_ivec(f.primitive_normal);
  j["weight"] = j_int(f.weight);
  j["dual_edge"] = json::array({j_ivec(f.dual_u), j_ivec(f.dual_v)});
  return j;
}

int cmd_hypersurface(const Common& c) {
  SystemFile sf = load_system_file(c.input);
  const auto& p = pick_poly(sf, c.poly);
  HypersurfaceComplex h = hypersurface(p);

  json res;
  res["ambient_dim"] = h.ambient_dim;
  res["poly_index"] = c.poly;
  LatticePolytope newton = convex_hull(p.support());
  json nv = json::array();
  for (const auto& v : newton.vertices) nv.push_back(j_ivec(v));
  res["newton_vertices"] = nv;
  res["newton_dim"] = newton.dim;

  json cells = json::array();
  for (int mi : h.subdivision.maximal) {
    const auto& f = h.subdivision.faces[mi];
    json jc;
    jc["dim"] = f.dim;
    json pts = json::array();
    for (int id : f.term_ids) pts.push_back(j_ivec(p.terms[id].exponent));
    jc["points"] = pts;
    cells.push_back(jc);
  }
  res["subdivision_cells"] = cells;

  json verts = json::array();
  for (const auto& v : h.vertices) verts.push_back(j_qvec(v.location));
  res["vertices"] = verts;

  json facets = json::array();
  for (const auto& f : h.facets) facets.push_back(facet_json(f));
  res["facets"] = facets;
  res["full_complex"] = h.full_complex;

  if (!c.svg.empty()) {
    if (h.ambient_dim != 2) fail(errc::dimension_mismatch, "--svg requires a 2-d instance");
    write_atomic(c.svg, render_hypersurface_svg(h, svg_options(sf)));
  }
  emit(c, report_envelope("hypersurface", sf, res));
  return 0;
}

int cmd_mixed_volume(const Common& c, const std::vector<int>& indices) {
  SystemFile sf = load_system_file(c.input);
  if (static_cast<int>(indices.size()) != sf.vars)
    fail(errc::dimension_mismatch, "need exactly n polynomial indices in R^n");
  std::vector<LatticePolytope> tuple;
  for (int i : indices) tuple.push_back(convex_hull(pick_poly(sf, i).support()));
  Rat ie = mixed_volume_ie(tuple, c.threads);
  Rat interp = mixed_volume_interp(tuple);

  json res;
  json idx = json::array();
  for (int i : indices) idx.push_back(i);
  res["indices"] = idx;
  res["inclusion_exclusion"] = j_rat(ie);
  res["interpolation"] = j_rat(interp);
  res["agree"] = (ie == interp);
  res["normalized_mixed_volume"] = j_rat(ie);
  emit(c, report_envelope("mixed-volume", sf, res));
  if (ie != interp) {
    std::cerr << "mixed volume algorithms disagree: internal bug trap\n";
    return 1;
  }
  return 0;
}

int cmd_stable_intersect(const Common& c) {
  SystemFile sf = load_system_file(c.input);
  if (sf.vars != 2 || sf.polynomials.size() != 2)
    fail(errc::dimension_mismatch, "stable-intersect expects exactly 2 polynomials in 2 variables");
  HypersurfaceComplex h1 = hypersurface(sf.polynomials[0]);
  HypersurfaceComplex h2 = hypersurface(sf.polynomials[1]);
  bool used_perturbation = false;
  auto pts = stable_intersection_2d(h1, h2, &used_perturbation);

  Int total = 0;
  json jpts = json::array();
  for (const auto& p : pts) {
    json jp;
    jp["location"] = j_qvec(p.location);
    jp["multiplicity"] = j_int(p.multiplicity);
    json normals = json::array();
    for (const auto& nrm : p.contributing_normals) normals.push_back(j_ivec(nrm));
    jp["normals"] = normals;
    json ws = json::array();
    for (const auto& w : p.contributing_weights) ws.push_back(j_int(w));
    jp["weights"] = ws;
    jpts.push_back(jp);
    total += p.multiplicity;
  }

  Rat nmv = mixed_volume_ie({convex_hull(sf.polynomials[0].support()),
                             convex_hull(sf.polynomials[1].support())},
                            c.threads);
  if (Rat(total) != nmv)
    fail(errc::internal, "stable intersection total disagrees with the mixed volume");

  json res;
  res["points"] = jpts;
  res["point_count"] = static_cast<long>(pts.size());
  res["total_multiplicity"] = j_int(total);
  res["mixed_volume_check"] = j_rat(nmv);
  res["used_perturbation"] = used_perturbation;

  if (!c.svg.empty()) write_atomic(c.svg, render_intersection_svg(h1, h2, pts, svg_options(sf)));
  emit(c, report_envelope("stable-intersect", sf, res));
  return 0;
}

int cmd_degree_bound(const Common& c) {
  SystemFile sf = load_system_file(c.input);
  const auto& p = pick_poly(sf, c.poly);
  DegreeReport rep = empirical_degree(p, resolve_samples(c, sf), resolve_seed(c, sf), c.threads);

  json res;
  json sup = json::array();
  for (const auto& e : rep.support) sup.push_back(j_ivec(e));
  res["support"] = sup;
  res["diameter_bound"] = j_int(rep.diameter_bound);
  res["max_transverse_count"] = rep.max_transverse_count;
  res["samples"] = rep.samples;
  res["discarded"] = rep.discarded;
  res["bound_satisfied"] = rep.bound_satisfied;
  emit(c, report_envelope("degree-bound", sf, res));
  if (!rep.bound_satisfied) {
    std::cerr << "theorem violation trap: a sampled line exceeded the diameter bound\n";
    return 6;
  }
  return 0;
}

int cmd_bezout_bound(const Common& c, int codim) {
  SystemFile sf = load_system_file(c.input);
  std::vector<std::vector<IVec>> supports;
  for (const auto& p : sf.polynomials) supports.push_back(p.support());
  BezoutBound b = bezout_bound(supports, codim, sf.vars);

  json res;
  res["codim"] = codim;
  json rows = json::array();
  for (const auto& row : b.rows) {
    json jr;
    json subset = json::array();
    for (int i : row.subset) subset.push_back(i);
    jr["subset"] = subset;
    jr["value"] = j_rat(row.value);
    rows.push_back(jr);
  }
  res["rows"] = rows;
  res["max"] = j_rat(b.max_value);
  json ws = json::array();
  for (int i : b.witness_subset) ws.push_back(i);
  res["witness_subset"] = ws;
  emit(c, report_envelope("bezout-bound", sf, res));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropint: tropical hypersurfaces, stable intersections, mixed volumes"};
  app.require_subcommand(1);

  Common common;
  std::vector<int> indices;
  int codim = 1;

  auto add_common = [&](CLI::App* sub, bool with_svg) {
    sub->add_option("input", common.input, "SystemFile JSON path")->required();
    sub->add_option("--out", common.out, "write the report here instead of stdout");
    sub->add_option("--threads", common.threads, "worker threads for independent tasks");
    if (with_svg) sub->add_option("--svg", common.svg, "write an SVG plot (2-d instances)");
  };

  auto* hs = app.add_subcommand("hypersurface", "dual complex of one polynomial");
  add_common(hs, true);
  hs->add_option("--poly", common.poly, "polynomial index (default 0)");

  auto* mv = app.add_subcommand("mixed-volume", "normalized mixed volume by two algorithms");
  add_common(mv, false);
  mv->add_option("--indices", indices, "exactly n polynomial indices")->required();

  auto* si = app.add_subcommand("stable-intersect", "stable intersection of two plane curves");
  add_common(si, true);

  auto* db = app.add_subcommand("degree-bound", "sampled tropical degree vs diameter bound");
  add_common(db, false);
  db->add_option("--poly", common.poly, "polynomial index (default 0)");
  db->add_option("--samples", common.samples, "number of sampled lines");
  db->add_option("--seed", common.seed, "RNG seed (fallback: file seed, then TROPINT_SEED)");

  auto* bz = app.add_subcommand("bezout-bound", "max mixed-volume bound over r-subsets");
  add_common(bz, false);
  bz->add_option("--codim", codim, "codimension r")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (hs->parsed()) return cmd_hypersurface(common);
    if (mv->parsed()) return cmd_mixed_volume(common, indices);
    if (si->parsed()) return cmd_stable_intersect(common);
    if (db->parsed()) return cmd_degree_bound(common);
    if (bz->parsed()) return cmd_bezout_bound(common, codim);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == errc::non_generic_instance || e.code() == errc::non_generic_perturbation)
      std::cerr << "hint: perturb coefficients\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
