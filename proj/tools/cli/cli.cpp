#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hyperk/constructions.hpp"
#include "hyperk/earthquake.hpp"
#include "hyperk/errors.hpp"
#include "hyperk/families.hpp"
#include "hyperk/graphs.hpp"
#include "hyperk/serialize.hpp"
#include "render.hpp"
#include "suites.hpp"

namespace hyperk::cli {
namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  bool inexact = false;
};

/// Text lines and the equivalent structured record of one command.
struct Report {
  std::vector<std::string> lines;
  Json record = Json::object();
};

class ExitWith : public std::runtime_error {
 public:
  ExitWith(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::string canonical_tuple(const GeneralizedCircle& k) {
  return "(" + to_string(k.a()) + "," + to_string(k.b()) + "," + to_string(k.c()) + "," + to_string(k.d()) + ")";
}

std::string list_text(const std::vector<BoundaryPoint>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : " ") + to_string(p);
  return out;
}

UHPPoint parse_point(const std::string& text, bool inexact) {
  const auto v = parse_number_list(text, inexact);
  if (v.size() != 2) throw InvalidInput("expected a point x,y, got '" + text + "'");
  return UHPPoint(v[0], v[1], !inexact);
}

std::vector<Curve> load_curves(const std::string& file, const std::vector<std::string>& specs, bool inexact) {
  std::vector<Curve> out;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot read '" + file + "'");
    out = read_curves(in);
  }
  for (const auto& s : specs) out.push_back(parse_curve_spec(s, inexact));
  return out;
}

Json curve_record(const Curve& c) {
  Json j = curve_to_json(c);
  Json ends = Json::array();
  for (const auto& e : c.endpoints()) ends.push_back(to_string(e));
  j["endpoints"] = ends;
  if (c.is_horocycle()) {
    j["center"] = to_string(*c.center());
    j["size"] = to_string(*c.size());
  }
  j["exact"] = c.exact();
  return j;
}

std::string describe_curve(const Curve& c) {
  switch (c.kind()) {
    case CurveKind::Horocycle:
      return "Horocycle center " + to_string(*c.center()) + (c.center()->is_infinity() ? " height " : " radius ") +
             to_string(*c.size());
    case CurveKind::Geodesic: return "Geodesic endpoints " + list_text(c.endpoints());
    case CurveKind::Hypercycle: return "Hypercycle endpoints " + list_text(c.endpoints());
  }
  return "";
}

// ---------------------------------------------------------------- classify

Report cmd_classify(const Globals& g, const std::vector<std::string>& specs) {
  if (specs.size() != 1) throw InvalidInput("classify takes exactly one curve");
  const std::string& spec = specs[0];
  const auto colon = spec.find(':');
  if (colon != std::string::npos && spec.substr(0, colon) == "coeffs") {
    const auto v = parse_number_list(spec.substr(colon + 1), g.inexact);
    if (v.size() != 4) throw InvalidInput("--coeffs expects a,b,c,d");
    const GeneralizedCircle k(v[0], v[1], v[2], v[3]);
    const LocusClass cls = classify_curve(k);
    if (cls == LocusClass::HyperbolicCircle || cls == LocusClass::NotInUpperHalfPlane) {
      throw DegenerateResult(to_string(cls) + " " + canonical_tuple(k) +
                             " is not a geodesic, horocycle or hypercycle");
    }
  }
  const Curve c = parse_curve_spec(spec, g.inexact);
  Report r;
  r.lines.push_back(describe_curve(c));
  r.lines.push_back("canonical " + canonical_tuple(c.circle()));
  r.lines.push_back(format_curve(c));
  r.record = curve_record(c);
  return r;
}

// ---------------------------------------------------------------- intersect

Report cmd_intersect(const Globals& g, const std::vector<std::string>& specs) {
  Report r;
  std::vector<Curve> curves;
  for (const auto& s : specs) curves.push_back(parse_curve_spec(s, g.inexact));
  if (curves.size() == 3) {
    const std::size_t mid = between_tangent(curves[0], curves[1], curves[2]);
    r.lines.push_back("middle " + std::to_string(mid) + ": " + format_curve(curves[mid]));
    r.record = Json{{"middle", mid}, {"curve", curve_to_json(curves[mid])}};
    return r;
  }
  if (curves.size() != 2) throw InvalidInput("intersect takes two curves (or three for betweenness)");
  const auto pattern = intersection_pattern(curves[0], curves[1]);
  std::optional<HypercyclePairType> type;
  if (curves[0].is_hypercycle() && curves[1].is_hypercycle()) type = hypercycle_pair_type(curves[0], curves[1]);
  r.record = pattern_to_json(pattern, type);
  Json pts = Json::array();
  for (const auto& z : pattern.interior_points) pts.push_back(point_to_json(z));
  r.record["points"] = pts;
  r.record["disjoint"] = pattern.disjoint();
  std::ostringstream line;
  line << "interior_count " << pattern.interior_count << " tangent " << (pattern.tangent ? "true" : "false")
       << " shared_endpoints " << pattern.shared_endpoints;
  if (pattern.equal) line << " equal";
  r.lines.push_back(line.str());
  if (type) r.lines.push_back("type " + to_string(*type));
  for (const auto& z : pattern.interior_points) {
    r.lines.push_back("point " + (z.exact() ? to_string(z) : "~(" + std::to_string(z.x_double()) + ", " +
                                                                 std::to_string(z.y_double()) + ")"));
  }
  if (curves[0].is_horocycle() && curves[1].is_horocycle()) {
    r.lines.push_back("nesting " + to_string(horocycle_leq(curves[0], curves[1])));
    r.record["nesting"] = to_string(horocycle_leq(curves[0], curves[1]));
  }
  return r;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  int level = 0;
  std::string range = "0,2";
  std::string h0, h, h1, h2, x, y, points, geodesic, sinh, distance, p, q, r;
  std::vector<std::string> curves;
  int depth = 8;
};

Json descriptor_json(const HorocycleDescriptor& d) {
  return Json{{"center", to_string(d.center)}, {"size", to_string(d.size)}};
}

Report cmd_construct(const Globals& g, const std::string& what, const ConstructArgs& a) {
  Report r;
  if (what == "dyadic") {
    const auto v = parse_number_list(a.range);
    if (v.size() != 2 || v[0].get_den() != 1 || v[1].get_den() != 1) throw InvalidInput("--range expects n_min,n_max");
    const auto fam = dyadic_family(a.level, v[0].get_num().get_si(), v[1].get_num().get_si());
    Json hs = Json::array();
    Json ts = Json::array();
    for (const auto& h : fam.horocycles) {
      r.lines.push_back(format_curve(h));
      hs.push_back(curve_to_json(h));
    }
    for (const auto& z : fam.tangency_points) {
      r.lines.push_back("tangent at " + to_string(z));
      ts.push_back(point_to_json(z));
    }
    r.record = Json{{"level", a.level}, {"horocycles", hs}, {"tangency_points", ts}};
  } else if (what == "pinch") {
    const auto [s1, s2] = pinch_pair(parse_curve_spec(a.h0, g.inexact), parse_curve_spec(a.h, g.inexact));
    r.lines = {to_string(s1), to_string(s2)};
    r.record = Json{{"pinching", {descriptor_json(s1), descriptor_json(s2)}}};
  } else if (what == "witness") {
    const Curve w = hyp1_witness(parse_curve_spec(a.h1, g.inexact), parse_curve_spec(a.h2, g.inexact),
                                 parse_point(a.x, g.inexact), parse_point(a.y, g.inexact));
    r.lines = {describe_curve(w), format_curve(w)};
    r.record = curve_record(w);
  } else if (what == "four-geodesics") {
    std::vector<BoundaryPoint> pts;
    std::istringstream in(a.points);
    for (std::string part; std::getline(in, part, ',');) pts.push_back(parse_boundary_point(part));
    if (pts.size() != 4) throw InvalidInput("--points expects x1,x2,y1,y2");
    const auto cfg = four_geodesic_config(pts[0], pts[1], pts[2], pts[3]);
    r.lines = {"g1 " + format_curve(cfg.g1), "g2 " + format_curve(cfg.g2), "h1 " + format_curve(cfg.h1),
               "h2 " + format_curve(cfg.h2),
               std::string("incidences ") + (cfg.incidence_holds ? "hold" : "fail"),
               std::string("crossing transfer ") + (cfg.crossing_transfer_holds ? "holds" : "fails"),
               std::string("double crossing ") + (cfg.double_crossing_holds ? "holds" : "fails"),
               "arc classes checked " + std::to_string(cfg.classes_checked)};
    r.record = Json{{"g1", curve_to_json(cfg.g1)},
                    {"g2", curve_to_json(cfg.g2)},
                    {"h1", curve_to_json(cfg.h1)},
                    {"h2", curve_to_json(cfg.h2)},
                    {"incidence_holds", cfg.incidence_holds},
                    {"crossing_transfer_holds", cfg.crossing_transfer_holds},
                    {"double_crossing_holds", cfg.double_crossing_holds},
                    {"classes_checked", cfg.classes_checked}};
  } else if (what == "normalizer") {
    const Isometry j = normalizer_from_images(parse_curve_spec(a.h0, g.inexact), parse_curve_spec(a.h, g.inexact));
    r.lines = {to_string(j)};
    r.record = isometry_to_json(j);
  } else if (what == "crescent") {
    const Curve geo = parse_curve_spec("geodesic:" + a.geodesic, g.inexact);
    EquidistantPair pair = [&] {
      if (!a.sinh.empty()) return equidistant_pair_sinh(geo, parse_number(a.sinh, g.inexact));
      if (!g.inexact) throw InvalidInput("--distance takes a real number; pass --inexact or use --sinh");
      return equidistant_pair(geo, std::stod(a.distance));
    }();
    r.lines = {format_curve(pair.first), format_curve(pair.second)};
    if (!pair.exact) r.lines.push_back("(approximate)");
    r.record = Json{{"first", curve_record(pair.first)}, {"second", curve_record(pair.second)}, {"exact", pair.exact}};
  } else if (what == "sigma") {
    const CenterSwap s = sigma_center_swap(parse_boundary_point(a.p), parse_boundary_point(a.q));
    Json out = Json::array();
    if (s.is_identity()) r.lines.push_back("p = q: identity");
    for (const auto& spec : a.curves) {
      const Curve c = parse_curve_spec(spec, g.inexact);
      const Curve img = s.apply(c);
      r.lines.push_back(format_curve(c) + " -> " + format_curve(img));
      out.push_back(curve_to_json(img));
    }
    r.record = Json{{"identity", s.is_identity()}, {"images", out}};
  } else if (what == "pinching") {
    const auto w = pinching_witness(parse_number(a.x, false), parse_number(a.r, false), a.depth);
    if (w) {
      r.lines = {"level " + std::to_string(w->level) + ": " + format_curve(w->member)};
      r.record = Json{{"level", w->level}, {"member", curve_to_json(w->member)}};
    } else {
      r.lines = {"no member up to level " + std::to_string(a.depth) + " meets the horocycle"};
      r.record = Json{{"level", nullptr}};
    }
  } else {
    throw InvalidInput("unknown construction '" + what + "'");
  }
  return r;
}

// ---------------------------------------------------------------- graph

Report cmd_graph(const Globals& g, const std::vector<Curve>& curves, bool mixed, bool autos, std::size_t cap,
                 bool realize) {
  Report r;
  const auto graph = build_graph(curves, mixed);
  std::istringstream text(format_graph(graph));
  for (std::string line; std::getline(text, line);) r.lines.push_back(line);
  r.record = graph_to_json(graph);
  if (autos || realize) {
    const auto perms = automorphisms(graph, cap);
    Json list = Json::array();
    r.lines.push_back("automorphisms " + std::to_string(perms.size()));
    for (const auto& p : perms) {
      std::string line;
      for (auto v : p) line += (line.empty() ? "" : " ") + std::to_string(v);
      Json entry{{"permutation", p}};
      if (realize) {
        const auto iso = isometry_realizing(graph, p);
        line += iso ? " <- " + to_string(*iso) : " <- no isometry";
        entry["isometry"] = iso ? isometry_to_json(*iso) : Json(nullptr);
      }
      r.lines.push_back(line);
      list.push_back(entry);
    }
    r.record["automorphisms"] = list;
  }
  (void)g;
  return r;
}

// ---------------------------------------------------------------- earthquake

struct QuakeArgs {
  std::string fault = "0,inf";
  std::string shear = "2";
  std::string side = "left";
  std::vector<std::string> items;
  std::string file;
  std::size_t samples = 16;
};

Report cmd_earthquake(const Globals& g, const std::string& action, const QuakeArgs& a) {
  std::vector<BoundaryPoint> ends;
  std::istringstream in(a.fault);
  for (std::string part; std::getline(in, part, ',');) ends.push_back(parse_boundary_point(part));
  if (ends.size() != 2) throw InvalidInput("--fault expects p,q");
  const EarthquakeMap e(make_geodesic(ends[0], ends[1]), parse_number(a.shear, false), parse_fault_side(a.side));
  Report r;
  r.record["fault"] = curve_to_json(e.fault());
  r.record["shear"] = to_string(e.shear());
  r.record["side"] = to_string(e.moved_side());
  if (action == "apply") {
    Json out = Json::array();
    for (const auto& item : a.items) {
      if (item.find(',') != std::string::npos) {
        const UHPPoint z = parse_point(item, g.inexact);
        const UHPPoint w = eq_apply(e, z);
        r.lines.push_back(to_string(z) + " -> " + to_string(w));
        out.push_back({{"from", point_to_json(z)}, {"to", point_to_json(w)}});
      } else {
        const BoundaryPoint x = parse_boundary_point(item);
        const BoundaryPoint y = eq_apply(e, x);
        r.lines.push_back(to_string(x) + " -> " + to_string(y));
        out.push_back({{"from", to_string(x)}, {"to", to_string(y)}});
      }
    }
    r.record["images"] = out;
  } else if (action == "image") {
    Json out = Json::array();
    for (const auto& c : load_curves(a.file, a.items, g.inexact)) {
      Json entry{{"curve", curve_to_json(c)}};
      if (c.is_geodesic()) {
        const Curve img = eq_geodesic_image(e, c);
        r.lines.push_back(format_curve(c) + " -> " + format_curve(img));
        entry["geodesic_image"] = curve_to_json(img);
      }
      const auto pw = pointwise_image_is_curve(e, c, a.samples);
      std::string line = format_curve(c) + ": pointwise image " + (pw.is_curve ? "is" : "is not") + " a curve (" +
                         std::to_string(pw.samples) + " samples" + (pw.exact ? "" : ", floating point") + ")";
      r.lines.push_back(line);
      Json witness = Json::array();
      for (const auto& z : pw.witness) {
        witness.push_back(point_to_json(z));
        r.lines.push_back("  witness " + to_string(z));
      }
      entry["pointwise_is_curve"] = pw.is_curve;
      entry["witness"] = witness;
      out.push_back(entry);
    }
    r.record["images"] = out;
  } else if (action == "certify") {
    std::vector<Curve> hs = load_curves(a.file, a.items, g.inexact);
    if (hs.empty()) {
      hs = {make_horocycle(-1, 1), make_horocycle(1, 1), make_horocycle(0, Rational(1, 4)),
            make_horocycle(BoundaryPoint::infinity(), 2)};
    }
    const auto identity = tangency_realizability(instance_from_configuration(hs, [](const BoundaryPoint& x) { return x; }));
    const auto moved =
        tangency_realizability(instance_from_configuration(hs, [&](const BoundaryPoint& x) { return eq_apply(e, x); }));
    auto emit = [&](const std::string& label, const RealizabilityResult& res) {
      if (res.satisfiable) {
        std::string radii;
        for (const auto& v : res.radii) radii += (radii.empty() ? "" : ", ") + to_string(v);
        r.lines.push_back(label + ": satisfiable, sizes " + radii);
      } else {
        r.lines.push_back(label + ": unsatisfiable, " + res.certificate);
      }
      for (const auto& line : res.derivation) r.lines.push_back("  " + line);
    };
    emit("identity relabeling", identity);
    emit("earthquake relabeling", moved);
    r.record["identity"] = realizability_to_json(identity);
    r.record["relabeled"] = realizability_to_json(moved);
  } else {
    throw InvalidInput("earthquake action must be apply, image or certify");
  }
  return r;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  std::string h, hprime, p = "-1", q = "1", start = "3", limit = "1/2";
  double angle = 0.01;
  std::size_t grid = 65;
  std::size_t probes = 0;
};

Report cmd_family(const Globals& g, const std::string& kind, const FamilyArgs& a) {
  const ContinuousFamily fam = [&] {
    if (kind == "disj") return disj_family(parse_curve_spec(a.h, g.inexact), parse_curve_spec(a.hprime, g.inexact), a.grid);
    if (kind == "rays") return ray_sweep_family(a.angle, a.grid);
    if (kind == "fixed") {
      return fixed_endpoint_family(parse_boundary_point(a.p), parse_boundary_point(a.q), parse_number(a.start, false),
                                   parse_number(a.limit, false), a.grid);
    }
    throw InvalidInput("family must be disj, rays or fixed");
  }();
  const auto probes = a.probes ? default_probes(fam, g.seed, a.probes) : std::vector<Curve>{};
  const FamilyLimit limit = classify_family_limit(fam, probes);
  Report r;
  r.lines.push_back("limit " + to_string(limit));
  r.record["limit"] = limit_to_json(limit);
  if (fam.declared_limit()) {
    r.lines.push_back("declared " + to_string(*fam.declared_limit()));
    r.record["declared"] = limit_to_json(*fam.declared_limit());
  }
  if (fam.reparametrized()) r.lines.push_back("reparametrized: normalized endpoint was <= 1");
  r.record["reparametrized"] = fam.reparametrized();
  r.record["grid"] = fam.grid_size();
  if (a.probes) {
    const auto v = validate_family(fam, probes);
    r.lines.push_back(std::string("grid checks ") + (v.ok() ? "pass" : "fail: " + v.failure));
    r.record["validation"] = Json{{"pairwise_disjoint", v.pairwise_disjoint},
                                  {"betweenness", v.betweenness},
                                  {"no_gap", v.no_gap},
                                  {"failure", v.failure}};
  }
  return r;
}

// ---------------------------------------------------------------- verify

Report cmd_verify(const Globals& g, const std::string& suite, const std::string& scale, int depth, std::size_t grid,
                  bool& all_pass) {
  if (!is_suite(suite)) throw ExitWith(kUsage, "unknown suite '" + suite + "'");
  SuiteOptions o;
  o.seed = g.seed;
  o.depth = depth;
  o.grid = grid;
  if (scale == "small") {
    o.scale = Scale::Small;
  } else if (scale == "full") {
    o.scale = Scale::Full;
  } else {
    throw InvalidInput("--scale must be small or full");
  }
  const auto results = run_suite(suite, o);
  Report r;
  Json props = Json::array();
  all_pass = true;
  std::size_t passed = 0;
  for (const auto& p : results) {
    all_pass = all_pass && p.pass;
    passed += p.pass ? 1 : 0;
    r.lines.push_back(std::string(p.pass ? "PASS " : "FAIL ") + p.suite + ": " + p.name + " (" +
                      std::to_string(p.cases) + " checks)");
    if (!p.pass) r.lines.push_back("  counterexample: " + p.detail);
    for (const auto& n : p.notes) r.lines.push_back("  " + n);
    props.push_back(Json{{"suite", p.suite},
                         {"property", p.name},
                         {"pass", p.pass},
                         {"checks", p.cases},
                         {"counterexample", p.pass ? Json(nullptr) : Json(p.detail)},
                         {"notes", p.notes}});
  }
  r.lines.push_back(std::to_string(passed) + "/" + std::to_string(results.size()) + " properties pass (seed " +
                    std::to_string(g.seed) + ", " + scale + " scale)");
  r.record = Json{{"suite", suite}, {"seed", g.seed}, {"scale", scale}, {"pass", all_pass}, {"properties", props}};
  return r;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  std::string scene = "empty";
  std::string output = "-";
  int level = 0;
  std::string range = "-2,2";
  std::vector<std::string> curves;
  std::string file;
};

Report cmd_render(const Globals& g, const RenderArgs& a, std::ostream& out) {
  std::vector<SvgScene> panels;
  if (a.scene == "empty") {
    panels.emplace_back();
  } else if (a.scene == "dyadic") {
    const auto v = parse_number_list(a.range);
    if (v.size() != 2 || v[0].get_den() != 1 || v[1].get_den() != 1) throw InvalidInput("--range expects n_min,n_max");
    panels.push_back(dyadic_scene(a.level, v[0].get_num().get_si(), v[1].get_num().get_si()));
  } else if (a.scene == "earthquake") {
    panels = earthquake_scenes();
  } else if (a.scene == "curves") {
    panels.push_back(curves_scene(load_curves(a.file, a.curves, g.inexact)));
  } else {
    throw InvalidInput("unknown scene '" + a.scene + "' (empty, dyadic, earthquake, curves)");
  }
  const std::string svg = render_svg(panels);
  Report r;
  if (a.output == "-") {
    out << svg;
    return r;
  }
  std::ofstream file(a.output, std::ios::binary);
  if (!file || !(file << svg) || !file.flush()) throw ExitWith(kUnwritable, "cannot write '" + a.output + "'");
  r.lines.push_back("wrote " + a.output);
  r.record = Json{{"output", a.output}, {"panels", panels.size()}, {"bytes", svg.size()}};
  return r;
}

void emit(const Globals& g, const Report& r, std::ostream& out) {
  if (g.format == "records") {
    Json rec = r.record;
    if (g.inexact) rec["inexact"] = true;
    out << rec.dump(2) << '\n';
    return;
  }
  if (g.inexact) out << "note: --inexact input; exact-predicate guarantees do not apply\n";
  for (const auto& line : r.lines) out << line << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Exact geometry of geodesics, horocycles and hypercycles in the upper half-plane", "hyperk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--seed", g.seed, "Random seed (HYPERK_SEED overrides)");
  app.add_flag("--inexact", g.inexact, "Accept decimal inputs; disables exactness guarantees");

  std::optional<Report> report;
  int status = kOk;

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a curve and print its canonical form");
  std::string coeffs, geodesic, horocycle, hypercycle, curve_spec;
  classify->add_option("--coeffs", coeffs, "a,b,c,d");
  classify->add_option("--geodesic", geodesic, "p,q");
  classify->add_option("--horocycle", horocycle, "center,size");
  classify->add_option("--hypercycle", hypercycle, "p,q,x,y");
  classify->add_option("--curve", curve_spec, "curve text form or kind:args");
  classify->callback([&] {
    std::vector<std::string> specs;
    if (!coeffs.empty()) specs.push_back("coeffs:" + coeffs);
    if (!geodesic.empty()) specs.push_back("geodesic:" + geodesic);
    if (!horocycle.empty()) specs.push_back("horocycle:" + horocycle);
    if (!hypercycle.empty()) specs.push_back("hypercycle:" + hypercycle);
    if (!curve_spec.empty()) specs.push_back(curve_spec);
    report = cmd_classify(g, specs);
  });

  // intersect
  auto* intersect = app.add_subcommand("intersect", "Intersection pattern of two curves, or the middle of three");
  std::vector<std::string> intersect_specs;
  intersect->add_option("curves", intersect_specs, "curve specs")->required();
  intersect->callback([&] { report = cmd_intersect(g, intersect_specs); });

  // construct
  auto* construct = app.add_subcommand("construct", "Constructions from the proofs");
  std::string what;
  ConstructArgs ca;
  construct->add_option("what", what,
                        "dyadic | pinch | witness | four-geodesics | normalizer | crescent | sigma | pinching")
      ->required();
  construct->add_option("--level", ca.level);
  construct->add_option("--range", ca.range, "n_min,n_max");
  construct->add_option("--h0", ca.h0);
  construct->add_option("--hinf,--horocycle", ca.h);
  construct->add_option("--h1", ca.h1);
  construct->add_option("--h2", ca.h2);
  construct->add_option("--x", ca.x);
  construct->add_option("--y", ca.y);
  construct->add_option("--r", ca.r);
  construct->add_option("--points", ca.points, "x1,x2,y1,y2");
  construct->add_option("--geodesic", ca.geodesic, "p,q");
  construct->add_option("--sinh", ca.sinh, "sinh of the distance");
  construct->add_option("--distance", ca.distance, "distance (with --inexact)");
  construct->add_option("--p", ca.p);
  construct->add_option("--q", ca.q);
  construct->add_option("--curve", ca.curves);
  construct->add_option("--depth", ca.depth);
  construct->callback([&] { report = cmd_construct(g, what, ca); });

  // graph
  auto* graph = app.add_subcommand("graph", "Disjointness graph of a finite configuration");
  std::string graph_file;
  std::vector<std::string> graph_curves;
  bool mixed = false, autos = false, realize = false;
  std::size_t cap = 100000;
  graph->add_option("--file", graph_file, "curves, one per line");
  graph->add_option("--curve", graph_curves);
  graph->add_flag("--mixed", mixed, "allow curves of different kinds");
  graph->add_flag("--automorphisms", autos);
  graph->add_flag("--realize", realize, "search an isometry for each automorphism");
  graph->add_option("--cap", cap);
  graph->callback([&] {
    report = cmd_graph(g, load_curves(graph_file, graph_curves, g.inexact), mixed, autos, cap, realize);
  });

  // earthquake
  auto* quake = app.add_subcommand("earthquake", "Simple earthquake maps");
  std::string action;
  QuakeArgs qa;
  quake->add_option("--fault", qa.fault, "p,q");
  quake->add_option("--shear", qa.shear);
  quake->add_option("--side", qa.side)->check(CLI::IsMember({"left", "right"}));
  quake->add_option("--file", qa.file);
  quake->add_option("--samples", qa.samples);
  quake->add_option("action", action, "apply | image | certify")->required();
  quake->add_option("items", qa.items, "points (x,y or boundary values) or curves");
  quake->callback([&] { report = cmd_earthquake(g, action, qa); });

  // family
  auto* family = app.add_subcommand("family", "Classify the end of a continuous family");
  std::string family_kind;
  FamilyArgs fa;
  family->add_option("kind", family_kind, "disj | rays | fixed")->required();
  family->add_option("--first", fa.h);
  family->add_option("--second", fa.hprime);
  family->add_option("--p", fa.p);
  family->add_option("--q", fa.q);
  family->add_option("--start", fa.start, "sinh-distance at t = 0");
  family->add_option("--limit", fa.limit, "sinh-distance at t = 1");
  family->add_option("--angle", fa.angle);
  family->add_option("--grid", fa.grid);
  family->add_option("--probes", fa.probes, "seeded probes for the grid checks");
  family->callback([&] { report = cmd_family(g, family_kind, fa); });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  std::string scale = "small";
  int depth = 6;
  std::size_t grid = 65;
  verify->add_option("suite", suite, "suite name or all")->required();
  verify->add_option("--scale", scale, "small | full");
  verify->add_option("--depth", depth, "deepest dyadic level");
  verify->add_option("--grid", grid, "family grid size");
  verify->callback([&] {
    bool pass = true;
    report = cmd_verify(g, suite, scale, depth, grid, pass);
    status = pass ? kOk : kVerifyFailed;
  });

  // render
  auto* render = app.add_subcommand("render", "Write an SVG figure");
  RenderArgs ra;
  render->add_option("scene", ra.scene, "empty | dyadic | earthquake | curves");
  render->add_option("-o,--output", ra.output, "output path, - for stdout");
  render->add_option("--level", ra.level);
  render->add_option("--range", ra.range);
  render->add_option("--curve", ra.curves);
  render->add_option("--file", ra.file);
  render->callback([&] { report = cmd_render(g, ra, out); });

  // Seed override happens before any callback runs.
  app.parse_complete_callback([&] {
    if (const char* env = std::getenv("HYPERK_SEED")) {
      try {
        g.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw ExitWith(kUsage, std::string("HYPERK_SEED is not an unsigned integer: ") + env);
      }
    }
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ExitWith& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const DegenerateCircle& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateResult& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Indeterminate& e) {
    err << "indeterminate: " << e.what() << " (candidates: " << e.first_candidate() << " | " << e.second_candidate()
        << ")\n";
    return kLimit;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << " (" << e.partial_count() << " found)\n";
    return kLimit;
  } catch (const SizeGuard& e) {
    err << "size guard: " << e.what() << '\n';
    return kLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (report) emit(g, *report, out);
  return status;
}

}  // namespace hyperk::cli
