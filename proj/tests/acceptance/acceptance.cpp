// Acceptance run: one line per criterion, nonzero exit if any fails.
//
//   hyperk_acceptance [--seed N] [--only K]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "hyperk/constructions.hpp"
#include "hyperk/earthquake.hpp"
#include "hyperk/errors.hpp"
#include "hyperk/families.hpp"
#include "hyperk/graphs.hpp"
#include "hyperk/predicates.hpp"
#include "hyperk/serialize.hpp"
#include "oracles.hpp"

using namespace hyperk;
using hyperk::testing::Gen;

namespace {

const BoundaryPoint kInf = BoundaryPoint::infinity();

Rational frac(long n, long d) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

Curve circle(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return Curve(GeneralizedCircle(a, b, c, d));
}

bool on(const Curve& c, const UHPPoint& z) { return sgn(c.circle().evaluate(z.x(), z.y())) == 0; }

/// Collects failures; keeps the first few messages.
struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
  std::string summary;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < 3) messages.push_back(what());
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&, std::uint64_t)> body;
};

// ---------------------------------------------------------------- 1

void dyadic_exactness(Outcome& o, std::uint64_t) {
  std::size_t points = 0;
  for (int k = 0; k <= 6; ++k) {
    const long span = 1L << k;
    const auto fam = dyadic_family(k, -span, span);
    o.expect(fam.tangency_points.size() == static_cast<std::size_t>(2 * span), [&] { return "point count"; });
    for (long n = -span; n < span; ++n) {
      const std::size_t j = static_cast<std::size_t>(n + span);
      const Rational x = (frac(n, span) + frac(n + 1, span)) / 2;
      const UHPPoint expected(x, frac(1, 2 * span));
      const auto pattern = intersection_pattern(fam.horocycles[j], fam.horocycles[j + 1]);
      o.expect(fam.tangency_points[j] == expected && pattern.tangent && pattern.interior_points.size() == 1 &&
                   pattern.interior_points[0] == expected,
               [&] { return "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + to_string(fam.tangency_points[j]); });
      ++points;
    }
  }
  o.summary = std::to_string(points) + " tangency points, levels 0..6";
}

// ---------------------------------------------------------------- 2

/// The circle through i centered at (0, k).
Curve tangent_at_i(const Rational& k) { return circle(1, 0, -2 * k, 2 * k - 1); }

std::vector<std::pair<Curve, Curve>> special_pairs() {
  const Curve diagonal = circle(0, 1, -1, 0);
  return {
      {make_horocycle(-1, 1), make_horocycle(1, 1)},
      {tangent_at_i(frac(3, 8)), tangent_at_i(frac(-3, 2))},
      {diagonal, circle(1, -2, frac(-3, 2), 0)},
      {diagonal, circle(1, 0, -1, -1)},
      {diagonal, circle(1, -4, -2, 3)},
      {make_geodesic(0, 1), make_geodesic(1, 2)},
      {make_horocycle(0, frac(1, 2)), make_horocycle(0, 1)},
      {make_horocycle(0, frac(1, 2)), make_horocycle(kInf, 1)},
      {make_geodesic(-1, 1), tangent_at_i(frac(1, 4))},
  };
}

void isometry_invariance(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  const auto special = special_pairs();
  std::size_t tangent = 0, typed = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    Curve a = g.any_curve(), b = g.any_curve();
    if (i % 4 == 0) {
      const auto& s = special[(i / 4) % special.size()];
      const Isometry pre = g.isometry();
      a = apply(pre, s.first);
      b = apply(pre, s.second);
    } else if (i % 4 == 1) {
      a = g.hypercycle();
      b = g.hypercycle();
    }
    const Isometry m = g.isometry();
    const Curve ma = apply(m, a), mb = apply(m, b);
    const auto p = intersection_pattern(a, b), q = intersection_pattern(ma, mb);
    bool same = p.interior_count == q.interior_count && p.tangent == q.tangent &&
                p.shared_endpoints == q.shared_endpoints && p.equal == q.equal;
    if (a.is_hypercycle() && b.is_hypercycle()) {
      same = same && hypercycle_pair_type(a, b) == hypercycle_pair_type(ma, mb);
      ++typed;
    }
    tangent += p.tangent ? 1 : 0;
    o.expect(same, [&] { return format_curve(a) + " / " + format_curve(b) + " under " + to_string(m); });
  }
  o.summary = "10000 cases, " + std::to_string(tangent) + " tangent, " + std::to_string(typed) + " hypercycle pairs";
}

// ---------------------------------------------------------------- 3

void four_geodesics(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  for (std::size_t i = 0; i < 1000; ++i) {
    auto pts = g.distinct(4, 0.2);
    std::sort(pts.begin(), pts.end());
    std::rotate(pts.begin(), pts.begin() + g.int_in(0, 3), pts.end());
    const auto cfg = four_geodesic_config(pts[0], pts[1], pts[2], pts[3]);
    o.expect(cfg.incidence_holds && cfg.crossing_transfer_holds && cfg.double_crossing_holds &&
                 cfg.classes_checked == 10,
             [&] { return to_string(pts[0]) + " " + to_string(pts[1]) + " " + to_string(pts[2]) + " " + to_string(pts[3]); });
  }
  o.summary = "1000 quadruples, 10 arc-pair classes each";
}

// ---------------------------------------------------------------- 4

UHPPoint on_tangent_circle(const Rational& k, const Rational& t) {
  const Rational rad = 1 - k;
  const Rational den = 1 + t * t;
  return UHPPoint(rad * 2 * t / den, k + rad * (1 - t * t) / den, true);
}

std::optional<UHPPoint> point_on_tangent_circle(const Rational& k, const Rational& t) {
  const Rational den = 1 + t * t;
  const Rational y = k + (1 - k) * (1 - t * t) / den;
  if (sgn(y) <= 0) return std::nullopt;
  return on_tangent_circle(k, t);
}

void type_witnesses(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  std::size_t type1 = 0;
  while (type1 < 100) {
    const Rational k1 = g.q(40, 16), k2 = g.q(40, 16);
    if (k1 == k2 || sgn(k1) == 0 || sgn(k2) == 0 || k1 >= frac(1, 2) || k2 >= frac(1, 2)) continue;
    const auto x = point_on_tangent_circle(k1, g.pos(6, 8));
    const auto y = point_on_tangent_circle(k1, -g.pos(6, 8));
    if (!x || !y) continue;
    const Isometry m = g.isometry();
    const Curve h1 = apply(m, tangent_at_i(k1)), h2 = apply(m, tangent_at_i(k2));
    const UHPPoint mx = apply(m, *x), my = apply(m, *y);
    ++type1;
    if (hypercycle_pair_type(h1, h2) != HypercyclePairType::Type1) {
      o.expect(false, [&] { return "generator: not Type1"; });
      continue;
    }
    try {
      const Curve w = hyp1_witness(h1, h2, mx, my);
      const auto num = testing::numeric_meet(w.circle(), h2.circle());
      o.expect(on(w, mx) && on(w, my) && intersection_pattern(w, h2).disjoint() && (num.touching || num.count == 0),
               [&] { return "witness " + format_curve(w) + " for " + format_curve(h1) + " / " + format_curve(h2); });
    } catch (const std::exception& e) {
      const std::string msg = e.what();
      o.expect(false, [&] { return "hyp1_witness threw: " + msg; });
    }
  }
  std::size_t found[2] = {0, 0};
  for (std::size_t attempt = 0; attempt < 100000 && (found[0] < 100 || found[1] < 100); ++attempt) {
    const auto pts = g.distinct(3, 0.0);
    const bool shared = found[0] < 100 && (found[1] >= 100 || g.coin());
    const UHPPoint z1 = g.point(), z2 = g.point();
    const Curve g1 = make_geodesic(pts[0], pts[1]);
    if (on(g1, z1)) continue;
    const Curve h1 = make_hypercycle(pts[0], pts[1], z1);
    Curve h2 = h1;
    if (shared) {
      if (on(make_geodesic(pts[0], pts[2]), z2)) continue;
      h2 = make_hypercycle(pts[0], pts[2], z2);
    } else {
      h2 = g.hypercycle();
    }
    const auto type = hypercycle_pair_type(h1, h2);
    const int slot = type == HypercyclePairType::Type2 ? 0 : type == HypercyclePairType::Type3 ? 1 : -1;
    if (slot < 0 || found[slot] >= 100) continue;
    std::optional<UHPPoint> x, y;
    for (const auto& s : rational_samples(h1, 64)) {
      const int side = sgn(h2.circle().evaluate(s.x(), s.y()));
      if (side > 0 && !x) x = s;
      if (side < 0 && !y) y = s;
    }
    if (!x || !y) continue;
    ++found[slot];
    const auto search = search_witness_family(h1, h2, *x, *y);
    o.expect(!search.witness, [&] {
      return to_string(type) + " " + format_curve(h1) + " / " + format_curve(h2) + " has witness " +
             format_curve(*search.witness);
    });
  }
  o.expect(found[0] == 100 && found[1] == 100, [&] { return std::string("could not generate 100 + 100 pairs"); });
  o.summary = "100 Type1 witnesses; " + std::to_string(found[0]) + " Type2 and " + std::to_string(found[1]) +
              " Type3 pairs without witness";
}

// ---------------------------------------------------------------- 5

void earthquake_certificate(Outcome& o, std::uint64_t) {
  const std::vector<Curve> hs{make_horocycle(-1, 1), make_horocycle(1, 1), make_horocycle(0, frac(1, 4)),
                              make_horocycle(kInf, 2)};
  const EarthquakeMap e(make_geodesic(0, kInf), 2, FaultSide::Left);
  const auto id = tangency_realizability(instance_from_configuration(hs, [](const BoundaryPoint& x) { return x; }));
  o.expect(id.satisfiable && id.radii.size() == 4 && id.radii[0] == QuadraticReal(1) && id.radii[1] == QuadraticReal(1) &&
               id.radii[2] == QuadraticReal(frac(1, 4)) && id.radii[3] == QuadraticReal(2),
           [&] { return "identity: " + realizability_to_json(id).dump(); });
  const auto moved =
      tangency_realizability(instance_from_configuration(hs, [&](const BoundaryPoint& x) { return eq_apply(e, x); }));
  o.expect(!moved.satisfiable && moved.certificate == "1 ≠ 4·(3/2)·(2/3)",
           [&] { return "relabeled: " + realizability_to_json(moved).dump(); });
  o.summary = "identity satisfiable; x -> 2x (x < 0): " + moved.certificate;
}

// ---------------------------------------------------------------- 6

void earthquake_separation(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  std::size_t crossing = 0;
  while (crossing < 1000) {
    Rational shear = g.pos();
    if (shear == 1) continue;
    const EarthquakeMap e(g.geodesic(), shear, g.coin() ? FaultSide::Left : FaultSide::Right);
    const Curve h = g.horocycle();
    const auto meet = intersection_pattern(h, e.fault());
    if (meet.interior_count == 0 || meet.tangent) continue;
    ++crossing;
    const auto r = pointwise_image_is_curve(e, h, 16);
    const bool certified = r.witness.size() == 4 && !testing::cocircular(r.witness[0], r.witness[1], r.witness[2], r.witness[3]);
    o.expect(!r.is_curve && certified, [&] { return format_curve(h) + " across " + format_curve(e.fault()); });
  }
  for (std::size_t i = 0; i < 1000; ++i) {
    const Isometry m = g.isometry();
    const Curve h = g.horocycle();
    const auto r = pointwise_image_is_curve([&](const UHPPoint& z) { return apply(m, z); }, h, 16);
    o.expect(r.is_curve && r.exact, [&] { return format_curve(h) + " under " + to_string(m); });
  }
  o.summary = "1000 earthquake images non-cocircular, 1000 isometry images cocircular";
}

// ---------------------------------------------------------------- 7

void crescent_distance(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  double worst = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const Curve geo = g.geodesic();
    const double d = g.uniform(0.01, 4.0);
    const auto pair = equidistant_pair(geo, d);
    for (const Curve* side : {&pair.first, &pair.second}) {
      const auto pts = testing::sample_curve(*side, 100);
      o.expect(pts.size() == 100, [&] { return "sampler returned " + std::to_string(pts.size()) + " points"; });
      for (const auto& p : pts) {
        const double err = std::abs(distance_to_geodesic(UHPPoint::approximate(p.x, p.y), geo) - d);
        worst = std::max(worst, err);
        o.expect(err < 1e-9, [&] { return format_curve(geo) + " d=" + std::to_string(d) + " err " + std::to_string(err); });
      }
    }
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "100 cases x 2 curves x 100 points, max error %.2e", worst);
  o.summary = buf;
}

// ---------------------------------------------------------------- 8

void family_limits(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  std::size_t pairs = 0;
  while (pairs < 100) {
    const Rational p = g.q(8, 4);
    const Rational q = p + g.pos(8, 4);
    const UHPPoint top((p + q) / 2, frac(g.int_in(1, 15), 16));
    if (on(make_geodesic(p, q), top)) continue;
    const Isometry m = g.isometry();
    const Curve h = apply(m, make_horocycle(kInf, 1));
    const Curve hp = apply(m, make_hypercycle(p, q, top));
    ++pairs;
    try {
      const auto lim = classify_family_limit(disj_family(h, hp));
      o.expect(lim.kind == LimitKind::HorocycleLimit && lim.curve && *lim.curve == h,
               [&] { return format_curve(h) + " / " + format_curve(hp) + " -> " + to_string(lim); });
    } catch (const Error& e) {
      const std::string msg = e.what();
      o.expect(false, [&] { return format_curve(h) + " / " + format_curve(hp) + ": " + msg; });
    }
  }
  const auto rays = classify_family_limit(ray_sweep_family());
  o.expect(rays.kind == LimitKind::FoliatesComponent, [&] { return "rays: " + to_string(rays); });
  const auto fixed_fam = fixed_endpoint_family(-1, 1, 2, frac(1, 2));
  const auto fixed = classify_family_limit(fixed_fam);
  o.expect(fixed.kind == LimitKind::HypercycleOrGeodesicLimit && fixed.curve &&
               approximately_equal(*fixed.curve, *fixed_fam.declared_limit()->curve, 1e-6),
           [&] { return "fixed endpoints: " + to_string(fixed); });
  o.summary = "100 disj pairs -> HorocycleLimit; rays -> " + to_string(rays.kind) + "; fixed endpoints -> " +
              to_string(fixed.kind);
}

// ---------------------------------------------------------------- 9

void graph_direction(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  std::size_t done = 0, violations = 0;
  while (done < 1000) {
    const CurveKind kind = static_cast<CurveKind>(g.int_in(0, 2));
    std::vector<Curve> cs;
    for (long j = g.int_in(2, 10); j > 0; --j) cs.push_back(g.curve_of(kind));
    DisjointnessGraph graph;
    try {
      graph = build_graph(cs);
    } catch (const InvalidInput&) {
      continue;
    }
    ++done;
    const Isometry m = g.isometry();
    // The configuration together with its image: the isometry acts on the
    // union by a partial map, which must carry edges to edges both ways.
    std::vector<Curve> img;
    for (const auto& c : cs) img.push_back(apply(m, c));
    const auto image_graph = build_graph(img);
    std::size_t bad = 0;
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = 0; b < cs.size(); ++b) bad += graph.adjacency[a][b] != image_graph.adjacency[a][b];
    }
    violations += bad;
    o.expect(bad == 0, [&] { return format_graph(graph) + "under " + to_string(m); });
    // A configuration closed under the isometry's conjugate of a reflection
    // has it as a genuine automorphism.
    if (done % 10 == 0) {
      const Isometry r = m * Isometry::reflection() * m.inverse();
      std::vector<Curve> sym;
      for (std::size_t j = 0; j < std::min<std::size_t>(cs.size(), 4); ++j) {
        sym.push_back(cs[j]);
        sym.push_back(apply(r, cs[j]));
      }
      DisjointnessGraph sg;
      try {
        sg = build_graph(sym);
      } catch (const InvalidInput&) {
        continue;
      }
      const auto perm = induced_permutation(sg, r);
      o.expect(perm && is_automorphism(sg.adjacency, *perm), [&] { return "reflection-symmetric set under " + to_string(r); });
    }
  }
  const auto four = build_graph({make_horocycle(0, frac(1, 2)), make_horocycle(1, frac(1, 2)),
                                 make_horocycle(2, frac(1, 2)), make_horocycle(kInf, 2)});
  const auto swap = isometry_realizing(four, {2, 1, 0, 3});
  const bool verified = swap && apply(*swap, four.curves[0]) == four.curves[2] &&
                        apply(*swap, four.curves[1]) == four.curves[1] &&
                        apply(*swap, four.curves[2]) == four.curves[0] && apply(*swap, four.curves[3]) == four.curves[3];
  o.expect(verified && *swap == Isometry::translation(2) * Isometry::reflection(),
           [&] { return "swap: " + (swap ? to_string(*swap) : std::string("none")); });
  const auto a = build_graph({make_geodesic(-1, 1), make_geodesic(-3, -2), make_geodesic(2, 3)});
  const auto b = build_graph({make_geodesic(-2, 1), make_geodesic(-6, -4), make_geodesic(2, 3)});
  const auto none = isometry_between(a, b, {0, 1, 2});
  o.expect(a.adjacency == b.adjacency && !none, [&] { return "earthquake relabeling realized by " + to_string(*none); });
  o.summary = "1000 isometries, " + std::to_string(violations) + " adjacency violations; swap realized by " +
              (swap ? to_string(*swap) : std::string("none")) + "; earthquake relabeling: none";
}

// ---------------------------------------------------------------- 10

bool tangent_by_criterion(const Curve& a, const Curve& b) {
  const Rational d = a.center()->rational() - b.center()->rational();
  return d * d == 4 * *a.size() * *b.size();
}

void sigma_counterexample(Outcome& o, std::uint64_t seed) {
  Gen g(seed);
  const CenterSwap s01 = sigma_center_swap(0, 1);
  const CenterSwap s03 = sigma_center_swap(0, 3);
  for (std::size_t i = 0; i < 1000; ++i) {
    const long pick = g.int_in(0, 3);
    const BoundaryPoint c = pick == 0 ? BoundaryPoint(0) : pick == 1 ? BoundaryPoint(1) : pick == 2 ? BoundaryPoint(3) : g.bpoint();
    const Curve h1 = make_horocycle(c, g.pos()), h2 = make_horocycle(c, g.pos());
    const Nesting before = horocycle_leq(h1, h2);
    o.expect(before == horocycle_leq(s01.apply(h1), s01.apply(h2)) && before == horocycle_leq(s03.apply(h1), s03.apply(h2)),
             [&] { return format_curve(h1) + " / " + format_curve(h2); });
  }
  const std::vector<Curve> w{make_horocycle(0, frac(1, 2)), make_horocycle(2, frac(1, 2)), make_horocycle(1, frac(1, 2))};
  std::vector<Curve> sw;
  for (const auto& h : w) sw.push_back(s03.apply(h));
  const bool before = tangent_by_criterion(w[0], w[2]) && intersection_pattern(w[0], w[2]).tangent;
  const bool after = tangent_by_criterion(sw[0], sw[2]) || intersection_pattern(sw[0], sw[2]).tangent;
  o.expect(before && !after, [] { return std::string("tangency of h(0,1/2), h(1,1/2) survived sigma_{0,3}"); });
  o.expect(!isometry_between(build_graph(w), build_graph(sw), {0, 1, 2}), [] { return std::string("sigma realized"); });
  o.summary = "leq preserved on 1000 same-center pairs; h(0,1/2)/h(1,1/2) tangency lost under sigma_{0,3}";
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    else if (flag == "--only") only = std::atoi(argv[i + 1]);
  }
  const std::vector<Criterion> criteria{
      {1, "dyadic tangency points exact for k <= 6", 1, dyadic_exactness},
      {2, "isometry invariance of patterns and types", 30, isometry_invariance},
      {3, "four-geodesic configuration properties", 10, four_geodesics},
      {4, "Type1 witnesses exist, Type2/Type3 have none", 30, type_witnesses},
      {5, "four-horocycle earthquake certificate", 1, earthquake_certificate},
      {6, "earthquake versus isometry images", 30, earthquake_separation},
      {7, "crescent distance", 10, crescent_distance},
      {8, "family limits", 30, family_limits},
      {9, "isometries induce graph automorphisms", 60, graph_direction},
      {10, "center swap keeps nesting, breaks tangency", 1, sigma_counterexample},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      c.body(o, seed + static_cast<std::uint64_t>(c.number));
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = crash.empty() && o.failures == 0 && secs < c.limit_seconds;
    failed += ok ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << ": " << o.summary << " (" << timing
              << ")\n";
    if (!crash.empty()) std::cout << "    exception: " << crash << '\n';
    if (o.failures) std::cout << "    " << o.failures << " of " << o.checks << " checks failed\n";
    for (const auto& m : o.messages) std::cout << "    " << m << '\n';
  }
  return failed == 0 ? 0 : 1;
}
