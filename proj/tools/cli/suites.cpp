#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "hyperk/constructions.hpp"
#include "hyperk/earthquake.hpp"
#include "hyperk/errors.hpp"
#include "hyperk/families.hpp"
#include "hyperk/graphs.hpp"
#include "hyperk/serialize.hpp"
#include "random_geometry.hpp"

namespace hyperk::cli {
namespace {

class Property {
 public:
  Property(std::string suite, std::string name) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (!ok && r_.pass) {
      r_.pass = false;
      r_.detail = describe();
    }
  }
  void fail(std::string detail) {
    if (r_.pass) r_.detail = std::move(detail);
    r_.pass = false;
  }
  void note(std::string line) { r_.notes.push_back(std::move(line)); }
  PropertyResult take() { return std::move(r_); }

 private:
  PropertyResult r_;
};

using Body = std::function<void(Property&)>;

PropertyResult run_property(const std::string& suite, const std::string& name, const Body& body) {
  Property p(suite, name);
  try {
    body(p);
  } catch (const std::exception& e) {
    p.fail(std::string("error: ") + e.what());
  }
  return p.take();
}

std::uint64_t suite_seed(const SuiteOptions& o, std::string_view suite) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
  return o.seed ^ h;
}

std::size_t count(const SuiteOptions& o, std::size_t small, std::size_t full) {
  return o.scale == Scale::Small ? small : full;
}

bool meets(const Curve& a, const Curve& b) { return intersection_pattern(a, b).interior_count > 0; }

std::string pair_text(const Curve& a, const Curve& b) { return format_curve(a) + " / " + format_curve(b); }

Curve circle_curve(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return Curve(GeneralizedCircle(a, b, c, d));
}

/// The circle through i with center (0, k): tangent to the horizontal at i.
Curve tangent_at_i(const Rational& k) { return circle_curve(1, 0, -2 * k, 2 * k - 1); }

/// Rational point of the circle with center (0, k) through i, from the
/// parameter t of the rational parametrization; nullopt below the axis.
std::optional<UHPPoint> point_on_tangent_family(const Rational& k, const Rational& t) {
  const Rational radius = 1 - k;
  const Rational den = 1 + t * t;
  const Rational x = radius * 2 * t / den;
  const Rational y = k + radius * (1 - t * t) / den;
  if (sgn(y) <= 0) return std::nullopt;
  return UHPPoint(x, y);
}

bool cyclic(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

std::vector<std::pair<double, double>> float_points(const Curve& curve, std::size_t n) {
  const auto& k = curve.circle();
  const double a = to_double(k.a());
  const double b = to_double(k.b());
  const double c = to_double(k.c());
  const double d = to_double(k.d());
  std::vector<std::pair<double, double>> out;
  if (k.is_line()) {
    if (c == 0.0) {
      for (std::size_t j = 0; j < n; ++j) out.emplace_back(-d / b, std::pow(2.0, -3.0 + 6.0 * (j + 0.5) / n));
      return out;
    }
    const double x0 = b == 0.0 ? 0.0 : -d / b;
    const double dir = b == 0.0 ? 1.0 : (-b / c > 0 ? 1.0 : -1.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = b == 0.0 ? -3.0 + 6.0 * (j + 0.5) / n : x0 + dir * (0.1 + 3.0 * (j + 0.5) / n);
      out.emplace_back(x, -(b * x + d) / c);
    }
    return out;
  }
  const double cx = -b / (2 * a);
  const double cy = -c / (2 * a);
  const double radius = std::sqrt(cx * cx + cy * cy - d / a);
  const double lo = std::asin(std::clamp(-cy / radius, -1.0, 1.0));
  const double hi = M_PI - lo;
  for (std::size_t j = 0; j < n; ++j) {
    const double th = lo + (hi - lo) * (0.05 + 0.9 * (j + 0.5) / n);
    out.emplace_back(cx + radius * std::cos(th), cy + radius * std::sin(th));
  }
  return out;
}

// ---------------------------------------------------------------- order

std::vector<PropertyResult> suite_order(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "order"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("order", "nesting agrees with the probe characterization", [&](Property& p) {
    const std::size_t probes = count(o, 20, 100);
    for (std::size_t i = 0; i < count(o, 100, 1000); ++i) {
      const BoundaryPoint c = rg.boundary(0.25);
      const Rational r1 = rg.positive();
      Rational r2 = rg.positive();
      if (r1 == r2) r2 += 1;
      const Curve h1 = make_horocycle(c, r1);
      const Curve h2 = make_horocycle(c, r2);
      const Nesting n = horocycle_leq(h1, h2);
      p.check(n == Nesting::LessOrEqual || n == Nesting::GreaterOrEqual,
              [&] { return "same-center pair not comparable: " + pair_text(h1, h2); });
      const Curve& inner = n == Nesting::LessOrEqual ? h1 : h2;
      const Curve& outer = n == Nesting::LessOrEqual ? h2 : h1;
      for (std::size_t j = 0; j < probes; ++j) {
        const Curve probe = rg.horocycle();
        if (probe == inner || probe == outer || !meets(probe, inner)) continue;
        p.check(meets(probe, outer), [&] {
          return "probe " + format_curve(probe) + " meets " + format_curve(inner) + " but not " + format_curve(outer);
        });
      }
      // A probe separating the two horoballs exists exactly when they differ.
      Curve separator = make_horocycle(0, 1);
      if (c.is_infinity()) {
        separator = make_horocycle(0, (*inner.size() + *outer.size()) / 4);
      } else {
        separator = make_horocycle(BoundaryPoint(Rational(c.rational() + 1)), 1 / (2 * (*inner.size() + *outer.size())));
      }
      p.check(meets(separator, outer) && !meets(separator, inner), [&] {
        return "no separating probe for " + pair_text(inner, outer) + " (tried " + format_curve(separator) + ")";
      });
    }
  }));
  out.push_back(run_property("order", "nesting is invariant under isometries", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
      const BoundaryPoint c = rg.boundary(0.25);
      const Curve h1 = make_horocycle(c, rg.positive());
      const Curve h2 = make_horocycle(c, rg.positive());
      const Isometry g = rg.isometry();
      const Nesting before = horocycle_leq(h1, h2);
      const Nesting after = horocycle_leq(apply(g, h1), apply(g, h2));
      p.check(before == after, [&] {
        return pair_text(h1, h2) + " under " + to_string(g) + ": " + to_string(before) + " became " + to_string(after);
      });
    }
  }));
  out.push_back(run_property("order", "horocycles with different centers are incomparable", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
      const Curve h1 = rg.horocycle();
      const Curve h2 = rg.horocycle();
      if (*h1.center() == *h2.center()) continue;
      p.check(horocycle_leq(h1, h2) == Nesting::Incomparable, [&] { return pair_text(h1, h2); });
    }
  }));
  return out;
}

// ---------------------------------------------------------------- boundary extension

std::vector<PropertyResult> suite_boundary_extension(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "boundary-extension"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("boundary-extension", "isometries act on curves through their boundary points",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 300, 1000); ++i) {
                                 const Curve c = rg.curve();
                                 const Isometry g = rg.isometry();
                                 std::vector<BoundaryPoint> mapped;
                                 for (const auto& e : c.endpoints()) mapped.push_back(apply(g, e));
                                 std::sort(mapped.begin(), mapped.end());
                                 const Curve image = apply(g, c);
                                 p.check(image.endpoints() == mapped && image.kind() == c.kind(), [&] {
                                   return format_curve(c) + " under " + to_string(g);
                                 });
                               }
                             }));
  out.push_back(run_property("boundary-extension", "two_point_normalizer sends x, y to inf, 0 and keeps y > 0",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 300, 1000); ++i) {
                                 const auto pts = rg.distinct_boundary(2);
                                 const Isometry phi = two_point_normalizer(pts[0], pts[1]);
                                 const UHPPoint z = rg.point();
                                 const UHPPoint w = apply(phi, z);
                                 p.check(apply(phi, pts[0]).is_infinity() && apply(phi, pts[1]) == BoundaryPoint(0) &&
                                             sgn(w.y()) > 0 && phi.preserves_orientation(),
                                         [&] { return to_string(pts[0]) + ", " + to_string(pts[1]); });
                               }
                             }));
  out.push_back(run_property("boundary-extension", "normalizer_from_images recovers h(0,1/2) and h(inf,1)",
                             [&](Property& p) {
                               const Curve h0 = make_horocycle(0, Rational(1, 2));
                               const Curve hinf = make_horocycle(BoundaryPoint::infinity(), 1);
                               for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
                                 const Isometry g = rg.isometry();
                                 const Curve a = apply(g, h0);
                                 const Curve b = apply(g, hinf);
                                 const Isometry j = normalizer_from_images(a, b);
                                 p.check(apply(j, a) == h0 && apply(j, b) == hinf,
                                         [&] { return pair_text(a, b); });
                               }
                             }));
  out.push_back(run_property("boundary-extension", "earthquake boundary maps fix the fault and keep cyclic order",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 100, 1000); ++i) {
                                 const Curve fault = rg.geodesic();
                                 Rational shear = rg.positive();
                                 if (shear == 1) shear = 3;
                                 const EarthquakeMap e(fault, shear, rg.chance(0.5) ? FaultSide::Left : FaultSide::Right);
                                 for (const auto& x : fault.endpoints()) {
                                   p.check(eq_apply(e, x) == x, [&] { return "fault endpoint " + to_string(x) + " moved"; });
                                 }
                                 const auto t = rg.distinct_boundary(3);
                                 const bool before = cyclic(t[0], t[1], t[2]);
                                 const bool after = cyclic(eq_apply(e, t[0]), eq_apply(e, t[1]), eq_apply(e, t[2]));
                                 p.check(before == after, [&] {
                                   return "fault " + format_curve(fault) + ": " + to_string(t[0]) + ", " +
                                          to_string(t[1]) + ", " + to_string(t[2]);
                                 });
                               }
                             }));
  return out;
}

// ---------------------------------------------------------------- dyadic

std::vector<PropertyResult> suite_dyadic(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "dyadic"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("dyadic", "tangency points z_n^k equal (x_n + x_(n+1))/2 + i/2^(k+1)", [&](Property& p) {
    for (int k = 0; k <= o.depth; ++k) {
      const long span = 1L << k;
      const DyadicFamily fam = dyadic_family(k, -span, span);
      const Rational scale = Rational(1, span);
      const Rational half_step = Rational(1, 2 * span);
      std::size_t checked = 0;
      for (std::size_t j = 0; j < fam.tangency_points.size(); ++j) {
        const long n = -span + static_cast<long>(j);
        const UHPPoint expected((Rational(n) * scale + Rational(n + 1) * scale) / 2, half_step);
        const auto pattern = intersection_pattern(fam.horocycles[j], fam.horocycles[j + 1]);
        const bool ok = fam.tangency_points[j] == expected && pattern.tangent && pattern.interior_count == 1 &&
                        pattern.interior_points.size() == 1 && pattern.interior_points[0] == expected;
        p.check(ok, [&] {
          return "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": got " + to_string(fam.tangency_points[j]) +
                 ", expected " + to_string(expected);
        });
        ++checked;
      }
      p.note("level " + std::to_string(k) + ": " + std::to_string(checked) + " points z_n^k checked, n in [" +
             std::to_string(-span) + ", " + std::to_string(span - 1) + "], imaginary part " + to_string(half_step));
    }
  }));
  out.push_back(run_property("dyadic", "level-k horocycles are tangent to the line y = 1/2^k", [&](Property& p) {
    for (int k = 0; k <= o.depth; ++k) {
      const long span = 1L << k;
      const Curve line = make_horocycle(BoundaryPoint::infinity(), Rational(1, span));
      for (const auto& h : dyadic_family(k, -span, span).horocycles) {
        p.check(intersection_pattern(h, line).tangent, [&] { return format_curve(h); });
      }
    }
  }));
  out.push_back(run_property("dyadic", "pinching families avoid h(x,1/2) and catch every larger h(x,r)", [&](Property& p) {
    const int max_level = 8;
    for (std::size_t i = 0; i < count(o, 20, 100); ++i) {
      const Rational x = rg.rational(40, 16);
      const Curve hx = make_horocycle(x, Rational(1, 2));
      for (int k = 0; k <= max_level; k += 2) {
        for (const auto& m : pinching_family(x, k, 3)) {
          p.check(!meets(m, hx), [&] { return format_curve(m) + " meets h(" + to_string(x) + ",1/2)"; });
        }
      }
      const Rational r = Rational(1, 2) + rg.fraction(4, 128, 256);
      const auto witness = pinching_witness(x, r, max_level);
      p.check(witness && !disjoint(witness->member, make_horocycle(x, r)), [&] {
        return "no level <= 8 member meets h(" + to_string(x) + "," + to_string(r) + ")";
      });
    }
  }));
  return out;
}

// ---------------------------------------------------------------- pinch

std::vector<PropertyResult> suite_pinch(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "pinch"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("pinch", "pinching horocycles are tangent to both inputs", [&](Property& p) {
    std::size_t done = 0;
    while (done < count(o, 100, 1000)) {
      const Curve h0 = rg.horocycle();
      const Curve h = rg.horocycle();
      if (*h0.center() == *h.center() || !disjoint(h0, h) || intersection_pattern(h0, h).tangent) continue;
      ++done;
      const auto [s1, s2] = pinch_pair(h0, h);
      const auto d0 = HorocycleDescriptor::of(h0);
      const auto d = HorocycleDescriptor::of(h);
      p.check(descriptors_tangent(s1, d0) && descriptors_tangent(s1, d) && descriptors_tangent(s2, d0) &&
                  descriptors_tangent(s2, d) && !(s1.center == s2.center),
              [&] { return pair_text(h0, h) + " -> " + to_string(s1) + ", " + to_string(s2); });
    }
  }));
  out.push_back(run_property("pinch", "h(0,1/2) and h(inf,2) pinch to h(-sqrt2,1), h(sqrt2,1)", [&](Property& p) {
    const auto [s1, s2] = pinch_pair(make_horocycle(0, Rational(1, 2)), make_horocycle(BoundaryPoint::infinity(), 2));
    const QuadraticReal root2 = QuadraticReal::sqrt(2);
    p.check(s1.center == BoundaryPoint(-root2) && s2.center == BoundaryPoint(root2) && s1.size == QuadraticReal(1) &&
                s2.size == QuadraticReal(1),
            [&] { return to_string(s1) + ", " + to_string(s2); });
  }));
  out.push_back(run_property("pinch", "same-center inputs have no solution", [&](Property& p) {
    for (std::size_t i = 0; i < 20; ++i) {
      const BoundaryPoint c = rg.boundary(0.2);
      bool threw = false;
      try {
        pinch_pair(make_horocycle(c, 1), make_horocycle(c, 2));
      } catch (const NoSolution&) {
        threw = true;
      }
      p.check(threw, [&] { return "center " + to_string(c); });
    }
  }));
  return out;
}

// ---------------------------------------------------------------- types

std::vector<std::pair<Curve, Curve>> designed_pairs() {
  const Curve diagonal = circle_curve(0, 1, -1, 0);
  return {
      {make_horocycle(-1, 1), make_horocycle(1, 1)},
      {circle_curve(1, 0, Rational(-3, 4), Rational(-1, 4)), circle_curve(1, 0, 3, -4)},
      {diagonal, circle_curve(1, -2, Rational(-3, 2), 0)},
      {diagonal, circle_curve(1, 0, -1, -1)},
      {diagonal, circle_curve(1, -4, -2, 3)},
      {make_geodesic(-1, 1), make_geodesic(0, BoundaryPoint::infinity())},
      {make_horocycle(0, Rational(1, 2)), make_horocycle(0, 1)},
      {make_horocycle(0, Rational(1, 2)), make_horocycle(BoundaryPoint::infinity(), 1)},
      {make_geodesic(0, 1), make_geodesic(1, 2)},
  };
}

bool same_pattern(const IntersectionPattern& a, const IntersectionPattern& b) {
  return a.interior_count == b.interior_count && a.tangent == b.tangent && a.shared_endpoints == b.shared_endpoints &&
         a.equal == b.equal;
}

std::string pattern_text(const IntersectionPattern& p) { return pattern_to_json(p).dump(); }

/// Type 1 pair tangent at i, transported by a random isometry, with points
/// on the first curve on both sides of the tangency point.
struct TypeOneCase {
  Curve h1, h2;
  UHPPoint x, y;
};

TypeOneCase random_type_one(RandomGeometry& rg) {
  auto draw_k = [&] {
    while (true) {
      const Rational k = rg.fraction(-40, 7, 16);
      if (sgn(k) != 0) return k;
    }
  };
  while (true) {
    const Rational k1 = draw_k();
    const Rational k2 = draw_k();
    if (k1 == k2) continue;
    const auto x = point_on_tangent_family(k1, rg.fraction(1, 30, 16));
    const auto y = point_on_tangent_family(k1, -rg.fraction(1, 30, 16));
    if (!x || !y) continue;
    const Isometry g = rg.isometry();
    return {apply(g, tangent_at_i(k1)), apply(g, tangent_at_i(k2)), apply(g, *x), apply(g, *y)};
  }
}

std::vector<PropertyResult> suite_types(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "types"));
  std::vector<PropertyResult> out;
  const auto designed = designed_pairs();
  out.push_back(run_property("types", "intersection patterns and hypercycle types are isometry invariant",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 1000, 10000); ++i) {
                                 Curve a = rg.curve();
                                 Curve b = rg.curve();
                                 if (i % 3 == 0) {
                                   const auto& pick = designed[i / 3 % designed.size()];
                                   const Isometry pre = rg.isometry();
                                   a = apply(pre, pick.first);
                                   b = apply(pre, pick.second);
                                 }
                                 const Isometry g = rg.isometry();
                                 const Curve ga = apply(g, a);
                                 const Curve gb = apply(g, b);
                                 const auto before = intersection_pattern(a, b);
                                 const auto after = intersection_pattern(ga, gb);
                                 bool ok = same_pattern(before, after);
                                 if (ok && a.is_hypercycle() && b.is_hypercycle()) {
                                   ok = hypercycle_pair_type(a, b) == hypercycle_pair_type(ga, gb);
                                 }
                                 p.check(ok, [&] {
                                   return pair_text(a, b) + " under " + to_string(g) + ": " + pattern_text(before) +
                                          " vs " + pattern_text(after);
                                 });
                               }
                             }));
  out.push_back(run_property("types", "intersection patterns are symmetric", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 500, 2000); ++i) {
      const Curve a = rg.curve();
      const Curve b = rg.curve();
      p.check(same_pattern(intersection_pattern(a, b), intersection_pattern(b, a)), [&] { return pair_text(a, b); });
    }
  }));
  out.push_back(run_property("types", "linked pairs are exactly the crossing geodesics", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 500, 1000); ++i) {
      const auto pts = rg.distinct_boundary(4);
      const bool l = linked({pts[0], pts[1]}, {pts[2], pts[3]});
      const auto pattern = intersection_pattern(make_geodesic(pts[0], pts[1]), make_geodesic(pts[2], pts[3]));
      p.check(l == (pattern.interior_count == 1), [&] {
        return to_string(pts[0]) + " " + to_string(pts[1]) + " | " + to_string(pts[2]) + " " + to_string(pts[3]);
      });
    }
  }));
  out.push_back(run_property("types", "Type 1 pairs have a disjoint witness through x and y", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 30, 100); ++i) {
      const auto c = random_type_one(rg);
      p.check(hypercycle_pair_type(c.h1, c.h2) == HypercyclePairType::Type1,
              [&] { return "generator produced a non-Type-1 pair " + pair_text(c.h1, c.h2); });
      const Curve w = hyp1_witness(c.h1, c.h2, c.x, c.y);
      p.check(sgn(w.circle().evaluate(c.x.x(), c.x.y())) == 0 && sgn(w.circle().evaluate(c.y.x(), c.y.y())) == 0 &&
                  disjoint(w, c.h2),
              [&] { return pair_text(c.h1, c.h2) + " witness " + format_curve(w); });
    }
  }));
  out.push_back(run_property("types", "Type 2 and Type 3 pairs admit no witness in the search family", [&](Property& p) {
    std::size_t found[2] = {0, 0};
    const std::size_t want = count(o, 10, 100);
    for (std::size_t attempt = 0; attempt < 200 * want && (found[0] < want || found[1] < want); ++attempt) {
      const auto pts = rg.distinct_boundary(3, 0.0);
      const bool shared = found[0] < want && (found[1] >= want || rg.chance(0.5));
      Curve h1 = make_horocycle(0, 1);
      Curve h2 = h1;
      try {
        h1 = make_hypercycle(pts[0], pts[1], rg.point());
        h2 = shared ? make_hypercycle(pts[0], pts[2], rg.point()) : rg.hypercycle();
      } catch (const DegenerateResult&) {
        continue;
      }
      if (!h1.is_hypercycle() || !h2.is_hypercycle()) continue;
      const auto type = hypercycle_pair_type(h1, h2);
      const std::size_t slot = type == HypercyclePairType::Type2 ? 0 : type == HypercyclePairType::Type3 ? 1 : 2;
      if (slot == 2 || found[slot] >= want) continue;
      std::optional<UHPPoint> x;
      std::optional<UHPPoint> y;
      for (const auto& z : rational_samples(h1, 64)) {
        const int s = sgn(h2.circle().evaluate(z.x(), z.y()));
        if (s > 0 && !x) x = z;
        if (s < 0 && !y) y = z;
      }
      if (!x || !y) continue;
      ++found[slot];
      const auto search = search_witness_family(h1, h2, *x, *y);
      p.check(!search.witness, [&] {
        return to_string(type) + " pair " + pair_text(h1, h2) + " has witness " + format_curve(*search.witness);
      });
    }
    p.note("Type 2 pairs: " + std::to_string(found[0]) + ", Type 3 pairs: " + std::to_string(found[1]));
    p.check(found[0] == want && found[1] == want, [&] { return std::string("generator fell short of the quota"); });
  }));
  return out;
}

// ---------------------------------------------------------------- betweenness

std::vector<PropertyResult> suite_betweenness(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "betweenness"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("betweenness", "middle curve follows curvature order and survives isometries",
                             [&](Property& p) {
                               const Curve line = make_horocycle(BoundaryPoint::infinity(), 1);
                               for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
                                 // Three members of the pencil tangent to y = 1 at i; the
                                 // line plays k = -inf.
                                 std::vector<std::optional<Rational>> ks;
                                 while (ks.size() < 3) {
                                   std::optional<Rational> k;
                                   if (!rg.chance(0.2)) k = rg.fraction(-48, 8, 16);
                                   if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
                                 }
                                 std::vector<Curve> curves;
                                 for (const auto& k : ks) curves.push_back(k ? tangent_at_i(*k) : line);
                                 std::vector<std::size_t> order{0, 1, 2};
                                 std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                                   if (!ks[a]) return true;
                                   if (!ks[b]) return false;
                                   return *ks[a] < *ks[b];
                                 });
                                 const std::size_t expected = order[1];
                                 const Isometry g = rg.isometry();
                                 const std::size_t got = between_tangent(curves[0], curves[1], curves[2]);
                                 const std::size_t moved =
                                     between_tangent(apply(g, curves[0]), apply(g, curves[1]), apply(g, curves[2]));
                                 const std::size_t permuted = between_tangent(curves[2], curves[0], curves[1]);
                                 p.check(got == expected && moved == expected && permuted == (expected + 1) % 3, [&] {
                                   return format_curve(curves[0]) + " / " + format_curve(curves[1]) + " / " +
                                          format_curve(curves[2]) + ": expected " + std::to_string(expected) +
                                          ", got " + std::to_string(got) + ", after isometry " + std::to_string(moved);
                                 });
                               }
                             }));
  out.push_back(run_property("betweenness", "repeated or non-tangent triples are rejected", [&](Property& p) {
    const Curve h = make_horocycle(0, Rational(1, 2));
    auto rejects = [&](const Curve& a, const Curve& b, const Curve& c) {
      try {
        between_tangent(a, b, c);
      } catch (const InvalidInput&) {
        return true;
      }
      return false;
    };
    p.check(rejects(h, h, make_horocycle(BoundaryPoint::infinity(), 1)), [] { return std::string("repeated curve"); });
    p.check(rejects(h, make_horocycle(5, 1), make_horocycle(BoundaryPoint::infinity(), 1)),
            [] { return std::string("non-tangent triple"); });
  }));
  return out;
}

// ---------------------------------------------------------------- crescent

std::vector<PropertyResult> suite_crescent(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "crescent"));
  std::vector<PropertyResult> out;
  const std::size_t samples = count(o, 20, 100);
  out.push_back(run_property("crescent", "equidistant curves stay at distance d from the geodesic", [&](Property& p) {
    double worst = 0.0;
    for (std::size_t i = 0; i < count(o, 30, 100); ++i) {
      const Curve g = rg.geodesic();
      const double d = rg.real(0.05, 3.0);
      const auto pair = equidistant_pair(g, d);
      for (const Curve* side : {&pair.first, &pair.second}) {
        for (const auto& [x, y] : float_points(*side, samples)) {
          const double err = std::abs(distance_to_geodesic(UHPPoint::approximate(x, y), g) - d);
          worst = std::max(worst, err);
          p.check(err < 1e-9, [&, x = x, y = y] {
            return format_curve(g) + " d=" + std::to_string(d) + " at (" + std::to_string(x) + ", " +
                   std::to_string(y) + "): error " + std::to_string(err);
          });
        }
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "largest deviation %.3e", worst);
    p.note(buf);
  }));
  out.push_back(run_property("crescent", "exact crescents share the geodesic's endpoints and sit on both sides",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 50, 200); ++i) {
                                 const Curve g = rg.geodesic();
                                 const Rational s = rg.positive();
                                 const auto pair = equidistant_pair_sinh(g, s);
                                 const double d = std::asinh(to_double(s));
                                 bool ok = pair.exact && same_endpoints(pair.first, g) && same_endpoints(pair.second, g);
                                 for (const Curve* side : {&pair.first, &pair.second}) {
                                   for (const auto& [x, y] : float_points(*side, 8)) {
                                     ok = ok && std::abs(distance_to_geodesic(UHPPoint::approximate(x, y), g) - d) < 1e-9;
                                   }
                                 }
                                 const auto a = rational_samples(pair.first, 1);
                                 const auto b = rational_samples(pair.second, 1);
                                 if (!a.empty() && !b.empty()) {
                                   ok = ok && sgn(g.circle().evaluate(a[0].x(), a[0].y())) > 0 &&
                                        sgn(g.circle().evaluate(b[0].x(), b[0].y())) < 0;
                                 }
                                 p.check(ok, [&] { return format_curve(g) + " sinh d=" + to_string(s); });
                               }
                             }));
  return out;
}

// ---------------------------------------------------------------- four geodesics

std::vector<PropertyResult> suite_four_geodesics(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "four-geodesics"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("four-geodesics", "incidences and both transfer properties hold over all arc classes",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
                                 auto pts = rg.distinct_boundary(4, 0.2);
                                 std::sort(pts.begin(), pts.end());
                                 std::rotate(pts.begin(), pts.begin() + rg.integer(0, 3), pts.end());
                                 const auto cfg = four_geodesic_config(pts[0], pts[1], pts[2], pts[3]);
                                 p.check(cfg.holds() && cfg.classes_checked == 10, [&] {
                                   return to_string(pts[0]) + ", " + to_string(pts[1]) + ", " + to_string(pts[2]) +
                                          ", " + to_string(pts[3]);
                                 });
                               }
                             }));
  out.push_back(run_property("four-geodesics", "points out of cyclic order are rejected", [&](Property& p) {
    for (std::size_t i = 0; i < 50; ++i) {
      auto pts = rg.distinct_boundary(4, 0.0);
      std::sort(pts.begin(), pts.end());
      std::swap(pts[1], pts[2]);
      bool threw = false;
      try {
        four_geodesic_config(pts[0], pts[1], pts[2], pts[3]);
      } catch (const InvalidInput&) {
        threw = true;
      }
      p.check(threw, [&] { return to_string(pts[0]) + ", " + to_string(pts[1]); });
    }
  }));
  out.push_back(run_property("four-geodesics", "(-1, 0, 1, inf): h1 and h2 cross at i", [&](Property& p) {
    const auto cfg = four_geodesic_config(-1, 0, 1, BoundaryPoint::infinity());
    const auto pattern = intersection_pattern(cfg.h1, cfg.h2);
    p.check(cfg.holds() && pattern.interior_count == 1 && pattern.interior_points[0] == UHPPoint(0, 1),
            [&] { return pattern_text(pattern); });
  }));
  return out;
}

// ---------------------------------------------------------------- links

EarthquakeMap random_earthquake(RandomGeometry& rg) {
  Rational shear = rg.positive();
  if (shear == 1) shear = 2;
  return EarthquakeMap(rg.geodesic(), shear, rg.chance(0.5) ? FaultSide::Left : FaultSide::Right);
}

std::vector<PropertyResult> suite_links(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "links"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("links", "earthquake boundary maps preserve linked pairs", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 2000, 10000); ++i) {
      const EarthquakeMap e = random_earthquake(rg);
      const auto pts = rg.distinct_boundary(4);
      std::vector<BoundaryPoint> img;
      for (const auto& x : pts) img.push_back(eq_apply(e, x));
      const auto r = link_preserving_check(pts, img);
      p.check(r.preserved, [&] { return "fault " + format_curve(e.fault()) + " shear " + to_string(e.shear()); });
    }
  }));
  out.push_back(run_property("links", "x -> x^3 preserves links; swapping 0 and 1 does not", [&](Property& p) {
    std::vector<BoundaryPoint> pts;
    std::vector<BoundaryPoint> cubes;
    for (int x = -2; x <= 2; ++x) {
      pts.emplace_back(x);
      cubes.emplace_back(x * x * x);
    }
    p.check(link_preserving_check(pts, cubes).preserved, [] { return std::string("x^3 reported a violation"); });
    const auto swap = link_preserving_check({0, 1, 2, 3}, {1, 0, 2, 3});
    p.check(!swap.preserved && swap.witness, [] { return std::string("swap reported as link preserving"); });
    if (swap.witness) {
      const auto& w = *swap.witness;
      p.note("swap witness: {" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "} vs {" + std::to_string(w[2]) +
             "," + std::to_string(w[3]) + "}");
    }
  }));
  out.push_back(run_property("links", "earthquake restrictions to 10-point samples pass link_preserving_check",
                             [&](Property& p) {
                               for (std::size_t i = 0; i < count(o, 100, 1000); ++i) {
                                 const EarthquakeMap e = random_earthquake(rg);
                                 const auto pts = rg.distinct_boundary(10);
                                 std::vector<BoundaryPoint> img;
                                 for (const auto& x : pts) img.push_back(eq_apply(e, x));
                                 p.check(link_preserving_check(pts, img).preserved,
                                         [&] { return "fault " + format_curve(e.fault()); });
                               }
                             }));
  return out;
}

// ---------------------------------------------------------------- families

/// A horocycle and a hypercycle below it, moved by a random isometry.
std::pair<Curve, Curve> random_disjoint_pair(RandomGeometry& rg) {
  while (true) {
    const Rational p = rg.rational(8, 4);
    const Rational q = p + rg.positive(8, 4);
    Rational top(rg.integer(1, 15), 16);
    top.canonicalize();
    if (2 * top == q - p) continue;
    const Curve h = make_horocycle(BoundaryPoint::infinity(), 1);
    const Curve hprime = Curve(make_hypercycle(p, q, UHPPoint((p + q) / 2, top)));
    if (!hprime.is_hypercycle()) continue;
    const Isometry g = rg.isometry();
    return {apply(g, h), apply(g, hprime)};
  }
}

std::vector<PropertyResult> suite_families(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "families"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("families", "disj families converge to their horocycle", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 10, 100); ++i) {
      const auto [h, hprime] = random_disjoint_pair(rg);
      const auto fam = disj_family(h, hprime, o.grid);
      const auto limit = classify_family_limit(fam);
      p.check(limit.kind == LimitKind::HorocycleLimit && limit.curve && *limit.curve == h,
              [&] { return pair_text(h, hprime) + " -> " + to_string(limit); });
    }
  }));
  out.push_back(run_property("families", "the ray sweep foliates a component", [&](Property& p) {
    const auto limit = classify_family_limit(ray_sweep_family(0.01, o.grid));
    p.check(limit.kind == LimitKind::FoliatesComponent, [&] { return to_string(limit); });
  }));
  out.push_back(run_property("families", "fixed-endpoint hypercycles converge to a hypercycle", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 3, 20); ++i) {
      const auto pts = rg.distinct_boundary(2, 0.0);
      const Rational s_limit = rg.positive(8, 4);
      const auto fam = fixed_endpoint_family(pts[0], pts[1], s_limit + rg.positive(8, 4), s_limit, o.grid);
      const auto limit = classify_family_limit(fam);
      p.check(limit.kind == LimitKind::HypercycleOrGeodesicLimit && limit.curve &&
                  approximately_equal(*limit.curve, *fam.declared_limit()->curve, 1e-6),
              [&] { return to_string(pts[0]) + ", " + to_string(pts[1]) + " -> " + to_string(limit); });
    }
  }));
  out.push_back(run_property("families", "disj family grids are disjoint, ordered and gap-free", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 2, 10); ++i) {
      const auto [h, hprime] = random_disjoint_pair(rg);
      const auto fam = disj_family(h, hprime, 33);
      const auto v = validate_family(fam, default_probes(fam, o.seed + i, 40));
      p.check(v.ok(), [&] { return pair_text(h, hprime) + ": " + v.failure; });
    }
  }));
  return out;
}

// ---------------------------------------------------------------- earthquake

RealizabilityInstance four_horocycle_instance(bool relabel) {
  const std::vector<Curve> hs{make_horocycle(-1, 1), make_horocycle(1, 1), make_horocycle(0, Rational(1, 4)),
                              make_horocycle(BoundaryPoint::infinity(), 2)};
  const EarthquakeMap e(make_geodesic(0, BoundaryPoint::infinity()), 2, FaultSide::Left);
  return instance_from_configuration(hs, [&](const BoundaryPoint& x) { return relabel ? eq_apply(e, x) : x; });
}

std::vector<PropertyResult> suite_earthquake(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "earthquake"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("earthquake", "f(z) = 2z on Re z < 0 moves four horocycles as expected", [&](Property& p) {
    const EarthquakeMap e(make_geodesic(0, BoundaryPoint::infinity()), 2, FaultSide::Left);
    p.check(eq_apply(e, UHPPoint(-1, 1)) == UHPPoint(-2, 2), [] { return std::string("-1+i"); });
    p.check(eq_apply(e, UHPPoint(1, 1)) == UHPPoint(1, 1), [] { return std::string("1+i"); });
    p.check(eq_apply(e, BoundaryPoint(-3)) == BoundaryPoint(-6), [] { return std::string("-3"); });
    p.check(eq_apply(e, BoundaryPoint::infinity()).is_infinity(), [] { return std::string("inf"); });
    p.check(eq_geodesic_image(e, make_geodesic(-1, 1)) == make_geodesic(-2, 1), [] { return std::string("(-1,1)"); });
  }));
  out.push_back(run_property("earthquake", "four-horocycle sizes: identity satisfiable, x -> 2x (x < 0) unsatisfiable",
                             [&](Property& p) {
                               const auto sat = tangency_realizability(four_horocycle_instance(false));
                               std::vector<std::string> radii;
                               for (const auto& r : sat.radii) radii.push_back(to_string(r));
                               p.check(sat.satisfiable && radii == std::vector<std::string>{"1", "1", "1/4", "2"},
                                       [&] { return "identity relabeling: " + realizability_to_json(sat).dump(); });
                               const auto unsat = tangency_realizability(four_horocycle_instance(true));
                               p.check(!unsat.satisfiable && unsat.certificate == "1 ≠ 4·(3/2)·(2/3)",
                                       [&] { return "relabeled: " + realizability_to_json(unsat).dump(); });
                               p.note("UNSAT certificate: " + unsat.certificate);
                               for (const auto& line : unsat.derivation) p.note("  " + line);
                             }));
  out.push_back(run_property("earthquake", "horocycles crossing the fault have non-cocircular images", [&](Property& p) {
    std::size_t done = 0;
    while (done < count(o, 100, 1000)) {
      const EarthquakeMap e = random_earthquake(rg);
      const Curve h = rg.horocycle();
      const auto meet = intersection_pattern(h, e.fault());
      if (meet.interior_count == 0 || meet.tangent) continue;
      ++done;
      const auto r = pointwise_image_is_curve(e, h, 16);
      p.check(!r.is_curve && r.witness.size() == 4,
              [&] { return format_curve(h) + " across fault " + format_curve(e.fault()); });
    }
  }));
  out.push_back(run_property("earthquake", "isometry images are exactly cocircular", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 100, 1000); ++i) {
      const Isometry g = rg.isometry();
      const Curve c = rg.curve();
      const auto r = pointwise_image_is_curve([&](const UHPPoint& z) { return apply(g, z); }, c, 16);
      p.check(r.is_curve && r.exact, [&] { return format_curve(c) + " under " + to_string(g); });
    }
  }));
  out.push_back(run_property("earthquake", "configurations moved by isometries stay realizable", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 50, 300); ++i) {
      std::vector<Curve> hs;
      for (std::size_t j = 0; j < static_cast<std::size_t>(rg.integer(3, 6)); ++j) {
        const Curve h = make_horocycle(rg.boundary(0.1), rg.positive());
        if (std::none_of(hs.begin(), hs.end(), [&](const Curve& c) { return *c.center() == *h.center(); })) {
          hs.push_back(h);
        }
      }
      const Isometry g = rg.isometry();
      const auto inst = instance_from_configuration(hs, [&](const BoundaryPoint& x) { return apply(g, x); });
      const auto r = tangency_realizability(inst);
      p.check(r.satisfiable, [&] {
        std::string text;
        for (const auto& h : hs) text += format_curve(h) + "; ";
        return text + "under " + to_string(g) + ": " + r.certificate;
      });
    }
  }));
  out.push_back(run_property("earthquake", "geodesic images keep the crossing pattern", [&](Property& p) {
    for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
      const EarthquakeMap e = random_earthquake(rg);
      const Curve a = rg.geodesic();
      const Curve b = rg.geodesic();
      if (a == b) continue;
      const bool before = disjoint(a, b);
      const bool after = disjoint(eq_geodesic_image(e, a), eq_geodesic_image(e, b));
      p.check(before == after, [&] { return pair_text(a, b) + " fault " + format_curve(e.fault()); });
    }
  }));
  return out;
}

// ---------------------------------------------------------------- graphs

Adjacency path_graph(std::size_t n) {
  Adjacency a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = true;
  return a;
}

bool is_group(const std::vector<Permutation>& perms) {
  auto contains = [&](const Permutation& q) { return std::find(perms.begin(), perms.end(), q) != perms.end(); };
  for (const auto& a : perms) {
    Permutation inv(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = i;
    if (!contains(inv)) return false;
    for (const auto& b : perms) {
      Permutation ab(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) ab[i] = a[b[i]];
      if (!contains(ab)) return false;
    }
  }
  return true;
}

std::vector<PropertyResult> suite_graphs(const SuiteOptions& o) {
  RandomGeometry rg(suite_seed(o, "graphs"));
  std::vector<PropertyResult> out;
  out.push_back(run_property("graphs", "isometries carry disjointness graphs onto themselves", [&](Property& p) {
    std::size_t done = 0;
    while (done < count(o, 200, 1000)) {
      const CurveKind kind = static_cast<CurveKind>(rg.integer(0, 2));
      std::vector<Curve> curves;
      const auto n = static_cast<std::size_t>(rg.integer(2, 10));
      for (std::size_t i = 0; i < n; ++i) curves.push_back(rg.curve_of(kind));
      DisjointnessGraph g;
      try {
        g = build_graph(curves);
      } catch (const InvalidInput&) {
        continue;
      }
      ++done;
      const Isometry iso = rg.isometry();
      std::vector<Curve> images;
      for (const auto& c : curves) images.push_back(apply(iso, c));
      p.check(build_graph(images).adjacency == g.adjacency, [&] { return format_graph(g) + "under " + to_string(iso); });
    }
  }));
  out.push_back(run_property("graphs", "the 4-horocycle swap is realized by z -> -conj(z) + 2", [&](Property& p) {
    const auto g = build_graph({make_horocycle(0, Rational(1, 2)), make_horocycle(1, Rational(1, 2)),
                                make_horocycle(2, Rational(1, 2)), make_horocycle(BoundaryPoint::infinity(), 2)});
    const auto autos = automorphisms(g);
    p.check(autos == std::vector<Permutation>{{0, 1, 2, 3}, {2, 1, 0, 3}},
            [&] { return std::to_string(autos.size()) + " automorphisms"; });
    const auto iso = isometry_realizing(g, {2, 1, 0, 3});
    const Isometry expected = Isometry::translation(2) * Isometry::reflection();
    p.check(iso && *iso == expected, [&] { return iso ? to_string(*iso) : std::string("none"); });
    const auto id = isometry_realizing(g, {0, 1, 2, 3});
    p.check(id && *id == Isometry::identity(), [] { return std::string("identity not realized by the identity"); });
  }));
  out.push_back(run_property("graphs", "the earthquake-relabeled geodesic configuration has no isometry",
                             [&](Property& p) {
                               const auto a = build_graph({make_geodesic(-1, 1), make_geodesic(-3, -2), make_geodesic(2, 3)});
                               const auto b = build_graph({make_geodesic(-2, 1), make_geodesic(-6, -4), make_geodesic(2, 3)});
                               p.check(a.adjacency == b.adjacency, [] { return std::string("graphs differ"); });
                               const auto iso = isometry_between(a, b, {0, 1, 2});
                               p.check(!iso, [&] { return "found " + to_string(*iso); });
                             }));
  out.push_back(run_property("graphs", "automorphism sets are groups of the expected size", [&](Property& p) {
    p.check(automorphisms(path_graph(3)).size() == 2, [] { return std::string("path on 3 vertices"); });
    Adjacency k4(4, std::vector<bool>(4, true));
    for (std::size_t i = 0; i < 4; ++i) k4[i][i] = false;
    p.check(automorphisms(k4).size() == 24, [] { return std::string("K4"); });
    for (std::size_t i = 0; i < count(o, 30, 200); ++i) {
      std::vector<Curve> curves;
      const auto n = static_cast<std::size_t>(rg.integer(2, 7));
      for (std::size_t j = 0; j < n; ++j) curves.push_back(rg.horocycle());
      try {
        const auto g = build_graph(curves);
        const auto autos = automorphisms(g);
        bool each = true;
        for (const auto& a : autos) each = each && is_automorphism(g.adjacency, a);
        p.check(each && is_group(autos), [&] { return format_graph(g); });
      } catch (const InvalidInput&) {
      }
    }
  }));
  out.push_back(run_property("graphs", "sigma keeps nesting but breaks tangency and is not an isometry", [&](Property& p) {
    const CenterSwap sigma = sigma_center_swap(0, 3);
    for (std::size_t i = 0; i < count(o, 200, 1000); ++i) {
      const BoundaryPoint c = rg.chance(0.3) ? BoundaryPoint(rg.integer(0, 1) * 3) : rg.boundary(0.1);
      const Curve h1 = make_horocycle(c, rg.positive());
      const Curve h2 = make_horocycle(c, rg.positive());
      p.check(horocycle_leq(h1, h2) == horocycle_leq(sigma.apply(h1), sigma.apply(h2)),
              [&] { return pair_text(h1, h2); });
    }
    const std::vector<Curve> witness{make_horocycle(0, Rational(1, 2)), make_horocycle(2, Rational(1, 2)),
                                     make_horocycle(1, Rational(1, 2))};
    std::vector<Curve> swapped;
    for (const auto& h : witness) swapped.push_back(sigma.apply(h));
    const bool before = intersection_pattern(witness[0], witness[2]).tangent;
    const bool after = intersection_pattern(swapped[0], swapped[2]).tangent;
    p.check(before && !after, [] { return std::string("sigma_{0,3} kept the tangency of h(0,1/2) and h(1,1/2)"); });
    const auto iso = isometry_between(build_graph(witness), build_graph(swapped), {0, 1, 2});
    p.check(!iso, [&] { return "isometry " + to_string(*iso) + " realizes sigma"; });
  }));
  out.push_back(run_property("graphs", "earthquake boundary maps induce automorphisms of geodesic graphs",
                             [&](Property& p) {
                               std::size_t done = 0;
                               while (done < count(o, 100, 500)) {
                                 const EarthquakeMap e = random_earthquake(rg);
                                 std::vector<Curve> curves;
                                 for (long j = rg.integer(2, 8); j > 0; --j) curves.push_back(rg.geodesic());
                                 DisjointnessGraph g;
                                 try {
                                   g = build_graph(curves);
                                 } catch (const InvalidInput&) {
                                   continue;
                                 }
                                 ++done;
                                 std::vector<Curve> images;
                                 for (const auto& c : curves) images.push_back(eq_geodesic_image(e, c));
                                 p.check(build_graph(images).adjacency == g.adjacency,
                                         [&] { return format_graph(g) + "fault " + format_curve(e.fault()); });
                               }
                             }));
  return out;
}

using SuiteFn = std::vector<PropertyResult> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"order", suite_order},
      {"boundary-extension", suite_boundary_extension},
      {"dyadic", suite_dyadic},
      {"pinch", suite_pinch},
      {"types", suite_types},
      {"betweenness", suite_betweenness},
      {"crescent", suite_crescent},
      {"four-geodesics", suite_four_geodesics},
      {"links", suite_links},
      {"families", suite_families},
      {"earthquake", suite_earthquake},
      {"graphs", suite_graphs},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  if (name == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<PropertyResult> run_suite(std::string_view name, const SuiteOptions& options) {
  std::vector<PropertyResult> out;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    auto part = fn(options);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace hyperk::cli
