#include <gtest/gtest.h>

#include "generators.hpp"
#include "hyperk/earthquake.hpp"
#include "hyperk/errors.hpp"
#include "oracles.hpp"

namespace hyperk {
namespace {

using testing::Gen;

const BoundaryPoint kInf = BoundaryPoint::infinity();

Rational r(long n, long d) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

EarthquakeMap doubling() { return EarthquakeMap(make_geodesic(0, kInf), 2, FaultSide::Left); }

TEST(Earthquake, PointExamples) {
  const auto e = doubling();
  EXPECT_EQ(eq_apply(e, UHPPoint(-1, 1)), UHPPoint(-2, 2));
  EXPECT_EQ(eq_apply(e, UHPPoint(1, 1)), UHPPoint(1, 1));
  EXPECT_EQ(eq_apply(e, UHPPoint(0, 3)), UHPPoint(0, 3));
  EXPECT_EQ(eq_apply(e, BoundaryPoint(-3)), BoundaryPoint(-6));
  EXPECT_EQ(eq_apply(e, BoundaryPoint(5)), BoundaryPoint(5));
  EXPECT_EQ(eq_apply(e, BoundaryPoint(0)), BoundaryPoint(0));
  EXPECT_TRUE(eq_apply(e, kInf).is_infinity());
  EXPECT_TRUE(e.moves(UHPPoint(-1, 1)));
  EXPECT_FALSE(e.moves(UHPPoint(0, 1)));
}

TEST(Earthquake, GeodesicExamples) {
  const auto e = doubling();
  EXPECT_EQ(eq_geodesic_image(e, make_geodesic(-1, 1)), make_geodesic(-2, 1));
  EXPECT_EQ(eq_geodesic_image(e, make_geodesic(1, 3)), make_geodesic(1, 3));
  EXPECT_EQ(eq_geodesic_image(e, make_geodesic(0, kInf)), make_geodesic(0, kInf));
}

TEST(Earthquake, RejectsBadMaps) {
  EXPECT_THROW(EarthquakeMap(make_geodesic(0, kInf), 1, FaultSide::Left), InvalidInput);
  EXPECT_THROW(EarthquakeMap(make_geodesic(0, kInf), -2, FaultSide::Left), InvalidInput);
  EXPECT_THROW(EarthquakeMap(make_horocycle(0, 1), 2, FaultSide::Left), InvalidInput);
}

TEST(Earthquake, SemicircularFaultSides) {
  // Left of a semicircular fault is its outside.
  const EarthquakeMap e(make_geodesic(-1, 1), 3, FaultSide::Left);
  EXPECT_TRUE(e.moves(UHPPoint(0, 2)));
  EXPECT_FALSE(e.moves(UHPPoint(0, r(1, 2))));
  EXPECT_EQ(eq_apply(e, UHPPoint(0, r(1, 2))), UHPPoint(0, r(1, 2)));
  EXPECT_EQ(eq_apply(e, BoundaryPoint(1)), BoundaryPoint(1));
  EXPECT_EQ(eq_apply(e, BoundaryPoint(-1)), BoundaryPoint(-1));
  // The moved side is shifted along the fault by a hyperbolic isometry that
  // fixes its endpoints.
  const Isometry& s = e.shear_isometry();
  EXPECT_EQ(apply(s, BoundaryPoint(1)), BoundaryPoint(1));
  EXPECT_EQ(apply(s, BoundaryPoint(-1)), BoundaryPoint(-1));
  EXPECT_EQ(eq_apply(e, UHPPoint(0, 2)), apply(s, UHPPoint(0, 2)));
}

TEST(Pointwise, Examples) {
  const auto e = doubling();
  const auto a = pointwise_image_is_curve(e, make_horocycle(-1, 1), 16);
  EXPECT_FALSE(a.is_curve);
  ASSERT_EQ(a.witness.size(), 4u);
  EXPECT_FALSE(testing::cocircular(a.witness[0], a.witness[1], a.witness[2], a.witness[3]));
  EXPECT_TRUE(pointwise_image_is_curve(e, make_horocycle(3, 1), 16).is_curve);
  EXPECT_FALSE(pointwise_image_is_curve(e, make_geodesic(-1, 1), 16).is_curve);
  EXPECT_THROW(pointwise_image_is_curve(e, make_horocycle(3, 1), 3), InvalidInput);
}

TEST(Pointwise, IsometryImagesAreCocircular) {
  Gen g(401);
  for (int i = 0; i < 200; ++i) {
    const Isometry m = g.isometry();
    const Curve c = g.any_curve();
    const auto res = pointwise_image_is_curve([&](const UHPPoint& z) { return apply(m, z); }, c, 12);
    EXPECT_TRUE(res.is_curve);
  }
}

TEST(Pointwise, RationalSamplesLieOnTheCurve) {
  Gen g(402);
  for (int i = 0; i < 200; ++i) {
    const Curve c = g.any_curve();
    const auto pts = rational_samples(c, 10);
    EXPECT_GE(pts.size(), 4u);
    for (const auto& z : pts) {
      EXPECT_TRUE(z.exact());
      EXPECT_EQ(sgn(c.circle().evaluate(z.x(), z.y())), 0);
    }
  }
}

RealizabilityInstance four_horocycles(bool relabel) {
  const std::vector<Curve> hs{make_horocycle(-1, 1), make_horocycle(1, 1), make_horocycle(0, r(1, 4)),
                              make_horocycle(kInf, 2)};
  const auto e = doubling();
  return instance_from_configuration(hs, [&](const BoundaryPoint& x) { return relabel ? eq_apply(e, x) : x; });
}

TEST(Realizability, FourHorocycles) {
  const auto inst = four_horocycles(false);
  EXPECT_EQ(inst.pattern[2][3], Relation::Disjoint);
  EXPECT_EQ(inst.pattern[0][1], Relation::Tangent);
  EXPECT_EQ(inst.pattern[0][2], Relation::Tangent);
  const auto sat = tangency_realizability(inst);
  ASSERT_TRUE(sat.satisfiable);
  ASSERT_EQ(sat.radii.size(), 4u);
  EXPECT_EQ(sat.radii[0], QuadraticReal(1));
  EXPECT_EQ(sat.radii[1], QuadraticReal(1));
  EXPECT_EQ(sat.radii[2], QuadraticReal(r(1, 4)));
  EXPECT_EQ(sat.radii[3], QuadraticReal(2));

  const auto moved = four_horocycles(true);
  EXPECT_EQ(moved.relabeled_centers[0], BoundaryPoint(-2));
  const auto unsat = tangency_realizability(moved);
  EXPECT_FALSE(unsat.satisfiable);
  EXPECT_EQ(unsat.certificate, "1 ≠ 4·(3/2)·(2/3)");
  EXPECT_FALSE(unsat.derivation.empty());
}

TEST(Realizability, SingleTangentPair) {
  Gen g(403);
  for (int i = 0; i < 50; ++i) {
    const auto c = g.distinct(2, 0.0);
    const auto d = g.distinct(2, 0.2);
    RealizabilityInstance inst{{c[0], c[1]}, {d[0], d[1]}, {{Relation::Tangent, Relation::Tangent},
                                                           {Relation::Tangent, Relation::Tangent}}};
    EXPECT_TRUE(tangency_realizability(inst).satisfiable);
  }
}

TEST(Realizability, ShapeErrors) {
  RealizabilityInstance bad{{0, 1}, {0}, {{Relation::Tangent, Relation::Tangent}, {Relation::Tangent, Relation::Tangent}}};
  EXPECT_THROW(tangency_realizability(bad), InvalidInput);
  RealizabilityInstance ragged{{0, 1}, {0, 1}, {{Relation::Tangent}, {Relation::Tangent, Relation::Tangent}}};
  EXPECT_THROW(tangency_realizability(ragged), InvalidInput);
}

/// Checks a solution against the pattern using the tangency criterion
/// directly: (p - q)^2 versus 4rs, and S versus 2r against infinity.
bool realizes(const RealizabilityInstance& inst, const std::vector<QuadraticReal>& radii) {
  const std::size_t n = inst.centers.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& p = inst.relabeled_centers[i];
      const auto& q = inst.relabeled_centers[j];
      int s;
      if (p.is_infinity() || q.is_infinity()) {
        const auto& big = p.is_infinity() ? radii[i] : radii[j];
        const auto& small = p.is_infinity() ? radii[j] : radii[i];
        s = compare(big, small * QuadraticReal(2));
      } else {
        const QuadraticReal d = p.value() - q.value();
        s = compare(d * d, QuadraticReal(4) * radii[i] * radii[j]);
      }
      const Relation want = inst.pattern[i][j];
      if ((want == Relation::Tangent && s != 0) || (want == Relation::Disjoint && s <= 0) ||
          (want == Relation::Crossing && s >= 0)) {
        return false;
      }
    }
  }
  return true;
}

TEST(Realizability, IsometryMovedConfigurationsAreSatisfiable) {
  Gen g(404);
  int done = 0;
  while (done < 100) {
    std::vector<Curve> hs;
    for (long k = g.int_in(2, 6); k > 0; --k) {
      const Curve h = g.horocycle();
      bool fresh = true;
      for (const auto& o : hs) fresh = fresh && !(*o.center() == *h.center());
      if (fresh) hs.push_back(h);
    }
    const Isometry m = g.isometry();
    const auto inst = instance_from_configuration(hs, [&](const BoundaryPoint& x) { return apply(m, x); });
    const auto res = tangency_realizability(inst);
    EXPECT_TRUE(res.satisfiable) << res.certificate;
    if (res.satisfiable) EXPECT_TRUE(realizes(inst, res.radii));
    ++done;
  }
}

}  // namespace
}  // namespace hyperk
