#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "hyperk/errors.hpp"
#include "hyperk/predicates.hpp"
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

Curve circle(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return Curve(GeneralizedCircle(a, b, c, d));
}

const Curve kDiagonal = circle(0, 1, -1, 0);

TEST(Pattern, Examples) {
  const auto t = intersection_pattern(make_horocycle(-1, 1), make_horocycle(1, 1));
  EXPECT_EQ(t.interior_count, 1);
  EXPECT_TRUE(t.tangent);
  ASSERT_EQ(t.interior_points.size(), 1u);
  EXPECT_EQ(t.interior_points[0], UHPPoint(0, 1));
  EXPECT_TRUE(t.interior_points[0].exact());

  const auto d = intersection_pattern(make_horocycle(0, r(1, 2)), make_horocycle(kInf, 2));
  EXPECT_EQ(d.interior_count, 0);
  EXPECT_FALSE(d.tangent);
  EXPECT_EQ(d.shared_endpoints, 0);
  EXPECT_TRUE(d.disjoint());

  const auto x = intersection_pattern(make_geodesic(-1, 1), make_geodesic(0, kInf));
  EXPECT_EQ(x.interior_count, 1);
  EXPECT_FALSE(x.tangent);
  EXPECT_EQ(x.interior_points[0], UHPPoint(0, 1));
}

TEST(Pattern, EqualAndSharedCenter) {
  const auto e = intersection_pattern(make_geodesic(1, 3), make_geodesic(3, 1));
  EXPECT_TRUE(e.equal);
  EXPECT_FALSE(e.disjoint());
  const auto s = intersection_pattern(make_horocycle(0, r(1, 2)), make_horocycle(0, 1));
  EXPECT_EQ(s.interior_count, 0);
  EXPECT_FALSE(s.tangent);
  EXPECT_EQ(s.shared_endpoints, 1);
  EXPECT_TRUE(disjoint(make_geodesic(0, 1), make_geodesic(1, 2)));
}

TEST(Pattern, AgreesWithNumericOracle) {
  Gen g(101);
  int compared = 0;
  for (int i = 0; i < 3000; ++i) {
    const Curve a = g.any_curve();
    const Curve b = g.any_curve();
    const auto p = intersection_pattern(a, b);
    if (p.equal) continue;
    const auto num = testing::numeric_meet(a.circle(), b.circle());
    if (p.tangent) {
      EXPECT_TRUE(num.touching) << i;
      EXPECT_EQ(p.interior_count, 1);
    } else if (!num.touching) {
      EXPECT_EQ(p.interior_count, num.count) << i;
      ++compared;
    }
    EXPECT_EQ(p.interior_points.size(), static_cast<std::size_t>(p.interior_count));
    for (const auto& z : p.interior_points) {
      const double fa = a.circle().evaluate(static_cast<long double>(z.x_double()), z.y_double());
      EXPECT_NEAR(static_cast<double>(fa), 0.0, 1e-6);
    }
  }
  EXPECT_GT(compared, 2000);
}

TEST(Pattern, Symmetric) {
  Gen g(102);
  for (int i = 0; i < 1000; ++i) {
    const Curve a = g.any_curve();
    const Curve b = g.any_curve();
    const auto ab = intersection_pattern(a, b);
    const auto ba = intersection_pattern(b, a);
    EXPECT_EQ(ab.interior_count, ba.interior_count);
    EXPECT_EQ(ab.tangent, ba.tangent);
    EXPECT_EQ(ab.shared_endpoints, ba.shared_endpoints);
  }
}

TEST(Types, Examples) {
  EXPECT_EQ(hypercycle_pair_type(circle(1, 0, r(-3, 4), r(-1, 4)), circle(1, 0, 3, -4)), HypercyclePairType::Type1);
  const Curve two = circle(1, -2, r(-3, 2), 0);
  EXPECT_EQ(hypercycle_pair_type(kDiagonal, two), HypercyclePairType::Type2);
  const auto p2 = intersection_pattern(kDiagonal, two);
  ASSERT_EQ(p2.interior_points.size(), 1u);
  EXPECT_EQ(p2.interior_points[0], UHPPoint(r(7, 4), r(7, 4)));
  const Curve three = circle(1, 0, -1, -1);
  EXPECT_EQ(hypercycle_pair_type(kDiagonal, three), HypercyclePairType::Type3);
  EXPECT_EQ(intersection_pattern(kDiagonal, three).interior_points[0], UHPPoint(1, 1));
  const Curve four = circle(1, -4, -2, 3);
  EXPECT_EQ(hypercycle_pair_type(kDiagonal, four), HypercyclePairType::Type4);
  const auto p4 = intersection_pattern(kDiagonal, four);
  ASSERT_EQ(p4.interior_points.size(), 2u);
  std::vector<double> xs{p4.interior_points[0].x_double(), p4.interior_points[1].x_double()};
  std::sort(xs.begin(), xs.end());
  EXPECT_NEAR(xs[0], (3 - std::sqrt(3.0)) / 2, 1e-9);
  EXPECT_NEAR(xs[1], (3 + std::sqrt(3.0)) / 2, 1e-9);
  EXPECT_THROW(hypercycle_pair_type(make_geodesic(0, 1), kDiagonal), InvalidInput);
}

TEST(Types, IsometryInvariant) {
  Gen g(103);
  for (int i = 0; i < 1000; ++i) {
    const Curve a = g.hypercycle();
    const Curve b = g.hypercycle();
    const Isometry m = g.isometry();
    EXPECT_EQ(hypercycle_pair_type(a, b), hypercycle_pair_type(apply(m, a), apply(m, b)));
  }
}

TEST(Nesting, Examples) {
  EXPECT_EQ(horocycle_leq(make_horocycle(0, r(1, 2)), make_horocycle(0, 1)), Nesting::LessOrEqual);
  EXPECT_EQ(horocycle_leq(make_horocycle(0, 1), make_horocycle(0, r(1, 2))), Nesting::GreaterOrEqual);
  EXPECT_EQ(horocycle_leq(make_horocycle(0, 1), make_horocycle(kInf, 3)), Nesting::Incomparable);
  EXPECT_EQ(horocycle_leq(make_horocycle(kInf, 3), make_horocycle(kInf, 1)), Nesting::LessOrEqual);
  EXPECT_EQ(horocycle_leq(make_horocycle(2, 1), make_horocycle(2, 1)), Nesting::Equal);
}

TEST(Nesting, ProbeCharacterization) {
  Gen g(104);
  std::vector<Curve> probes;
  for (int i = 0; i < 100; ++i) probes.push_back(g.horocycle());
  for (int i = 0; i < 300; ++i) {
    const BoundaryPoint c = g.bpoint(0.2);
    const Curve h1 = make_horocycle(c, g.pos());
    const Curve h2 = make_horocycle(c, g.pos());
    const Nesting n = horocycle_leq(h1, h2);
    bool implied = true;
    for (const auto& p : probes) {
      const auto m1 = testing::numeric_meet(p.circle(), h1.circle());
      const auto m2 = testing::numeric_meet(p.circle(), h2.circle());
      if (m1.count > 0 && m2.count == 0) implied = false;
    }
    if (n == Nesting::LessOrEqual || n == Nesting::Equal) EXPECT_TRUE(implied);
  }
}

TEST(Linked, Examples) {
  EXPECT_TRUE(linked({0, kInf}, {-1, 1}));
  EXPECT_FALSE(linked({0, 1}, {2, 3}));
  EXPECT_TRUE(linked({0, 2}, {1, kInf}));
  EXPECT_THROW(linked({0, 1}, {1, 2}), InvalidInput);
}

TEST(Linked, MatchesGeodesicCrossing) {
  Gen g(105);
  for (int i = 0; i < 1000; ++i) {
    const auto p = g.distinct(4, 0.15);
    const bool l = linked({p[0], p[1]}, {p[2], p[3]});
    const auto m = testing::numeric_meet(make_geodesic(p[0], p[1]).circle(), make_geodesic(p[2], p[3]).circle());
    EXPECT_EQ(l, m.count == 1);
  }
}

TEST(Between, Examples) {
  const Curve h0 = make_horocycle(0, r(1, 2));
  const Curve hyp = circle(1, 0, r(-3, 4), r(-1, 4));
  const Curve line = make_horocycle(kInf, 1);
  EXPECT_EQ(between_tangent(h0, hyp, line), 1u);
  EXPECT_EQ(between_tangent(hyp, line, h0), 0u);
  EXPECT_EQ(between_tangent(line, h0, hyp), 2u);
  EXPECT_THROW(between_tangent(h0, h0, line), InvalidInput);
  EXPECT_THROW(between_tangent(h0, make_horocycle(5, 1), line), InvalidInput);
}

TEST(Between, SamplingOracle) {
  // Walk a small circle around i and record which curve each crossing
  // belongs to; the middle curve is the one whose crossings are separated
  // from each other by crossings of both others.
  const Curve curves[3] = {make_horocycle(0, r(1, 2)), circle(1, 0, r(-3, 4), r(-1, 4)), make_horocycle(kInf, 1)};
  const double rho = 0.01;
  std::vector<std::pair<double, int>> hits;
  const int steps = 200000;
  for (int k = 0; k < 3; ++k) {
    double prev = 0;
    for (int s = 0; s <= steps; ++s) {
      const double t = -M_PI / 2 + 2 * M_PI * s / steps;
      const double v = static_cast<double>(curves[k].circle().evaluate(static_cast<long double>(rho * std::cos(t)),
                                                                      1.0L + rho * std::sin(t)));
      if (s > 0 && (v > 0) != (prev > 0)) hits.emplace_back(t, k);
      prev = v;
    }
  }
  std::sort(hits.begin(), hits.end());
  ASSERT_EQ(hits.size(), 6u);
  // Three crossings on each side of i; the middle curve is crossed second both times.
  EXPECT_EQ(hits[1].second, 1);
  EXPECT_EQ(hits[4].second, 1);
}

TEST(Between, IsometryInvariant) {
  Gen g(106);
  const Curve base[3] = {make_horocycle(0, r(1, 2)), circle(1, 0, r(-3, 4), r(-1, 4)), make_horocycle(kInf, 1)};
  for (int i = 0; i < 300; ++i) {
    const Isometry m = g.isometry();
    EXPECT_EQ(between_tangent(apply(m, base[0]), apply(m, base[1]), apply(m, base[2])), 1u);
  }
}

TEST(SameEndpoints, Examples) {
  EXPECT_TRUE(same_endpoints(kDiagonal, circle(0, 2, -1, 0)));
  EXPECT_TRUE(same_endpoints(circle(1, 0, r(-3, 4), r(-1, 4)), make_geodesic(r(-1, 2), r(1, 2))));
  EXPECT_FALSE(same_endpoints(kDiagonal, circle(1, -4, -2, 3)));
  EXPECT_THROW(same_endpoints(make_horocycle(0, 1), kDiagonal), InvalidInput);
}

TEST(Curvature, RelativeOrderAtI) {
  const std::array<Rational, 2> up{0, 1};
  const Rational k0 = relative_curvature(make_horocycle(0, r(1, 2)).circle(), 0, 1, up);
  const Rational k1 = relative_curvature(GeneralizedCircle(1, 0, r(-3, 4), r(-1, 4)), 0, 1, up);
  const Rational k2 = relative_curvature(make_horocycle(kInf, 1).circle(), 0, 1, up);
  EXPECT_EQ(k2, 0);
  EXPECT_EQ(k0 / k1, r(5, 4));
}

}  // namespace
}  // namespace hyperk
