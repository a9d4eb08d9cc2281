#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "generators.hpp"
#include "hyperk/earthquake.hpp"
#include "hyperk/errors.hpp"
#include "hyperk/graphs.hpp"
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

std::set<std::pair<std::size_t, std::size_t>> edge_set(const DisjointnessGraph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

DisjointnessGraph four_horocycles() {
  return build_graph({make_horocycle(0, r(1, 2)), make_horocycle(1, r(1, 2)), make_horocycle(2, r(1, 2)),
                      make_horocycle(kInf, 2)});
}

TEST(BuildGraph, Examples) {
  const auto g = four_horocycles();
  EXPECT_EQ(g.graph_class, GraphClass::Horocycle);
  EXPECT_EQ(edge_set(g), (std::set<std::pair<std::size_t, std::size_t>>{{0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  const auto q = build_graph({make_geodesic(-1, 0), make_geodesic(1, kInf), make_geodesic(-1, 1), make_geodesic(0, kInf)});
  EXPECT_EQ(edge_set(q), (std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const auto one = build_graph({make_geodesic(0, 1)});
  EXPECT_TRUE(one.edges().empty());
  EXPECT_EQ(one.size(), 1u);
}

TEST(BuildGraph, Errors) {
  EXPECT_THROW(build_graph({make_geodesic(0, 1), make_geodesic(2, 3), make_geodesic(1, 0)}), InvalidInput);
  EXPECT_THROW(build_graph({make_geodesic(0, 1), make_horocycle(0, 1)}), InvalidInput);
  EXPECT_EQ(build_graph({make_geodesic(0, 1), make_horocycle(0, 1)}, true).graph_class, GraphClass::Mixed);
}

TEST(BuildGraph, AdjacencyMatchesNumericOracle) {
  Gen g(501);
  for (int i = 0; i < 100; ++i) {
    const CurveKind kind = static_cast<CurveKind>(g.int_in(0, 2));
    std::vector<Curve> cs;
    for (int j = 0; j < 6; ++j) cs.push_back(g.curve_of(kind));
    DisjointnessGraph gr;
    try {
      gr = build_graph(cs);
    } catch (const InvalidInput&) {
      continue;
    }
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = a + 1; b < cs.size(); ++b) {
        const auto m = testing::numeric_meet(cs[a].circle(), cs[b].circle());
        if (!m.touching) EXPECT_EQ(gr.adjacency[a][b], m.count == 0);
      }
    }
  }
}

Adjacency path(std::size_t n) {
  Adjacency a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = true;
  return a;
}

Adjacency complete(std::size_t n) {
  Adjacency a(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = false;
  return a;
}

/// Automorphisms by trying all n! permutations.
std::vector<Permutation> brute_force(const Adjacency& a) {
  Permutation p(a.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[i][j] == a[p[i]][p[j]];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(path(3)).size(), 2u);
  EXPECT_EQ(automorphisms(complete(4)).size(), 24u);
  EXPECT_EQ(automorphisms(four_horocycles()), (std::vector<Permutation>{{0, 1, 2, 3}, {2, 1, 0, 3}}));
}

TEST(Automorphisms, MatchBruteForce) {
  Gen g(502);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(g.int_in(1, 7));
    Adjacency a(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) a[x][y] = a[y][x] = g.coin();
    }
    EXPECT_EQ(automorphisms(a), brute_force(a));
  }
}

TEST(Automorphisms, Guards) {
  try {
    automorphisms(complete(6), 10);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.partial_count(), 10u);
  }
  EXPECT_THROW(automorphisms(path(17)), SizeGuard);
  EXPECT_EQ(automorphisms(path(16)).size(), 2u);
}

TEST(Realizing, SwapAndIdentity) {
  const auto g = four_horocycles();
  const auto iso = isometry_realizing(g, {2, 1, 0, 3});
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, Isometry::translation(2) * Isometry::reflection());
  const Permutation swap{2, 1, 0, 3};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(apply(*iso, g.curves[i]), g.curves[swap[i]]);
  EXPECT_EQ(*isometry_realizing(g, {0, 1, 2, 3}), Isometry::identity());
}

TEST(Realizing, EarthquakeRelabelingHasNoIsometry) {
  const auto a = build_graph({make_geodesic(-1, 1), make_geodesic(-3, -2), make_geodesic(2, 3)});
  const auto b = build_graph({make_geodesic(-2, 1), make_geodesic(-6, -4), make_geodesic(2, 3)});
  EXPECT_EQ(a.adjacency, b.adjacency);
  EXPECT_FALSE(isometry_between(a, b, {0, 1, 2}).has_value());
}

TEST(Realizing, SymmetricConfigurations) {
  // A set closed under z -> -conj(z) has the reflection as a realizable
  // automorphism.
  Gen g(503);
  int done = 0;
  while (done < 50) {
    std::vector<Curve> cs;
    for (int j = 0; j < 3; ++j) {
      const Curve c = g.horocycle();
      cs.push_back(c);
      cs.push_back(apply(Isometry::reflection(), c));
    }
    DisjointnessGraph gr;
    try {
      gr = build_graph(cs);
    } catch (const InvalidInput&) {
      continue;
    }
    const auto perm = induced_permutation(gr, Isometry::reflection());
    ASSERT_TRUE(perm.has_value());
    EXPECT_TRUE(is_automorphism(gr.adjacency, *perm));
    const auto iso = isometry_realizing(gr, *perm);
    ASSERT_TRUE(iso.has_value());
    for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(apply(*iso, cs[i]), cs[(*perm)[i]]);
    ++done;
  }
}

TEST(Realizing, IsometriesPreserveAdjacency) {
  Gen g(504);
  int done = 0;
  while (done < 300) {
    const CurveKind kind = static_cast<CurveKind>(g.int_in(0, 2));
    std::vector<Curve> cs;
    for (long j = g.int_in(2, 10); j > 0; --j) cs.push_back(g.curve_of(kind));
    DisjointnessGraph gr;
    try {
      gr = build_graph(cs);
    } catch (const InvalidInput&) {
      continue;
    }
    const Isometry m = g.isometry();
    std::vector<Curve> img;
    for (const auto& c : cs) img.push_back(apply(m, c));
    EXPECT_EQ(build_graph(img).adjacency, gr.adjacency);
    std::vector<std::size_t> id(cs.size());
    std::iota(id.begin(), id.end(), 0);
    const auto back = isometry_between(gr, build_graph(img), id);
    ASSERT_TRUE(back.has_value());
    for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(apply(*back, cs[i]), img[i]);
    ++done;
  }
}

TEST(Links, Examples) {
  std::vector<BoundaryPoint> pts, cubes;
  for (long x = -2; x <= 2; ++x) {
    pts.emplace_back(Rational(x));
    cubes.emplace_back(Rational(x * x * x));
  }
  EXPECT_TRUE(link_preserving_check(pts, cubes).preserved);
  const auto swap = link_preserving_check({0, 1, 2, 3}, {1, 0, 2, 3});
  EXPECT_FALSE(swap.preserved);
  ASSERT_TRUE(swap.witness.has_value());
  const auto& w = *swap.witness;
  const std::vector<BoundaryPoint> p{0, 1, 2, 3}, v{1, 0, 2, 3};
  EXPECT_NE(linked({p[w[0]], p[w[1]]}, {p[w[2]], p[w[3]]}), linked({v[w[0]], v[w[1]]}, {v[w[2]], v[w[3]]}));
  EXPECT_THROW(link_preserving_check({0, 1}, {0}), InvalidInput);
}

TEST(Links, EarthquakeBoundaryMaps) {
  Gen g(505);
  for (int i = 0; i < 300; ++i) {
    Rational s = g.pos();
    if (s == 1) s = 3;
    const EarthquakeMap e(g.geodesic(), s, g.coin() ? FaultSide::Left : FaultSide::Right);
    const auto pts = g.distinct(8);
    std::vector<BoundaryPoint> img;
    for (const auto& x : pts) img.push_back(eq_apply(e, x));
    EXPECT_TRUE(link_preserving_check(pts, img).preserved);
  }
}

}  // namespace
}  // namespace hyperk
