#include <gtest/gtest.h>

#include <sstream>

#include "generators.hpp"
#include "hyperk/errors.hpp"
#include "hyperk/serialize.hpp"

namespace hyperk {
namespace {

using testing::Gen;

TEST(CurveText, Format) {
  EXPECT_EQ(format_curve(make_horocycle(0, Rational(1, 2))), "horocycle a=1 b=0 c=-1 d=0");
  EXPECT_EQ(format_curve(make_geodesic(1, 3)), "geodesic a=1 b=-4 c=0 d=3");
}

TEST(CurveText, RoundTrip) {
  Gen g(601);
  for (int i = 0; i < 500; ++i) {
    const Curve c = g.any_curve();
    EXPECT_EQ(parse_curve(format_curve(c)), c);
    EXPECT_EQ(curve_from_json(curve_to_json(c)), c);
    EXPECT_EQ(curve_from_json(Json::parse(curve_to_json(c).dump())), c);
  }
}

TEST(CurveText, Errors) {
  EXPECT_THROW(parse_curve("geodesic a=1 b=0 c=-1 d=0"), InvalidInput);
  EXPECT_THROW(parse_curve("horocycle a=1 b=0 c=-1"), InvalidInput);
  EXPECT_THROW(parse_curve("circle a=1 b=0 c=-1 d=0"), InvalidInput);
  EXPECT_THROW(parse_curve("horocycle a=1 a=0 c=-1 d=0"), InvalidInput);
  EXPECT_THROW(curve_from_json(Json{{"kind", "horocycle"}}), InvalidInput);
}

TEST(CurveSpec, Forms) {
  EXPECT_EQ(parse_curve_spec("geodesic:0,inf"), make_geodesic(0, BoundaryPoint::infinity()));
  EXPECT_EQ(parse_curve_spec("horocycle:1/2,3"), make_horocycle(Rational(1, 2), 3));
  EXPECT_EQ(parse_curve_spec("hypercycle:-1/2,1/2,0,1").circle(), GeneralizedCircle(4, 0, -3, -1));
  EXPECT_EQ(parse_curve_spec("coeffs:1,0,-1,0"), make_horocycle(0, Rational(1, 2)));
  EXPECT_EQ(parse_curve_spec("horocycle a=1 b=0 c=-1 d=0"), make_horocycle(0, Rational(1, 2)));
  EXPECT_THROW(parse_curve_spec("horocycle:0,0.5"), InvalidInput);
  EXPECT_EQ(parse_curve_spec("horocycle:0,0.5", true), make_horocycle(0, Rational(1, 2)));
  EXPECT_THROW(parse_curve_spec("geodesic:0"), InvalidInput);
  EXPECT_THROW(parse_curve_spec("spiral:0,1"), InvalidInput);
}

TEST(CurveSpec, ReadCurvesSkipsCommentsAndNamesBadLines) {
  std::istringstream ok("# two curves\n\ngeodesic:0,1\n  horocycle a=1 b=0 c=-1 d=0\n");
  EXPECT_EQ(read_curves(ok).size(), 2u);
  std::istringstream bad("geodesic:0,1\nhorocycle:0,-1\n");
  try {
    read_curves(bad);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Records, Pattern) {
  const auto j = pattern_to_json(intersection_pattern(make_horocycle(-1, 1), make_horocycle(1, 1)));
  EXPECT_EQ(j["interior_count"], 1);
  EXPECT_EQ(j["tangent"], true);
  EXPECT_EQ(j["shared_endpoints"], 0);
  EXPECT_TRUE(j["type"].is_null());
}

TEST(Records, Graph) {
  const auto g = build_graph({make_geodesic(0, 1), make_geodesic(2, 3), make_geodesic(1, 3)});
  EXPECT_EQ(format_graph(g),
            "graph geodesic 3\n"
            "0 geodesic a=1 b=-1 c=0 d=0\n"
            "1 geodesic a=1 b=-5 c=0 d=6\n"
            "2 geodesic a=1 b=-4 c=0 d=3\n"
            "0: 1 2\n"
            "1: 0 2\n"
            "2: 0 1\n");
  const Json j = graph_to_json(g);
  EXPECT_EQ(j["edges"].size(), 3u);
}

TEST(Records, Isometry) {
  const Json j = isometry_to_json(Isometry(2, 4, 0, 2, Orientation::Reversing));
  EXPECT_EQ(j["matrix"], Json::parse(R"(["1","2","0","1"])"));
  EXPECT_EQ(j["orientation"], "reversing");
}

}  // namespace
}  // namespace hyperk
