#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace hyperk::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperk");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ClassifyExamples) {
  const auto h = call({"classify", "--coeffs", "1,0,-1,0"});
  EXPECT_EQ(h.code, kOk);
  EXPECT_NE(h.out.find("Horocycle center 0 radius 1/2"), std::string::npos);
  const auto g = call({"classify", "--geodesic", "-1,1"});
  EXPECT_EQ(g.code, kOk);
  EXPECT_NE(g.out.find("canonical (1,0,0,-1)"), std::string::npos);
  EXPECT_EQ(call({"classify", "--coeffs", "0,0,0,1"}).code, kDegenerate);
  EXPECT_EQ(call({"classify", "--coeffs", "1,0,-4,3"}).code, kDegenerate);
  EXPECT_EQ(call({"classify", "--coeffs", "1,0,x,3"}).code, kUsage);
  EXPECT_EQ(call({"classify", "--coeffs", "1,0,-0.5,0"}).code, kUsage);
  EXPECT_EQ(call({"--inexact", "classify", "--coeffs", "1,0,-0.5,0"}).code, kOk);
}

TEST(Cli, InexactBanner) {
  const auto r = call({"--inexact", "classify", "--coeffs", "1,0,-1,0"});
  EXPECT_NE(r.out.find("--inexact"), std::string::npos);
  EXPECT_EQ(call({"classify", "--coeffs", "1,0,-1,0"}).out.find("--inexact"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"verify", "no-such-suite"}).code, kUsage);
  EXPECT_EQ(call({"construct", "nothing"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, Records) {
  const auto r = call({"--format", "records", "intersect", "horocycle:-1,1", "horocycle:1,1"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["interior_count"], 1);
  EXPECT_EQ(j["tangent"], true);
  EXPECT_TRUE(j["type"].is_null());
}

TEST(Cli, Intersect) {
  const auto r = call({"intersect", "coeffs:0,1,-1,0", "coeffs:1,0,-1,-1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("Type3"), std::string::npos);
  const auto m = call({"intersect", "horocycle:0,1/2", "coeffs:1,0,-3/4,-1/4", "horocycle:inf,1"});
  EXPECT_EQ(m.code, kOk);
  EXPECT_NE(m.out.find("middle 1: hypercycle"), std::string::npos);
}

TEST(Cli, Construct) {
  const auto d = call({"construct", "dyadic", "--level", "0", "--range", "0,2"});
  EXPECT_EQ(d.code, kOk);
  EXPECT_NE(d.out.find("tangent at (1/2, 1/2)"), std::string::npos);
  EXPECT_EQ(call({"construct", "pinch", "--h0", "horocycle:0,1/2", "--hinf", "horocycle:0,1"}).code, kDegenerate);
  EXPECT_EQ(call({"construct", "four-geodesics", "--points", "0,2,1,3"}).code, kUsage);
  EXPECT_EQ(call({"construct", "four-geodesics", "--points", "-1,0,1,inf"}).code, kOk);
}

TEST(Cli, GraphAndLimits) {
  const auto g = call({"graph", "--curve", "horocycle:0,1/2", "--curve", "horocycle:1,1/2", "--curve",
                       "horocycle:2,1/2", "--curve", "horocycle:inf,2", "--automorphisms", "--realize"});
  EXPECT_EQ(g.code, kOk);
  EXPECT_NE(g.out.find("automorphisms 2"), std::string::npos);
  EXPECT_NE(g.out.find("[[1, 2], [0, 1]] reversing"), std::string::npos);
  std::vector<std::string> many{"graph"};
  for (int i = 0; i < 7; ++i) {
    many.push_back("--curve");
    many.push_back("geodesic:" + std::to_string(10 * i) + "," + std::to_string(10 * i + 1));
  }
  many.push_back("--automorphisms");
  many.push_back("--cap");
  many.push_back("10");
  EXPECT_EQ(call(many).code, kLimit);
}

TEST(Cli, EarthquakeCertify) {
  const auto r = call({"earthquake", "--fault", "0,inf", "--shear", "2", "--side", "left", "certify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("1 ≠ 4·(3/2)·(2/3)"), std::string::npos);
  const auto a = call({"earthquake", "--fault", "0,inf", "--shear", "2", "--side", "left", "apply", "--", "-1,1"});
  EXPECT_NE(a.out.find("(-2, 2)"), std::string::npos);
  EXPECT_EQ(call({"earthquake", "--fault", "0,inf", "--shear", "1", "apply", "1,1"}).code, kUsage);
}

TEST(Cli, Family) {
  const auto r = call({"family", "disj", "--first", "horocycle:inf,1", "--second", "hypercycle:-2,2,0,1/2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("HorocycleLimit"), std::string::npos);
  EXPECT_NE(call({"family", "rays"}).out.find("FoliatesComponent"), std::string::npos);
}

TEST(Cli, VerifyDyadic) {
  const auto r = call({"verify", "dyadic", "--depth", "6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, SeedDeterminism) {
  const auto a = call({"--seed", "9", "verify", "types"});
  const auto b = call({"--seed", "9", "verify", "types"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kOk);
}

TEST(Cli, RenderDeterministicAndUnwritable) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperk_cli_test";
  std::filesystem::create_directories(dir);
  const auto p1 = (dir / "a.svg").string(), p2 = (dir / "b.svg").string();
  ASSERT_EQ(call({"render", "dyadic", "--level", "0", "--range", "-2,2", "-o", p1}).code, kOk);
  ASSERT_EQ(call({"render", "dyadic", "--level", "0", "--range", "-2,2", "-o", p2}).code, kOk);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string svg = slurp(p1);
  EXPECT_EQ(svg, slurp(p2));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  const auto empty = call({"render", "empty"});
  EXPECT_EQ(empty.code, kOk);
  EXPECT_NE(empty.out.find("</svg>"), std::string::npos);
  EXPECT_EQ(call({"render", "earthquake", "-o", (dir / "e.svg").string()}).code, kOk);
  EXPECT_EQ(call({"render", "empty", "-o", "/nonexistent-dir/x.svg"}).code, kUnwritable);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hyperk::cli
