#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hyperk/constructions.hpp"
#include "hyperk/earthquake.hpp"
#include "hyperk/families.hpp"
#include "hyperk/graphs.hpp"
#include "hyperk/predicates.hpp"

namespace {

using namespace hyperk;

Rational draw(std::mt19937_64& rng, long num, long den) {
  Rational v(std::uniform_int_distribution<long>(-num, num)(rng), std::uniform_int_distribution<long>(1, den)(rng));
  v.canonicalize();
  return v;
}

std::vector<Curve> horocycles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Curve> out;
  while (out.size() < n) {
    Rational size = draw(rng, 8, 4);
    if (sgn(size) <= 0) continue;
    const Curve h = make_horocycle(draw(rng, 20, 6), size);
    bool fresh = true;
    for (const auto& c : out) fresh = fresh && !(c == h);
    if (fresh) out.push_back(h);
  }
  return out;
}

void BM_IntersectionPattern(benchmark::State& state) {
  const auto hs = horocycles(64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_pattern(hs[i % 64], hs[(i * 7 + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_IntersectionPattern);

void BM_IsometryApply(benchmark::State& state) {
  const auto hs = horocycles(64, 2);
  const Isometry g = Isometry(2, 1, 1, 1) * Isometry::reflection();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(apply(g, hs[i++ % 64]));
}
BENCHMARK(BM_IsometryApply);

void BM_BuildGraph(benchmark::State& state) {
  const auto hs = horocycles(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(hs));
}
BENCHMARK(BM_BuildGraph)->Arg(4)->Arg(8)->Arg(16);

void BM_Automorphisms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = build_graph(horocycles(n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g));
}
BENCHMARK(BM_Automorphisms)->Arg(6)->Arg(10)->Arg(14);

void BM_DyadicFamily(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dyadic_family(k, -(1L << k), 1L << k));
}
BENCHMARK(BM_DyadicFamily)->DenseRange(2, 6, 2);

void BM_Realizability(benchmark::State& state) {
  const std::vector<Curve> hs{make_horocycle(-1, 1), make_horocycle(1, 1), make_horocycle(0, Rational(1, 4)),
                              make_horocycle(BoundaryPoint::infinity(), 2)};
  const EarthquakeMap e(make_geodesic(0, BoundaryPoint::infinity()), 2, FaultSide::Left);
  const bool relabel = state.range(0) != 0;
  const auto inst =
      instance_from_configuration(hs, [&](const BoundaryPoint& x) { return relabel ? eq_apply(e, x) : x; });
  for (auto _ : state) benchmark::DoNotOptimize(tangency_realizability(inst));
}
BENCHMARK(BM_Realizability)->Arg(0)->Arg(1);

void BM_RealizabilityRandom(benchmark::State& state) {
  const auto hs = horocycles(static_cast<std::size_t>(state.range(0)), 5);
  const Isometry g(3, 1, 1, 2);
  const auto inst = instance_from_configuration(hs, [&](const BoundaryPoint& x) { return apply(g, x); });
  for (auto _ : state) benchmark::DoNotOptimize(tangency_realizability(inst));
}
BENCHMARK(BM_RealizabilityRandom)->Arg(4)->Arg(6)->Arg(8);

void BM_PointwiseImage(benchmark::State& state) {
  const EarthquakeMap e(make_geodesic(-1, 2), 3, FaultSide::Right);
  const Curve h = make_horocycle(Rational(1, 2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pointwise_image_is_curve(e, h, 16));
}
BENCHMARK(BM_PointwiseImage);

void BM_DisjFamilyLimit(benchmark::State& state) {
  const Curve h = make_horocycle(BoundaryPoint::infinity(), 1);
  const Curve hp = make_hypercycle(-2, 2, UHPPoint(0, Rational(1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_family_limit(disj_family(h, hp)));
}
BENCHMARK(BM_DisjFamilyLimit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
