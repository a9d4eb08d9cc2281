#pragma once

// Seeded generators for property tests. Deliberately separate from the
// CLI's generators so the two cannot share a blind spot.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperk/hypermodel.hpp"

namespace hyperk::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational q(long num = 20, long den = 6) {
    Rational v(int_in(-num, num), int_in(1, den));
    v.canonicalize();
    return v;
  }
  Rational pos(long num = 12, long den = 6) {
    Rational v(int_in(1, num), int_in(1, den));
    v.canonicalize();
    return v;
  }
  BoundaryPoint bpoint(double inf_p = 0.1) { return coin(inf_p) ? BoundaryPoint::infinity() : BoundaryPoint(q()); }
  std::vector<BoundaryPoint> distinct(std::size_t n, double inf_p = 0.1) {
    std::vector<BoundaryPoint> out;
    while (out.size() < n) {
      const BoundaryPoint p = bpoint(inf_p);
      bool fresh = true;
      for (const auto& o : out) fresh = fresh && !(o == p);
      if (fresh) out.push_back(p);
    }
    return out;
  }
  UHPPoint point() { return UHPPoint(q(), pos()); }

  Curve geodesic() {
    const auto e = distinct(2);
    return make_geodesic(e[0], e[1]);
  }
  Curve horocycle() { return make_horocycle(bpoint(), pos()); }
  Curve hypercycle() {
    for (;;) {
      const auto e = distinct(2);
      const UHPPoint z = point();
      const Curve g = make_geodesic(e[0], e[1]);
      if (sgn(g.circle().evaluate(z.x(), z.y())) == 0) continue;
      return make_hypercycle(e[0], e[1], z);
    }
  }
  Curve any_curve() {
    const long k = int_in(0, 2);
    return k == 0 ? geodesic() : k == 1 ? horocycle() : hypercycle();
  }
  Curve curve_of(CurveKind kind) {
    switch (kind) {
      case CurveKind::Geodesic: return geodesic();
      case CurveKind::Horocycle: return horocycle();
      case CurveKind::Hypercycle: return hypercycle();
    }
    return geodesic();
  }

  /// Product of elementary moves: translations, dilations, the inversion
  /// z -> -1/z and the reflection z -> -conj(z).
  Isometry isometry() {
    Isometry g;
    for (long i = int_in(1, 4); i > 0; --i) {
      switch (int_in(0, 3)) {
        case 0: g = Isometry::translation(q(6, 4)) * g; break;
        case 1: g = Isometry::dilation(pos(5, 5)) * g; break;
        case 2: g = Isometry(0, -1, 1, 0) * g; break;
        default: g = Isometry::reflection() * g; break;
      }
    }
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hyperk::testing
