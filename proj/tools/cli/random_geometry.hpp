#pragma once

// Seeded random rationals, boundary points, curves and isometries for the
// verification suites. Everything draws from one std::mt19937_64 so a seed
// fixes the whole run.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperk/hypermodel.hpp"

namespace hyperk::cli {

class RandomGeometry {
 public:
  explicit RandomGeometry(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num = 24, long max_den = 8) {
    Rational v(integer(-max_num, max_num), integer(1, max_den));
    v.canonicalize();
    return v;
  }
  /// integer(lo, hi) / den, canonicalized.
  Rational fraction(long lo, long hi, long den) {
    Rational v(integer(lo, hi), den);
    v.canonicalize();
    return v;
  }
  Rational positive(long max_num = 16, long max_den = 8) {
    Rational v(integer(1, max_num), integer(1, max_den));
    v.canonicalize();
    return v;
  }
  BoundaryPoint boundary(double infinity_chance = 0.1) {
    if (chance(infinity_chance)) return BoundaryPoint::infinity();
    return BoundaryPoint(rational());
  }
  /// n distinct boundary points.
  std::vector<BoundaryPoint> distinct_boundary(std::size_t n, double infinity_chance = 0.1) {
    std::vector<BoundaryPoint> out;
    while (out.size() < n) {
      const auto p = boundary(infinity_chance);
      bool fresh = true;
      for (const auto& q : out) fresh = fresh && !(p == q);
      if (fresh) out.push_back(p);
    }
    return out;
  }
  UHPPoint point() { return UHPPoint(rational(), positive()); }

  Curve geodesic() {
    const auto pts = distinct_boundary(2);
    return make_geodesic(pts[0], pts[1]);
  }
  Curve horocycle() { return make_horocycle(boundary(), positive()); }
  Curve hypercycle() {
    while (true) {
      const auto pts = distinct_boundary(2);
      try {
        return make_hypercycle(pts[0], pts[1], point());
      } catch (const std::exception&) {
        // The point fell on the geodesic; draw again.
      }
    }
  }
  Curve curve() {
    switch (integer(0, 2)) {
      case 0: return geodesic();
      case 1: return horocycle();
      default: return hypercycle();
    }
  }
  Curve curve_of(CurveKind kind) {
    switch (kind) {
      case CurveKind::Geodesic: return geodesic();
      case CurveKind::Horocycle: return horocycle();
      case CurveKind::Hypercycle: return hypercycle();
    }
    return geodesic();
  }

  /// Small integer matrix with positive determinant, composed with a
  /// rational dilation; orientation reversing with probability 1/4.
  Isometry isometry() {
    while (true) {
      const long a = integer(-4, 4);
      const long b = integer(-4, 4);
      const long c = integer(-4, 4);
      const long d = integer(-4, 4);
      if (a * d - b * c <= 0) continue;
      const Orientation o = chance(0.25) ? Orientation::Reversing : Orientation::Preserving;
      return Isometry(a, b, c, d, o) * Isometry::dilation(positive(6, 6));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hyperk::cli
