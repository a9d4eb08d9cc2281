#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperk/hypermodel.hpp"
#include "hyperk/predicates.hpp"

namespace hyperk {

// ---------------------------------------------------------------- dyadic chains

/// Horocycles h(n/2^k, 1/2^(k+1)) for n in [n_min, n_max] and the tangency
/// points of consecutive members.
struct DyadicFamily {
  int level = 0;
  long n_min = 0;
  long n_max = 0;
  std::vector<Curve> horocycles;
  std::vector<UHPPoint> tangency_points;
};

/// Throws InvalidInput unless n_min < n_max and level >= 0.
DyadicFamily dyadic_family(int level, long n_min, long n_max);

/// (x_n + x_(n+1))/2 + i/2^(k+1), the closed form of the n-th tangency point.
UHPPoint dyadic_tangency_formula(int level, long n);

/// Horocycles h(c, 1/2) with c = m/2^level and 1 < |c - x| <= reach: the
/// part of the level-k chain tangent to h(inf, 1) that avoids h(x, 1/2).
std::vector<Curve> pinching_family(const Rational& x, int level, const Rational& reach);

/// Shallowest level <= max_level whose pinching family contains a member
/// meeting h(x, r), together with that member.
struct PinchingWitness {
  int level = 0;
  Curve member;
};
std::optional<PinchingWitness> pinching_witness(const Rational& x, const Rational& r, int max_level);

// ---------------------------------------------------------------- witnesses

/// Circles through x and y with Euclidean center M + s*n on the bisector of
/// [x, y]; s is measured in units of the normal n = rot90(y - x).
class ChordPencil {
 public:
  ChordPencil(const UHPPoint& x, const UHPPoint& y);

  /// Member with parameter s (a circle).
  GeneralizedCircle member(const Rational& s) const;
  /// The line through x and y (the member at s = inf).
  GeneralizedCircle line() const;
  /// Parameter of the member with Euclidean center `center` projected onto
  /// the bisector.
  Rational parameter_of_center(const Rational& cx, const Rational& cy) const;
  /// n . (z - M), positive on the side the normal points to.
  Rational side(const Rational& x, const Rational& y) const;
  const std::array<Rational, 2>& normal() const { return n_; }

 private:
  Rational mx_, my_, r2_;
  std::array<Rational, 2> n_;
  std::array<Rational, 2> x_;
};

/// A hypercycle through x and y disjoint from h2, where h1 and h2 are tangent
/// hypercycles and x, y lie on h1 on different sides of the tangency point.
/// Points must lie on h1 exactly when they are exact, and within 1e-9
/// (relative) otherwise.
Curve hyp1_witness(const Curve& h1, const Curve& h2, const UHPPoint& x, const UHPPoint& y);

/// Searches the chord pencil through x and y over many scales on both sides
/// of h1 (and its line member) for a hypercycle disjoint from h2.
struct WitnessSearch {
  std::optional<Curve> witness;
  std::size_t candidates = 0;
};
WitnessSearch search_witness_family(const Curve& h1, const Curve& h2, const UHPPoint& x, const UHPPoint& y);

// ---------------------------------------------------------------- pinching

/// A horocycle whose center and size may be quadratic irrationals.
struct HorocycleDescriptor {
  BoundaryPoint center;
  QuadraticReal size;

  bool is_rational() const { return (center.is_infinity() || center.is_rational()) && size.is_rational(); }
  /// Throws InvalidInput when the descriptor is irrational.
  Curve to_curve() const;
  static HorocycleDescriptor of(const Curve& horocycle);
};
std::string to_string(const HorocycleDescriptor& h);

/// Exact tangency test on descriptors: (p-q)^2 = 4rs, or S = 2r against inf.
bool descriptors_tangent(const HorocycleDescriptor& a, const HorocycleDescriptor& b);

/// The two horocycles tangent to both h0 and h. Sorted by center.
/// Same center: NoSolution. Intersecting or tangent inputs: InvalidInput.
std::pair<HorocycleDescriptor, HorocycleDescriptor> pinch_pair(const Curve& h0, const Curve& h);

// ---------------------------------------------------------------- four geodesics

struct FourGeodesicConfig {
  std::array<BoundaryPoint, 4> points;  // x1, x2, y1, y2
  Curve g1, g2, h1, h2;
  /// g1, g2 disjoint; h1, h2 crossing; g_i, h_i disjoint.
  bool incidence_holds = false;
  /// Every probe crossing g1 or g2 crosses h1 or h2.
  bool crossing_transfer_holds = false;
  /// Every probe crossing both g1 and g2 meets h1 u h2 exactly twice.
  bool double_crossing_holds = false;
  std::size_t classes_checked = 0;

  bool holds() const { return incidence_holds && crossing_transfer_holds && double_crossing_holds; }
};

/// Points must be rational and in cyclic order x1 < x2 < y1 < y2 on R u {inf}.
FourGeodesicConfig four_geodesic_config(const BoundaryPoint& x1, const BoundaryPoint& x2,
                                        const BoundaryPoint& y1, const BoundaryPoint& y2);

/// True when the four points are distinct and occur in this cyclic order.
bool in_cyclic_order(const std::array<BoundaryPoint, 4>& points);

// ---------------------------------------------------------------- relabelings

/// Exchanges the centers p and q of horocycles, leaving radii and all other
/// centers alone.
class CenterSwap {
 public:
  CenterSwap(BoundaryPoint p, BoundaryPoint q);

  bool is_identity() const { return identity_; }
  const BoundaryPoint& p() const { return p_; }
  const BoundaryPoint& q() const { return q_; }
  BoundaryPoint map_center(const BoundaryPoint& c) const;
  /// Throws InvalidInput on non-horocycles.
  Curve apply(const Curve& horocycle) const;

 private:
  BoundaryPoint p_;
  BoundaryPoint q_;
  bool identity_;
};

/// p and q must be finite; p == q gives the identity (is_identity() set).
CenterSwap sigma_center_swap(const BoundaryPoint& p, const BoundaryPoint& q);

/// The isometry j with j(img_h0) = h(0, 1/2) and j(img_hinf) = h(inf, 1).
Isometry normalizer_from_images(const Curve& img_h0, const Curve& img_hinf);

}  // namespace hyperk
