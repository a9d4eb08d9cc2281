#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperk/hypermodel.hpp"

namespace hyperk {

/// How two curves meet. Counts and flags are exact. Interior points carry
/// exact coordinates when they are rational (tangency points always are) and
/// rounded ones otherwise.
struct IntersectionPattern {
  int interior_count = 0;
  bool tangent = false;
  int shared_endpoints = 0;
  /// Both arguments are the same curve; the other fields then describe the
  /// curve against itself only through shared_endpoints.
  bool equal = false;
  std::vector<UHPPoint> interior_points;

  bool disjoint() const { return !equal && interior_count == 0; }
};

IntersectionPattern intersection_pattern(const Curve& c1, const Curve& c2);

/// Disjoint in the open half-plane (shared boundary points allowed).
bool disjoint(const Curve& c1, const Curve& c2);

enum class HypercyclePairType { Type1, Type2, Type3, Type4, Disjoint, SameEndpoints, Equal };
std::string to_string(HypercyclePairType type);

HypercyclePairType hypercycle_pair_type(const Curve& h1, const Curve& h2);
/// Classification from an already computed pattern of two hypercycles.
HypercyclePairType pair_type_from_pattern(const IntersectionPattern& pattern);

enum class Nesting { LessOrEqual, GreaterOrEqual, Equal, Incomparable };
std::string to_string(Nesting nesting);

/// Nesting order of horoballs: h1 <= h2 when the horoball of h2 contains h1.
/// For the center at infinity the horoball is the region above the line.
Nesting horocycle_leq(const Curve& h1, const Curve& h2);

/// True when the points of pair2 lie in different components of the circle
/// R u {inf} minus pair1.
bool linked(const std::pair<BoundaryPoint, BoundaryPoint>& pair1,
            const std::pair<BoundaryPoint, BoundaryPoint>& pair2);

/// Signed curvature of a generalized circle at a point on it, positive when
/// the circle bends towards `normal`. `normal` must be orthogonal to the
/// circle there; the result is scaled by |normal|, so values computed with
/// the same normal compare like curvatures.
Rational relative_curvature(const GeneralizedCircle& circle, const Rational& x, const Rational& y,
                            const std::array<Rational, 2>& normal);

/// Index (0, 1 or 2) of the curve separating the other two near their common
/// tangency point.
std::size_t between_tangent(const Curve& h1, const Curve& h2, const Curve& h3);

bool same_endpoints(const Curve& h1, const Curve& h2);

}  // namespace hyperk
