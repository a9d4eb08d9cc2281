#pragma once

// Simple earthquakes: the identity on one side of a geodesic fault and a
// hyperbolic translation along the fault on the other. Plus the radius
// realizability problem used to show that such maps act on geodesics but
// not on horocycles.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperk/hypermodel.hpp"
#include "hyperk/predicates.hpp"

namespace hyperk {

enum class FaultSide { Left, Right };
std::string to_string(FaultSide side);
FaultSide parse_fault_side(std::string_view text);

/// Write the fault as geodesic(p, q) with p < q and let A be the isometry
/// z -> (p - z)/(z - q) (z -> z - p when q = inf), which sends the fault to
/// the imaginary axis. Left is Re A(z) < 0: x < p for a vertical fault, the
/// outside of a semicircular one. The fault itself and its endpoints belong
/// to the unmoved side.
class EarthquakeMap {
 public:
  /// Throws InvalidInput unless fault is a geodesic with rational endpoints
  /// and shear is positive and not 1.
  EarthquakeMap(Curve fault, Rational shear, FaultSide moved_side);

  const Curve& fault() const { return fault_; }
  const Rational& shear() const { return shear_; }
  FaultSide moved_side() const { return side_; }
  /// The hyperbolic isometry applied on the moved side.
  const Isometry& shear_isometry() const { return shift_; }

  /// Strictly inside the moved half-plane.
  bool moves(const UHPPoint& z) const;
  bool moves(const BoundaryPoint& x) const;

 private:
  Curve fault_;
  Rational shear_;
  FaultSide side_;
  Isometry frame_;
  Isometry shift_;
};

UHPPoint eq_apply(const EarthquakeMap& e, const UHPPoint& z);
BoundaryPoint eq_apply(const EarthquakeMap& e, const BoundaryPoint& x);

/// The geodesic spanned by the images of g's endpoints. Flagged inexact when
/// those images are irrational with no common quadratic field.
Curve eq_geodesic_image(const EarthquakeMap& e, const Curve& g);

struct PointwiseImage {
  bool is_curve = false;
  /// On failure: four image points on no common generalized circle.
  std::vector<UHPPoint> witness;
  std::size_t samples = 0;
  /// False when the curve had no rational base point and the test fell back
  /// to floating point.
  bool exact = true;
};

/// Maps sample_count points of c and tests whether all images lie on one
/// generalized circle (exact rank test on rows (x^2 + y^2, x, y, 1)).
/// Throws InvalidInput when sample_count < 4 or fewer than 4 samples exist.
PointwiseImage pointwise_image_is_curve(const std::function<UHPPoint(const UHPPoint&)>& map, const Curve& c,
                                        std::size_t sample_count);
/// Same, with samples balanced across the two sides of the fault and every
/// exact contact point with the fault included.
PointwiseImage pointwise_image_is_curve(const EarthquakeMap& e, const Curve& c, std::size_t sample_count);

/// Rational points of c in y > 0 (at most `count`), exact when c has a
/// rational boundary point or is a line; empty otherwise.
std::vector<UHPPoint> rational_samples(const Curve& c, std::size_t count);

// ---------------------------------------------------------------- realizability

enum class Relation { Tangent, Disjoint, Crossing };
std::string to_string(Relation relation);

struct RealizabilityInstance {
  std::vector<BoundaryPoint> centers;
  std::vector<BoundaryPoint> relabeled_centers;
  /// Symmetric; the diagonal is ignored.
  std::vector<std::vector<Relation>> pattern;
};

struct RealizabilityResult {
  bool satisfiable = false;
  /// Sizes at the relabeled centers, when satisfiable.
  std::vector<QuadraticReal> radii;
  /// The violated relation, e.g. "1 ≠ 4·(3/2)·(2/3)", when unsatisfiable.
  std::string certificate;
  /// One line per propagation step, ending with the contradiction.
  std::vector<std::string> derivation;
};

/// Decides whether positive sizes at the relabeled centers realize the
/// pattern: finite p, q tangent iff (p - q)^2 = 4 r s, disjoint iff >,
/// crossing iff <; against inf, tangent iff S = 2 r, disjoint iff S > 2 r.
/// Throws InvalidInput on shape errors, irrational centers, or tangent or
/// crossing pairs sharing a relabeled center.
RealizabilityResult tangency_realizability(const RealizabilityInstance& instance);

/// The instance asking whether the horocycles can be moved to the centers
/// map(center) keeping their pairwise pattern.
RealizabilityInstance instance_from_configuration(const std::vector<Curve>& horocycles,
                                                  const std::function<BoundaryPoint(const BoundaryPoint&)>& map);

}  // namespace hyperk
