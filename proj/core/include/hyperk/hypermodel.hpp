#pragma once

// Value types of the upper half-plane model H^2 = {x + iy : y > 0}:
// boundary points, interior points, generalized circles, the three constant
// curvature curve classes, and isometries acting on all of them.
//
// Every curve is the trace in y > 0 of a generalized circle
//     a(x^2 + y^2) + b x + c y + d = 0
// with rational coefficients, so incidence, tangency and classification are
// sign tests on polynomials in (a, b, c, d).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperk/number.hpp"

namespace hyperk {

/// A point of the circle at infinity R u {inf}. Finite values are exact
/// elements of Q(sqrt r); most construction inputs are plain rationals.
class BoundaryPoint {
 public:
  BoundaryPoint() : value_(QuadraticReal(0)) {}
  BoundaryPoint(const Rational& value) : value_(QuadraticReal(value)) {}  // NOLINT
  BoundaryPoint(int value) : value_(QuadraticReal(value)) {}              // NOLINT
  BoundaryPoint(QuadraticReal value) : value_(std::move(value)) {}         // NOLINT

  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.value_.reset();
    return p;
  }

  bool is_infinity() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  bool is_rational() const { return value_ && value_->is_rational(); }
  /// Throws std::domain_error for the point at infinity.
  const QuadraticReal& value() const;
  /// Throws std::domain_error unless finite and rational.
  const Rational& rational() const;
  /// +inf for the point at infinity.
  double to_double() const;

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b);

 private:
  std::optional<QuadraticReal> value_;
};

/// Total order on R u {inf} with inf as the largest element. This is the
/// linear order obtained by cutting the circle at inf.
int compare(const BoundaryPoint& a, const BoundaryPoint& b);
inline bool operator<(const BoundaryPoint& a, const BoundaryPoint& b) { return compare(a, b) < 0; }

std::string to_string(const BoundaryPoint& p);
/// Accepts rationals ("3", "-1/2") and "inf", "infinity", "oo".
BoundaryPoint parse_boundary_point(std::string_view text);

/// Interior point of H^2. Coordinates are always stored as exact rationals;
/// points produced from floating data (intersection coordinates, samples)
/// carry exact() == false, meaning the stored rational only approximates the
/// intended point.
class UHPPoint {
 public:
  /// Throws InvalidInput unless y > 0.
  UHPPoint(Rational x, Rational y, bool exact = true);
  static UHPPoint approximate(double x, double y);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  bool exact() const { return exact_; }
  double x_double() const { return to_double(x_); }
  double y_double() const { return to_double(y_); }

  friend bool operator==(const UHPPoint& a, const UHPPoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  Rational x_;
  Rational y_;
  bool exact_;
};

std::string to_string(const UHPPoint& z);

/// The locus a(x^2+y^2) + bx + cy + d = 0, kept in canonical form: coprime
/// integer coefficients with the first nonzero of (a, b, c) positive.
class GeneralizedCircle {
 public:
  /// Throws DegenerateCircle when a = b = c = 0 or b^2 + c^2 - 4ad <= 0.
  GeneralizedCircle(Rational a, Rational b, Rational c, Rational d);

  const Rational& a() const { return coeff_[0]; }
  const Rational& b() const { return coeff_[1]; }
  const Rational& c() const { return coeff_[2]; }
  const Rational& d() const { return coeff_[3]; }
  const std::array<Rational, 4>& coefficients() const { return coeff_; }

  bool is_line() const { return sgn(coeff_[0]) == 0; }
  /// b^2 - 4ad: sign tells how the locus meets the real axis.
  Rational boundary_discriminant() const { return b() * b() - 4 * a() * d(); }
  Rational evaluate(const Rational& x, const Rational& y) const;
  long double evaluate(long double x, long double y) const;

  friend bool operator==(const GeneralizedCircle& l, const GeneralizedCircle& r) { return l.coeff_ == r.coeff_; }

 private:
  std::array<Rational, 4> coeff_;
};

/// Canonical representative of (a, b, c, d) up to nonzero scaling. Exposed
/// so tests can check idempotence separately from the constructor.
std::array<Rational, 4> canonical_coefficients(const std::array<Rational, 4>& coeff);

enum class CurveKind { Geodesic, Horocycle, Hypercycle };
enum class LocusClass { Geodesic, Horocycle, Hypercycle, HyperbolicCircle, NotInUpperHalfPlane };

std::string to_string(CurveKind kind);
std::string to_string(LocusClass cls);
CurveKind parse_curve_kind(std::string_view text);

/// Exact classification by sign tests on (a, b, c, b^2 - 4ad).
LocusClass classify_curve(const GeneralizedCircle& circle);

/// A geodesic, horocycle or hypercycle of H^2 with its boundary data.
class Curve {
 public:
  /// Throws InvalidInput when the circle is a hyperbolic circle or misses H^2.
  explicit Curve(GeneralizedCircle circle, bool exact = true);

  const GeneralizedCircle& circle() const { return circle_; }
  CurveKind kind() const { return kind_; }
  bool is_geodesic() const { return kind_ == CurveKind::Geodesic; }
  bool is_horocycle() const { return kind_ == CurveKind::Horocycle; }
  bool is_hypercycle() const { return kind_ == CurveKind::Hypercycle; }
  bool exact() const { return exact_; }

  /// Boundary points of the curve, sorted (inf last): two for geodesics and
  /// hypercycles, the center for horocycles.
  const std::vector<BoundaryPoint>& endpoints() const { return endpoints_; }
  /// Horocycles only.
  const std::optional<BoundaryPoint>& center() const { return center_; }
  /// Horocycles only: Euclidean radius, or the height of a horizontal line.
  const std::optional<Rational>& size() const { return size_; }

  friend bool operator==(const Curve& l, const Curve& r) { return l.circle_ == r.circle_; }

 private:
  GeneralizedCircle circle_;
  CurveKind kind_;
  bool exact_;
  std::vector<BoundaryPoint> endpoints_;
  std::optional<BoundaryPoint> center_;
  std::optional<Rational> size_;
};

Curve make_geodesic(const BoundaryPoint& p, const BoundaryPoint& q);
/// h(center, size): Euclidean radius `size` for a finite center, the line
/// y = size for the center at infinity.
Curve make_horocycle(const BoundaryPoint& center, const Rational& size);
/// The generalized circle through boundary points p, q and interior point
/// `through`. Throws DegenerateResult when `through` lies on geodesic(p, q).
Curve make_hypercycle(const BoundaryPoint& p, const BoundaryPoint& q, const UHPPoint& through);

/// Boundary of the distance-d crescent around a geodesic. `first` lies where
/// the geodesic's canonical equation is positive (outside a semicircle, right
/// of a vertical line), `second` on the other side.
struct EquidistantPair {
  Curve first;
  Curve second;
  bool degenerate = false;
  bool exact = true;
};

EquidistantPair equidistant_pair(const Curve& geodesic, double distance);
/// Same, with the distance given through its hyperbolic sine, which keeps the
/// construction exact whenever the geodesic has rational endpoints.
EquidistantPair equidistant_pair_sinh(const Curve& geodesic, const Rational& sinh_distance);

enum class Orientation { Preserving, Reversing };

/// Isometry of H^2 as a projective real 2x2 matrix with positive determinant
/// plus an orientation flag. Preserving acts by z -> (m00 z + m01)/(m10 z + m11);
/// Reversing first applies z -> -conj(z). Matrices are not scaled to det 1.
class Isometry {
 public:
  Isometry();
  /// Throws InvalidInput unless m00*m11 - m01*m10 > 0.
  Isometry(Rational m00, Rational m01, Rational m10, Rational m11,
           Orientation orientation = Orientation::Preserving);

  static Isometry identity() { return {}; }
  static Isometry translation(const Rational& shift);
  static Isometry dilation(const Rational& factor);
  /// z -> -conj(z), the reflection in the imaginary axis.
  static Isometry reflection();

  const Rational& m00() const { return m_[0]; }
  const Rational& m01() const { return m_[1]; }
  const Rational& m10() const { return m_[2]; }
  const Rational& m11() const { return m_[3]; }
  Orientation orientation() const { return orientation_; }
  bool preserves_orientation() const { return orientation_ == Orientation::Preserving; }
  Rational determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  /// this o inner
  Isometry compose(const Isometry& inner) const;
  Isometry inverse() const;
  /// Coprime integer matrix with the first nonzero entry positive.
  Isometry normalized() const;

  friend bool operator==(const Isometry& a, const Isometry& b);

 private:
  std::array<Rational, 4> m_;
  Orientation orientation_;
};

inline Isometry operator*(const Isometry& outer, const Isometry& inner) { return outer.compose(inner); }
std::string to_string(const Isometry& iso);

UHPPoint apply(const Isometry& iso, const UHPPoint& z);
BoundaryPoint apply(const Isometry& iso, const BoundaryPoint& x);
GeneralizedCircle apply(const Isometry& iso, const GeneralizedCircle& circle);
Curve apply(const Isometry& iso, const Curve& curve);

/// Orientation-preserving phi with phi(x) = inf and phi(y) = 0, given by
/// phi(z) = 1/(y - x) - 1/(z - x) for finite x, y. Infinite arguments are
/// handled by the limiting maps. Requires rational points.
Isometry two_point_normalizer(const BoundaryPoint& x, const BoundaryPoint& y);

/// The unique isometry sending src[i] to dst[i]; orientation-reversing when
/// the two triples have opposite cyclic orientation. Requires rational points.
Isometry triple_normalizer(const std::array<BoundaryPoint, 3>& src,
                           const std::array<BoundaryPoint, 3>& dst);

/// Hyperbolic distance from z to a geodesic, from the invariant
/// sinh^2 d = F(z)^2 / (y^2 (b^2 - 4ad)).
double distance_to_geodesic(const UHPPoint& z, const Curve& geodesic);

}  // namespace hyperk
