#include "hyperk/hypermodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

// Homogeneous coordinates (num, den) of a rational boundary point; inf is (1, 0).
std::array<Rational, 2> homogeneous(const BoundaryPoint& p) {
  if (p.is_infinity()) return {Rational(1), Rational(0)};
  if (!p.is_rational()) throw InvalidInput("boundary point must be rational: " + to_string(p));
  return {p.rational(), Rational(1)};
}

Rational require_rational(const QuadraticReal& value, const char* what) {
  if (!value.is_rational()) {
    throw InvalidInput(std::string(what) + " is irrational: " + to_string(value));
  }
  return value.as_rational();
}

// Runs f; std::domain_error from mixed radicands becomes InvalidInput.
template <class F>
auto guarded(F&& f, const char* what) {
  try {
    return f();
  } catch (const std::domain_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

std::array<Rational, 4> as_coefficients(const GeneralizedCircle& c) { return c.coefficients(); }

}  // namespace

// ---------------------------------------------------------------- boundary

const QuadraticReal& BoundaryPoint::value() const {
  if (!value_) throw std::domain_error("boundary point at infinity has no finite value");
  return *value_;
}

const Rational& BoundaryPoint::rational() const {
  if (!is_rational()) throw std::domain_error("boundary point is not a finite rational");
  return value_->as_rational();
}

double BoundaryPoint::to_double() const {
  return value_ ? value_->to_double() : std::numeric_limits<double>::infinity();
}

bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) { return compare(a, b) == 0; }

int compare(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return static_cast<int>(a.is_infinity()) - static_cast<int>(b.is_infinity());
  }
  return compare(a.value(), b.value());
}

std::string to_string(const BoundaryPoint& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

BoundaryPoint parse_boundary_point(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo" || text == "Infinity") {
    return BoundaryPoint::infinity();
  }
  return BoundaryPoint(parse_rational(text));
}

// ---------------------------------------------------------------- points

UHPPoint::UHPPoint(Rational x, Rational y, bool exact) : x_(std::move(x)), y_(std::move(y)), exact_(exact) {
  if (sgn(y_) <= 0) throw InvalidInput("point not in the upper half-plane (y = " + to_string(y_) + ")");
}

UHPPoint UHPPoint::approximate(double x, double y) {
  return UHPPoint(rational_from_double(x), rational_from_double(y), false);
}

std::string to_string(const UHPPoint& z) {
  std::string out = "(" + to_string(z.x()) + ", " + to_string(z.y()) + ")";
  return z.exact() ? out : "~" + out;
}

// ---------------------------------------------------------------- circles

std::array<Rational, 4> canonical_coefficients(const std::array<Rational, 4>& coeff) {
  Integer lcm_den = 1;
  for (const auto& v : coeff) lcm_den = lcm(lcm_den, v.get_den());
  std::array<Integer, 4> ints;
  Integer g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ints[i] = coeff[i].get_num() * (lcm_den / coeff[i].get_den());
    g = gcd(g, ints[i]);
  }
  if (sgn(g) == 0) return coeff;
  int lead = 0;
  for (std::size_t i = 0; i < 3 && lead == 0; ++i) lead = sgn(ints[i]);
  if (lead == 0) lead = sgn(ints[3]);
  if (lead < 0) g = -g;
  std::array<Rational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = Rational(ints[i] / g);
  return out;
}

GeneralizedCircle::GeneralizedCircle(Rational a, Rational b, Rational c, Rational d) {
  if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) {
    throw DegenerateCircle("degenerate coefficients: a, b and c are all zero");
  }
  if (sgn(b * b + c * c - 4 * a * d) <= 0) {
    throw DegenerateCircle("degenerate circle: b^2 + c^2 - 4ad <= 0 (point or empty locus)");
  }
  coeff_ = canonical_coefficients({a, b, c, d});
}

Rational GeneralizedCircle::evaluate(const Rational& x, const Rational& y) const {
  return a() * (x * x + y * y) + b() * x + c() * y + d();
}

long double GeneralizedCircle::evaluate(long double x, long double y) const {
  return to_long_double(a()) * (x * x + y * y) + to_long_double(b()) * x + to_long_double(c()) * y +
         to_long_double(d());
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::Geodesic: return "geodesic";
    case CurveKind::Horocycle: return "horocycle";
    case CurveKind::Hypercycle: return "hypercycle";
  }
  return "?";
}

std::string to_string(LocusClass cls) {
  switch (cls) {
    case LocusClass::Geodesic: return "Geodesic";
    case LocusClass::Horocycle: return "Horocycle";
    case LocusClass::Hypercycle: return "Hypercycle";
    case LocusClass::HyperbolicCircle: return "HyperbolicCircle";
    case LocusClass::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
  }
  return "?";
}

CurveKind parse_curve_kind(std::string_view text) {
  if (text == "geodesic" || text == "Geodesic") return CurveKind::Geodesic;
  if (text == "horocycle" || text == "Horocycle") return CurveKind::Horocycle;
  if (text == "hypercycle" || text == "Hypercycle") return CurveKind::Hypercycle;
  throw InvalidInput("unknown curve kind '" + std::string(text) + "'");
}

LocusClass classify_curve(const GeneralizedCircle& circle) {
  const int sa = sgn(circle.a());
  const int sb = sgn(circle.b());
  const int sc = sgn(circle.c());
  if (sa == 0) {
    if (sc == 0) return LocusClass::Geodesic;
    if (sb == 0) {
      // y = -d/c
      return sgn(-circle.d() / circle.c()) > 0 ? LocusClass::Horocycle : LocusClass::NotInUpperHalfPlane;
    }
    return LocusClass::Hypercycle;
  }
  if (sc == 0) return LocusClass::Geodesic;
  // Canonical form has a > 0, so the Euclidean center height is -c/(2a).
  const int disc = sgn(circle.boundary_discriminant());
  if (disc > 0) return LocusClass::Hypercycle;
  const bool above = sc < 0;
  if (disc == 0) return above ? LocusClass::Horocycle : LocusClass::NotInUpperHalfPlane;
  return above ? LocusClass::HyperbolicCircle : LocusClass::NotInUpperHalfPlane;
}

// ---------------------------------------------------------------- curves

Curve::Curve(GeneralizedCircle circle, bool exact) : circle_(std::move(circle)), exact_(exact) {
  const LocusClass cls = classify_curve(circle_);
  switch (cls) {
    case LocusClass::Geodesic: kind_ = CurveKind::Geodesic; break;
    case LocusClass::Horocycle: kind_ = CurveKind::Horocycle; break;
    case LocusClass::Hypercycle: kind_ = CurveKind::Hypercycle; break;
    default:
      throw InvalidInput("locus is not a geodesic, horocycle or hypercycle: " + to_string(cls));
  }
  const Rational& a = circle_.a();
  const Rational& b = circle_.b();
  const Rational& c = circle_.c();
  const Rational& d = circle_.d();
  if (kind_ == CurveKind::Horocycle) {
    if (sgn(a) == 0) {
      center_ = BoundaryPoint::infinity();
      size_ = -d / c;
    } else {
      center_ = BoundaryPoint(Rational(-b / (2 * a)));
      size_ = -c / (2 * a);
    }
    endpoints_ = {*center_};
    return;
  }
  if (sgn(a) == 0) {
    endpoints_ = {BoundaryPoint(Rational(-d / b)), BoundaryPoint::infinity()};
    return;
  }
  // Roots of a x^2 + b x + d; coefficients are coprime integers after
  // canonicalization, so the discriminant is an integer.
  const Rational disc = circle_.boundary_discriminant();
  const Rational half = Rational(1) / (2 * a);
  const Rational base = -b * half;
  endpoints_ = {BoundaryPoint(QuadraticReal(base, -half, disc.get_num())),
                BoundaryPoint(QuadraticReal(base, half, disc.get_num()))};
}

Curve make_geodesic(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p == q) throw InvalidInput("geodesic endpoints coincide: " + to_string(p));
  if (p.is_infinity() || q.is_infinity()) {
    const BoundaryPoint& f = p.is_infinity() ? q : p;
    const Rational x = require_rational(f.value(), "geodesic endpoint");
    return Curve(GeneralizedCircle(0, 1, 0, -x));
  }
  return guarded(
      [&] {
        const Rational sum = require_rational(p.value() + q.value(), "sum of geodesic endpoints");
        const Rational prod = require_rational(p.value() * q.value(), "product of geodesic endpoints");
        return Curve(GeneralizedCircle(1, -sum, 0, prod));
      },
      "geodesic endpoints");
}

Curve make_horocycle(const BoundaryPoint& center, const Rational& size) {
  if (sgn(size) <= 0) throw InvalidInput("horocycle size must be positive, got " + to_string(size));
  if (center.is_infinity()) return Curve(GeneralizedCircle(0, 0, 1, -size));
  const Rational p = require_rational(center.value(), "horocycle center");
  return Curve(GeneralizedCircle(1, -2 * p, -2 * size, p * p));
}

Curve make_hypercycle(const BoundaryPoint& p, const BoundaryPoint& q, const UHPPoint& through) {
  if (p == q) throw InvalidInput("hypercycle endpoints coincide: " + to_string(p));
  const Rational& x0 = through.x();
  const Rational& y0 = through.y();
  std::array<Rational, 4> coeff;
  if (p.is_infinity() || q.is_infinity()) {
    const BoundaryPoint& f = p.is_infinity() ? q : p;
    const Rational e = require_rational(f.value(), "hypercycle endpoint");
    coeff = {Rational(0), y0, Rational(-(x0 - e)), Rational(-e * y0)};
  } else {
    coeff = guarded(
        [&] {
          const Rational sum = require_rational(p.value() + q.value(), "sum of hypercycle endpoints");
          const Rational prod = require_rational(p.value() * q.value(), "product of hypercycle endpoints");
          // (x-p)(x-q) + y^2 + c y = 0 through (x0, y0), scaled by y0.
          const Rational c = -(x0 * x0 + y0 * y0 - sum * x0 + prod);
          return std::array<Rational, 4>{y0, Rational(-y0 * sum), c, Rational(y0 * prod)};
        },
        "hypercycle endpoints");
  }
  if (sgn(coeff[2]) == 0) {
    throw DegenerateResult("point " + to_string(through) + " lies on the geodesic (" + to_string(p) + ", " +
                           to_string(q) + "); the result would be that geodesic");
  }
  return Curve(GeneralizedCircle(coeff[0], coeff[1], coeff[2], coeff[3]), through.exact());
}

namespace {

EquidistantPair pencil_pair(const Curve& g, const Rational& lambda, bool exact) {
  const auto& k = g.circle().coefficients();
  Curve first(GeneralizedCircle(k[0], k[1], -lambda, k[3]), exact);
  Curve second(GeneralizedCircle(k[0], k[1], lambda, k[3]), exact);
  return EquidistantPair{std::move(first), std::move(second), false, exact};
}

void require_geodesic(const Curve& g, const char* op) {
  if (!g.is_geodesic()) throw InvalidInput(std::string(op) + " needs a geodesic, got a " + to_string(g.kind()));
}

}  // namespace

EquidistantPair equidistant_pair_sinh(const Curve& geodesic, const Rational& sinh_distance) {
  require_geodesic(geodesic, "equidistant_pair");
  if (sgn(sinh_distance) < 0) throw InvalidInput("distance must be nonnegative");
  if (sgn(sinh_distance) == 0) return EquidistantPair{geodesic, geodesic, true, geodesic.exact()};
  const Rational disc = geodesic.circle().boundary_discriminant();
  Rational root;
  if (exact_sqrt(disc, root)) return pencil_pair(geodesic, sinh_distance * root, geodesic.exact());
  const long double lambda = to_long_double(sinh_distance) * std::sqrt(to_long_double(disc));
  return pencil_pair(geodesic, rational_from_long_double(lambda), false);
}

EquidistantPair equidistant_pair(const Curve& geodesic, double distance) {
  require_geodesic(geodesic, "equidistant_pair");
  if (!(distance >= 0.0) || !std::isfinite(distance)) throw InvalidInput("distance must be a finite nonnegative number");
  if (distance == 0.0) return EquidistantPair{geodesic, geodesic, true, geodesic.exact()};
  const long double s = std::sinh(static_cast<long double>(distance));
  const long double lambda = s * std::sqrt(to_long_double(geodesic.circle().boundary_discriminant()));
  return pencil_pair(geodesic, rational_from_long_double(lambda), false);
}

// ---------------------------------------------------------------- isometries

Isometry::Isometry() : m_{Rational(1), Rational(0), Rational(0), Rational(1)}, orientation_(Orientation::Preserving) {}

Isometry::Isometry(Rational m00, Rational m01, Rational m10, Rational m11, Orientation orientation)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)}, orientation_(orientation) {
  if (sgn(determinant()) <= 0) {
    throw InvalidInput("isometry matrix needs a positive determinant, got " + to_string(determinant()));
  }
}

Isometry Isometry::translation(const Rational& shift) { return Isometry(1, shift, 0, 1); }

Isometry Isometry::dilation(const Rational& factor) {
  if (sgn(factor) <= 0) throw InvalidInput("dilation factor must be positive");
  return Isometry(factor, 0, 0, 1);
}

Isometry Isometry::reflection() { return Isometry(1, 0, 0, 1, Orientation::Reversing); }

namespace {

using Mat = std::array<Rational, 4>;

Mat conj_j(const Mat& m) { return {m[0], -m[1], -m[2], m[3]}; }
Mat adjugate(const Mat& m) { return {m[3], -m[1], -m[2], m[0]}; }
Mat multiply(const Mat& l, const Mat& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
          l[2] * r[1] + l[3] * r[3]};
}

Orientation flip(Orientation a, Orientation b) {
  return (a == b) ? Orientation::Preserving : Orientation::Reversing;
}

}  // namespace

Isometry Isometry::compose(const Isometry& inner) const {
  const Mat rhs = preserves_orientation() ? inner.m_ : conj_j(inner.m_);
  const Mat m = multiply(m_, rhs);
  return Isometry(m[0], m[1], m[2], m[3], flip(orientation_, inner.orientation_));
}

Isometry Isometry::inverse() const {
  const Mat adj = adjugate(m_);
  const Mat m = preserves_orientation() ? adj : conj_j(adj);
  return Isometry(m[0], m[1], m[2], m[3], orientation_);
}

Isometry Isometry::normalized() const {
  const auto c = canonical_coefficients({m_[0], m_[1], m_[2], m_[3]});
  // canonical_coefficients fixes the sign from the first three entries,
  // which matches "first nonzero positive" for a matrix with det != 0.
  return Isometry(c[0], c[1], c[2], c[3], orientation_);
}

bool operator==(const Isometry& a, const Isometry& b) {
  if (a.orientation_ != b.orientation_) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (a.m_[i] * b.m_[j] != a.m_[j] * b.m_[i]) return false;
    }
  }
  return true;
}

std::string to_string(const Isometry& iso) {
  const Isometry n = iso.normalized();
  return "[[" + to_string(n.m00()) + ", " + to_string(n.m01()) + "], [" + to_string(n.m10()) + ", " +
         to_string(n.m11()) + "]] " + (iso.preserves_orientation() ? "preserving" : "reversing");
}

UHPPoint apply(const Isometry& iso, const UHPPoint& z) {
  const Rational x = iso.preserves_orientation() ? z.x() : Rational(-z.x());
  const Rational& y = z.y();
  const Rational num = iso.m00() * x + iso.m01();
  const Rational den = iso.m10() * x + iso.m11();
  const Rational norm = den * den + iso.m10() * iso.m10() * y * y;
  const Rational re = (num * den + iso.m00() * iso.m10() * y * y) / norm;
  const Rational im = y * iso.determinant() / norm;
  return UHPPoint(re, im, z.exact());
}

BoundaryPoint apply(const Isometry& iso, const BoundaryPoint& p) {
  if (p.is_infinity()) {
    if (sgn(iso.m10()) == 0) return BoundaryPoint::infinity();
    return BoundaryPoint(Rational(iso.m00() / iso.m10()));
  }
  const QuadraticReal x = iso.preserves_orientation() ? p.value() : -p.value();
  const QuadraticReal den = QuadraticReal(iso.m10()) * x + QuadraticReal(iso.m11());
  if (den.sign() == 0) return BoundaryPoint::infinity();
  return BoundaryPoint((QuadraticReal(iso.m00()) * x + QuadraticReal(iso.m01())) / den);
}

GeneralizedCircle apply(const Isometry& iso, const GeneralizedCircle& circle) {
  auto k = as_coefficients(circle);
  const Rational& a = k[0];
  const Rational b = iso.preserves_orientation() ? k[1] : Rational(-k[1]);
  const Rational& c = k[2];
  const Rational& d = k[3];
  // The image is C o M^{-1}; N = adj(M) represents M^{-1} projectively.
  const Rational n00 = iso.m11();
  const Rational n01 = -iso.m01();
  const Rational n10 = -iso.m10();
  const Rational n11 = iso.m00();
  const Rational A = a * n00 * n00 + b * n00 * n10 + d * n10 * n10;
  const Rational B = 2 * a * n00 * n01 + b * (n00 * n11 + n01 * n10) + 2 * d * n10 * n11;
  const Rational C = c * iso.determinant();
  const Rational D = a * n01 * n01 + b * n01 * n11 + d * n11 * n11;
  return GeneralizedCircle(A, B, C, D);
}

Curve apply(const Isometry& iso, const Curve& curve) { return Curve(apply(iso, curve.circle()), curve.exact()); }

Isometry two_point_normalizer(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x == y) throw InvalidInput("two_point_normalizer needs distinct points, got " + to_string(x) + " twice");
  if (x.is_infinity()) {
    const Rational yv = require_rational(y.value(), "normalizer point");
    return Isometry::translation(-yv);
  }
  const Rational xv = require_rational(x.value(), "normalizer point");
  if (y.is_infinity()) return Isometry(0, -1, 1, -xv);
  const Rational yv = require_rational(y.value(), "normalizer point");
  const Rational gap = yv - xv;
  return Isometry(1, -yv, gap, -xv * gap);
}

namespace {

// K sends s1 -> 0, s2 -> 1, s3 -> inf (real Mobius, possibly det < 0).
Mat cross_ratio_matrix(const std::array<BoundaryPoint, 3>& s) {
  const auto v1 = homogeneous(s[0]);
  const auto v2 = homogeneous(s[1]);
  const auto v3 = homogeneous(s[2]);
  // l_i(v) = den_i * v0 - num_i * v1 vanishes at s_i.
  const Rational alpha = v3[1] * v2[0] - v3[0] * v2[1];
  const Rational beta = v1[1] * v2[0] - v1[0] * v2[1];
  return {alpha * v1[1], -alpha * v1[0], beta * v3[1], -beta * v3[0]};
}

void require_distinct(const std::array<BoundaryPoint, 3>& s, const char* which) {
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    throw InvalidInput(std::string("triple_normalizer: repeated point in ") + which + " triple");
  }
}

}  // namespace

Isometry triple_normalizer(const std::array<BoundaryPoint, 3>& src, const std::array<BoundaryPoint, 3>& dst) {
  require_distinct(src, "source");
  require_distinct(dst, "target");
  const Mat m = multiply(adjugate(cross_ratio_matrix(dst)), cross_ratio_matrix(src));
  const Rational det = m[0] * m[3] - m[1] * m[2];
  if (sgn(det) > 0) return Isometry(m[0], m[1], m[2], m[3]);
  // x -> M(x) = M'(-x) with M' = M diag(-1, 1).
  return Isometry(-m[0], m[1], -m[2], m[3], Orientation::Reversing);
}

double distance_to_geodesic(const UHPPoint& z, const Curve& geodesic) {
  require_geodesic(geodesic, "distance_to_geodesic");
  const GeneralizedCircle& g = geodesic.circle();
  const Rational f = g.evaluate(z.x(), z.y());
  const long double disc = to_long_double(g.boundary_discriminant());
  const long double s = std::fabs(to_long_double(f)) / (to_long_double(z.y()) * std::sqrt(disc));
  return static_cast<double>(std::asinh(s));
}

}  // namespace hyperk
