#include "hyperk/earthquake.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <tuple>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

using Row = std::array<Rational, 4>;

Row incidence_row(const UHPPoint& z) { return {z.x() * z.x() + z.y() * z.y(), z.x(), z.y(), Rational(1)}; }

// Indices of rows forming a maximal independent prefix set, stopping at 4.
std::vector<std::size_t> pivot_rows(const std::vector<UHPPoint>& pts) {
  std::vector<Row> basis;
  std::vector<std::size_t> pivots_col;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < pts.size() && picked.size() < 4; ++i) {
    Row r = incidence_row(pts[i]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t col = pivots_col[b];
      if (sgn(r[col]) == 0) continue;
      const Rational f = r[col] / basis[b][col];
      for (std::size_t k = 0; k < 4; ++k) r[k] -= f * basis[b][k];
    }
    const auto nz = std::find_if(r.begin(), r.end(), [](const Rational& v) { return sgn(v) != 0; });
    if (nz == r.end()) continue;
    pivots_col.push_back(static_cast<std::size_t>(nz - r.begin()));
    basis.push_back(r);
    picked.push_back(i);
  }
  return picked;
}

long double det4(const std::array<std::array<long double, 4>, 4>& m) {
  std::array<std::array<long double, 4>, 4> a = m;
  long double det = 1;
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < 4; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    }
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < 4; ++r) {
      const long double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

PointwiseImage rank_test(const std::vector<UHPPoint>& images) {
  PointwiseImage out;
  out.samples = images.size();
  const bool exact = std::all_of(images.begin(), images.end(), [](const UHPPoint& z) { return z.exact(); });
  out.exact = exact;
  if (exact) {
    const auto picked = pivot_rows(images);
    if (picked.size() < 3) throw InvalidInput("pointwise image test: fewer than 4 usable samples");
    out.is_curve = picked.size() < 4;
    if (!out.is_curve) {
      for (auto i : picked) out.witness.push_back(images[i]);
    }
    return out;
  }
  auto row = [&](std::size_t i) {
    const long double x = to_long_double(images[i].x());
    const long double y = to_long_double(images[i].y());
    std::array<long double, 4> r{x * x + y * y, x, y, 1};
    long double n = 0;
    for (auto v : r) n = std::max(n, std::fabs(v));
    for (auto& v : r) v /= n;
    return r;
  };
  out.is_curve = true;
  for (std::size_t k = 3; k < images.size() && out.is_curve; ++k) {
    const std::array<std::array<long double, 4>, 4> m{row(0), row(1), row(2), row(k)};
    if (std::fabs(det4(m)) > 1e-9L) {
      out.is_curve = false;
      out.witness = {images[0], images[1], images[2], images[k]};
    }
  }
  return out;
}

std::vector<UHPPoint> float_samples(const Curve& c, std::size_t count) {
  std::vector<UHPPoint> out;
  const GeneralizedCircle& k = c.circle();
  const long double a = to_long_double(k.a());
  const long double b = to_long_double(k.b());
  const long double cc = to_long_double(k.c());
  const long double d = to_long_double(k.d());
  const std::size_t pool = 8 * count;
  for (std::size_t i = 0; i < pool && out.size() < count; ++i) {
    const long double theta = 2 * std::numbers::pi_v<long double> * (static_cast<long double>(i) + 0.5L) / pool;
    long double x = 0;
    long double y = 0;
    if (a != 0) {
      const long double cx = -b / (2 * a);
      const long double cy = -cc / (2 * a);
      const long double r = std::sqrt(b * b + cc * cc - 4 * a * d) / (2 * std::fabs(a));
      x = cx + r * std::cos(theta);
      y = cy + r * std::sin(theta);
    } else {
      const long double s = std::tan((theta - std::numbers::pi_v<long double>) / 2);
      const long double n = std::sqrt(b * b + cc * cc);
      const long double px = -b * d / (n * n);
      const long double py = -cc * d / (n * n);
      x = px + s * cc / n;
      y = py - s * b / n;
    }
    if (y > 0) out.push_back(UHPPoint::approximate(static_cast<double>(x), static_cast<double>(y)));
  }
  return out;
}

// A rational point of the circle on the closed upper half-plane.
std::optional<std::pair<Rational, Rational>> rational_base(const Curve& c) {
  if (c.is_horocycle() && c.center()->is_finite()) return std::make_pair(c.center()->rational(), Rational(0));
  for (const auto& e : c.endpoints()) {
    if (e.is_rational()) return std::make_pair(e.rational(), Rational(0));
  }
  return std::nullopt;
}

Rational dyadic_tan(long double theta, long den = 1024) {
  const long double v = std::tan(theta / 2);
  Rational out(static_cast<long>(std::llround(v * den)), den);
  out.canonicalize();
  return out;
}

// Rational points of a curve indexed by an angle in (lo, lo + width). Lines
// use the arctangent of the position along the line; circles use the
// direction of the chord from a rational boundary point.
struct ArcParam {
  bool line = false;
  Rational x0, y0, dx, dy;
  Rational a, gx, gy;
  long double lo = 0;
  long double width = 0;

  static std::optional<ArcParam> of(const Curve& c) {
    const GeneralizedCircle& k = c.circle();
    const long double pi = std::numbers::pi_v<long double>;
    ArcParam p;
    if (k.is_line()) {
      p.line = true;
      if (sgn(k.c()) == 0) {
        p.x0 = -k.d() / k.b();
        p.y0 = 1;
      } else if (sgn(k.b()) == 0) {
        p.x0 = 0;
        p.y0 = -k.d() / k.c();
      } else {
        p.y0 = 1;
        p.x0 = -(k.c() + k.d()) / k.b();
      }
      p.dx = k.c();
      p.dy = -k.b();
      if (sgn(p.dy) < 0 || (sgn(p.dy) == 0 && sgn(p.dx) < 0)) {
        p.dx = -p.dx;
        p.dy = -p.dy;
      }
      p.lo = -pi / 2;
      p.width = pi;
      return p;
    }
    const auto base = rational_base(c);
    if (!base) return std::nullopt;
    std::tie(p.x0, p.y0) = *base;
    p.a = k.a();
    p.gx = 2 * k.a() * p.x0 + k.b();
    p.gy = 2 * k.a() * p.y0 + k.c();
    p.width = pi;
    // Chords reach the upper arc in directions between the tangent at the
    // base point and the axis.
    if (sgn(p.gx) != 0) {
      long double tx = to_long_double(p.gy);
      long double ty = -to_long_double(p.gx);
      if (ty < 0) {
        tx = -tx;
        ty = -ty;
      }
      const long double tangent = std::atan2(ty, tx);
      const auto& ends = c.endpoints();
      const bool other_right = ends.front().is_rational() && ends.front().rational() == p.x0;
      p.lo = other_right ? 0 : tangent;
      p.width = other_right ? tangent : pi - tangent;
    }
    return p;
  }

  long double angle_of(long double x, long double y) const {
    if (line) {
      const long double ddx = to_long_double(dx);
      const long double ddy = to_long_double(dy);
      return std::atan(((x - to_long_double(x0)) * ddx + (y - to_long_double(y0)) * ddy) / (ddx * ddx + ddy * ddy));
    }
    return std::atan2(y - to_long_double(y0), x - to_long_double(x0));
  }

  std::optional<UHPPoint> at(long double phi, long den) const {
    if (line) {
      const Rational s = dyadic_tan(2 * phi, den);
      const Rational y = y0 + s * dy;
      if (sgn(y) <= 0) return std::nullopt;
      return UHPPoint(x0 + s * dx, y);
    }
    const Rational tau = dyadic_tan(phi, den);
    const Rational u = 1 - tau * tau;
    const Rational v = 2 * tau;
    const Rational t = -(gx * u + gy * v) / (a * (u * u + v * v));
    const Rational y = y0 + t * v;
    if (sgn(y) <= 0) return std::nullopt;
    return UHPPoint(x0 + t * u, y);
  }

  /// n parameters evenly inside (from, to), duplicates dropped.
  std::vector<UHPPoint> samples(long double from, long double to, std::size_t n) const {
    const long double pi = std::numbers::pi_v<long double>;
    long den = 1024;
    while (den < (1L << 40) && (to - from) * den < 1024 * pi) den *= 2;
    std::vector<UHPPoint> out;
    for (std::size_t i = 1; i <= n; ++i) {
      auto z = at(from + (to - from) * static_cast<long double>(i) / (n + 1), den);
      if (z && (out.empty() || !(out.back() == *z))) out.push_back(std::move(*z));
    }
    return out;
  }
};

// Keeps count samples spread over the whole curve.
std::vector<UHPPoint> spread_out(std::vector<UHPPoint> samples, std::size_t count) {
  if (samples.size() <= count) return samples;
  std::vector<UHPPoint> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(samples[i * samples.size() / count]);
  return out;
}

}  // namespace

std::string to_string(FaultSide side) { return side == FaultSide::Left ? "left" : "right"; }

FaultSide parse_fault_side(std::string_view text) {
  if (text == "left" || text == "Left") return FaultSide::Left;
  if (text == "right" || text == "Right") return FaultSide::Right;
  throw InvalidInput("unknown side '" + std::string(text) + "' (expected left or right)");
}

EarthquakeMap::EarthquakeMap(Curve fault, Rational shear, FaultSide moved_side)
    : fault_(std::move(fault)), shear_(std::move(shear)), side_(moved_side) {
  if (!fault_.is_geodesic()) throw InvalidInput("earthquake fault must be a geodesic");
  const auto& ends = fault_.endpoints();
  for (const auto& e : ends) {
    if (e.is_finite() && !e.is_rational()) throw InvalidInput("earthquake fault needs rational endpoints");
  }
  if (sgn(shear_) <= 0 || shear_ == 1) throw InvalidInput("earthquake shear must be positive and different from 1");
  const Rational p = ends[0].rational();
  frame_ = ends[1].is_infinity() ? Isometry::translation(-p) : Isometry(-1, p, 1, -ends[1].rational());
  shift_ = frame_.inverse() * Isometry::dilation(shear_) * frame_;
}

bool EarthquakeMap::moves(const UHPPoint& z) const {
  const int s = sgn(apply(frame_, z).x());
  return side_ == FaultSide::Left ? s < 0 : s > 0;
}

bool EarthquakeMap::moves(const BoundaryPoint& x) const {
  const BoundaryPoint w = apply(frame_, x);
  if (w.is_infinity()) return false;
  const int s = w.value().sign();
  return side_ == FaultSide::Left ? s < 0 : s > 0;
}

UHPPoint eq_apply(const EarthquakeMap& e, const UHPPoint& z) {
  return e.moves(z) ? apply(e.shear_isometry(), z) : z;
}

BoundaryPoint eq_apply(const EarthquakeMap& e, const BoundaryPoint& x) {
  return e.moves(x) ? apply(e.shear_isometry(), x) : x;
}

Curve eq_geodesic_image(const EarthquakeMap& e, const Curve& g) {
  if (g.is_horocycle()) throw InvalidInput("eq_geodesic_image needs a curve with two endpoints");
  const BoundaryPoint p = eq_apply(e, g.endpoints()[0]);
  const BoundaryPoint q = eq_apply(e, g.endpoints()[1]);
  try {
    return make_geodesic(p, q);
  } catch (const InvalidInput&) {
    if (p.is_infinity() || q.is_infinity()) {
      const double x = p.is_infinity() ? q.to_double() : p.to_double();
      return Curve(GeneralizedCircle(0, 1, 0, -rational_from_double(x)), false);
    }
    const double a = p.to_double();
    const double b = q.to_double();
    return Curve(GeneralizedCircle(1, -rational_from_double(a + b), 0, rational_from_double(a * b)), false);
  }
}

std::vector<UHPPoint> rational_samples(const Curve& c, std::size_t count) {
  const auto param = ArcParam::of(c);
  if (!param) return {};
  return spread_out(param->samples(param->lo, param->lo + param->width, std::max<std::size_t>(4 * count, 16)), count);
}

PointwiseImage pointwise_image_is_curve(const std::function<UHPPoint(const UHPPoint&)>& map, const Curve& c,
                                        std::size_t sample_count) {
  if (sample_count < 4) throw InvalidInput("pointwise image test needs at least 4 samples");
  std::vector<UHPPoint> samples = rational_samples(c, sample_count);
  if (samples.size() < 4) samples = float_samples(c, sample_count);
  if (samples.size() < 4) throw InvalidInput("pointwise image test: fewer than 4 usable samples");
  std::vector<UHPPoint> images;
  for (const auto& z : samples) images.push_back(map(z));
  return rank_test(images);
}

PointwiseImage pointwise_image_is_curve(const EarthquakeMap& e, const Curve& c, std::size_t sample_count) {
  if (sample_count < 4) throw InvalidInput("pointwise image test needs at least 4 samples");
  // A curve crossing the fault is sampled on every arc between crossings.
  const auto meet = intersection_pattern(c, e.fault());
  const auto param = ArcParam::of(c);
  std::vector<UHPPoint> pool;
  if (param && meet.interior_count > 0 && !meet.tangent) {
    std::vector<long double> cuts{param->lo, param->lo + param->width};
    for (const auto& z : meet.interior_points) {
      cuts.push_back(std::clamp(param->angle_of(z.x_double(), z.y_double()), cuts[0], cuts[1]));
    }
    std::sort(cuts.begin(), cuts.end());
    const std::size_t per_arc = std::max<std::size_t>(2, (sample_count + cuts.size() - 2) / (cuts.size() - 1));
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      for (auto& z : param->samples(cuts[j], cuts[j + 1], per_arc)) pool.push_back(std::move(z));
    }
  } else {
    pool = rational_samples(c, 8 * sample_count);
  }
  if (pool.size() < 4) pool = float_samples(c, 8 * sample_count);
  std::vector<UHPPoint> moved;
  std::vector<UHPPoint> still;
  for (const auto& z : pool) (e.moves(z) ? moved : still).push_back(z);
  // Points where c touches the fault stay put while their neighbours move;
  // a tangent curve is broken only there, so exact contacts are always sampled.
  std::vector<UHPPoint> samples;
  for (const auto& z : meet.interior_points) {
    if (z.exact() && samples.size() < sample_count / 2) samples.push_back(z);
  }
  std::size_t i = 0;
  std::size_t j = 0;
  while (samples.size() < sample_count && (i < moved.size() || j < still.size())) {
    if (i < moved.size()) samples.push_back(moved[i++]);
    if (samples.size() < sample_count && j < still.size()) samples.push_back(still[j++]);
  }
  if (samples.size() < 4) throw InvalidInput("pointwise image test: fewer than 4 usable samples");
  std::vector<UHPPoint> images;
  for (const auto& z : samples) images.push_back(eq_apply(e, z));
  return rank_test(images);
}

}  // namespace hyperk
