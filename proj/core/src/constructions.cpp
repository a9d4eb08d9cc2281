#include "hyperk/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

Rational power_of_two(int k) {
  Rational out(1);
  if (k >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return out;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

void require_horocycle(const Curve& c, const char* op) {
  if (!c.is_horocycle()) throw InvalidInput(std::string(op) + " needs horocycles, got a " + to_string(c.kind()));
}

// |F(z)| small relative to the size of the terms, for points known only
// approximately.
bool on_curve(const Curve& c, const UHPPoint& z) {
  const Rational f = c.circle().evaluate(z.x(), z.y());
  if (z.exact() && c.exact()) return sgn(f) == 0;
  const auto& k = c.circle().coefficients();
  const long double x = to_long_double(z.x());
  const long double y = to_long_double(z.y());
  const long double scale = std::fabs(to_long_double(k[0])) * (x * x + y * y) +
                            std::fabs(to_long_double(k[1]) * x) + std::fabs(to_long_double(k[2]) * y) +
                            std::fabs(to_long_double(k[3]));
  return std::fabs(to_long_double(f)) <= 1e-9L * scale;
}

std::optional<Curve> as_hypercycle(const GeneralizedCircle& circle, bool exact) {
  if (classify_curve(circle) != LocusClass::Hypercycle) return std::nullopt;
  return Curve(circle, exact);
}

struct TangentData {
  UHPPoint p;
  int side_of_h2;  // sign of h1's equation on h2 away from p
};

TangentData tangent_data(const Curve& h1, const Curve& h2) {
  const auto pattern = intersection_pattern(h1, h2);
  if (!pattern.tangent) {
    throw InvalidInput("hyp1_witness needs hypercycles tangent at an interior point (got " +
                       to_string(pair_type_from_pattern(pattern)) + ")");
  }
  const UHPPoint& p = pattern.interior_points.front();
  const GeneralizedCircle& c2 = h2.circle();
  Rational qx;
  Rational qy;
  if (c2.is_line()) {
    qx = p.x() + c2.c();
    qy = p.y() - c2.b();
  } else {
    qx = -c2.b() / c2.a() - p.x();
    qy = -c2.c() / c2.a() - p.y();
  }
  const int side = sgn(h1.circle().evaluate(qx, qy));
  if (side == 0) throw std::logic_error("tangent circles share a second point");
  return {p, side};
}

}  // namespace

// ---------------------------------------------------------------- dyadic chains

UHPPoint dyadic_tangency_formula(int level, long n) {
  const Rational step = power_of_two(-level);
  const Rational xn = Rational(n) * step;
  const Rational xn1 = Rational(n + 1) * step;
  return UHPPoint((xn + xn1) / 2, power_of_two(-(level + 1)));
}

DyadicFamily dyadic_family(int level, long n_min, long n_max) {
  if (level < 0) throw InvalidInput("dyadic level must be nonnegative");
  if (n_min >= n_max) throw InvalidInput("dyadic range needs n_min < n_max");
  DyadicFamily fam;
  fam.level = level;
  fam.n_min = n_min;
  fam.n_max = n_max;
  const Rational step = power_of_two(-level);
  const Rational radius = power_of_two(-(level + 1));
  for (long n = n_min; n <= n_max; ++n) {
    fam.horocycles.push_back(make_horocycle(BoundaryPoint(Rational(Rational(n) * step)), radius));
  }
  for (std::size_t i = 0; i + 1 < fam.horocycles.size(); ++i) {
    const auto pattern = intersection_pattern(fam.horocycles[i], fam.horocycles[i + 1]);
    if (!pattern.tangent) throw std::logic_error("consecutive dyadic horocycles are not tangent");
    fam.tangency_points.push_back(pattern.interior_points.front());
  }
  return fam;
}

std::vector<Curve> pinching_family(const Rational& x, int level, const Rational& reach) {
  std::vector<Curve> out;
  const Rational scale = power_of_two(level);
  const Integer lo = ceil_of((x - reach) * scale);
  const Integer hi = floor_of((x + reach) * scale);
  const Rational half(1, 2);
  for (Integer m = lo; m <= hi; ++m) {
    const Rational c = Rational(m) / scale;
    if (abs(c - x) <= 1) continue;
    out.push_back(make_horocycle(BoundaryPoint(c), half));
  }
  return out;
}

std::optional<PinchingWitness> pinching_witness(const Rational& x, const Rational& r, int max_level) {
  if (sgn(r) <= 0) throw InvalidInput("pinching_witness needs a positive size");
  // h(x, r) meets h(c, 1/2) iff (x - c)^2 <= 4 r (1/2).
  const Rational bound = 2 * r;
  const Rational reach = std::max(Rational(2), bound);
  for (int k = 0; k <= max_level; ++k) {
    for (const auto& member : pinching_family(x, k, reach)) {
      const Rational c = member.center()->rational();
      if ((x - c) * (x - c) <= bound) return PinchingWitness{k, member};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- witnesses

ChordPencil::ChordPencil(const UHPPoint& x, const UHPPoint& y)
    : mx_((x.x() + y.x()) / 2), my_((x.y() + y.y()) / 2) {
  if (x == y) throw InvalidInput("chord pencil needs two distinct points");
  const Rational dx = x.x() - mx_;
  const Rational dy = x.y() - my_;
  r2_ = dx * dx + dy * dy;
  n_ = {Rational(-(y.y() - x.y())), Rational(y.x() - x.x())};
  x_ = {x.x(), x.y()};
}

GeneralizedCircle ChordPencil::member(const Rational& s) const {
  const Rational b = -2 * mx_ - 2 * s * n_[0];
  const Rational c = -2 * my_ - 2 * s * n_[1];
  const Rational d = mx_ * mx_ + my_ * my_ - r2_ + 2 * s * (n_[0] * mx_ + n_[1] * my_);
  return GeneralizedCircle(1, b, c, d);
}

GeneralizedCircle ChordPencil::line() const {
  return GeneralizedCircle(0, n_[0], n_[1], -(n_[0] * mx_ + n_[1] * my_));
}

Rational ChordPencil::parameter_of_center(const Rational& cx, const Rational& cy) const {
  return (n_[0] * (cx - mx_) + n_[1] * (cy - my_)) / (n_[0] * n_[0] + n_[1] * n_[1]);
}

Rational ChordPencil::side(const Rational& x, const Rational& y) const {
  return n_[0] * (x - mx_) + n_[1] * (y - my_);
}

Curve hyp1_witness(const Curve& h1, const Curve& h2, const UHPPoint& x, const UHPPoint& y) {
  if (!h1.is_hypercycle() || !h2.is_hypercycle()) throw InvalidInput("hyp1_witness needs two hypercycles");
  const TangentData tangent = tangent_data(h1, h2);
  if (!on_curve(h1, x) || !on_curve(h1, y)) throw InvalidInput("hyp1_witness: x and y must lie on h1");
  const ChordPencil pencil(x, y);
  const UHPPoint& p = tangent.p;
  const int side_p = sgn(pencil.side(p.x(), p.y()));
  const GeneralizedCircle& c1 = h1.circle();
  bool opposite = false;
  if (c1.is_line()) {
    const Rational dot = (x.x() - p.x()) * (y.x() - p.x()) + (x.y() - p.y()) * (y.y() - p.y());
    opposite = sgn(dot) < 0;
  } else {
    const QuadraticReal& e = h1.endpoints().front().value();
    const QuadraticReal le = QuadraticReal(pencil.normal()[0]) * (e - QuadraticReal(x.x() / 2 + y.x() / 2)) +
                             QuadraticReal(pencil.normal()[1] * -((x.y() + y.y()) / 2));
    opposite = side_p != 0 && le.sign() != side_p;
  }
  if (!opposite) throw InvalidInput("hyp1_witness: x and y lie on the same side of the tangency point");
  const bool exact = x.exact() && y.exact() && h1.exact() && h2.exact();
  if (c1.is_line()) {
    const auto& n = pencil.normal();
    const int kappa = sgn(c1.b() * n[0] + c1.c() * n[1]);
    const int dir = tangent.side_of_h2 * kappa;
    for (int j = 0; j <= 256; ++j) {
      const Rational s = Rational(dir) * power_of_two(j);
      auto candidate = as_hypercycle(pencil.member(s), exact);
      if (candidate && disjoint(*candidate, h2)) return *candidate;
    }
  } else {
    const Rational s1 = pencil.parameter_of_center(-c1.b() / (2 * c1.a()), -c1.c() / (2 * c1.a()));
    const int dir = -tangent.side_of_h2 * side_p;
    const Rational delta0 = 1 + abs(s1);
    for (int j = 0; j <= 256; ++j) {
      const Rational s = s1 + Rational(dir) * delta0 * power_of_two(-j);
      auto candidate = as_hypercycle(pencil.member(s), exact);
      if (candidate && disjoint(*candidate, h2)) return *candidate;
    }
  }
  throw DegenerateResult("hyp1_witness: no disjoint member found in the chord pencil");
}

WitnessSearch search_witness_family(const Curve& h1, const Curve& h2, const UHPPoint& x, const UHPPoint& y) {
  const ChordPencil pencil(x, y);
  const bool exact = x.exact() && y.exact();
  WitnessSearch out;
  auto consider = [&](const GeneralizedCircle& circle) {
    ++out.candidates;
    auto candidate = as_hypercycle(circle, exact);
    if (candidate && disjoint(*candidate, h2)) {
      out.witness = *candidate;
      return true;
    }
    return false;
  };
  if (consider(pencil.line())) return out;
  std::vector<Rational> params;
  for (int j = -40; j <= 40; ++j) {
    params.push_back(power_of_two(j));
    params.push_back(-power_of_two(j));
  }
  params.push_back(0);
  const GeneralizedCircle& c1 = h1.circle();
  if (!c1.is_line()) {
    const Rational s1 = pencil.parameter_of_center(-c1.b() / (2 * c1.a()), -c1.c() / (2 * c1.a()));
    const Rational delta0 = 1 + abs(s1);
    for (int j = 0; j <= 60; ++j) {
      params.push_back(s1 + delta0 * power_of_two(-j));
      params.push_back(s1 - delta0 * power_of_two(-j));
    }
  }
  for (const auto& s : params) {
    if (consider(pencil.member(s))) return out;
  }
  return out;
}

// ---------------------------------------------------------------- pinching

Curve HorocycleDescriptor::to_curve() const {
  if (!is_rational()) throw InvalidInput("horocycle descriptor is irrational: " + to_string(*this));
  return make_horocycle(center, size.as_rational());
}

HorocycleDescriptor HorocycleDescriptor::of(const Curve& horocycle) {
  require_horocycle(horocycle, "HorocycleDescriptor");
  return {*horocycle.center(), QuadraticReal(*horocycle.size())};
}

std::string to_string(const HorocycleDescriptor& h) {
  return "h(" + to_string(h.center) + ", " + to_string(h.size) + ")";
}

bool descriptors_tangent(const HorocycleDescriptor& a, const HorocycleDescriptor& b) {
  if (a.center.is_infinity() && b.center.is_infinity()) return false;
  if (a.center.is_infinity()) return a.size == QuadraticReal(2) * b.size;
  if (b.center.is_infinity()) return b.size == QuadraticReal(2) * a.size;
  const QuadraticReal gap = a.center.value() - b.center.value();
  return gap * gap == QuadraticReal(4) * a.size * b.size;
}

std::pair<HorocycleDescriptor, HorocycleDescriptor> pinch_pair(const Curve& h0, const Curve& h) {
  require_horocycle(h0, "pinch_pair");
  require_horocycle(h, "pinch_pair");
  if (*h0.center() == *h.center()) {
    throw NoSolution("pinch_pair: horocycles share the center " + to_string(*h0.center()) +
                     "; one lies in the other's horoball");
  }
  if (!disjoint(h0, h)) throw InvalidInput("pinch_pair needs disjoint horocycles");
  const auto d0 = HorocycleDescriptor::of(h0);
  const auto d1 = HorocycleDescriptor::of(h);
  std::vector<HorocycleDescriptor> sols;
  if (d0.center.is_infinity() || d1.center.is_infinity()) {
    const auto& fin = d0.center.is_infinity() ? d1 : d0;
    const auto& inf = d0.center.is_infinity() ? d0 : d1;
    const Rational r = fin.size.as_rational();
    const Rational S = inf.size.as_rational();
    const QuadraticReal root = QuadraticReal::sqrt(2 * r * S);
    const QuadraticReal half(S / 2);
    sols.push_back({BoundaryPoint(fin.center.value() - root), half});
    sols.push_back({BoundaryPoint(fin.center.value() + root), half});
  } else {
    const Rational p0 = d0.center.rational();
    const Rational p1 = d1.center.rational();
    const Rational r0 = d0.size.as_rational();
    const Rational r1 = d1.size.as_rational();
    // (q - p0) = +-t (q - p1) with t = sqrt(r0/r1).
    const QuadraticReal t = QuadraticReal::sqrt(r0 / r1);
    const QuadraticReal one(1);
    for (int sign : {1, -1}) {
      const QuadraticReal st = QuadraticReal(sign) * t;
      const QuadraticReal den = one + st;
      if (den.sign() == 0) {
        sols.push_back({BoundaryPoint::infinity(), QuadraticReal(2 * r0)});
        continue;
      }
      const QuadraticReal q = (QuadraticReal(p0) + st * QuadraticReal(p1)) / den;
      const QuadraticReal gap = q - QuadraticReal(p0);
      sols.push_back({BoundaryPoint(q), gap * gap / QuadraticReal(4 * r0)});
    }
  }
  for (const auto& s : sols) {
    if (!descriptors_tangent(s, d0) || !descriptors_tangent(s, d1)) {
      throw std::logic_error("pinch_pair solution failed the tangency check: " + to_string(s));
    }
  }
  std::sort(sols.begin(), sols.end(),
            [](const HorocycleDescriptor& a, const HorocycleDescriptor& b) { return a.center < b.center; });
  return {sols[0], sols[1]};
}

// ---------------------------------------------------------------- four geodesics

bool in_cyclic_order(const std::array<BoundaryPoint, 4>& pts) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j]) return false;
    }
  }
  int descents = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (pts[(i + 1) % 4] < pts[i]) ++descents;
  }
  return descents == 1;
}

namespace {

bool crosses(const Curve& a, const Curve& b) { return intersection_pattern(a, b).interior_count > 0; }

// Two distinct rational points strictly inside the arc from u to v (cyclic
// successor order).
std::array<BoundaryPoint, 2> arc_representatives(const BoundaryPoint& u, const BoundaryPoint& v) {
  if (u < v) {
    if (v.is_infinity()) {
      const Rational a = u.rational();
      return {BoundaryPoint(Rational(a + 1)), BoundaryPoint(Rational(a + 2))};
    }
    const Rational a = u.rational();
    const Rational w = v.rational() - a;
    return {BoundaryPoint(Rational(a + w / 3)), BoundaryPoint(Rational(a + 2 * w / 3))};
  }
  if (u.is_infinity()) {
    const Rational b = v.rational();
    return {BoundaryPoint(Rational(b - 2)), BoundaryPoint(Rational(b - 1))};
  }
  const Rational a = u.rational();
  return {BoundaryPoint(Rational(a + 1)), BoundaryPoint(Rational(a + 2))};
}

}  // namespace

FourGeodesicConfig four_geodesic_config(const BoundaryPoint& x1, const BoundaryPoint& x2, const BoundaryPoint& y1,
                                        const BoundaryPoint& y2) {
  const std::array<BoundaryPoint, 4> pts = {x1, x2, y1, y2};
  for (const auto& p : pts) {
    if (p.is_finite() && !p.is_rational()) throw InvalidInput("four_geodesic_config needs rational points");
  }
  if (!in_cyclic_order(pts)) {
    throw InvalidInput("four_geodesic_config: points " + to_string(x1) + ", " + to_string(x2) + ", " +
                       to_string(y1) + ", " + to_string(y2) + " are not distinct and in cyclic order");
  }
  FourGeodesicConfig cfg{pts,
                         make_geodesic(x1, x2),
                         make_geodesic(y1, y2),
                         make_geodesic(x1, y1),
                         make_geodesic(x2, y2)};
  cfg.incidence_holds = !crosses(cfg.g1, cfg.g2) && crosses(cfg.h1, cfg.h2) && !crosses(cfg.g1, cfg.h1) &&
                        !crosses(cfg.g2, cfg.h2);
  std::array<BoundaryPoint, 4> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  std::array<std::array<BoundaryPoint, 2>, 4> reps;
  for (std::size_t i = 0; i < 4; ++i) reps[i] = arc_representatives(sorted[i], sorted[(i + 1) % 4]);
  cfg.crossing_transfer_holds = true;
  cfg.double_crossing_holds = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const Curve g = (i == j) ? make_geodesic(reps[i][0], reps[i][1]) : make_geodesic(reps[i][0], reps[j][0]);
      ++cfg.classes_checked;
      const int on_g1 = intersection_pattern(g, cfg.g1).interior_count;
      const int on_g2 = intersection_pattern(g, cfg.g2).interior_count;
      const int on_h1 = intersection_pattern(g, cfg.h1).interior_count;
      const int on_h2 = intersection_pattern(g, cfg.h2).interior_count;
      if ((on_g1 > 0 || on_g2 > 0) && on_h1 + on_h2 == 0) cfg.crossing_transfer_holds = false;
      if (on_g1 + on_g2 == 2 && on_h1 + on_h2 != 2) cfg.double_crossing_holds = false;
    }
  }
  return cfg;
}

// ---------------------------------------------------------------- relabelings

CenterSwap::CenterSwap(BoundaryPoint p, BoundaryPoint q) : p_(std::move(p)), q_(std::move(q)), identity_(p_ == q_) {}

BoundaryPoint CenterSwap::map_center(const BoundaryPoint& c) const {
  if (identity_) return c;
  if (c == p_) return q_;
  if (c == q_) return p_;
  return c;
}

Curve CenterSwap::apply(const Curve& horocycle) const {
  require_horocycle(horocycle, "center swap");
  return make_horocycle(map_center(*horocycle.center()), *horocycle.size());
}

CenterSwap sigma_center_swap(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinity() || q.is_infinity()) throw InvalidInput("sigma_center_swap needs finite centers");
  return CenterSwap(p, q);
}

Isometry normalizer_from_images(const Curve& img_h0, const Curve& img_hinf) {
  require_horocycle(img_h0, "normalizer_from_images");
  require_horocycle(img_hinf, "normalizer_from_images");
  if (*img_h0.center() == *img_hinf.center()) throw InvalidInput("normalizer_from_images: centers coincide");
  const auto pattern = intersection_pattern(img_h0, img_hinf);
  if (!pattern.tangent) throw InvalidInput("normalizer_from_images needs tangent horocycles");
  const Isometry phi1 = two_point_normalizer(*img_hinf.center(), *img_h0.center());
  const UHPPoint contact = apply(phi1, pattern.interior_points.front());
  const Isometry j = Isometry::dilation(1 / contact.y()) * phi1;
  if (!(apply(j, img_h0) == make_horocycle(0, Rational(1, 2))) ||
      !(apply(j, img_hinf) == make_horocycle(BoundaryPoint::infinity(), 1))) {
    throw std::logic_error("normalizer_from_images failed its own check");
  }
  return j;
}

}  // namespace hyperk
