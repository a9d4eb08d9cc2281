#include "hyperk/predicates.hpp"

#include <algorithm>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

struct Root {
  QuadraticReal x;
  QuadraticReal y;
  bool double_root;
};

UHPPoint to_point(const Root& r) {
  if (r.x.is_rational() && r.y.is_rational()) return UHPPoint(r.x.as_rational(), r.y.as_rational());
  return UHPPoint::approximate(r.x.to_double(), r.y.to_double());
}

// Roots of P t^2 + Q t + R (P != 0) as quadratic reals; empty when complex.
std::vector<QuadraticReal> quadratic_roots(const Rational& P, const Rational& Q, const Rational& R, bool& twice) {
  twice = false;
  const Rational disc = Q * Q - 4 * P * R;
  const int s = sgn(disc);
  if (s < 0) return {};
  const Rational base = -Q / (2 * P);
  if (s == 0) {
    twice = true;
    return {QuadraticReal(base)};
  }
  // sqrt(n/d) = sqrt(n d)/d keeps the radicand integral.
  const Rational half = Rational(1) / (2 * P * Rational(disc.get_den()));
  const Integer radicand = disc.get_num() * disc.get_den();
  return {QuadraticReal(base, -half, radicand), QuadraticReal(base, half, radicand)};
}

// Common real points of two distinct generalized circles (finite part only).
std::vector<Root> common_points(const GeneralizedCircle& c1, const GeneralizedCircle& c2) {
  std::vector<Root> out;
  if (c1.is_line() && c2.is_line()) {
    const Rational det = c1.b() * c2.c() - c2.b() * c1.c();
    if (sgn(det) == 0) return out;
    const Rational x = (c1.c() * c2.d() - c2.c() * c1.d()) / det;
    const Rational y = (c1.d() * c2.b() - c2.d() * c1.b()) / det;
    out.push_back({QuadraticReal(x), QuadraticReal(y), false});
    return out;
  }
  const GeneralizedCircle& k = c1.is_line() ? c2 : c1;
  // Radical line B x + C y + D = 0.
  const Rational B = c1.a() * c2.b() - c2.a() * c1.b();
  const Rational C = c1.a() * c2.c() - c2.a() * c1.c();
  const Rational D = c1.a() * c2.d() - c2.a() * c1.d();
  bool twice = false;
  if (sgn(C) != 0) {
    const Rational alpha = -B / C;
    const Rational beta = -D / C;
    const Rational P = k.a() * (1 + alpha * alpha);
    const Rational Q = 2 * k.a() * alpha * beta + k.b() + k.c() * alpha;
    const Rational R = k.a() * beta * beta + k.c() * beta + k.d();
    for (const auto& x : quadratic_roots(P, Q, R, twice)) {
      out.push_back({x, QuadraticReal(alpha) * x + QuadraticReal(beta), twice});
    }
    return out;
  }
  if (sgn(B) == 0) return out;  // concentric
  const Rational x0 = -D / B;
  const Rational R = k.a() * x0 * x0 + k.b() * x0 + k.d();
  for (const auto& y : quadratic_roots(k.a(), k.c(), R, twice)) {
    out.push_back({QuadraticReal(x0), y, twice});
  }
  return out;
}

int count_shared(const std::vector<BoundaryPoint>& e1, const std::vector<BoundaryPoint>& e2) {
  int shared = 0;
  for (const auto& p : e1) {
    for (const auto& q : e2) {
      if (p == q) ++shared;
    }
  }
  return shared;
}

}  // namespace

IntersectionPattern intersection_pattern(const Curve& c1, const Curve& c2) {
  IntersectionPattern pattern;
  pattern.shared_endpoints = count_shared(c1.endpoints(), c2.endpoints());
  if (c1.circle() == c2.circle()) {
    pattern.equal = true;
    return pattern;
  }
  std::vector<Root> inside;
  for (auto& r : common_points(c1.circle(), c2.circle())) {
    if (r.y.sign() > 0) inside.push_back(std::move(r));
  }
  std::sort(inside.begin(), inside.end(), [](const Root& l, const Root& r) { return l.x < r.x; });
  pattern.interior_count = static_cast<int>(inside.size());
  pattern.tangent = inside.size() == 1 && inside.front().double_root;
  for (const auto& r : inside) pattern.interior_points.push_back(to_point(r));
  return pattern;
}

bool disjoint(const Curve& c1, const Curve& c2) { return intersection_pattern(c1, c2).disjoint(); }

std::string to_string(HypercyclePairType type) {
  switch (type) {
    case HypercyclePairType::Type1: return "Type1";
    case HypercyclePairType::Type2: return "Type2";
    case HypercyclePairType::Type3: return "Type3";
    case HypercyclePairType::Type4: return "Type4";
    case HypercyclePairType::Disjoint: return "Disjoint";
    case HypercyclePairType::SameEndpoints: return "SameEndpoints";
    case HypercyclePairType::Equal: return "Equal";
  }
  return "?";
}

HypercyclePairType pair_type_from_pattern(const IntersectionPattern& p) {
  if (p.equal) return HypercyclePairType::Equal;
  if (p.shared_endpoints == 2) return HypercyclePairType::SameEndpoints;
  if (p.interior_count == 0) return HypercyclePairType::Disjoint;
  if (p.interior_count == 2) return HypercyclePairType::Type4;
  if (p.tangent) return HypercyclePairType::Type1;
  return p.shared_endpoints == 1 ? HypercyclePairType::Type2 : HypercyclePairType::Type3;
}

HypercyclePairType hypercycle_pair_type(const Curve& h1, const Curve& h2) {
  if (!h1.is_hypercycle() || !h2.is_hypercycle()) {
    throw InvalidInput("hypercycle_pair_type needs two hypercycles, got " + to_string(h1.kind()) + " and " +
                       to_string(h2.kind()));
  }
  return pair_type_from_pattern(intersection_pattern(h1, h2));
}

std::string to_string(Nesting nesting) {
  switch (nesting) {
    case Nesting::LessOrEqual: return "LessOrEqual";
    case Nesting::GreaterOrEqual: return "GreaterOrEqual";
    case Nesting::Equal: return "Equal";
    case Nesting::Incomparable: return "Incomparable";
  }
  return "?";
}

Nesting horocycle_leq(const Curve& h1, const Curve& h2) {
  if (!h1.is_horocycle() || !h2.is_horocycle()) throw InvalidInput("horocycle_leq needs two horocycles");
  if (!(*h1.center() == *h2.center())) return Nesting::Incomparable;
  int order = cmp(*h1.size(), *h2.size());
  if (h1.center()->is_infinity()) order = -order;
  if (order == 0) return Nesting::Equal;
  return order < 0 ? Nesting::LessOrEqual : Nesting::GreaterOrEqual;
}

bool linked(const std::pair<BoundaryPoint, BoundaryPoint>& pair1,
            const std::pair<BoundaryPoint, BoundaryPoint>& pair2) {
  const std::array<const BoundaryPoint*, 4> pts = {&pair1.first, &pair1.second, &pair2.first, &pair2.second};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (*pts[i] == *pts[j]) throw InvalidInput("linked: repeated point " + to_string(*pts[i]));
    }
  }
  const BoundaryPoint& lo = std::min(pair1.first, pair1.second);
  const BoundaryPoint& hi = std::max(pair1.first, pair1.second);
  auto inside = [&](const BoundaryPoint& z) { return lo < z && z < hi; };
  return inside(pair2.first) != inside(pair2.second);
}

Rational relative_curvature(const GeneralizedCircle& circle, const Rational& x, const Rational& y,
                            const std::array<Rational, 2>& normal) {
  const Rational gx = 2 * circle.a() * x + circle.b();
  const Rational gy = 2 * circle.a() * y + circle.c();
  const Rational along = gx * normal[0] + gy * normal[1];
  if (sgn(along) == 0) throw InvalidInput("normal is tangent to the circle");
  return -2 * circle.a() * (normal[0] * normal[0] + normal[1] * normal[1]) / along;
}

std::size_t between_tangent(const Curve& h1, const Curve& h2, const Curve& h3) {
  const std::array<const Curve*, 3> curves = {&h1, &h2, &h3};
  std::optional<UHPPoint> contact;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto p = intersection_pattern(*curves[i], *curves[j]);
      if (p.equal) throw InvalidInput("between_tangent: repeated curve");
      if (!p.tangent) throw InvalidInput("between_tangent: curves are not pairwise tangent");
      const UHPPoint& q = p.interior_points.front();
      if (!contact) {
        contact = q;
      } else if (!(*contact == q)) {
        throw InvalidInput("between_tangent: tangency points differ (" + to_string(*contact) + " vs " +
                           to_string(q) + ")");
      }
    }
  }
  const Rational& x = contact->x();
  const Rational& y = contact->y();
  const GeneralizedCircle& c0 = h1.circle();
  const std::array<Rational, 2> normal = {2 * c0.a() * x + c0.b(), 2 * c0.a() * y + c0.c()};
  std::array<std::pair<Rational, std::size_t>, 3> kappa;
  for (std::size_t i = 0; i < 3; ++i) kappa[i] = {relative_curvature(curves[i]->circle(), x, y, normal), i};
  std::sort(kappa.begin(), kappa.end());
  return kappa[1].second;
}

bool same_endpoints(const Curve& h1, const Curve& h2) {
  if (h1.is_horocycle() || h2.is_horocycle()) throw InvalidInput("same_endpoints is undefined for horocycles");
  return h1.endpoints()[0] == h2.endpoints()[0] && h1.endpoints()[1] == h2.endpoints()[1];
}

}  // namespace hyperk
