#include "hyperk/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

constexpr int kExtrapolationNodes = 6;
constexpr long double kProbeHorizon = 64.0L;
constexpr std::size_t kProbeCount = 129;

Integer floor_of(const QuadraticReal& x) {
  const Rational approx = rational_from_long_double(std::floor(x.to_long_double()));
  Integer f = approx.get_num() / approx.get_den();
  while (QuadraticReal(Rational(f)) > x) --f;
  while (QuadraticReal(Rational(f + 1)) <= x) ++f;
  return f;
}

std::optional<Rational> simplest(const QuadraticReal& lo, const QuadraticReal& hi, int depth, int max_depth) {
  if (depth > max_depth) return std::nullopt;
  const Integer f = floor_of(lo);
  if (QuadraticReal(Rational(f)) == lo) return Rational(f);
  if (QuadraticReal(Rational(f + 1)) <= hi) return Rational(f + 1);
  const QuadraticReal one(1);
  const QuadraticReal base{Rational(f)};
  auto inner = simplest(one / (hi - base), one / (lo - base), depth + 1, max_depth);
  if (!inner) return std::nullopt;
  return Rational(f) + 1 / *inner;
}

// A rational point on (or within rounding of) the curve's trace in y > 0.
std::pair<Rational, Rational> sample_point(const GeneralizedCircle& k) {
  if (k.is_line()) {
    if (sgn(k.c()) == 0) return {-k.d() / k.b(), Rational(1)};
    const Rational y0 = -k.d() / k.c();
    if (sgn(y0) > 0) return {Rational(0), y0};
    return {-(k.c() + k.d()) / k.b(), Rational(1)};
  }
  const Rational x0 = -k.b() / (2 * k.a());
  const Rational K = k.evaluate(x0, Rational(0));
  const long double a = to_long_double(k.a());
  const long double c = to_long_double(k.c());
  const long double kk = to_long_double(K);
  const long double root = std::sqrt(c * c - 4 * a * kk);
  const long double y = c < 0 ? (-c + root) / (2 * a) : -2 * kk / (c + root);
  return {x0, rational_from_long_double(y)};
}

int side_of(const GeneralizedCircle& ref, const GeneralizedCircle& other) {
  const auto [x, y] = sample_point(other);
  return sgn(ref.evaluate(x, y));
}

long double neville(const std::vector<long double>& xs, const std::vector<long double>& ys, long double x) {
  std::vector<long double> p = ys;
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      p[i] = ((x - xs[i + level]) * p[i] + (xs[i] - x) * p[i + 1]) / (xs[i] - xs[i + level]);
    }
  }
  return p[0];
}

struct Extrapolated {
  long double value;
  long double spread;
};

Extrapolated extrapolate_to_one(const std::vector<double>& ts, const std::vector<long double>& values) {
  const std::size_t n = ts.size();
  const std::size_t k = std::min<std::size_t>(kExtrapolationNodes, n);
  std::vector<long double> xs;
  std::vector<long double> ys;
  for (std::size_t i = n - k; i < n; ++i) {
    xs.push_back(ts[i]);
    ys.push_back(values[i]);
  }
  const long double full = neville(xs, ys, 1.0L);
  xs.erase(xs.begin());
  ys.erase(ys.begin());
  const long double reduced = xs.empty() ? full : neville(xs, ys, 1.0L);
  return {full, std::fabs(full - reduced)};
}

Rational snap(long double value, long double tol) {
  const Rational lo = rational_from_long_double(value - tol);
  const Rational hi = rational_from_long_double(value + tol);
  auto s = simplest_rational_between(QuadraticReal(lo), QuadraticReal(hi));
  return s ? *s : rational_from_long_double(value);
}

Isometry frame_map(const BoundaryPoint& omega) {
  if (omega.is_infinity()) return Isometry::identity();
  return Isometry(0, -1, 1, -omega.rational());
}

// A boundary point in the arc of h0 away from the last member.
BoundaryPoint choose_frame_point(const Curve& h0, int side) {
  const GeneralizedCircle& k = h0.circle();
  std::vector<BoundaryPoint> candidates;
  if (!k.is_line()) {
    candidates.push_back(BoundaryPoint::infinity());
    const auto& ends = h0.endpoints();
    candidates.emplace_back(Rational(-k.b() / (2 * k.a())));
    candidates.emplace_back(Rational(Rational(floor_of(ends.front().value())) - 1));
  } else if (sgn(k.b()) != 0) {
    const Rational e = -k.d() / k.b();
    candidates.emplace_back(Rational(e - 1));
    candidates.emplace_back(Rational(e + 1));
  } else {
    candidates.emplace_back(Rational(0));
  }
  for (const auto& w : candidates) {
    const int s = w.is_infinity() ? sgn(k.a()) : sgn(k.evaluate(w.rational(), Rational(0)));
    if (s != 0 && s != side) return w;
  }
  throw Indeterminate("no frame point outside the family", "FoliatesComponent", "limit");
}

GeneralizedCircle pencil_member(const Rational& m, const Rational& M, const Rational& s) {
  return GeneralizedCircle(1, -(m + M), -s * (M - m), m * M);
}

// Circle through the real-axis roots of `ref` (a > 0) with c/a = -s w.
GeneralizedCircle pencil_through(const GeneralizedCircle& ref, const Rational& w, const Rational& s) {
  return GeneralizedCircle(ref.a(), ref.b(), -s * w * ref.a(), ref.d());
}

std::vector<Rational> probe_parameters() {
  std::vector<Rational> out;
  const long double umax = std::asinh(kProbeHorizon);
  for (std::size_t i = 0; i < kProbeCount; ++i) {
    const long double u = -umax + 2 * umax * static_cast<long double>(i) / (kProbeCount - 1);
    out.push_back(rational_from_long_double(std::sinh(u)));
  }
  return out;
}

// Every member after the first.
bool crosses_all(const Curve& probe, const std::vector<Curve>& members) {
  for (auto it = members.rbegin(); it + 1 != members.rend(); ++it) {
    if (intersection_pattern(probe, *it).interior_count == 0) return false;
  }
  return true;
}

bool misses_all(const Curve& probe, const std::vector<Curve>& members) {
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    const auto p = intersection_pattern(probe, *it);
    if (p.equal || p.interior_count > 0) return false;
  }
  return true;
}

std::optional<Curve> try_curve(const GeneralizedCircle& k) {
  const LocusClass cls = classify_curve(k);
  if (cls == LocusClass::HyperbolicCircle || cls == LocusClass::NotInUpperHalfPlane) return std::nullopt;
  return Curve(k);
}

struct Attempt {
  std::optional<FamilyLimit> limit;
  std::string first = {};
  std::string second = {};
  std::string reason = {};
};

Attempt classify_on_grid(const ContinuousFamily& family, const std::vector<Curve>& probes) {
  const std::vector<double> ts = family.sample_grid();
  const std::vector<Curve> members = family.grid_curves();
  const Curve& h0 = members.front();
  const Curve& hn = members.back();
  const int side = side_of(h0.circle(), hn.circle());
  if (side == 0) return {std::nullopt, "FoliatesComponent", "limit", "first and last member are not separated"};
  const BoundaryPoint omega = choose_frame_point(h0, side);
  const Isometry T = frame_map(omega);
  const Isometry back = T.inverse();

  std::vector<Curve> framed;
  std::vector<QuadraticReal> lo;
  std::vector<QuadraticReal> hi;
  for (const auto& c : members) {
    framed.push_back(apply(T, c));
    const auto& ends = framed.back().endpoints();
    if (ends.back().is_infinity()) return {std::nullopt, "limit", "limit", "member endpoint at the frame point"};
    lo.push_back(ends.front().value());
    hi.push_back(ends.back().value());
  }
  const QuadraticReal m = *std::max_element(lo.begin(), lo.end());
  const QuadraticReal M = *std::min_element(hi.begin(), hi.end());
  if (M < m) return {std::nullopt, "limit", "limit", "endpoint envelopes are not nested"};
  const long double width0 = (hi.front() - lo.front()).to_long_double();
  const long double gap = (M - m).to_long_double();
  const long double rel = width0 > 0 ? gap / width0 : 0.0L;

  if (rel < 1e-9L) {
    const auto center = simplest_rational_between(m, M);
    if (!center) return {std::nullopt, "HorocycleLimit", "FoliatesComponent", "limit center not resolved"};
    std::vector<QuadraticReal> sizes;
    std::vector<long double> values;
    for (const auto& c : framed) {
      const GeneralizedCircle& k = c.circle();
      if (c.is_horocycle() && c.center()->is_finite() && c.center()->value() == QuadraticReal(*center)) {
        sizes.emplace_back(*c.size());
      } else {
        const Rational F = k.evaluate(*center, Rational(0));
        const Rational disc = k.boundary_discriminant();
        if (sgn(F) >= 0 || sgn(disc) <= 0 || k.is_line()) {
          return {std::nullopt, "HorocycleLimit", "FoliatesComponent", "limit center outside a member"};
        }
        const Rational delta = k.b() * k.b() + k.c() * k.c() - 4 * k.a() * k.d();
        sizes.push_back(QuadraticReal(-F / disc) * (QuadraticReal::sqrt(delta) - QuadraticReal(k.c())));
      }
      values.push_back(sizes.back().to_long_double());
    }
    const Extrapolated ex = extrapolate_to_one(ts, values);
    if (ex.spread > 1e-8L * std::fabs(ex.value)) {
      return {std::nullopt, "HorocycleLimit", "FoliatesComponent", "size extrapolation unstable"};
    }
    if (ex.value <= 1e-12L * values.front()) return {FamilyLimit{LimitKind::FoliatesComponent, std::nullopt}};
    // Snap in the caller's coordinates, where the limit is usually simplest.
    // A horocycle's size scales by det / (c x + d)^2 under a Moebius map.
    const BoundaryPoint limit_center = apply(back, BoundaryPoint(*center));
    const Rational jac = back.m10() * *center + back.m11();
    const long double factor = sgn(jac) == 0 ? to_long_double(back.determinant() / (back.m10() * back.m10()))
                                             : to_long_double(back.determinant() / (jac * jac));
    const long double original = ex.value * (sgn(jac) == 0 ? 1 / (2 * ex.value * ex.value) : 1.0L) * factor;
    const Rational original_size = snap(original, std::max(1e-14L * original, 4 * ex.spread * original / ex.value));
    const Curve limit = make_horocycle(limit_center, original_size);
    const Rational size = *apply(T, limit).size();
    for (const auto& s : sizes) {
      if (!(QuadraticReal(size) < s)) {
        return {std::nullopt, "HorocycleLimit", "FoliatesComponent", "limit horocycle meets a member"};
      }
    }
    // A curve with the endpoints of h0 must cross every member.
    bool confirmed = false;
    const GeneralizedCircle& k0 = framed.front().circle();
    if (!k0.is_line() && width0 > 0) {
      const Rational w0 = rational_from_long_double(width0);
      for (const auto& s : probe_parameters()) {
        auto probe = try_curve(pencil_through(k0, w0, s));
        if (probe && crosses_all(*probe, framed)) {
          confirmed = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; !confirmed && i < probes.size(); ++i) confirmed = crosses_all(probes[i], members);
    if (!confirmed && width0 > 0) {
      return {std::nullopt, "HorocycleLimit", "FoliatesComponent", "no probe crosses every member"};
    }
    return {FamilyLimit{LimitKind::HorocycleLimit, Curve(limit.circle(), false)}};
  }
  if (rel <= 1e-3L) return {std::nullopt, "HorocycleLimit", "HypercycleOrGeodesicLimit", "endpoint gap unresolved"};

  auto resolve = [&](const std::vector<QuadraticReal>& ends) -> std::optional<Rational> {
    if (std::all_of(ends.begin(), ends.end(), [&](const QuadraticReal& e) { return e == ends.front(); }) &&
        ends.front().is_rational()) {
      return ends.front().as_rational();
    }
    std::vector<long double> v;
    for (const auto& e : ends) v.push_back(e.to_long_double());
    const Extrapolated ex = extrapolate_to_one(ts, v);
    if (ex.spread > 1e-8L * width0) return std::nullopt;
    return snap(ex.value, std::max(1e-14L * width0, 4 * ex.spread));
  };
  const auto m_star = resolve(lo);
  const auto M_star = resolve(hi);
  if (!m_star || !M_star || *M_star <= *m_star) {
    return {std::nullopt, "HypercycleOrGeodesicLimit", "FoliatesComponent", "envelope endpoints unresolved"};
  }
  const int side0 = side_of(framed.back().circle(), framed.front().circle());
  auto beyond = [&](const Curve& probe) {
    return side_of(framed.back().circle(), probe.circle()) == -side0 && misses_all(probe, framed);
  };
  bool witness = false;
  for (const auto& s : probe_parameters()) {
    auto probe = try_curve(pencil_member(*m_star, *M_star, s));
    if (probe && beyond(*probe)) {
      witness = true;
      break;
    }
  }
  for (std::size_t i = 0; !witness && i < probes.size(); ++i) {
    const Curve p = apply(T, probes[i]);
    const auto& e = p.endpoints();
    if (e.size() == 2 && e[0] == BoundaryPoint(*m_star) && e[1] == BoundaryPoint(*M_star) && beyond(p)) {
      witness = true;
    }
  }
  if (!witness) return {FamilyLimit{LimitKind::FoliatesComponent, std::nullopt}};

  const Rational w = *M_star - *m_star;
  std::vector<long double> params;
  for (const auto& c : framed) {
    const GeneralizedCircle& k = c.circle();
    params.push_back(to_long_double(-k.c() / k.a() / w));
  }
  const Extrapolated ex = extrapolate_to_one(ts, params);
  const long double scale = std::max(1.0L, std::fabs(ex.value));
  if (ex.spread > 1e-8L * scale) {
    return {std::nullopt, "HypercycleOrGeodesicLimit", "FoliatesComponent", "limit extrapolation unstable"};
  }
  const Rational s_lim = snap(ex.value, std::max(1e-14L * scale, 4 * ex.spread));
  const Curve framed_limit(pencil_member(*m_star, *M_star, s_lim), false);
  const auto last = intersection_pattern(framed_limit, framed.back());
  if (!last.equal && last.interior_count > 0) {
    return {std::nullopt, "HypercycleOrGeodesicLimit", "FoliatesComponent", "limit crosses the last member"};
  }
  return {FamilyLimit{LimitKind::HypercycleOrGeodesicLimit, Curve(apply(back, framed_limit.circle()), false)}};
}

}  // namespace

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::FoliatesComponent: return "FoliatesComponent";
    case LimitKind::HorocycleLimit: return "HorocycleLimit";
    case LimitKind::HypercycleOrGeodesicLimit: return "HypercycleOrGeodesicLimit";
  }
  return "?";
}

std::string to_string(const FamilyLimit& limit) {
  std::string out = to_string(limit.kind);
  if (limit.curve) {
    const auto& k = limit.curve->circle();
    out += " (" + to_string(k.a()) + ", " + to_string(k.b()) + ", " + to_string(k.c()) + ", " + to_string(k.d()) + ")";
  }
  return out;
}

ContinuousFamily::ContinuousFamily(Generator generator, double t_max, std::size_t grid_size,
                                   std::optional<FamilyLimit> declared, bool reparametrized)
    : generator_(std::move(generator)),
      t_max_(t_max),
      grid_size_(grid_size),
      declared_(std::move(declared)),
      reparametrized_(reparametrized) {
  if (grid_size_ < 3) throw InvalidInput("family grid needs at least 3 points");
  if (!(t_max_ > 0 && t_max_ <= 1)) throw InvalidInput("family grid end must lie in (0, 1]");
}

std::vector<double> ContinuousFamily::sample_grid() const {
  std::vector<double> out(grid_size_);
  for (std::size_t j = 0; j < grid_size_; ++j) {
    const double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size_ - 1);
    out[j] = t_max_ * (1 - std::cos(theta)) / 2;
  }
  out.front() = 0;
  out.back() = t_max_;
  return out;
}

std::vector<Curve> ContinuousFamily::grid_curves() const {
  std::vector<Curve> out;
  for (double t : sample_grid()) out.push_back(curve_at(t));
  return out;
}

ContinuousFamily ContinuousFamily::with_grid(std::size_t grid_size) const {
  return ContinuousFamily(generator_, t_max_, grid_size, declared_, reparametrized_);
}

ContinuousFamily disj_family(const Curve& h, const Curve& hprime, std::size_t grid_size) {
  if (!h.is_horocycle()) throw InvalidInput("disj_family needs a horocycle, got a " + to_string(h.kind()));
  if (h.is_horocycle() && hprime.is_horocycle()) throw InvalidInput("disj_family needs a hypercycle");
  if (!disjoint(h, hprime)) throw InvalidInput("disj_family: the horocycle and the hypercycle intersect");
  Isometry N;
  if (h.center()->is_finite()) N = Isometry(0, -1, 1, -h.center()->rational());
  N = Isometry::dilation(1 / *apply(N, h).size()) * N;
  GeneralizedCircle hp = apply(N, hprime.circle());
  if (hp.is_line()) throw std::logic_error("disj_family: normalized hypercycle is a line");
  N = Isometry::translation(hp.b() / (2 * hp.a())) * N;
  hp = apply(N, hprime.circle());
  const long double C = to_long_double(hp.c() / hp.a());
  const long double D = to_long_double(hp.d() / hp.a());
  const long double b = std::sqrt(-D);
  const long double root = std::sqrt(C * C - 4 * D);
  const long double y_top = C > 0 ? -2 * D / (C + root) : (-C + root) / 2;
  if (!(y_top < 1)) throw std::logic_error("disj_family: normalized hypercycle is not below y = 1");
  const bool reparametrized = b <= 1;
  const long double lambda = reparametrized ? 2 / b : 1;
  const long double log_lb = std::log(lambda * b);
  const long double log_l = std::log(lambda);
  const long double log_y = std::log(y_top);
  const double t_cap = static_cast<double>(1 - log_lb / (200 + log_l));
  const Isometry back = N.inverse();
  auto generator = [=](double t) -> Curve {
    if (t <= 0) return hprime;
    if (t >= 1) return h;
    const long double log_B = log_lb / (1 - t) - log_l;
    const long double eps = std::exp(-2 * log_B);
    const long double Y = std::exp((1 - t) * log_y);
    const GeneralizedCircle k(rational_from_long_double(eps), 0, rational_from_long_double((1 - Y * Y * eps) / Y), -1);
    return Curve(apply(back, k), false);
  };
  return ContinuousFamily(generator, t_cap, grid_size, FamilyLimit{LimitKind::HorocycleLimit, h}, reparametrized);
}

ContinuousFamily ray_sweep_family(double final_angle, std::size_t grid_size) {
  if (!(final_angle > 0 && final_angle < std::numbers::pi / 4)) {
    throw InvalidInput("ray sweep final angle must lie in (0, pi/4)");
  }
  auto generator = [final_angle](double t) -> Curve {
    if (t <= 0) return Curve(GeneralizedCircle(0, 1, -1, 0));
    const long double alpha = std::numbers::pi_v<long double> / 4 * (1 - t) + t * static_cast<long double>(final_angle);
    return Curve(GeneralizedCircle(0, rational_from_long_double(std::sin(alpha)),
                                   rational_from_long_double(-std::cos(alpha)), 0),
                 false);
  };
  return ContinuousFamily(generator, 1.0, grid_size, FamilyLimit{LimitKind::FoliatesComponent, std::nullopt});
}

ContinuousFamily fixed_endpoint_family(const BoundaryPoint& p, const BoundaryPoint& q, const Rational& s_start,
                                       const Rational& s_limit, std::size_t grid_size) {
  if (sgn(s_start) <= 0 || sgn(s_limit) <= 0 || s_start == s_limit) {
    throw InvalidInput("fixed_endpoint_family needs distinct positive sinh-distances");
  }
  const Curve g = make_geodesic(p, q);
  auto generator = [g, s_start, s_limit](double t) -> Curve {
    const Rational tr = t <= 0 ? Rational(0) : (t >= 1 ? Rational(1) : rational_from_double(t));
    const auto pair = equidistant_pair_sinh(g, s_start + tr * (s_limit - s_start));
    return Curve(pair.first.circle(), pair.exact && (t <= 0 || t >= 1));
  };
  const Curve limit = generator(1.0);
  return ContinuousFamily(generator, 15.0 / 16.0, grid_size,
                          FamilyLimit{LimitKind::HypercycleOrGeodesicLimit, limit});
}

FamilyLimit classify_family_limit(const ContinuousFamily& family, const std::vector<Curve>& probes) {
  std::size_t n = family.grid_size();
  Attempt attempt;
  for (int round = 0; round < 3; ++round) {
    attempt = classify_on_grid(family.with_grid(n), probes);
    if (attempt.limit) return *attempt.limit;
    n = 2 * n - 1;
  }
  throw Indeterminate("family limit undecided: " + attempt.reason, attempt.first, attempt.second);
}

FamilyValidation validate_family(const ContinuousFamily& family, const std::vector<Curve>& probes) {
  FamilyValidation out;
  const std::vector<double> ts = family.sample_grid();
  const std::vector<Curve> members = family.grid_curves();
  const std::size_t n = members.size();
  for (std::size_t i = 0; i < n && out.pairwise_disjoint; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!disjoint(members[i], members[j])) {
        out.pairwise_disjoint = false;
        out.failure = "members at t=" + std::to_string(ts[i]) + " and t=" + std::to_string(ts[j]) + " meet";
        break;
      }
    }
  }
  for (std::size_t p = 0; p < probes.size() && out.betweenness; ++p) {
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < n; ++j) {
      const auto pat = intersection_pattern(probes[p], members[j]);
      if (pat.equal || pat.interior_count > 0) hits.push_back(j);
    }
    if (!hits.empty() && hits.back() - hits.front() + 1 != hits.size()) {
      out.betweenness = false;
      out.failure = "probe " + std::to_string(p) + " skips a member between two it meets";
    }
  }
  for (std::size_t j = 0; j + 1 < n && out.no_gap; ++j) {
    const Curve mid = family.curve_at((ts[j] + ts[j + 1]) / 2);
    const bool between = disjoint(mid, members[j]) && disjoint(mid, members[j + 1]) &&
                         side_of(members[j].circle(), mid.circle()) ==
                             side_of(members[j].circle(), members[j + 1].circle()) &&
                         side_of(members[j + 1].circle(), mid.circle()) ==
                             side_of(members[j + 1].circle(), members[j].circle());
    if (!between) {
      out.no_gap = false;
      out.failure = "member between t=" + std::to_string(ts[j]) + " and t=" + std::to_string(ts[j + 1]) +
                    " is not between its neighbours";
    }
  }
  return out;
}

std::vector<Curve> default_probes(const ContinuousFamily& family, std::uint64_t seed, std::size_t count) {
  double lo = 0;
  double hi = 0;
  bool any = false;
  for (const auto& c : family.grid_curves()) {
    for (const auto& e : c.endpoints()) {
      if (e.is_infinity()) continue;
      const double v = std::clamp(e.to_double(), -1e3, 1e3);
      lo = any ? std::min(lo, v) : v;
      hi = any ? std::max(hi, v) : v;
      any = true;
    }
  }
  const long base = static_cast<long>(std::floor(lo)) - 1;
  const long span = static_cast<long>(std::ceil(hi)) + 1 - base;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, 64 * span);
  std::vector<Curve> out;
  while (out.size() < count) {
    const Rational p = Rational(base) + Rational(pick(rng), 64);
    if (out.size() % 2 == 0) {
      const Rational q = Rational(base) + Rational(pick(rng), 64);
      if (p == q) continue;
      out.push_back(make_geodesic(p, q));
    } else {
      out.push_back(make_horocycle(p, Rational(pick(rng) + 1, 256)));
    }
  }
  return out;
}

bool approximately_equal(const Curve& a, const Curve& b, double rel_tol) {
  auto unit = [](const Curve& c) {
    std::array<long double, 4> v{};
    long double m = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      v[i] = to_long_double(c.circle().coefficients()[i]);
      m = std::max(m, std::fabs(v[i]));
    }
    for (auto& x : v) x /= m;
    return v;
  };
  const auto u = unit(a);
  const auto w = unit(b);
  long double same = 0;
  long double flipped = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    same = std::max(same, std::fabs(u[i] - w[i]));
    flipped = std::max(flipped, std::fabs(u[i] + w[i]));
  }
  return std::min(same, flipped) <= rel_tol;
}

std::optional<Rational> simplest_rational_between(const QuadraticReal& lo, const QuadraticReal& hi, int max_depth) {
  if (hi < lo) throw InvalidInput("simplest_rational_between: empty interval");
  return simplest(lo, hi, 0, max_depth);
}

}  // namespace hyperk
