#pragma once

// One-parameter families of curves t -> h_t, t in [0, 1], sampled on a
// Chebyshev grid, and the classification of how such a family ends.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperk/hypermodel.hpp"
#include "hyperk/predicates.hpp"

namespace hyperk {

enum class LimitKind { FoliatesComponent, HorocycleLimit, HypercycleOrGeodesicLimit };
std::string to_string(LimitKind kind);

struct FamilyLimit {
  LimitKind kind = LimitKind::FoliatesComponent;
  /// Set for the two limit kinds. Computed limits are flagged inexact.
  std::optional<Curve> curve;
};
std::string to_string(const FamilyLimit& limit);

class ContinuousFamily {
 public:
  using Generator = std::function<Curve(double)>;

  /// The grid covers [0, t_max]; t_max < 1 when the family only exists on
  /// [0, 1) and t = 1 is its declared limit.
  ContinuousFamily(Generator generator, double t_max, std::size_t grid_size,
                   std::optional<FamilyLimit> declared = std::nullopt, bool reparametrized = false);

  Curve curve_at(double t) const { return generator_(t); }
  double t_max() const { return t_max_; }
  std::size_t grid_size() const { return grid_size_; }
  const std::optional<FamilyLimit>& declared_limit() const { return declared_; }
  /// Set by disj_family when the normalized endpoint was <= 1.
  bool reparametrized() const { return reparametrized_; }

  /// t_j = t_max (1 - cos(pi j / (N - 1))) / 2, j = 0 .. N-1.
  std::vector<double> sample_grid() const;
  std::vector<Curve> grid_curves() const;
  ContinuousFamily with_grid(std::size_t grid_size) const;

 private:
  Generator generator_;
  double t_max_;
  std::size_t grid_size_;
  std::optional<FamilyLimit> declared_;
  bool reparametrized_;
};

/// The family from a hypercycle hprime accumulating on a disjoint horocycle
/// h. In the frame where h is y = 1 and hprime has endpoints +-b and top
/// point i e^(-a), h_t has endpoints +-b^(1/(1-t)) and passes through
/// i e^(a(t-1)). h_0 is hprime exactly; the declared limit is h.
/// Throws InvalidInput unless h is a horocycle, hprime a hypercycle (or
/// geodesic) and the two are disjoint.
ContinuousFamily disj_family(const Curve& h, const Curve& hprime, std::size_t grid_size = 65);

/// Rays y = tan(alpha) x, x > 0, with alpha going from pi/4 at t = 0 to
/// final_angle at t = 1.
ContinuousFamily ray_sweep_family(double final_angle = 0.01, std::size_t grid_size = 65);

/// Hypercycles with endpoints p, q on the positive side of geodesic(p, q)
/// at sinh-distance s_start + t (s_limit - s_start). The grid stops at
/// t = 15/16; the declared limit is the member at t = 1.
ContinuousFamily fixed_endpoint_family(const BoundaryPoint& p, const BoundaryPoint& q, const Rational& s_start,
                                       const Rational& s_limit, std::size_t grid_size = 65);

/// Decides the end behaviour of the family from its grid members. The
/// envelopes m = sup of lower endpoints and M = inf of upper endpoints are
/// taken in a frame where every member's endpoints are finite. m = M gives a
/// horocycle at m whose size is the limit of the largest horocycles at m
/// disjoint from each member; m < M gives a hypercycle or geodesic limit when
/// a curve with endpoints m, M lies beyond the last member and misses every
/// member, and FoliatesComponent otherwise. `probes` are extra candidate
/// witnesses for both tests. Escalates the grid to 129 and 257 points before
/// throwing Indeterminate.
FamilyLimit classify_family_limit(const ContinuousFamily& family, const std::vector<Curve>& probes = {});

struct FamilyValidation {
  bool pairwise_disjoint = true;
  bool betweenness = true;
  bool no_gap = true;
  std::string failure;

  bool ok() const { return pairwise_disjoint && betweenness && no_gap; }
};

/// Grid checks: members pairwise disjoint; every probe meets a contiguous
/// run of members; the member at each midpoint lies between its neighbours.
FamilyValidation validate_family(const ContinuousFamily& family, const std::vector<Curve>& probes);

/// Seeded probe geodesics and horocycles spread over the members' endpoints.
std::vector<Curve> default_probes(const ContinuousFamily& family, std::uint64_t seed, std::size_t count);

/// Coefficient vectors equal up to scale within rel_tol (max-norm).
bool approximately_equal(const Curve& a, const Curve& b, double rel_tol);

/// Simplest rational in [lo, hi] by continued fractions; nullopt after
/// max_depth partial quotients.
std::optional<Rational> simplest_rational_between(const QuadraticReal& lo, const QuadraticReal& hi,
                                                  int max_depth = 64);

}  // namespace hyperk
