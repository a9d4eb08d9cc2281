#pragma once

// Static SVG figures of half-plane configurations. Output is deterministic:
// elements appear in scene order and every coordinate is printed with six
// decimals.

#include <string>
#include <utility>
#include <vector>

#include "hyperk/hypermodel.hpp"

namespace hyperk::cli {

struct StyledCurve {
  Curve curve;
  std::string stroke = "#1f4e79";
  double width = 1.5;
};

/// Pointwise images and other sampled paths, drawn as open polylines.
struct Polyline {
  std::vector<std::pair<double, double>> points;
  std::string stroke = "#b03a2e";
  double width = 1.5;
};

struct MarkedPoint {
  double x = 0;
  double y = 0;
  std::string label;
};

/// A window [x_min, x_max] x [0, height] of the half-plane.
struct SvgScene {
  double x_min = -3;
  double x_max = 3;
  double height = 3;
  std::string title;
  std::vector<StyledCurve> curves;
  std::vector<Polyline> paths;
  std::vector<MarkedPoint> points;
};

/// Panels side by side. Curves are clipped to y > 0; the real axis is
/// always drawn.
std::string render_svg(const std::vector<SvgScene>& panels);

SvgScene dyadic_scene(int level, long n_min, long n_max);
/// Four horocycles before and after the earthquake f(z) = 2z on Re z < 0.
std::vector<SvgScene> earthquake_scenes();
/// Window fitted around the curves' boundary points.
SvgScene curves_scene(const std::vector<Curve>& curves);

}  // namespace hyperk::cli
