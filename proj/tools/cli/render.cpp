#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hyperk/constructions.hpp"
#include "hyperk/earthquake.hpp"

namespace hyperk::cli {
namespace {

constexpr double kPanelWidth = 480.0;
constexpr double kMargin = 20.0;
constexpr double kTitleBand = 24.0;

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Frame {
  double left;
  double top;
  double scale;
  const SvgScene& scene;

  double px(double x) const { return left + (x - scene.x_min) * scale; }
  double py(double y) const { return top + (scene.height - y) * scale; }
  double width() const { return (scene.x_max - scene.x_min) * scale; }
  double height() const { return scene.height * scale; }
};

void draw_curve(std::ostringstream& out, const Frame& f, const StyledCurve& sc, const std::string& clip) {
  const auto& k = sc.curve.circle();
  const double a = to_double(k.a());
  const double b = to_double(k.b());
  const double c = to_double(k.c());
  const double d = to_double(k.d());
  const std::string style = " fill=\"none\" stroke=\"" + sc.stroke + "\" stroke-width=\"" + num(sc.width) +
                            "\" clip-path=\"url(#" + clip + ")\"/>\n";
  if (k.is_line()) {
    const double n2 = b * b + c * c;
    const double x0 = -d * b / n2;
    const double y0 = -d * c / n2;
    const double len = 10.0 * (f.scene.x_max - f.scene.x_min + f.scene.height) / std::sqrt(n2);
    out << "  <line x1=\"" << num(f.px(x0 - c * len)) << "\" y1=\"" << num(f.py(y0 + b * len)) << "\" x2=\""
        << num(f.px(x0 + c * len)) << "\" y2=\"" << num(f.py(y0 - b * len)) << "\"" << style;
    return;
  }
  const double cx = -b / (2 * a);
  const double cy = -c / (2 * a);
  const double r = std::sqrt(std::max(0.0, cx * cx + cy * cy - d / a));
  out << "  <circle cx=\"" << num(f.px(cx)) << "\" cy=\"" << num(f.py(cy)) << "\" r=\"" << num(r * f.scale) << "\""
      << style;
}

std::vector<std::pair<double, double>> dense_points(const Curve& curve, double x_min, double x_max, std::size_t n) {
  const auto& k = curve.circle();
  const double a = to_double(k.a());
  const double b = to_double(k.b());
  const double c = to_double(k.c());
  const double d = to_double(k.d());
  std::vector<std::pair<double, double>> out;
  if (k.is_line()) {
    if (c == 0.0) {
      for (std::size_t j = 1; j <= n; ++j) out.emplace_back(-d / b, 8.0 * j / n);
      return out;
    }
    for (std::size_t j = 0; j <= n; ++j) {
      const double x = x_min + (x_max - x_min) * j / n;
      const double y = -(b * x + d) / c;
      if (y > 0) out.emplace_back(x, y);
    }
    return out;
  }
  const double cx = -b / (2 * a);
  const double cy = -c / (2 * a);
  const double r = std::sqrt(cx * cx + cy * cy - d / a);
  for (std::size_t j = 0; j <= n; ++j) {
    const double th = 2 * M_PI * j / n - M_PI / 2;
    const double y = cy + r * std::sin(th);
    if (y > 1e-6) out.emplace_back(cx + r * std::cos(th), y);
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<SvgScene>& panels) {
  std::vector<SvgScene> scenes = panels;
  if (scenes.empty()) scenes.emplace_back();
  double total_width = kMargin;
  double total_height = 0;
  for (const auto& s : scenes) {
    const double scale = kPanelWidth / (s.x_max - s.x_min);
    total_width += kPanelWidth + kMargin;
    total_height = std::max(total_height, s.height * scale + 2 * kMargin + kTitleBand);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total_width) << "\" height=\"" << num(total_height)
      << "\" viewBox=\"0 0 " << num(total_width) << ' ' << num(total_height) << "\">\n";
  out << "  <rect x=\"0.000000\" y=\"0.000000\" width=\"" << num(total_width) << "\" height=\"" << num(total_height)
      << "\" fill=\"white\"/>\n";
  double left = kMargin;
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    const auto& s = scenes[i];
    const Frame f{left, kMargin + kTitleBand, kPanelWidth / (s.x_max - s.x_min), s};
    const std::string clip = "upper" + std::to_string(i);
    out << "  <clipPath id=\"" << clip << "\"><rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\""
        << num(f.width()) << "\" height=\"" << num(f.height()) << "\"/></clipPath>\n";
    if (!s.title.empty()) {
      out << "  <text x=\"" << num(f.left) << "\" y=\"" << num(kMargin + 14) << "\" font-family=\"sans-serif\""
          << " font-size=\"14\">" << escape(s.title) << "</text>\n";
    }
    out << "  <line x1=\"" << num(f.left) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.left + f.width())
        << "\" y2=\"" << num(f.py(0)) << "\" stroke=\"black\" stroke-width=\"1.000000\"/>\n";
    for (const auto& c : s.curves) draw_curve(out, f, c, clip);
    for (const auto& path : s.paths) {
      if (path.points.size() < 2) continue;
      out << "  <polyline points=\"";
      for (std::size_t j = 0; j < path.points.size(); ++j) {
        out << (j ? " " : "") << num(f.px(path.points[j].first)) << ',' << num(f.py(path.points[j].second));
      }
      out << "\" fill=\"none\" stroke=\"" << path.stroke << "\" stroke-width=\"" << num(path.width)
          << "\" clip-path=\"url(#" << clip << ")\"/>\n";
    }
    for (const auto& pt : s.points) {
      out << "  <circle cx=\"" << num(f.px(pt.x)) << "\" cy=\"" << num(f.py(pt.y))
          << "\" r=\"2.500000\" fill=\"black\"/>\n";
      if (!pt.label.empty()) {
        out << "  <text x=\"" << num(f.px(pt.x) + 4) << "\" y=\"" << num(f.py(pt.y) - 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(pt.label) << "</text>\n";
      }
    }
    left += kPanelWidth + kMargin;
  }
  out << "</svg>\n";
  return out.str();
}

SvgScene dyadic_scene(int level, long n_min, long n_max) {
  const DyadicFamily fam = dyadic_family(level, n_min, n_max);
  const double step = std::ldexp(1.0, -level);
  SvgScene s;
  s.x_min = n_min * step - 1.0;
  s.x_max = n_max * step + 1.0;
  s.height = std::max(1.5, (s.x_max - s.x_min) / 3);
  s.title = "dyadic horocycles, level " + std::to_string(level);
  for (const auto& h : fam.horocycles) s.curves.push_back({h});
  s.curves.push_back({make_horocycle(BoundaryPoint::infinity(), Rational(1, 1L << level)), "#7f8c8d", 1.0});
  for (const auto& z : fam.tangency_points) s.points.push_back({z.x_double(), z.y_double(), ""});
  return s;
}

std::vector<SvgScene> earthquake_scenes() {
  const std::vector<Curve> hs{make_horocycle(-1, 1), make_horocycle(1, 1), make_horocycle(0, Rational(1, 4)),
                              make_horocycle(BoundaryPoint::infinity(), 2)};
  const Curve fault = make_geodesic(0, BoundaryPoint::infinity());
  const EarthquakeMap e(fault, 2, FaultSide::Left);
  SvgScene before;
  before.x_min = -4;
  before.x_max = 3;
  before.height = 5;
  before.title = "before";
  before.curves.push_back({fault, "#7f8c8d", 1.0});
  for (const auto& h : hs) before.curves.push_back({h});
  SvgScene after = before;
  after.title = "after f(z) = 2z on Re z < 0";
  after.curves.erase(after.curves.begin() + 1, after.curves.end());
  for (const auto& h : hs) {
    Polyline piece;
    bool side = false;
    for (const auto& [x, y] : dense_points(h, after.x_min - 1, after.x_max + 1, 720)) {
      const UHPPoint z = UHPPoint::approximate(x, y);
      const bool moved = e.moves(z);
      if (!piece.points.empty() && moved != side) {
        after.paths.push_back(piece);
        piece.points.clear();
      }
      side = moved;
      const UHPPoint w = eq_apply(e, z);
      piece.points.emplace_back(w.x_double(), w.y_double());
    }
    after.paths.push_back(piece);
  }
  return {before, after};
}

SvgScene curves_scene(const std::vector<Curve>& curves) {
  SvgScene s;
  double lo = 0;
  double hi = 0;
  bool any = false;
  for (const auto& c : curves) {
    for (const auto& p : c.endpoints()) {
      if (p.is_infinity()) continue;
      const double v = p.to_double();
      lo = any ? std::min(lo, v) : v;
      hi = any ? std::max(hi, v) : v;
      any = true;
    }
    s.curves.push_back({c});
  }
  if (any) {
    s.x_min = lo - 1;
    s.x_max = hi + 1;
    s.height = std::max(1.0, (s.x_max - s.x_min) / 2);
  }
  return s;
}

}  // namespace hyperk::cli
