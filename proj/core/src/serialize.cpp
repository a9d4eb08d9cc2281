#include "hyperk/serialize.hpp"

#include <istream>
#include <sstream>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

BoundaryPoint parse_boundary(std::string_view text, bool allow_decimal) {
  if (text == "inf" || text == "infinity" || text == "oo") return BoundaryPoint::infinity();
  return BoundaryPoint(parse_number(text, allow_decimal));
}

void expect_count(std::string_view what, const std::vector<std::string_view>& parts, std::size_t n) {
  if (parts.size() != n) {
    throw InvalidInput(std::string(what) + " expects " + std::to_string(n) + " comma-separated values, got " +
                       std::to_string(parts.size()));
  }
}

}  // namespace

std::string format_curve(const Curve& c) {
  const auto& k = c.circle().coefficients();
  return to_string(c.kind()) + " a=" + to_string(k[0]) + " b=" + to_string(k[1]) + " c=" + to_string(k[2]) +
         " d=" + to_string(k[3]);
}

Curve parse_curve(std::string_view text) {
  std::istringstream in{std::string(trim(text))};
  std::string tag;
  in >> tag;
  const CurveKind kind = parse_curve_kind(tag);
  std::array<std::optional<Rational>, 4> coeff;
  std::string field;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq != 1 || std::string("abcd").find(field[0]) == std::string::npos) {
      throw InvalidInput("bad coefficient field '" + field + "' in '" + std::string(text) + "'");
    }
    auto& slot = coeff[static_cast<std::size_t>(field[0] - 'a')];
    if (slot) throw InvalidInput("repeated coefficient '" + field.substr(0, 1) + "'");
    slot = parse_rational(std::string_view(field).substr(2));
  }
  for (const auto& v : coeff) {
    if (!v) throw InvalidInput("curve '" + std::string(text) + "' needs all of a, b, c, d");
  }
  Curve c(GeneralizedCircle(*coeff[0], *coeff[1], *coeff[2], *coeff[3]));
  if (c.kind() != kind) {
    throw InvalidInput("coefficients describe a " + to_string(c.kind()) + ", not a " + tag);
  }
  return c;
}

std::vector<Curve> read_curves(std::istream& in) {
  std::vector<Curve> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      out.push_back(parse_curve_spec(body));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

Rational parse_number(std::string_view text, bool allow_decimal) {
  text = trim(text);
  if (allow_decimal && text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return parse_rational(text);
}

std::vector<Rational> parse_number_list(std::string_view text, bool allow_decimal) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(parse_number(part, allow_decimal));
  return out;
}

Curve parse_curve_spec(std::string_view text, bool allow_decimal) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return parse_curve(text);
  const auto head = text.substr(0, colon);
  const auto parts = split(text.substr(colon + 1), ',');
  const bool exact = !allow_decimal;
  if (head == "geodesic") {
    expect_count(head, parts, 2);
    return make_geodesic(parse_boundary(parts[0], allow_decimal), parse_boundary(parts[1], allow_decimal));
  }
  if (head == "horocycle") {
    expect_count(head, parts, 2);
    return make_horocycle(parse_boundary(parts[0], allow_decimal), parse_number(parts[1], allow_decimal));
  }
  if (head == "hypercycle") {
    expect_count(head, parts, 4);
    return make_hypercycle(parse_boundary(parts[0], allow_decimal), parse_boundary(parts[1], allow_decimal),
                           UHPPoint(parse_number(parts[2], allow_decimal), parse_number(parts[3], allow_decimal)));
  }
  if (head == "coeffs") {
    expect_count(head, parts, 4);
    std::array<Rational, 4> k;
    for (std::size_t i = 0; i < 4; ++i) k[i] = parse_number(parts[i], allow_decimal);
    return Curve(GeneralizedCircle(k[0], k[1], k[2], k[3]), exact);
  }
  throw InvalidInput("unknown curve form '" + std::string(head) + "'");
}

Json curve_to_json(const Curve& c) {
  const auto& k = c.circle().coefficients();
  return Json{{"kind", to_string(c.kind())},
              {"a", to_string(k[0])},
              {"b", to_string(k[1])},
              {"c", to_string(k[2])},
              {"d", to_string(k[3])}};
}

Curve curve_from_json(const Json& j) {
  try {
    const std::string text = j.at("kind").get<std::string>() + " a=" + j.at("a").get<std::string>() +
                             " b=" + j.at("b").get<std::string>() + " c=" + j.at("c").get<std::string>() +
                             " d=" + j.at("d").get<std::string>();
    return parse_curve(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed curve record: ") + e.what());
  }
}

Json boundary_point_to_json(const BoundaryPoint& p) { return to_string(p); }

Json point_to_json(const UHPPoint& z) {
  return Json{{"x", to_string(z.x())}, {"y", to_string(z.y())}, {"exact", z.exact()}};
}

Json isometry_to_json(const Isometry& iso) {
  const Isometry n = iso.normalized();
  return Json{{"matrix", {to_string(n.m00()), to_string(n.m01()), to_string(n.m10()), to_string(n.m11())}},
              {"orientation", iso.preserves_orientation() ? "preserving" : "reversing"}};
}

Json pattern_to_json(const IntersectionPattern& pattern, std::optional<HypercyclePairType> type) {
  Json j{{"interior_count", pattern.interior_count},
         {"tangent", pattern.tangent},
         {"shared_endpoints", pattern.shared_endpoints},
         {"type", nullptr}};
  if (type) j["type"] = to_string(*type);
  if (pattern.equal) j["equal"] = true;
  return j;
}

Json limit_to_json(const FamilyLimit& limit) {
  Json j{{"kind", to_string(limit.kind)}, {"curve", nullptr}};
  if (limit.curve) j["curve"] = curve_to_json(*limit.curve);
  return j;
}

Json realizability_to_json(const RealizabilityResult& result) {
  Json j{{"satisfiable", result.satisfiable}};
  if (result.satisfiable) {
    Json radii = Json::array();
    for (const auto& r : result.radii) radii.push_back(to_string(r));
    j["radii"] = radii;
  } else {
    j["certificate"] = result.certificate;
  }
  j["derivation"] = result.derivation;
  return j;
}

std::string format_graph(const DisjointnessGraph& g) {
  std::ostringstream out;
  out << "graph " << to_string(g.graph_class) << ' ' << g.size() << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) out << i << ' ' << format_curve(g.curves[i]) << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << i << ':';
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.adjacency[i][j]) out << ' ' << j;
    }
    out << '\n';
  }
  return out.str();
}

Json graph_to_json(const DisjointnessGraph& g) {
  Json curves = Json::array();
  for (const auto& c : g.curves) curves.push_back(curve_to_json(c));
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"class", to_string(g.graph_class)}, {"curves", curves}, {"edges", edges}};
}

}  // namespace hyperk
