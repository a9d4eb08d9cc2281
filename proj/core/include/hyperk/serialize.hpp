#pragma once

// Text and JSON forms of curves and of the results built on them.
//
// Curve text form: `horocycle a=1 b=0 c=-1 d=0` (kind tag plus the
// canonical integer coefficients). JSON records mirror it as
// {"kind", "a", "b", "c", "d"} with integers written as strings.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperk/earthquake.hpp"
#include "hyperk/families.hpp"
#include "hyperk/graphs.hpp"
#include "hyperk/hypermodel.hpp"
#include "hyperk/predicates.hpp"

namespace hyperk {

using Json = nlohmann::ordered_json;

std::string format_curve(const Curve& c);
/// Parses the text form. The kind tag must match the coefficients.
Curve parse_curve(std::string_view text);

/// Reads one curve per line in text form; blank lines and lines starting
/// with '#' are skipped. Errors name the offending line.
std::vector<Curve> read_curves(std::istream& in);

/// Constructor shorthand used on the command line:
///   geodesic:p,q  horocycle:center,size  hypercycle:p,q,x,y  coeffs:a,b,c,d
/// or the text form. Numbers are rationals (p/q, inf for boundary points);
/// decimals are accepted only when allow_decimal.
Curve parse_curve_spec(std::string_view text, bool allow_decimal = false);

/// Comma-separated numbers.
std::vector<Rational> parse_number_list(std::string_view text, bool allow_decimal = false);
Rational parse_number(std::string_view text, bool allow_decimal = false);

Json curve_to_json(const Curve& c);
Curve curve_from_json(const Json& j);

Json boundary_point_to_json(const BoundaryPoint& p);
Json point_to_json(const UHPPoint& z);
Json isometry_to_json(const Isometry& iso);
/// {interior_count, tangent, shared_endpoints, type}; type is null unless
/// given (hypercycle pairs only).
Json pattern_to_json(const IntersectionPattern& pattern, std::optional<HypercyclePairType> type = std::nullopt);
Json limit_to_json(const FamilyLimit& limit);
Json realizability_to_json(const RealizabilityResult& result);

/// Adjacency-list text:
///   graph <class> <n>
///   <i> <curve text>       (n lines)
///   <i>: <neighbours>      (n lines)
std::string format_graph(const DisjointnessGraph& g);
Json graph_to_json(const DisjointnessGraph& g);

}  // namespace hyperk
