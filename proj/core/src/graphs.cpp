#include "hyperk/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

constexpr std::size_t kMaxVertices = 16;

std::vector<std::size_t> refined_colours(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> colour(n, 0);
  for (std::size_t i = 0; i < n; ++i) colour[i] = static_cast<std::size_t>(std::count(adj[i].begin(), adj[i].end(), true));
  for (std::size_t round = 0; round < n; ++round) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> nb;
      for (std::size_t j = 0; j < n; ++j) {
        if (adj[i][j]) nb.push_back(colour[j]);
      }
      std::sort(nb.begin(), nb.end());
      sig[i] = {colour[i], nb};
      ids.emplace(sig[i], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::size_t> updated(n);
    for (std::size_t i = 0; i < n; ++i) updated[i] = ids.at(sig[i]);
    const std::size_t before = std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = updated;
    if (ids.size() == before) break;
  }
  return colour;
}

struct Search {
  const Adjacency& adj;
  const std::vector<std::size_t>& colour;
  std::size_t cap;
  Permutation perm;
  std::vector<bool> used;
  std::vector<Permutation> found;

  void run(std::size_t v) {
    const std::size_t n = adj.size();
    if (v == n) {
      if (found.size() == cap) throw CapExceeded("automorphism count exceeds the cap of " + std::to_string(cap), cap);
      found.push_back(perm);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || colour[w] != colour[v]) continue;
      bool ok = adj[v][v] == adj[w][w];
      for (std::size_t u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[perm[u]][w];
      if (!ok) continue;
      perm[v] = w;
      used[w] = true;
      run(v + 1);
      used[w] = false;
    }
  }
};

std::vector<BoundaryPoint> rational_boundary(const Curve& c) {
  std::vector<BoundaryPoint> out;
  for (const auto& p : c.endpoints()) {
    if (p.is_infinity() || p.is_rational()) out.push_back(p);
  }
  return out;
}

bool realizes(const std::vector<Curve>& from, const std::vector<Curve>& to, const Permutation& perm,
              const Isometry& iso) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!(apply(iso, from[i]) == to[perm[i]])) return false;
  }
  return true;
}

// Ratios of coefficients with weights (0, 1, 1, 2) under z -> lambda z.
std::vector<Rational> dilation_candidates(const GeneralizedCircle& from, const GeneralizedCircle& to) {
  static const int weight[4] = {0, 1, 1, 2};
  std::vector<Rational> out;
  const auto& f = from.coefficients();
  const auto& t = to.coefficients();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const int w = weight[j] - weight[i];
      if (w <= 0 || sgn(f[i]) == 0 || sgn(f[j]) == 0 || sgn(t[i]) == 0 || sgn(t[j]) == 0) continue;
      const Rational r = (t[j] / t[i]) / (f[j] / f[i]);
      if (sgn(r) <= 0) continue;
      Rational root;
      if (w == 1) {
        out.push_back(r);
      } else if (exact_sqrt(r, root)) {
        out.push_back(root);
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::Geodesic: return "geodesic";
    case GraphClass::Horocycle: return "horocycle";
    case GraphClass::Hypercycle: return "hypercycle";
    case GraphClass::Mixed: return "mixed";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> DisjointnessGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacency[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

DisjointnessGraph build_graph(const std::vector<Curve>& curves, bool allow_mixed) {
  DisjointnessGraph g;
  g.curves = curves;
  const std::size_t n = curves.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (curves[i] == curves[j]) {
        throw InvalidInput("duplicate curve: vertices " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  bool mixed = false;
  for (std::size_t i = 1; i < n; ++i) mixed = mixed || curves[i].kind() != curves[0].kind();
  if (mixed && !allow_mixed) throw InvalidInput("graph mixes curve kinds; pass allow_mixed to permit it");
  if (n == 0 || mixed) {
    g.graph_class = GraphClass::Mixed;
  } else {
    switch (curves[0].kind()) {
      case CurveKind::Geodesic: g.graph_class = GraphClass::Geodesic; break;
      case CurveKind::Horocycle: g.graph_class = GraphClass::Horocycle; break;
      case CurveKind::Hypercycle: g.graph_class = GraphClass::Hypercycle; break;
    }
  }
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool d = disjoint(curves[i], curves[j]);
      g.adjacency[i][j] = d;
      g.adjacency[j][i] = d;
    }
  }
  return g;
}

bool is_automorphism(const Adjacency& adj, const Permutation& perm) {
  const std::size_t n = adj.size();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j] != adj[perm[i]][perm[j]]) return false;
    }
  }
  return true;
}

std::vector<Permutation> automorphisms(const Adjacency& adj, std::size_t cap) {
  const std::size_t n = adj.size();
  if (n > kMaxVertices) {
    throw SizeGuard("automorphism search is limited to " + std::to_string(kMaxVertices) + " vertices, got " +
                    std::to_string(n));
  }
  const auto colour = refined_colours(adj);
  Search s{adj, colour, cap, Permutation(n), std::vector<bool>(n, false), {}};
  s.run(0);
  return s.found;
}

std::vector<Permutation> automorphisms(const DisjointnessGraph& graph, std::size_t cap) {
  return automorphisms(graph.adjacency, cap);
}

std::optional<Isometry> isometry_realizing(const DisjointnessGraph& g, const Permutation& perm) {
  if (perm.size() != g.size()) throw InvalidInput("permutation size does not match the graph");
  Permutation id(g.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  if (perm == id) return Isometry::identity();
  return isometry_between(g, g, perm);
}

std::optional<Isometry> isometry_between(const DisjointnessGraph& from, const DisjointnessGraph& to,
                                         const Permutation& perm) {
  if (perm.size() != from.size() || from.size() != to.size()) {
    throw InvalidInput("permutation size does not match the graphs");
  }
  const auto& g = from;

  // Distinct boundary points with the curve they came from.
  std::vector<std::pair<BoundaryPoint, std::size_t>> source;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& p : rational_boundary(g.curves[i])) {
      const bool seen = std::any_of(source.begin(), source.end(), [&](const auto& s) { return s.first == p; });
      if (!seen) source.emplace_back(p, i);
    }
  }
  auto options = [&](std::size_t k) { return rational_boundary(to.curves[perm[source[k].second]]); };

  if (source.size() >= 3) {
    const auto o0 = options(0);
    const auto o1 = options(1);
    const auto o2 = options(2);
    const std::array<BoundaryPoint, 3> src{source[0].first, source[1].first, source[2].first};
    for (const auto& a : o0) {
      for (const auto& b : o1) {
        for (const auto& c : o2) {
          if (a == b || b == c || a == c) continue;
          const Isometry iso = triple_normalizer(src, {a, b, c}).normalized();
          if (realizes(from.curves, to.curves, perm, iso)) return iso;
        }
      }
    }
    return std::nullopt;
  }
  if (source.size() == 2) {
    const Isometry phi = two_point_normalizer(source[0].first, source[1].first);
    for (const auto& a : options(0)) {
      for (const auto& b : options(1)) {
        if (a == b) continue;
        const Isometry psi_inv = two_point_normalizer(a, b).inverse();
        const Isometry psi = psi_inv.inverse();
        for (const Isometry& flip : {Isometry::identity(), Isometry::reflection()}) {
          for (std::size_t i = 0; i < g.size(); ++i) {
            const GeneralizedCircle source_circle = apply(flip * phi, g.curves[i].circle());
            const GeneralizedCircle target = apply(psi, to.curves[perm[i]].circle());
            for (const auto& lambda : dilation_candidates(source_circle, target)) {
              const Isometry iso = (psi_inv * Isometry::dilation(lambda) * flip * phi).normalized();
              if (realizes(from.curves, to.curves, perm, iso)) return iso;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Permutation> induced_permutation(const DisjointnessGraph& g, const Isometry& iso) {
  Permutation perm(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Curve image = apply(iso, g.curves[i]);
    const auto it = std::find(g.curves.begin(), g.curves.end(), image);
    if (it == g.curves.end()) return std::nullopt;
    perm[i] = static_cast<std::size_t>(it - g.curves.begin());
  }
  return perm;
}

LinkCheck link_preserving_check(const std::vector<BoundaryPoint>& points, const std::vector<BoundaryPoint>& values) {
  if (points.size() != values.size()) {
    throw InvalidInput("link_preserving_check: " + std::to_string(points.size()) + " points but " +
                       std::to_string(values.size()) + " values");
  }
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) throw InvalidInput("link_preserving_check: repeated point " + to_string(points[i]));
      if (values[i] == values[j]) throw InvalidInput("link_preserving_check: map is not injective on the sample");
    }
  }
  LinkCheck out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<std::array<std::size_t, 4>, 3> pairings{{{a, b, c, d}, {a, c, b, d}, {a, d, b, c}}};
          for (const auto& q : pairings) {
            const bool before = linked({points[q[0]], points[q[1]]}, {points[q[2]], points[q[3]]});
            const bool after = linked({values[q[0]], values[q[1]]}, {values[q[2]], values[q[3]]});
            if (before != after) {
              out.preserved = false;
              out.witness = q;
              return out;
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace hyperk
