#pragma once

// Finite induced subgraphs of the disjointness graphs of geodesics,
// horocycles and hypercycles.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperk/hypermodel.hpp"
#include "hyperk/predicates.hpp"

namespace hyperk {

enum class GraphClass { Geodesic, Horocycle, Hypercycle, Mixed };
std::string to_string(GraphClass cls);

using Adjacency = std::vector<std::vector<bool>>;
/// perm[i] is the image of vertex i.
using Permutation = std::vector<std::size_t>;

struct DisjointnessGraph {
  std::vector<Curve> curves;
  /// adjacency[i][j] iff curves i and j are disjoint in the open half-plane.
  Adjacency adjacency;
  GraphClass graph_class = GraphClass::Mixed;

  std::size_t size() const { return curves.size(); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

/// Throws InvalidInput on duplicate curves (naming both indices) and on
/// mixed curve kinds unless allow_mixed.
DisjointnessGraph build_graph(const std::vector<Curve>& curves, bool allow_mixed = false);

bool is_automorphism(const Adjacency& adjacency, const Permutation& perm);

/// All automorphisms in lexicographic order of the image sequence. Throws
/// SizeGuard above 16 vertices and CapExceeded (partial count = cap) when a
/// (cap + 1)-th automorphism exists.
std::vector<Permutation> automorphisms(const Adjacency& adjacency, std::size_t cap = 100000);
std::vector<Permutation> automorphisms(const DisjointnessGraph& graph, std::size_t cap = 100000);

/// An isometry sending curve i to curve perm[i] for every i, or nullopt.
/// Candidates come from the boundary points of the configuration: three
/// points and their possible images through triple_normalizer, or, with only
/// two distinct points, the maps fixing their images up to dilation and
/// reflection. Every candidate is verified exactly.
std::optional<Isometry> isometry_realizing(const DisjointnessGraph& graph, const Permutation& perm);
/// Same search between two configurations: curve i of `from` must go to
/// curve perm[i] of `to`.
std::optional<Isometry> isometry_between(const DisjointnessGraph& from, const DisjointnessGraph& to,
                                         const Permutation& perm);

/// The permutation of vertices induced by iso, or nullopt when some image
/// curve is not a vertex.
std::optional<Permutation> induced_permutation(const DisjointnessGraph& graph, const Isometry& iso);

struct LinkCheck {
  bool preserved = true;
  /// Indices {a, b, c, d}: pair {a, b} against pair {c, d} changed linkedness.
  std::optional<std::array<std::size_t, 4>> witness;
};

/// Checks every pairing of every 4-subset. Throws InvalidInput on a size
/// mismatch, repeated points, or repeated values.
LinkCheck link_preserving_check(const std::vector<BoundaryPoint>& points, const std::vector<BoundaryPoint>& values);

}  // namespace hyperk
