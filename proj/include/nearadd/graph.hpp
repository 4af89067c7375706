#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "nearadd/rational.hpp"

namespace nearadd {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order. Self-loops are rejected by Graph, not here.
constexpr Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected unweighted graph in compressed adjacency form. Vertex ids
/// are exactly 0..n-1 and every adjacency list is sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices);

  /// Throws InputError on out-of-range endpoints, self-loops or duplicates.
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId a, VertexId b) const;
  bool contains(VertexId v) const { return v < num_vertices(); }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

struct DistanceRow {
  VertexId source = 0;
  std::vector<Distance> dist;

  bool reachable(VertexId v) const { return dist[v] != kUnreachable; }
};

/// Hop distances from `source`; vertices beyond `depth_limit` (when given) are
/// reported unreachable.
DistanceRow bfs(const Graph& graph, VertexId source, std::optional<Distance> depth_limit = std::nullopt);

/// { c in centers : d(v, c) <= delta }, sorted. Distances are integers, so the
/// comparison is against floor(delta).
std::vector<VertexId> ball_centers(const Graph& graph, std::span<const VertexId> centers, VertexId v,
                                   const Rational& delta);

/// Depth limit for an integer-metric ball of rational radius.
std::optional<Distance> integer_radius(const Rational& delta);

}  // namespace nearadd
