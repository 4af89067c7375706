#include "nearadd/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "nearadd/errors.hpp"

namespace nearadd {

Graph::Graph(std::size_t num_vertices) : offsets_(num_vertices + 1, 0) {}

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
  if (num_vertices > std::numeric_limits<VertexId>::max()) {
    throw InputError("too many vertices: " + std::to_string(num_vertices));
  }
  Graph g(num_vertices);
  std::vector<std::size_t> degree(num_vertices, 0);
  for (const Edge& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(num_vertices) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InputError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
  }
  return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

DistanceRow bfs(const Graph& graph, VertexId source, std::optional<Distance> depth_limit) {
  if (!graph.contains(source)) {
    throw InputError("bfs source " + std::to_string(source) + " out of range");
  }
  DistanceRow row{source, std::vector<Distance>(graph.num_vertices(), kUnreachable)};
  row.dist[source] = 0;
  std::vector<VertexId> frontier{source};
  std::vector<VertexId> next;
  Distance depth = 0;
  while (!frontier.empty()) {
    if (depth_limit && depth >= *depth_limit) break;
    next.clear();
    for (VertexId u : frontier) {
      for (VertexId w : graph.neighbors(u)) {
        if (row.dist[w] == kUnreachable) {
          row.dist[w] = depth + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
    ++depth;
  }
  return row;
}

std::optional<Distance> integer_radius(const Rational& delta) {
  if (delta < 0) throw ConfigError("ball radius must be nonnegative");
  const BigInt r = floor(delta);
  if (r >= kUnreachable) return std::nullopt;
  return static_cast<Distance>(r);
}

std::vector<VertexId> ball_centers(const Graph& graph, std::span<const VertexId> centers, VertexId v,
                                   const Rational& delta) {
  const DistanceRow row = bfs(graph, v, integer_radius(delta));
  std::vector<VertexId> out;
  for (VertexId c : centers) {
    if (!graph.contains(c)) throw InputError("center " + std::to_string(c) + " out of range");
    if (row.reachable(c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nearadd
