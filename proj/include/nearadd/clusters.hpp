#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nearadd/graph.hpp"

namespace nearadd {

struct Cluster {
  VertexId center = 0;
  /// Sorted, contains center.
  std::vector<VertexId> members;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Clusters of one phase, sorted by center id. Member sets are pairwise
/// disjoint.
struct ClusterCollection {
  std::size_t phase = 0;
  std::vector<Cluster> clusters;

  static ClusterCollection singletons(std::size_t num_vertices);

  /// Sorted center ids.
  std::vector<VertexId> centers() const;
  std::size_t size() const { return clusters.size(); }
  bool empty() const { return clusters.empty(); }
  const Cluster* find(VertexId center) const;
  /// Per vertex: the center of its cluster, if any.
  std::vector<std::optional<VertexId>> owner_map(std::size_t num_vertices) const;

  /// Throws InputError when members are out of range, overlap, or a center is
  /// missing from its own cluster.
  void validate(std::size_t num_vertices) const;

  friend bool operator==(const ClusterCollection&, const ClusterCollection&) = default;
};

struct KnowledgeEntry {
  VertexId center = 0;
  Distance distance = 0;
  /// Neighbor the announcement arrived from; the vertex itself for its own
  /// center.
  VertexId predecessor = 0;

  friend bool operator==(const KnowledgeEntry&, const KnowledgeEntry&) = default;
};

/// Centers a vertex learned about during popularity detection, in
/// (distance, center) order.
struct CenterKnowledge {
  std::vector<KnowledgeEntry> entries;

  const KnowledgeEntry* find(VertexId center) const;
  friend bool operator==(const CenterKnowledge&, const CenterKnowledge&) = default;
};

/// State each vertex keeps across phases.
struct VertexMemory {
  bool is_center = false;
  /// Center of the cluster this vertex belongs to in the current collection;
  /// empty once its cluster has been left unclustered.
  std::optional<VertexId> cluster_center;
  /// Children in the spanning trees of clusters this vertex relays for, keyed
  /// by cluster center.
  std::map<VertexId, std::vector<VertexId>> tree_children;
};

}  // namespace nearadd
