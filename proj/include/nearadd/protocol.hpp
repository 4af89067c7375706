#pragma once

// Distributed building blocks of the spanner construction. Each operation
// runs one or more vertex programs on the CONGEST engine; the host only
// prepares per-vertex inputs and collects per-vertex outputs.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nearadd/clusters.hpp"
#include "nearadd/engine.hpp"
#include "nearadd/graph.hpp"
#include "nearadd/rational.hpp"

namespace nearadd {

using congest::Round;

/// Message tags. Every message is tag + at most two payload words.
enum class Tag : std::uint8_t {
  announce = 1,  // popularity detection: up to two center ids
  dominate = 2,  // ruling set flood: source id
  forest = 3,    // superclustering BFS: root id
  ack = 4,       // superclustering path marking
  rekey = 5,     // cluster membership update: old center, new center
  trace = 6,     // interconnection trace-back: up to two target ids
};

/// Aggregate engine statistics over one or more runs.
struct EngineStats {
  std::uint64_t messages = 0;
  std::size_t max_words = 0;
  std::size_t violations = 0;
  std::uint64_t replay_hash = 0;

  void absorb(const congest::EngineTrace& trace);
  void absorb_stats(const EngineStats& other);
};

// ---------------------------------------------------------------------------
// Popular-cluster detection.

struct PopularityResult {
  /// Centers with at least `deg` other centers within distance delta, sorted.
  std::vector<VertexId> popular;
  /// Per vertex. Capacity deg + 1 entries, own center included.
  std::vector<CenterKnowledge> knowledge;
  Round rounds = 0;
  EngineStats stats;
};

/// Number of engine rounds detection takes: 1 + floor(delta) * deg.
Round popularity_rounds(std::uint64_t deg, const Rational& delta);

PopularityResult detect_popular(const Graph& graph, const ClusterCollection& collection, std::uint64_t deg,
                                const Rational& delta, const congest::EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Ruling sets by digit elimination.

struct RulingSetResult {
  /// (q+1)-separated, (c*q)-dominating subset of the candidates, sorted.
  std::vector<VertexId> ruling;
  /// Every candidate paired with the ruling-set member that (transitively)
  /// dominates it; ruling members map to themselves.
  std::vector<std::pair<VertexId, VertexId>> dominators;
  /// Digit base ceil(n^(1/c)).
  std::uint64_t base = 0;
  Round rounds = 0;
  EngineStats stats;
};

RulingSetResult ruling_set(const Graph& graph, std::span<const VertexId> candidates, std::uint64_t q, int c,
                           const congest::EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Superclustering.

struct ForestNode {
  std::optional<VertexId> root;
  /// Equal to the vertex itself at roots; meaningless when root is empty.
  VertexId parent = 0;
  Distance hop = 0;
};

struct SuperclusterResult {
  /// One cluster per ruling-set root.
  ClusterCollection clusters;
  /// Clusters of the input collection whose centers the forest did not reach.
  std::vector<Cluster> unclustered;
  std::vector<ForestNode> forest;
  /// Forest edges on root-to-spanned-center paths, sorted.
  std::vector<Edge> edges;
  std::uint64_t depth = 0;
  Round forest_rounds = 0;
  Round marking_rounds = 0;
  Round membership_rounds = 0;
  EngineStats stats;

  Round rounds() const { return forest_rounds + marking_rounds + membership_rounds; }
};

/// BFS depth of the superclustering forest: ceil((2 / rho) * delta).
std::uint64_t forest_depth(const Rational& delta, const Rational& rho);

/// `memory` carries per-vertex cluster state between phases. When null a
/// fresh memory consistent with `collection` is used (cluster trees empty).
SuperclusterResult supercluster(const Graph& graph, const ClusterCollection& collection,
                                std::span<const VertexId> popular, std::span<const VertexId> ruling,
                                const Rational& delta, const Rational& rho, std::vector<VertexMemory>* memory = nullptr,
                                const congest::EngineOptions& options = {});

/// Memory matching a collection: centers flagged, cluster_center set.
std::vector<VertexMemory> fresh_memory(std::size_t num_vertices, const ClusterCollection& collection);

// ---------------------------------------------------------------------------
// Interconnection.

struct InterconnectResult {
  std::vector<Edge> edges;
  Round rounds = 0;
  EngineStats stats;
};

/// Each center of a cluster in `unclustered` traces back, along the recorded
/// predecessors in `knowledge`, a shortest path to every center it knows.
InterconnectResult interconnect(const Graph& graph, const ClusterCollection& collection,
                                std::span<const Cluster> unclustered, std::span<const CenterKnowledge> knowledge,
                                const Rational& delta, std::uint64_t deg, const congest::EngineOptions& options = {});

}  // namespace nearadd
