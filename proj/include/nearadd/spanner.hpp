#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nearadd/clusters.hpp"
#include "nearadd/engine.hpp"
#include "nearadd/graph.hpp"
#include "nearadd/protocol.hpp"
#include "nearadd/schedule.hpp"

namespace nearadd {

enum class Step : std::uint8_t { supercluster, interconnect };

std::string to_string(Step step);

struct PhaseRounds {
  Round popularity = 0;
  Round ruling = 0;
  Round forest = 0;
  Round marking = 0;
  Round membership = 0;
  Round interconnect = 0;

  Round total() const { return popularity + ruling + forest + marking + membership + interconnect; }
};

/// Everything one phase consumed and produced.
struct PhaseRecord {
  std::size_t phase = 0;
  std::uint64_t deg = 0;
  Rational delta;
  /// False for the concluding phase, which skips superclustering.
  bool superclustering = true;
  /// Ruling-set parameters q and c and the digit base; BFS forest depth.
  std::uint64_t ruling_q = 0;
  int ruling_c = 0;
  std::uint64_t ruling_base = 0;
  std::uint64_t forest_depth = 0;

  /// P_i.
  ClusterCollection input;
  /// W_i, sorted.
  std::vector<VertexId> popular;
  /// RS_i, sorted.
  std::vector<VertexId> ruling;
  /// (w, dominating ruling-set member) for every w in W_i.
  std::vector<std::pair<VertexId, VertexId>> dominators;
  /// Per-vertex popularity knowledge.
  std::vector<CenterKnowledge> knowledge;
  /// F_i; empty in the concluding phase.
  std::vector<ForestNode> forest;
  /// U_i.
  std::vector<Cluster> unclustered;
  std::vector<Edge> supercluster_edges;
  std::vector<Edge> interconnect_edges;

  PhaseRounds rounds;
  EngineStats stats;

  /// Distinct edges this phase contributed, sorted.
  std::vector<Edge> edges_added() const;
};

struct EdgeOrigin {
  Edge edge;
  std::size_t phase = 0;
  Step step = Step::supercluster;
};

struct ExecutionTrace {
  std::size_t num_vertices = 0;
  std::vector<PhaseRecord> phases;
  /// E_H, sorted.
  std::vector<Edge> spanner_edges;
  /// First step that added each edge of E_H, parallel to spanner_edges.
  std::vector<EdgeOrigin> origins;
  /// Collection left after the last superclustering step (empty by design).
  ClusterCollection final_collection;

  Round total_rounds() const;
  EngineStats stats() const;
};

struct BuildOptions {
  congest::EngineOptions engine;
  /// Compare each vertex's in-protocol cluster id with the host bookkeeping
  /// after every phase.
  bool check_membership = true;
};

struct SpannerResult {
  std::vector<Edge> edges;
  ExecutionTrace trace;
};

/// Runs phases 0..ell. Errors from any step are rethrown with the phase index
/// prefixed, keeping their type.
SpannerResult build_spanner(const Graph& graph, const PhaseSchedule& schedule, const BuildOptions& options = {});

}  // namespace nearadd
