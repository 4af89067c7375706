#pragma once

// Exact-oracle checks of a spanner execution. Every structural check is an
// exact integer or rational comparison; asymptotic shapes are only reported
// as slack factors.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearadd/clusters.hpp"
#include "nearadd/graph.hpp"
#include "nearadd/protocol.hpp"
#include "nearadd/schedule.hpp"
#include "nearadd/spanner.hpp"

namespace nearadd {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Concrete counterexample when failed (phase, vertex, pair, ...).
  std::string witness;
  /// Number of individual facts examined.
  std::uint64_t examined = 0;
};

struct BoundComparison {
  std::string quantity;
  std::optional<std::size_t> phase;
  Rational measured;
  Rational bound;
  /// Asserted comparisons fail the report when measured > bound; the others
  /// are informational.
  bool asserted = false;
  bool holds() const { return measured <= bound; }
  /// measured / bound, as a double for display.
  double slack() const;
};

struct StretchSummary {
  /// "guaranteed", "internal" or "none" (no bound applies; report only).
  std::string bound_kind = "none";
  Rational multiplicative = 1;
  Rational additive = 0;
  bool sampled = false;
  std::size_t sources = 0;
  std::uint64_t pairs = 0;
  std::uint64_t skipped_disconnected = 0;

  /// max (d_H - d_G) and a pair attaining it.
  std::uint64_t worst_surplus = 0;
  VertexId surplus_u = 0, surplus_v = 0;
  Distance surplus_dg = 0, surplus_dh = 0;
  /// max d_H / d_G and a pair attaining it.
  Distance ratio_dg = 1, ratio_dh = 1;
  VertexId ratio_u = 0, ratio_v = 0;

  std::uint64_t violations = 0;
  /// First violating pair in (u, v) order, if any.
  std::optional<std::pair<VertexId, VertexId>> violation;
  /// Pair connected in G but not in H.
  std::optional<std::pair<VertexId, VertexId>> disconnected;

  bool passed() const { return bound_kind == "none" ? !disconnected : violations == 0 && !disconnected; }
};

enum class VerifyLevel { fast, full, deep };

std::string to_string(VerifyLevel level);
VerifyLevel parse_verify_level(const std::string& text);

struct VerifyOptions {
  /// fast: structure, oracles, budgets. full: plus stretch. deep: plus the
  /// neighboring-cluster distance check.
  VerifyLevel level = VerifyLevel::full;
  /// All-pairs stretch up to this many vertices, sampled sources above.
  std::size_t all_pairs_limit = 2048;
  std::size_t sample_sources = 256;
  std::uint64_t sample_seed = 0;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::optional<StretchSummary> stretch;
  std::vector<BoundComparison> bounds;
  std::size_t edge_count = 0;
  Round round_total = 0;

  bool passed() const;
  /// First failing check, if any.
  const CheckResult* first_failure() const;
};

/// W equals { centers with >= deg other centers within floor(delta) }.
CheckResult check_popular_oracle(const Graph& graph, const ClusterCollection& collection, std::uint64_t deg,
                                 const Rational& delta, std::span<const VertexId> popular);

/// Non-popular centers know exactly the centers within delta with exact
/// distances; every vertex knows at least min(deg + 1, |ball(u) cap S|)
/// entries, own center included; predecessor chains descend to the center.
CheckResult check_knowledge(const Graph& graph, const ClusterCollection& collection, std::uint64_t deg,
                            const Rational& delta, std::span<const CenterKnowledge> knowledge,
                            std::span<const VertexId> popular);

/// RS within W, pairwise distance >= q + 1, every w in W within cq of RS.
CheckResult check_ruling(const Graph& graph, std::span<const VertexId> candidates, std::span<const VertexId> ruling,
                         std::uint64_t q, std::uint64_t cq);

/// Radii in H, popular clusters superclustered, partitions, decay bounds,
/// S_{i+1} = RS_i and |P_ell| <= ceil(n^rho). One result per property.
std::vector<CheckResult> check_structure(const ExecutionTrace& trace, const PhaseSchedule& schedule,
                                         const Graph& graph);

/// d_H(r_C, r_C') = d_G(r_C, r_C') for C in U_i, C' in P_i within delta_i.
CheckResult check_interconnection_completeness(const ExecutionTrace& trace, const Graph& graph);

/// For j < i, neighboring C in U_j and C' in U_i, and w in C:
/// d_H(w, r_C') <= 3 R_j + 1 + R_i (which implies 2 R_i + 1).
CheckResult check_neighbor_cluster_distance(const ExecutionTrace& trace, const PhaseSchedule& schedule,
                                            const Graph& graph);

/// E_H within E, per-phase edge sets union to E_H, origins consistent.
CheckResult check_edge_accounting(const ExecutionTrace& trace, const Graph& graph);

/// No bandwidth violation, every message within 3 words.
CheckResult check_engine_safety(const ExecutionTrace& trace);

StretchSummary check_stretch(const Graph& graph, std::span<const Edge> spanner, const PhaseSchedule& schedule,
                             const VerifyOptions& options = {});

/// Exact per-phase accounting (asserted) plus asymptotic slack (reported).
std::vector<BoundComparison> check_budgets(const ExecutionTrace& trace, const PhaseSchedule& schedule, std::size_t n);

VerificationReport verify(const Graph& graph, const PhaseSchedule& schedule, const ExecutionTrace& trace,
                          const VerifyOptions& options = {});

}  // namespace nearadd
