#include "nearadd/verifier.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "nearadd/engine.hpp"
#include "nearadd/errors.hpp"
#include "nearadd/generate.hpp"

namespace nearadd {

namespace {

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

template <class Fn>
void for_each_index(std::size_t count, unsigned workers, Fn&& fn) {
  congest::detail::parallel_for(count, resolve_workers(workers), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) fn(k);
  });
}

std::vector<DistanceRow> bfs_rows(const Graph& graph, std::span<const VertexId> sources,
                                  std::optional<Distance> depth, unsigned workers = 0) {
  std::vector<DistanceRow> rows(sources.size());
  for_each_index(sources.size(), workers, [&](std::size_t k) { rows[k] = bfs(graph, sources[k], depth); });
  return rows;
}

DistanceRow multi_source_bfs(const Graph& graph, std::span<const VertexId> sources) {
  DistanceRow row;
  row.dist.assign(graph.num_vertices(), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (row.dist[s] == 0) continue;
    row.dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : graph.neighbors(u)) {
      if (row.dist[w] == kUnreachable) {
        row.dist[w] = row.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

Graph spanner_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

/// floor(x) as a Distance, saturating just below kUnreachable.
Distance saturating_floor(const Rational& x) {
  const BigInt f = floor(x);
  if (f < 0) return 0;
  if (f >= BigInt(kUnreachable - 1)) return kUnreachable - 1;
  return static_cast<Distance>(f);
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void fail(const std::string& witness) {
    if (result_.passed) {
      result_.passed = false;
      result_.witness = witness;
    }
  }
  void count(std::uint64_t k = 1) { result_.examined += k; }
  bool ok() const { return result_.passed; }
  /// Folds a per-phase result in, prefixing the witness with the phase.
  void merge(const CheckResult& part, std::size_t phase) {
    result_.examined += part.examined;
    if (!part.passed) fail("phase " + std::to_string(phase) + ": " + part.witness);
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string pair_str(VertexId a, VertexId b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

}  // namespace

double BoundComparison::slack() const {
  if (bound == 0) return measured == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return to_double(measured / bound);
}

std::string to_string(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::fast:
      return "fast";
    case VerifyLevel::full:
      return "full";
    case VerifyLevel::deep:
      return "deep";
  }
  return "full";
}

VerifyLevel parse_verify_level(const std::string& text) {
  if (text == "fast") return VerifyLevel::fast;
  if (text == "full") return VerifyLevel::full;
  if (text == "deep") return VerifyLevel::deep;
  throw ConfigError("verification level must be fast, full or deep, got '" + text + "'");
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

CheckResult check_popular_oracle(const Graph& graph, const ClusterCollection& collection, std::uint64_t deg,
                                 const Rational& delta, std::span<const VertexId> popular) {
  Check ck("popular_oracle");
  const std::vector<VertexId> centers = collection.centers();
  const auto rows = bfs_rows(graph, centers, integer_radius(delta));
  std::vector<VertexId> oracle;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    std::uint64_t others = 0;
    for (VertexId c : centers) {
      if (c != centers[k] && rows[k].reachable(c)) ++others;
    }
    if (others >= deg) oracle.push_back(centers[k]);
    ck.count();
  }
  std::vector<VertexId> claimed(popular.begin(), popular.end());
  std::sort(claimed.begin(), claimed.end());
  std::vector<VertexId> diff;
  std::set_symmetric_difference(oracle.begin(), oracle.end(), claimed.begin(), claimed.end(),
                                std::back_inserter(diff));
  if (!diff.empty()) {
    const bool in_oracle = std::binary_search(oracle.begin(), oracle.end(), diff.front());
    ck.fail("center " + std::to_string(diff.front()) + (in_oracle ? " is popular but was not detected"
                                                                   : " was reported popular but is not"));
  }
  return ck.take();
}

CheckResult check_knowledge(const Graph& graph, const ClusterCollection& collection, std::uint64_t deg,
                            const Rational& delta, std::span<const CenterKnowledge> knowledge,
                            std::span<const VertexId> popular) {
  Check ck("knowledge");
  const std::size_t n = graph.num_vertices();
  if (knowledge.size() != n) {
    ck.fail("knowledge has " + std::to_string(knowledge.size()) + " entries for " + std::to_string(n) + " vertices");
    return ck.take();
  }
  const std::vector<VertexId> centers = collection.centers();
  const auto depth = integer_radius(delta);
  const auto rows = bfs_rows(graph, centers, depth);
  std::vector<std::int64_t> index(n, -1);
  for (std::size_t k = 0; k < centers.size(); ++k) index[centers[k]] = static_cast<std::int64_t>(k);
  std::vector<std::uint64_t> ball(n, 0);
  for (const DistanceRow& row : rows) {
    for (VertexId u = 0; u < n; ++u) ball[u] += row.reachable(u) ? 1 : 0;
  }

  for (VertexId u = 0; u < n && ck.ok(); ++u) {
    const auto& entries = knowledge[u].entries;
    const std::string at = "vertex " + std::to_string(u) + ": ";
    if (entries.size() > deg + 1) ck.fail(at + "holds " + std::to_string(entries.size()) + " entries");
    if (entries.size() < std::min<std::uint64_t>(deg + 1, ball[u])) {
      ck.fail(at + "knows " + std::to_string(entries.size()) + " centers, expected at least " +
              std::to_string(std::min<std::uint64_t>(deg + 1, ball[u])));
    }
    std::set<VertexId> seen;
    for (const KnowledgeEntry& e : entries) {
      ck.count();
      const std::string what = at + "entry for center " + std::to_string(e.center) + " ";
      if (e.center >= n || index[e.center] < 0) {
        ck.fail(what + "names a non-center");
        break;
      }
      if (!seen.insert(e.center).second) ck.fail(what + "is duplicated");
      const Distance dg = rows[static_cast<std::size_t>(index[e.center])].dist[u];
      if (dg == kUnreachable) {
        ck.fail(what + "lies beyond delta");
      } else if (e.distance < dg) {
        ck.fail(what + "records distance " + std::to_string(e.distance) + " below the true " + std::to_string(dg));
      }
      if (e.distance == 0) {
        if (e.center != u || e.predecessor != u) ck.fail(what + "has distance 0 but is not the vertex itself");
        continue;
      }
      if (!graph.has_edge(u, e.predecessor)) {
        ck.fail(what + "has non-neighbor predecessor " + std::to_string(e.predecessor));
        continue;
      }
      const KnowledgeEntry* up = knowledge[e.predecessor].find(e.center);
      if (!up || up->distance + 1 != e.distance) {
        ck.fail(what + "has a predecessor chain that does not descend at " + std::to_string(e.predecessor));
      }
    }
  }

  std::vector<bool> is_popular(n, false);
  for (VertexId w : popular) is_popular[w] = true;
  for (std::size_t k = 0; k < centers.size() && ck.ok(); ++k) {
    const VertexId r = centers[k];
    if (is_popular[r]) continue;
    const auto& entries = knowledge[r].entries;
    std::uint64_t expected = 0;
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const Distance d = rows[j].dist[r];
      if (d == kUnreachable) continue;
      ++expected;
      ck.count();
      const KnowledgeEntry* e = knowledge[r].find(centers[j]);
      if (!e) {
        ck.fail("non-popular center " + std::to_string(r) + " does not know center " + std::to_string(centers[j]) +
                " at distance " + std::to_string(d));
        break;
      }
      if (e->distance != d) {
        ck.fail("non-popular center " + std::to_string(r) + " records distance " + std::to_string(e->distance) +
                " to " + std::to_string(centers[j]) + ", true distance " + std::to_string(d));
        break;
      }
    }
    if (ck.ok() && entries.size() != expected) {
      ck.fail("non-popular center " + std::to_string(r) + " knows centers beyond delta");
    }
  }
  return ck.take();
}

CheckResult check_ruling(const Graph& graph, std::span<const VertexId> candidates, std::span<const VertexId> ruling,
                         std::uint64_t q, std::uint64_t cq) {
  Check ck("ruling_set");
  const std::size_t n = graph.num_vertices();
  std::vector<bool> is_candidate(n, false), is_ruling(n, false);
  for (VertexId w : candidates) is_candidate[w] = true;
  for (VertexId r : ruling) {
    if (r >= n || !is_candidate[r]) {
      ck.fail("ruling vertex " + std::to_string(r) + " is not a candidate");
      return ck.take();
    }
    is_ruling[r] = true;
  }
  const Distance depth = q >= kUnreachable ? kUnreachable - 1 : static_cast<Distance>(q);
  const std::vector<VertexId> rs(ruling.begin(), ruling.end());
  const auto rows = bfs_rows(graph, rs, depth);
  for (std::size_t k = 0; k < rs.size() && ck.ok(); ++k) {
    for (VertexId other : rs) {
      ck.count();
      if (other != rs[k] && rows[k].reachable(other)) {
        ck.fail("ruling vertices " + pair_str(rs[k], other) + " at distance " + std::to_string(rows[k].dist[other]) +
                " <= q = " + std::to_string(q));
        break;
      }
    }
  }
  const DistanceRow near = multi_source_bfs(graph, rs);
  for (VertexId w : candidates) {
    ck.count();
    if (near.dist[w] == kUnreachable || near.dist[w] > cq) {
      ck.fail("candidate " + std::to_string(w) + " is not within " + std::to_string(cq) + " of the ruling set");
      break;
    }
  }
  return ck.take();
}

std::vector<CheckResult> check_structure(const ExecutionTrace& trace, const PhaseSchedule& schedule,
                                         const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  const std::size_t ell = static_cast<std::size_t>(schedule.ell);
  Check valid("collections_valid");
  Check radius("cluster_radius");
  Check superclustered("popular_superclustered");
  Check next_centers("next_centers_are_ruling_set");
  Check phase_partition("phase_partition");
  Check partition("unclustered_partition");
  Check decay("collection_size_decay");
  Check final_size("final_collection_size");

  if (trace.phases.size() != schedule.phase_count()) {
    valid.fail("trace has " + std::to_string(trace.phases.size()) + " phases, schedule has " +
               std::to_string(schedule.phase_count()));
    return {valid.take()};
  }

  std::vector<Edge> built;
  for (std::size_t i = 0; i <= ell; ++i) {
    const PhaseRecord& p = trace.phases[i];
    const ClusterCollection& P = p.input;
    try {
      P.validate(n);
    } catch (const InputError& e) {
      valid.fail("phase " + std::to_string(i) + ": " + e.what());
      continue;
    }
    valid.count();

    // Radius, measured in the spanner built by phases < i.
    const Graph h = spanner_graph(n, built);
    const Distance bound = saturating_floor(schedule.radius[i]);
    const auto centers = P.centers();
    const auto rows = bfs_rows(h, centers, bound);
    for (std::size_t k = 0; k < centers.size(); ++k) {
      for (VertexId m : P.clusters[k].members) {
        radius.count();
        if (!rows[k].reachable(m)) {
          radius.fail("phase " + std::to_string(i) + ": member " + std::to_string(m) + " of cluster " +
                      std::to_string(centers[k]) + " is farther than R_i = " + to_string(schedule.radius[i]) +
                      " in H");
          break;
        }
      }
    }

    // Decay bounds.
    const BigInt size = P.size();
    if (i <= static_cast<std::size_t>(schedule.i0) + 1) {
      decay.count();
      const long num = schedule.kappa - (1L << i) + 1;
      if (!le_power(size, n, num, static_cast<unsigned long>(schedule.kappa))) {
        decay.fail("phase " + std::to_string(i) + ": |P_i| = " + to_string(size) + " exceeds n^(" +
                   std::to_string(num) + "/" + std::to_string(schedule.kappa) + ")");
      }
    }
    if (i >= static_cast<std::size_t>(schedule.i0) + 1) {
      decay.count();
      const long kc = static_cast<long>(schedule.kappa) * schedule.c;
      const long num = kc + schedule.c - static_cast<long>(i - schedule.i0) * schedule.kappa;
      if (!le_power(size, n, num, static_cast<unsigned long>(kc))) {
        decay.fail("phase " + std::to_string(i) + ": |P_i| = " + to_string(size) + " exceeds n^(" +
                   std::to_string(num) + "/" + std::to_string(kc) + ")");
      }
    }

    const auto owner = P.owner_map(n);
    std::vector<bool> in_u(n, false);
    for (const Cluster& u : p.unclustered) {
      const Cluster* same = P.find(u.center);
      if (!same || !(*same == u)) {
        phase_partition.fail("phase " + std::to_string(i) + ": unclustered cluster " + std::to_string(u.center) +
                             " is not a cluster of P_i");
      }
      for (VertexId m : u.members) in_u[m] = true;
    }

    if (i < ell) {
      const ClusterCollection& next = trace.phases[i + 1].input;
      // S_{i+1} = RS_i.
      next_centers.count();
      if (next.centers() != p.ruling) {
        next_centers.fail("phase " + std::to_string(i) + ": centers of P_{i+1} differ from RS_i");
      }
      const auto next_owner = next.owner_map(n);
      // Popular clusters are superclustered.
      for (VertexId w : p.popular) {
        superclustered.count();
        if (!next_owner[w] || in_u[w]) {
          superclustered.fail("phase " + std::to_string(i) + ": popular center " + std::to_string(w) +
                              " was left unclustered");
        }
      }
      // VU_i and VP_{i+1} split VP_i.
      for (VertexId v = 0; v < n; ++v) {
        phase_partition.count();
        const bool in_p = owner[v].has_value();
        const bool in_next = next_owner[v].has_value();
        if (in_u[v] && in_next) {
          phase_partition.fail("phase " + std::to_string(i) + ": vertex " + std::to_string(v) +
                               " is both unclustered and in P_{i+1}");
        } else if (in_p != (in_u[v] || in_next)) {
          phase_partition.fail("phase " + std::to_string(i) + ": vertex " + std::to_string(v) +
                               " breaks VU_i + VP_{i+1} = VP_i");
        }
      }
      // Whole clusters move: an absorbed cluster sits inside its root's cluster.
      for (const Cluster& c : P.clusters) {
        if (in_u[c.center]) continue;
        const auto& node = p.forest.at(c.center);
        if (!node.root || !next.find(*node.root)) {
          phase_partition.fail("phase " + std::to_string(i) + ": cluster " + std::to_string(c.center) +
                               " vanished without being unclustered");
          continue;
        }
        const Cluster* target = next.find(*node.root);
        if (!std::includes(target->members.begin(), target->members.end(), c.members.begin(), c.members.end())) {
          phase_partition.fail("phase " + std::to_string(i) + ": cluster " + std::to_string(c.center) +
                               " was split when absorbed");
        }
      }
    } else {
      phase_partition.count();
      if (p.unclustered != P.clusters) {
        phase_partition.fail("phase " + std::to_string(i) + ": U_ell differs from P_ell");
      }
      final_size.count();
      if (P.size() > schedule.n_rho_ceil) {
        final_size.fail("|P_ell| = " + std::to_string(P.size()) + " exceeds ceil(n^rho) = " +
                        std::to_string(schedule.n_rho_ceil));
      }
    }

    const auto added = p.edges_added();
    built.insert(built.end(), added.begin(), added.end());
    std::sort(built.begin(), built.end());
    built.erase(std::unique(built.begin(), built.end()), built.end());
  }

  std::vector<int> times(n, 0);
  for (const PhaseRecord& p : trace.phases) {
    for (const Cluster& c : p.unclustered) {
      for (VertexId m : c.members) ++times[m];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    partition.count();
    if (times[v] != 1) {
      partition.fail("vertex " + std::to_string(v) + " lies in " + std::to_string(times[v]) +
                     " unclustered clusters");
      break;
    }
  }

  return {valid.take(),     radius.take(),    superclustered.take(), next_centers.take(),
          phase_partition.take(), partition.take(), decay.take(),          final_size.take()};
}

CheckResult check_interconnection_completeness(const ExecutionTrace& trace, const Graph& graph) {
  Check ck("interconnection_complete");
  const std::size_t n = graph.num_vertices();
  const Graph h = spanner_graph(n, trace.spanner_edges);
  for (const PhaseRecord& p : trace.phases) {
    const auto depth = integer_radius(p.delta);
    const auto centers = p.input.centers();
    std::vector<VertexId> sources;
    for (const Cluster& c : p.unclustered) sources.push_back(c.center);
    const auto in_g = bfs_rows(graph, sources, depth);
    const auto in_h = bfs_rows(h, sources, depth);
    for (std::size_t k = 0; k < sources.size() && ck.ok(); ++k) {
      for (VertexId c : centers) {
        if (!in_g[k].reachable(c)) continue;
        ck.count();
        if (in_h[k].dist[c] != in_g[k].dist[c]) {
          ck.fail("phase " + std::to_string(p.phase) + ": d_H" + pair_str(sources[k], c) + " = " +
                  (in_h[k].reachable(c) ? std::to_string(in_h[k].dist[c]) : std::string("inf")) +
                  " but d_G = " + std::to_string(in_g[k].dist[c]));
          break;
        }
      }
    }
  }
  return ck.take();
}

CheckResult check_neighbor_cluster_distance(const ExecutionTrace& trace, const PhaseSchedule& schedule,
                                            const Graph& graph) {
  Check ck("neighbor_cluster_distance");
  const std::size_t n = graph.num_vertices();
  const Graph h = spanner_graph(n, trace.spanner_edges);
  std::vector<std::int64_t> u_phase(n, -1);
  std::vector<VertexId> u_center(n, 0);
  std::map<std::pair<std::size_t, VertexId>, const Cluster*> clusters;
  for (const PhaseRecord& p : trace.phases) {
    for (const Cluster& c : p.unclustered) {
      clusters[{p.phase, c.center}] = &c;
      for (VertexId m : c.members) {
        u_phase[m] = static_cast<std::int64_t>(p.phase);
        u_center[m] = c.center;
      }
    }
  }

  struct Task {
    std::size_t phase;
    const Cluster* cluster;
  };
  std::vector<Task> tasks;
  for (const PhaseRecord& p : trace.phases) {
    if (p.phase == 0) continue;
    for (const Cluster& c : p.unclustered) tasks.push_back({p.phase, &c});
  }
  std::vector<CheckResult> parts(tasks.size());
  for_each_index(tasks.size(), 0, [&](std::size_t t) {
    Check part("part");
    const std::size_t i = tasks[t].phase;
    const Cluster& target = *tasks[t].cluster;
    const DistanceRow row = bfs(h, target.center);
    std::set<std::pair<std::size_t, VertexId>> near;
    for (VertexId x : target.members) {
      for (VertexId y : graph.neighbors(x)) {
        if (u_phase[y] >= 0 && static_cast<std::size_t>(u_phase[y]) < i) {
          near.insert({static_cast<std::size_t>(u_phase[y]), u_center[y]});
        }
      }
    }
    for (const auto& key : near) {
      const std::size_t j = key.first;
      const Distance bound =
          saturating_floor(Rational(3) * schedule.radius[j] + 1 + schedule.radius[i]);
      for (VertexId w : clusters.at(key)->members) {
        part.count();
        if (row.dist[w] > bound) {
          part.fail("d_H(" + std::to_string(w) + ", " + std::to_string(target.center) + ") = " +
                    (row.reachable(w) ? std::to_string(row.dist[w]) : std::string("inf")) + " exceeds 3R_" +
                    std::to_string(j) + " + 1 + R_" + std::to_string(i) + " = " + std::to_string(bound));
          break;
        }
      }
      if (!part.ok()) break;
    }
    parts[t] = part.take();
  });
  for (std::size_t t = 0; t < tasks.size(); ++t) ck.merge(parts[t], tasks[t].phase);
  return ck.take();
}

CheckResult check_edge_accounting(const ExecutionTrace& trace, const Graph& graph) {
  Check ck("edge_accounting");
  const auto& eh = trace.spanner_edges;
  if (!std::is_sorted(eh.begin(), eh.end()) || std::adjacent_find(eh.begin(), eh.end()) != eh.end()) {
    ck.fail("spanner edge list is not sorted and duplicate-free");
  }
  for (const Edge& e : eh) {
    ck.count();
    if (e.u >= e.v || !graph.has_edge(e.u, e.v)) {
      ck.fail("spanner edge " + pair_str(e.u, e.v) + " is not an edge of G");
      break;
    }
  }
  std::vector<Edge> all;
  for (const PhaseRecord& p : trace.phases) {
    const auto added = p.edges_added();
    all.insert(all.end(), added.begin(), added.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all != eh) ck.fail("union of per-phase edge sets has " + std::to_string(all.size()) + " edges, E_H has " +
                         std::to_string(eh.size()));
  if (trace.origins.size() != eh.size()) {
    ck.fail("origin table size differs from E_H");
    return ck.take();
  }
  for (std::size_t k = 0; k < eh.size(); ++k) {
    const EdgeOrigin& o = trace.origins[k];
    if (!(o.edge == eh[k]) || o.phase >= trace.phases.size()) {
      ck.fail("origin entry " + std::to_string(k) + " is inconsistent");
      break;
    }
    const PhaseRecord& p = trace.phases[o.phase];
    const auto& set = o.step == Step::supercluster ? p.supercluster_edges : p.interconnect_edges;
    if (!std::binary_search(set.begin(), set.end(), o.edge)) {
      ck.fail("edge " + pair_str(o.edge.u, o.edge.v) + " is not in the step it is attributed to");
      break;
    }
  }
  return ck.take();
}

CheckResult check_engine_safety(const ExecutionTrace& trace) {
  Check ck("engine_safety");
  for (const PhaseRecord& p : trace.phases) {
    ck.count(p.stats.messages);
    if (p.stats.violations != 0) {
      ck.fail("phase " + std::to_string(p.phase) + ": " + std::to_string(p.stats.violations) +
              " bandwidth violations");
    }
    if (p.stats.max_words > congest::kDefaultWordBudget) {
      ck.fail("phase " + std::to_string(p.phase) + ": message of " + std::to_string(p.stats.max_words) + " words");
    }
  }
  return ck.take();
}

// ---------------------------------------------------------------------------

StretchSummary check_stretch(const Graph& graph, std::span<const Edge> spanner, const PhaseSchedule& schedule,
                             const VerifyOptions& options) {
  StretchSummary summary;
  const std::size_t n = graph.num_vertices();
  if (schedule.mode == Mode::guaranteed) {
    summary.bound_kind = "guaranteed";
    summary.multiplicative = 1 + schedule.eps_user;
    summary.additive = schedule.beta;
  } else if (schedule.bound_guaranteed) {
    summary.bound_kind = "internal";
    summary.multiplicative = schedule.internal_multiplicative();
    summary.additive = schedule.internal_additive();
  }
  if (n == 0) return summary;
  const Graph h = spanner_graph(n, spanner);

  std::vector<Distance> threshold(n);
  for (std::size_t d = 0; d < n; ++d) {
    threshold[d] = saturating_floor(summary.multiplicative * static_cast<long>(d) + summary.additive);
  }

  std::vector<VertexId> sources;
  if (n <= options.all_pairs_limit) {
    sources.resize(n);
    for (VertexId v = 0; v < n; ++v) sources[v] = v;
  } else {
    summary.sampled = true;
    std::vector<std::pair<std::uint64_t, VertexId>> keyed;
    keyed.reserve(n);
    const std::uint64_t key = splitmix64(options.sample_seed);
    for (VertexId v = 0; v < n; ++v) keyed.emplace_back(splitmix64(key ^ v), v);
    const std::size_t k = std::min(options.sample_sources, n);
    std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(k), keyed.end());
    for (std::size_t j = 0; j < k; ++j) sources.push_back(keyed[j].second);
    std::sort(sources.begin(), sources.end());
  }
  summary.sources = sources.size();
  const bool asserted = summary.bound_kind != "none";

  const unsigned workers = resolve_workers(options.workers);
  const std::size_t chunks = std::min<std::size_t>(sources.size(), workers);
  std::vector<StretchSummary> partial(chunks);
  for_each_index(chunks, workers, [&](std::size_t chunk) {
    StretchSummary& s = partial[chunk];
    const std::size_t begin = sources.size() * chunk / chunks;
    const std::size_t end = sources.size() * (chunk + 1) / chunks;
    for (std::size_t k = begin; k < end; ++k) {
      const VertexId src = sources[k];
      const DistanceRow dg = bfs(graph, src);
      const DistanceRow dh = bfs(h, src);
      for (VertexId v = summary.sampled ? 0 : src + 1; v < n; ++v) {
        if (v == src) continue;
        if (!dg.reachable(v)) {
          ++s.skipped_disconnected;
          continue;
        }
        ++s.pairs;
        if (!dh.reachable(v)) {
          if (!s.disconnected) s.disconnected = std::pair(src, v);
          continue;
        }
        const Distance g = dg.dist[v];
        const Distance hh = dh.dist[v];
        const std::uint64_t surplus = hh - g;
        if (surplus > s.worst_surplus) {
          s.worst_surplus = surplus;
          s.surplus_u = src;
          s.surplus_v = v;
          s.surplus_dg = g;
          s.surplus_dh = hh;
        }
        if (static_cast<std::uint64_t>(hh) * s.ratio_dg > static_cast<std::uint64_t>(s.ratio_dh) * g) {
          s.ratio_dh = hh;
          s.ratio_dg = g;
          s.ratio_u = src;
          s.ratio_v = v;
        }
        if (asserted && hh > threshold[g]) {
          ++s.violations;
          if (!s.violation) s.violation = std::pair(src, v);
        }
      }
    }
  });

  for (const StretchSummary& s : partial) {
    summary.pairs += s.pairs;
    summary.skipped_disconnected += s.skipped_disconnected;
    summary.violations += s.violations;
    if (!summary.violation && s.violation) summary.violation = s.violation;
    if (!summary.disconnected && s.disconnected) summary.disconnected = s.disconnected;
    if (s.worst_surplus > summary.worst_surplus) {
      summary.worst_surplus = s.worst_surplus;
      summary.surplus_u = s.surplus_u;
      summary.surplus_v = s.surplus_v;
      summary.surplus_dg = s.surplus_dg;
      summary.surplus_dh = s.surplus_dh;
    }
    if (static_cast<std::uint64_t>(s.ratio_dh) * summary.ratio_dg >
        static_cast<std::uint64_t>(summary.ratio_dh) * s.ratio_dg) {
      summary.ratio_dh = s.ratio_dh;
      summary.ratio_dg = s.ratio_dg;
      summary.ratio_u = s.ratio_u;
      summary.ratio_v = s.ratio_v;
    }
  }
  return summary;
}

std::vector<BoundComparison> check_budgets(const ExecutionTrace& trace, const PhaseSchedule& schedule, std::size_t n) {
  std::vector<BoundComparison> out;
  const Rational c = schedule.c;
  const Rational n_rho = schedule.n_rho_ceil;
  Rational round_budget = 0;
  Rational edge_budget = 0;
  for (const PhaseRecord& p : trace.phases) {
    const std::size_t i = p.phase;
    const Rational deg = p.deg;
    const Rational depth = floor_u64(p.delta);

    out.push_back({"popularity_rounds", i, Rational(p.rounds.popularity), 1 + depth * deg, true});
    if (p.superclustering) {
      const Rational q = p.ruling_q;
      out.push_back({"ruling_rounds", i, Rational(p.rounds.ruling),
                     c * Rational(p.ruling_base) * q + 4 * c * q, true});
    }
    out.push_back({"interconnect_rounds", i, Rational(p.rounds.interconnect), deg * (depth + 1), true});

    const Rational edges_bound = Rational(n) + Rational(p.input.size()) * deg * Rational(ceil_u64(p.delta));
    out.push_back({"phase_edges", i, Rational(p.edges_added().size()), edges_bound, true});
    edge_budget += edges_bound;

    const Rational rounds_bound = deg * p.delta + c * n_rho * p.delta + c * p.delta;
    out.push_back({"phase_rounds", i, Rational(p.rounds.total()), 4 * rounds_bound, true});
    round_budget += rounds_bound;
  }
  const Rational total_rounds = trace.total_rounds();
  const Rational total_edges = trace.spanner_edges.size();
  out.push_back({"total_rounds", std::nullopt, total_rounds, 4 * round_budget, true});
  out.push_back({"total_edges", std::nullopt, total_edges, edge_budget, true});
  out.push_back({"rounds_vs_beta_n_rho_over_rho", std::nullopt, total_rounds, schedule.beta * n_rho * c, false});
  const Rational n_pow = Rational(ceil_power(n, static_cast<unsigned long>(schedule.kappa + 1),
                                             static_cast<unsigned long>(schedule.kappa)));
  out.push_back({"edges_vs_beta_n_1_plus_1_over_kappa", std::nullopt, total_edges, schedule.beta * n_pow, false});
  return out;
}

VerificationReport verify(const Graph& graph, const PhaseSchedule& schedule, const ExecutionTrace& trace,
                          const VerifyOptions& options) {
  VerificationReport report;
  const std::size_t n = graph.num_vertices();
  if (schedule.n != n || trace.num_vertices != n) {
    throw ConfigError("graph, schedule and trace disagree on the number of vertices");
  }
  report.edge_count = trace.spanner_edges.size();
  report.round_total = trace.total_rounds();

  Check popular("popular_oracle");
  Check knowledge("knowledge");
  Check ruling("ruling_set");
  Check exact_rounds("popularity_round_count");
  for (const PhaseRecord& p : trace.phases) {
    popular.merge(check_popular_oracle(graph, p.input, p.deg, p.delta, p.popular), p.phase);
    knowledge.merge(check_knowledge(graph, p.input, p.deg, p.delta, p.knowledge, p.popular), p.phase);
    if (p.superclustering) {
      const std::uint64_t cq = p.ruling_q * static_cast<std::uint64_t>(p.ruling_c);
      ruling.merge(check_ruling(graph, p.popular, p.ruling, p.ruling_q, cq), p.phase);
    }
    exact_rounds.count();
    if (p.rounds.popularity != popularity_rounds(p.deg, p.delta)) {
      exact_rounds.fail("phase " + std::to_string(p.phase) + ": " + std::to_string(p.rounds.popularity) +
                        " rounds, expected " + std::to_string(popularity_rounds(p.deg, p.delta)));
    }
  }
  report.checks.push_back(popular.take());
  report.checks.push_back(knowledge.take());
  report.checks.push_back(ruling.take());
  report.checks.push_back(exact_rounds.take());
  for (CheckResult& r : check_structure(trace, schedule, graph)) report.checks.push_back(std::move(r));
  report.checks.push_back(check_interconnection_completeness(trace, graph));
  report.checks.push_back(check_edge_accounting(trace, graph));
  report.checks.push_back(check_engine_safety(trace));

  report.bounds = check_budgets(trace, schedule, n);
  Check budgets("budgets");
  for (const BoundComparison& b : report.bounds) {
    if (!b.asserted) continue;
    budgets.count();
    if (!b.holds()) {
      budgets.fail(b.quantity + (b.phase ? " in phase " + std::to_string(*b.phase) : std::string()) + ": " +
                   to_string(b.measured) + " > " + to_string(b.bound));
    }
  }
  report.checks.push_back(budgets.take());

  if (options.level != VerifyLevel::fast) {
    StretchSummary s = check_stretch(graph, trace.spanner_edges, schedule, options);
    Check stretch("stretch");
    stretch.count(s.pairs);
    if (s.disconnected) {
      stretch.fail("pair " + pair_str(s.disconnected->first, s.disconnected->second) +
                   " is connected in G but not in H");
    } else if (s.violation) {
      stretch.fail(std::to_string(s.violations) + " pairs violate the " + s.bound_kind + " bound, first " +
                   pair_str(s.violation->first, s.violation->second));
    }
    report.checks.push_back(stretch.take());
    report.stretch = std::move(s);
  }
  if (options.level == VerifyLevel::deep) {
    report.checks.push_back(check_neighbor_cluster_distance(trace, schedule, graph));
  }
  return report;
}

}  // namespace nearadd
