#include "nearadd/spanner.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nearadd/errors.hpp"

namespace nearadd {

namespace {

template <class Fn>
void in_phase(std::size_t phase, Fn&& fn) {
  const std::string prefix = "phase " + std::to_string(phase) + ": ";
  try {
    fn();
  } catch (const DeterminismError& e) {
    throw DeterminismError(prefix + e.what());
  } catch (const BandwidthError& e) {
    throw BandwidthError(prefix + e.what());
  } catch (const ProtocolError& e) {
    throw ProtocolError(prefix + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  } catch (const InputError& e) {
    throw InputError(prefix + e.what());
  }
}

void check_memory(const std::vector<VertexMemory>& memory, const ClusterCollection& next) {
  const std::size_t n = memory.size();
  const auto owner = next.owner_map(n);
  for (VertexId v = 0; v < n; ++v) {
    const bool center = next.find(v) != nullptr;
    if (memory[v].is_center != center) {
      throw ProtocolError("vertex " + std::to_string(v) + " disagrees about being a center");
    }
    if (owner[v]) {
      if (memory[v].cluster_center != owner[v]) {
        throw ProtocolError("vertex " + std::to_string(v) + " did not learn its new cluster " +
                            std::to_string(*owner[v]));
      }
    } else if (memory[v].cluster_center && next.find(*memory[v].cluster_center)) {
      throw ProtocolError("vertex " + std::to_string(v) + " claims membership of cluster " +
                          std::to_string(*memory[v].cluster_center));
    }
  }
}

}  // namespace

std::string to_string(Step step) { return step == Step::supercluster ? "supercluster" : "interconnect"; }

std::vector<Edge> PhaseRecord::edges_added() const {
  std::vector<Edge> out = supercluster_edges;
  out.insert(out.end(), interconnect_edges.begin(), interconnect_edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Round ExecutionTrace::total_rounds() const {
  Round total = 0;
  for (const PhaseRecord& p : phases) total += p.rounds.total();
  return total;
}

EngineStats ExecutionTrace::stats() const {
  EngineStats out;
  for (const PhaseRecord& p : phases) out.absorb_stats(p.stats);
  return out;
}

SpannerResult build_spanner(const Graph& graph, const PhaseSchedule& schedule, const BuildOptions& options) {
  const std::size_t n = graph.num_vertices();
  if (schedule.n != n) {
    throw ConfigError("schedule was built for n = " + std::to_string(schedule.n) + " but the graph has " +
                      std::to_string(n) + " vertices");
  }
  SpannerResult result;
  ExecutionTrace& trace = result.trace;
  trace.num_vertices = n;

  ClusterCollection collection = ClusterCollection::singletons(n);
  std::vector<VertexMemory> memory = fresh_memory(n, collection);
  const auto ell = static_cast<std::size_t>(schedule.ell);

  for (std::size_t i = 0; i <= ell; ++i) {
    PhaseRecord rec;
    rec.phase = i;
    rec.deg = schedule.deg[i];
    rec.delta = schedule.delta[i];
    rec.superclustering = i < ell;
    collection.phase = i;
    rec.input = collection;

    in_phase(i, [&] {
      PopularityResult pop = detect_popular(graph, collection, rec.deg, rec.delta, options.engine);
      rec.popular = std::move(pop.popular);
      rec.rounds.popularity = pop.rounds;
      rec.stats.absorb_stats(pop.stats);

      ClusterCollection next;
      next.phase = i + 1;
      if (rec.superclustering) {
        rec.ruling_q = 2 * floor_u64(rec.delta);
        rec.ruling_c = schedule.c;
        RulingSetResult rs = ruling_set(graph, rec.popular, rec.ruling_q, rec.ruling_c, options.engine);
        rec.ruling = std::move(rs.ruling);
        rec.dominators = std::move(rs.dominators);
        rec.ruling_base = rs.base;
        rec.rounds.ruling = rs.rounds;
        rec.stats.absorb_stats(rs.stats);

        SuperclusterResult sc =
            supercluster(graph, collection, rec.popular, rec.ruling, rec.delta, schedule.rho, &memory, options.engine);
        rec.forest_depth = sc.depth;
        rec.forest = std::move(sc.forest);
        rec.unclustered = std::move(sc.unclustered);
        rec.supercluster_edges = std::move(sc.edges);
        rec.rounds.forest = sc.forest_rounds;
        rec.rounds.marking = sc.marking_rounds;
        rec.rounds.membership = sc.membership_rounds;
        rec.stats.absorb_stats(sc.stats);
        next = std::move(sc.clusters);
        if (options.check_membership) check_memory(memory, next);
      } else {
        rec.unclustered = collection.clusters;
        for (const Cluster& c : collection.clusters) memory[c.center].is_center = false;
      }

      InterconnectResult ic =
          interconnect(graph, collection, rec.unclustered, pop.knowledge, rec.delta, rec.deg, options.engine);
      rec.interconnect_edges = std::move(ic.edges);
      rec.rounds.interconnect = ic.rounds;
      rec.stats.absorb_stats(ic.stats);
      rec.knowledge = std::move(pop.knowledge);
      collection = std::move(next);
    });
    trace.phases.push_back(std::move(rec));
  }
  trace.final_collection = collection;

  std::map<Edge, EdgeOrigin> first;
  for (const PhaseRecord& p : trace.phases) {
    for (const Edge& e : p.supercluster_edges) first.try_emplace(e, EdgeOrigin{e, p.phase, Step::supercluster});
    for (const Edge& e : p.interconnect_edges) first.try_emplace(e, EdgeOrigin{e, p.phase, Step::interconnect});
  }
  for (const auto& [edge, origin] : first) {
    trace.spanner_edges.push_back(edge);
    trace.origins.push_back(origin);
  }
  result.edges = trace.spanner_edges;
  return result;
}

}  // namespace nearadd
