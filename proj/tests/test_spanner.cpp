#include <gtest/gtest.h>

#include "nearadd/errors.hpp"
#include "nearadd/generate.hpp"
#include "nearadd/spanner.hpp"
#include "nearadd/trace_json.hpp"
#include "oracles.hpp"

using namespace nearadd;

namespace {

PhaseSchedule exploratory(std::uint64_t n, int kappa = 4, int c = 3, Rational eps = Rational(1, 2)) {
  return build_schedule(n, kappa, c, Mode::exploratory, eps);
}

}  // namespace

TEST(Spanner, EdgelessGraph) {
  const Graph g(6);
  const auto res = build_spanner(g, exploratory(6));
  EXPECT_TRUE(res.edges.empty());
  EXPECT_EQ(res.trace.stats().messages, 0U);
  EXPECT_EQ(res.trace.phases.size(), 4U);
}

TEST(Spanner, CompleteGraphGivesStarAtMaxId) {
  const Graph g = complete_graph(16);
  const auto res = build_spanner(g, exploratory(16));
  ASSERT_EQ(res.edges.size(), 15U);
  for (const Edge& e : res.edges) EXPECT_EQ(e.v, 15U);
  const auto& p0 = res.trace.phases[0];
  EXPECT_EQ(p0.popular.size(), 16U);
  EXPECT_EQ(p0.ruling, (std::vector<VertexId>{15}));
  EXPECT_EQ(res.trace.phases[1].input.size(), 1U);
  const auto dh = oracle::floyd_warshall(16, res.edges);
  for (VertexId u = 0; u < 16; ++u)
    for (VertexId v = 0; v < 16; ++v) EXPECT_LE(dh[u][v], 2U);
}

TEST(Spanner, CycleKeepsEveryEdge) {
  const Graph g = cycle_graph(64);
  const auto res = build_spanner(g, exploratory(64));
  EXPECT_EQ(res.edges, g.edges());
  EXPECT_TRUE(res.trace.phases[0].popular.empty());
  EXPECT_EQ(res.trace.phases[0].unclustered.size(), 64U);
  EXPECT_TRUE(res.trace.phases[1].input.empty());
}

TEST(Spanner, EdgesAreSubsetAndOriginsAreConsistent) {
  const Graph g = gnp(96, Rational(1, 10), 4);
  const auto res = build_spanner(g, exploratory(96));
  ASSERT_EQ(res.trace.origins.size(), res.edges.size());
  for (std::size_t k = 0; k < res.edges.size(); ++k) {
    const Edge& e = res.edges[k];
    EXPECT_TRUE(g.has_edge(e.u, e.v));
    EXPECT_EQ(res.trace.origins[k].edge, e);
    const auto added = res.trace.phases[res.trace.origins[k].phase].edges_added();
    EXPECT_TRUE(std::binary_search(added.begin(), added.end(), e));
  }
}

TEST(Spanner, ReproducibleAcrossRunsAndWorkerCounts) {
  const Graph g = gnp(128, Rational(1, 10), 9);
  const auto schedule = exploratory(128);
  const auto first = build_spanner(g, schedule);
  const std::string reference = to_json(first.trace, true).dump();
  for (unsigned workers : {1U, 2U, 4U}) {
    BuildOptions opts;
    opts.engine.workers = workers;
    opts.engine.verify_replay = workers == 2;
    const auto again = build_spanner(g, schedule, opts);
    EXPECT_EQ(again.edges, first.edges);
    EXPECT_EQ(to_json(again.trace, true).dump(), reference);
  }
}

TEST(Spanner, GuaranteedModeFastForwardsLongSchedules) {
  const Graph g = gnp(64, Rational(1, 8), 2);
  const auto schedule = build_schedule(64, 4, 3, Mode::guaranteed, 1);
  const auto res = build_spanner(g, schedule);
  EXPECT_GT(res.trace.total_rounds(), 1000000U);
  EXPECT_EQ(res.trace.phases.size(), static_cast<std::size_t>(schedule.ell + 1));
}

TEST(Spanner, ErrorsCarryThePhaseIndex) {
  const Graph g = cycle_graph(10);
  BuildOptions opts;
  opts.engine.word_budget = 2;
  try {
    build_spanner(g, exploratory(10), opts);
    FAIL() << "expected a bandwidth error";
  } catch (const BandwidthError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("phase 1: ", 0), 0U) << e.what();
  }
}

TEST(Spanner, ScheduleMustMatchGraph) {
  EXPECT_THROW(build_spanner(cycle_graph(10), exploratory(12)), ConfigError);
}

TEST(Spanner, TraceJsonShape) {
  const auto res = build_spanner(complete_graph(16), exploratory(16));
  const auto j = to_json(res.trace);
  ASSERT_TRUE(j.contains("phases"));
  EXPECT_EQ(j["phases"].size(), 4U);
  EXPECT_EQ(j["phases"][0]["sizes"]["W"].get<std::size_t>(), 16U);
  EXPECT_EQ(j["phases"][0]["sizes"]["RS"].get<std::size_t>(), 1U);
}
