#include <gtest/gtest.h>

#include "nearadd/errors.hpp"
#include "nearadd/generate.hpp"
#include "nearadd/protocol.hpp"
#include "oracles.hpp"

using namespace nearadd;

TEST(Interconnect, NothingToConnect) {
  const Graph g = cycle_graph(8);
  const auto col = ClusterCollection::singletons(8);
  const auto pop = detect_popular(g, col, 3, 1);
  const auto res = interconnect(g, col, {}, pop.knowledge, 1, 3);
  EXPECT_TRUE(res.edges.empty());
  EXPECT_EQ(res.rounds, 0U);
  EXPECT_EQ(res.stats.messages, 0U);
}

TEST(Interconnect, CycleGetsEveryEdge) {
  const Graph g = cycle_graph(64);
  const auto col = ClusterCollection::singletons(64);
  const auto pop = detect_popular(g, col, 3, 1);
  ASSERT_TRUE(pop.popular.empty());
  const auto res = interconnect(g, col, col.clusters, pop.knowledge, 1, 3);
  EXPECT_EQ(res.edges, g.edges());
  EXPECT_LE(res.rounds, 3U * 2);
}

TEST(Interconnect, TenPathTwoClusters) {
  const Graph g = path_graph(10);
  ClusterCollection col;
  col.clusters.push_back({0, {0, 1}});
  col.clusters.push_back({4, {4, 5}});
  const auto pop = detect_popular(g, col, 3, 4);
  ASSERT_TRUE(pop.popular.empty());
  const auto res = interconnect(g, col, col.clusters, pop.knowledge, 4, 3);
  EXPECT_EQ(res.edges, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
}

TEST(Interconnect, MissingPredecessorIsAProtocolError) {
  const Graph g = path_graph(3);
  ClusterCollection col;
  col.clusters.push_back({0, {0}});
  col.clusters.push_back({2, {2}});
  std::vector<CenterKnowledge> knowledge(3);
  knowledge[0].entries = {{0, 0, 0}, {2, 2, 1}};
  knowledge[2].entries = {{2, 0, 2}};
  EXPECT_THROW(interconnect(g, col, std::span<const Cluster>(col.clusters.data(), 1), knowledge, 2, 2),
               ProtocolError);
}

TEST(Interconnect, UnknownCenterIsAnInputError) {
  const Graph g = path_graph(3);
  const auto col = ClusterCollection::singletons(3);
  const std::vector<Cluster> bogus{{7, {7}}};
  std::vector<CenterKnowledge> knowledge(3);
  EXPECT_THROW(interconnect(g, col, bogus, knowledge, 1, 1), InputError);
}

// Non-popular centers end up connected to every center within delta by a
// shortest path, within the deg * (floor(delta) + 1) round budget.
TEST(Interconnect, ShortestPathsToAllNearCenters) {
  std::mt19937 rng(3);
  for (unsigned trial = 0; trial < 40; ++trial) {
    const std::size_t n = 16 + 2 * trial;
    const auto edges = oracle::random_edges(n, 0.04 + 0.01 * (trial % 5), 500 + trial);
    const Graph g = Graph::from_edges(n, edges);
    const auto d = oracle::floyd_warshall(n, edges);
    ClusterCollection col;
    for (VertexId v = 0; v < n; ++v) {
      if (std::bernoulli_distribution(0.5)(rng)) col.clusters.push_back({v, {v}});
    }
    const std::uint64_t deg = 2 + trial % 5;
    const Rational delta(2 + trial % 4);
    const auto pop = detect_popular(g, col, deg, delta);
    std::vector<Cluster> u;
    for (const Cluster& cl : col.clusters) {
      if (!std::binary_search(pop.popular.begin(), pop.popular.end(), cl.center)) u.push_back(cl);
    }
    const auto res = interconnect(g, col, u, pop.knowledge, delta, deg);
    EXPECT_LE(res.rounds, deg * (floor_u64(delta) + 1)) << "trial " << trial;
    EXPECT_LE(res.stats.max_words, 3U);
    const auto dh = oracle::floyd_warshall(n, res.edges);
    const auto depth = floor_u64(delta);
    for (const Cluster& a : u) {
      for (const Cluster& b : col.clusters) {
        if (d[a.center][b.center] <= depth) {
          EXPECT_EQ(dh[a.center][b.center], d[a.center][b.center]) << "trial " << trial;
        }
      }
    }
  }
}
