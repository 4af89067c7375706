#include <gtest/gtest.h>

#include "nearadd/errors.hpp"
#include "nearadd/generate.hpp"
#include "nearadd/protocol.hpp"
#include "oracles.hpp"

using namespace nearadd;

namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edges(leaves + 1, e);
}

ClusterCollection centers_only(const std::vector<VertexId>& centers) {
  ClusterCollection col;
  for (VertexId c : centers) col.clusters.push_back({c, {c}});
  return col;
}

}  // namespace

TEST(Popularity, StarHubIsTheOnlyPopularCenter) {
  const Graph g = star(5);
  const auto res = detect_popular(g, ClusterCollection::singletons(6), 3, 1);
  EXPECT_EQ(res.popular, (std::vector<VertexId>{0}));
  EXPECT_EQ(res.rounds, 1U + 1 * 3);
  for (VertexId leaf = 1; leaf <= 5; ++leaf) {
    ASSERT_EQ(res.knowledge[leaf].entries.size(), 2U);
    EXPECT_EQ(res.knowledge[leaf].entries[1].center, 0U);
  }
}

TEST(Popularity, DegreeAboveNMeansNobodyIsPopular) {
  const Graph g = gnp(40, Rational(1, 4), 2);
  const auto res = detect_popular(g, ClusterCollection::singletons(40), 41, 3);
  EXPECT_TRUE(res.popular.empty());
  EXPECT_EQ(res.rounds, 1U + 3 * 41);
}

TEST(Popularity, CycleVerticesKnowBothNeighbors) {
  const Graph g = cycle_graph(64);
  const auto res = detect_popular(g, ClusterCollection::singletons(64), 3, 1);
  EXPECT_TRUE(res.popular.empty());
  for (VertexId v = 0; v < 64; ++v) {
    const auto& k = res.knowledge[v];
    ASSERT_EQ(k.entries.size(), 3U);
    for (VertexId w : {(v + 1) % 64, (v + 63) % 64}) {
      const KnowledgeEntry* e = k.find(w);
      ASSERT_NE(e, nullptr);
      EXPECT_EQ(e->distance, 1U);
      EXPECT_EQ(e->predecessor, w);
    }
  }
}

TEST(Popularity, TwoAdjacentCentersWithDegOne) {
  const Graph g = path_graph(2);
  EXPECT_EQ(detect_popular(g, ClusterCollection::singletons(2), 1, 1).popular, (std::vector<VertexId>{0, 1}));
}

TEST(Popularity, PathEndsSeeEachOtherAtDistanceNine) {
  const Graph g = path_graph(10);
  const auto res = detect_popular(g, centers_only({0, 9}), 100, 9);
  EXPECT_TRUE(res.popular.empty());
  const KnowledgeEntry* e = res.knowledge[0].find(9);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->distance, 9U);
  EXPECT_EQ(e->predecessor, 1U);
}

TEST(Popularity, EmptyCollection) {
  const auto res = detect_popular(cycle_graph(8), ClusterCollection{}, 2, 2);
  EXPECT_TRUE(res.popular.empty());
  EXPECT_EQ(res.rounds, 5U);
  EXPECT_EQ(res.stats.messages, 0U);
}

// Popular set equals the brute-force oracle for random graphs, random center
// subsets, and a spread of (deg, delta); non-popular centers know exactly the
// centers in their ball with exact distances.
TEST(Popularity, MatchesBruteForceOracle) {
  std::mt19937 rng(77);
  for (unsigned trial = 0; trial < 60; ++trial) {
    const std::size_t n = 10 + trial % 50;
    const auto edges = oracle::random_edges(n, 0.04 + 0.02 * (trial % 5), trial + 1);
    const Graph g = Graph::from_edges(n, edges);
    const auto d = oracle::floyd_warshall(n, edges);
    std::vector<VertexId> centers;
    for (VertexId v = 0; v < n; ++v) {
      if (std::bernoulli_distribution(0.5)(rng)) centers.push_back(v);
    }
    const std::uint64_t deg = 1 + trial % 6;
    const Rational delta(1 + trial % 9, 1 + trial % 2);
    const auto depth = static_cast<std::uint32_t>(floor(delta));
    const auto res = detect_popular(g, centers_only(centers), deg, delta);
    EXPECT_EQ(res.popular, oracle::popular(d, centers, deg, depth)) << "trial " << trial;
    EXPECT_EQ(res.rounds, 1 + depth * deg);
    EXPECT_LE(res.stats.max_words, 3U);
    for (VertexId c : centers) {
      if (std::binary_search(res.popular.begin(), res.popular.end(), c)) continue;
      std::size_t expected = 0;
      for (VertexId o : centers) {
        if (d[c][o] > depth) continue;
        ++expected;
        const KnowledgeEntry* e = res.knowledge[c].find(o);
        ASSERT_NE(e, nullptr) << "trial " << trial;
        EXPECT_EQ(e->distance, d[c][o]);
      }
      EXPECT_EQ(res.knowledge[c].entries.size(), expected);
    }
  }
}

TEST(Popularity, InvalidArguments) {
  EXPECT_THROW(detect_popular(path_graph(3), ClusterCollection::singletons(3), 0, 1), ConfigError);
  EXPECT_THROW(detect_popular(path_graph(3), ClusterCollection::singletons(3), 1, -1), ConfigError);
}
