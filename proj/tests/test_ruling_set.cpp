#include <gtest/gtest.h>

#include <numeric>

#include "nearadd/generate.hpp"
#include "nearadd/protocol.hpp"
#include "oracles.hpp"

using namespace nearadd;

namespace {

void expect_ruling(const Graph& g, const std::vector<VertexId>& w, const RulingSetResult& res, std::uint64_t q,
                   std::uint64_t c) {
  const auto d = oracle::floyd_warshall(g.num_vertices(), g.edges());
  for (VertexId a : res.ruling) {
    EXPECT_TRUE(std::binary_search(w.begin(), w.end(), a));
    for (VertexId b : res.ruling) {
      if (a != b) EXPECT_GE(d[a][b], q + 1) << a << " " << b;
    }
  }
  for (const auto& [v, dom] : res.dominators) {
    EXPECT_TRUE(std::binary_search(res.ruling.begin(), res.ruling.end(), dom));
    EXPECT_LE(d[v][dom], c * q) << v;
  }
  EXPECT_EQ(res.dominators.size(), w.size());
}

}  // namespace

TEST(RulingSet, SingletonCandidate) {
  const auto res = ruling_set(path_graph(5), std::vector<VertexId>{3}, 2, 3);
  EXPECT_EQ(res.ruling, (std::vector<VertexId>{3}));
}

TEST(RulingSet, EmptyCandidates) {
  const auto res = ruling_set(path_graph(5), std::vector<VertexId>{}, 2, 3);
  EXPECT_TRUE(res.ruling.empty());
}

TEST(RulingSet, CompleteGraphKeepsMaximumId) {
  std::vector<VertexId> all(16);
  std::iota(all.begin(), all.end(), 0);
  const auto res = ruling_set(complete_graph(16), all, 2, 3);
  EXPECT_EQ(res.ruling, (std::vector<VertexId>{15}));
  EXPECT_EQ(res.base, 3U);
  EXPECT_EQ(res.rounds, 3U * 3 * 2);
}

TEST(RulingSet, TenPathProperties) {
  std::vector<VertexId> all(10);
  std::iota(all.begin(), all.end(), 0);
  const Graph g = path_graph(10);
  const auto res = ruling_set(g, all, 2, 2);
  expect_ruling(g, all, res, 2, 2);
  EXPECT_EQ(res.rounds, 2U * 4 * 2);
}

TEST(RulingSet, RandomGraphsAndSubsets) {
  std::mt19937 rng(5);
  for (unsigned trial = 0; trial < 50; ++trial) {
    const std::size_t n = 12 + trial % 60;
    const Graph g = Graph::from_edges(n, oracle::random_edges(n, 0.03 + 0.03 * (trial % 4), 100 + trial));
    std::vector<VertexId> w;
    for (VertexId v = 0; v < n; ++v) {
      if (std::bernoulli_distribution(0.6)(rng)) w.push_back(v);
    }
    const std::uint64_t q = 1 + trial % 5;
    const int c = 1 + static_cast<int>(trial % 4);
    const auto res = ruling_set(g, w, q, c);
    expect_ruling(g, w, res, q, static_cast<std::uint64_t>(c));
    if (!w.empty()) {
      EXPECT_EQ(res.rounds, static_cast<std::uint64_t>(c) * res.base * q);
      EXPECT_FALSE(res.ruling.empty());
    }
  }
}

TEST(RulingSet, GridsAndLongPaths) {
  for (auto [rows, cols] : {std::pair{1, 200}, std::pair{12, 12}, std::pair{3, 40}}) {
    const Graph g = grid_graph(rows, cols);
    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    for (std::uint64_t q : {2, 4, 6}) {
      const auto res = ruling_set(g, all, q, 3);
      expect_ruling(g, all, res, q, 3);
    }
  }
}
