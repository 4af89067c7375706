#include <gtest/gtest.h>

#include <sstream>

#include "nearadd/errors.hpp"
#include "nearadd/graph.hpp"
#include "nearadd/graph_io.hpp"
#include "oracles.hpp"

using namespace nearadd;

namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edges(leaves + 1, e);
}

}  // namespace

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{2, 3}, {0, 3}, {0, 1}});
  EXPECT_EQ(g.num_vertices(), 4U);
  EXPECT_EQ(g.num_edges(), 3U);
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()), (std::vector<VertexId>{1, 3}));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}}));
}

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), InputError);
}

TEST(Bfs, PathDistances) {
  const DistanceRow row = bfs(path(3), 0);
  EXPECT_EQ(row.dist, (std::vector<Distance>{0, 1, 2}));
}

TEST(Bfs, DepthZeroReachesOnlySource) {
  const DistanceRow row = bfs(path(5), 2, 0);
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(row.reachable(v), v == 2);
}

TEST(Bfs, FourCycle) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(bfs(g, 0).dist, (std::vector<Distance>{0, 1, 2, 1}));
}

TEST(Bfs, BadSourceIsAnInputError) { EXPECT_THROW(bfs(path(3), 3), InputError); }

TEST(Bfs, AgreesWithFloydWarshallOnRandomGraphs) {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 8 + seed % 57;
    const auto edges = oracle::random_edges(n, 0.02 + 0.01 * (seed % 9), seed);
    const Graph g = Graph::from_edges(n, edges);
    const auto d = oracle::floyd_warshall(n, edges);
    for (VertexId s = 0; s < n; ++s) {
      const DistanceRow row = bfs(g, s);
      for (VertexId v = 0; v < n; ++v) {
        if (d[s][v] == oracle::kInf) {
          EXPECT_FALSE(row.reachable(v));
        } else {
          EXPECT_EQ(row.dist[v], d[s][v]);
        }
      }
      for (const Edge& e : edges) {
        if (row.reachable(e.u) && row.reachable(e.v)) {
          EXPECT_LE(std::max(row.dist[e.u], row.dist[e.v]) - std::min(row.dist[e.u], row.dist[e.v]), 1U);
        }
      }
    }
  }
}

TEST(BallCenters, StarHub) {
  const std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(ball_centers(star(5), all, 0, 1), all);
}

TEST(BallCenters, IsolatedVertex) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  EXPECT_EQ(ball_centers(g, std::vector<VertexId>{2}, 2, 7), (std::vector<VertexId>{2}));
  EXPECT_TRUE(ball_centers(g, std::vector<VertexId>{0}, 2, 7).empty());
}

TEST(BallCenters, TenPath) {
  EXPECT_EQ(ball_centers(path(10), std::vector<VertexId>{0, 9}, 5, 4), (std::vector<VertexId>{9}));
}

TEST(BallCenters, RationalRadiusEqualsItsFloor) {
  const auto edges = oracle::random_edges(40, 0.06, 11);
  const Graph g = Graph::from_edges(40, edges);
  std::vector<VertexId> centers;
  for (VertexId v = 0; v < 40; v += 3) centers.push_back(v);
  for (int num = 0; num <= 30; ++num) {
    const Rational delta(num, 7);
    for (VertexId v = 0; v < 40; v += 5) {
      EXPECT_EQ(ball_centers(g, centers, v, delta), ball_centers(g, centers, v, Rational(floor(delta))));
    }
  }
}

TEST(EdgeList, RoundTrip) {
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 4}, {1, 2}, {2, 3}});
  std::stringstream text;
  write_edge_list(text, g.num_vertices(), g.edges());
  EXPECT_EQ(text.str(), "5 3\n0 4\n1 2\n2 3\n");
  const Graph back = read_edge_list(text);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.num_vertices(), 5U);
}

TEST(EdgeList, SkipsCommentsAndBlankLines) {
  std::stringstream text("# comment\n\n3 2\n0 1\n# mid\n1 2\n");
  EXPECT_EQ(read_edge_list(text).num_edges(), 2U);
}

TEST(EdgeList, RejectsBadInput) {
  for (const char* bad : {"3 2\n0 1\n", "3 1\n0 0\n", "3 2\n0 1\n1 0\n", "2 1\n0 5\n", "x\n", "3 1\n0 1\n1 2\n"}) {
    std::stringstream text(bad);
    EXPECT_THROW(read_edge_list(text), InputError) << bad;
  }
}
