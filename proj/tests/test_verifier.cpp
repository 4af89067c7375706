#include <gtest/gtest.h>

#include <numeric>

#include "nearadd/errors.hpp"
#include "nearadd/generate.hpp"
#include "nearadd/spanner.hpp"
#include "nearadd/verifier.hpp"
#include "oracles.hpp"

using namespace nearadd;

namespace {

PhaseSchedule exploratory(std::uint64_t n, Rational eps = Rational(1, 2)) {
  return build_schedule(n, 4, 3, Mode::exploratory, eps);
}

const CheckResult& find_check(const VerificationReport& report, const std::string& name) {
  for (const CheckResult& c : report.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check named " + name);
}

struct Built {
  Graph graph;
  PhaseSchedule schedule;
  SpannerResult result;
};

Built make_run(Graph g, PhaseSchedule s) {
  auto r = build_spanner(g, s);
  return {std::move(g), std::move(s), std::move(r)};
}

VerifyOptions deep() {
  VerifyOptions o;
  o.level = VerifyLevel::deep;
  return o;
}

}  // namespace

TEST(Verifier, PopularOracleExamples) {
  std::vector<Edge> star;
  for (VertexId v = 1; v <= 5; ++v) star.push_back({0, v});
  const Graph g = Graph::from_edges(6, star);
  const auto col = ClusterCollection::singletons(6);
  EXPECT_TRUE(check_popular_oracle(g, col, 3, 1, std::vector<VertexId>{0}).passed);
  const auto bad = check_popular_oracle(g, col, 3, 1, std::vector<VertexId>{});
  EXPECT_FALSE(bad.passed);
  EXPECT_NE(bad.witness.find('0'), std::string::npos);

  const Graph pair = path_graph(2);
  EXPECT_TRUE(check_popular_oracle(pair, ClusterCollection::singletons(2), 1, 1, std::vector<VertexId>{0, 1}).passed);
  EXPECT_TRUE(check_popular_oracle(pair, ClusterCollection{}, 1, 1, std::vector<VertexId>{}).passed);
}

TEST(Verifier, KnowledgeExamples) {
  const Graph c64 = cycle_graph(64);
  const auto col = ClusterCollection::singletons(64);
  const auto pop = detect_popular(c64, col, 3, 1);
  EXPECT_TRUE(check_knowledge(c64, col, 3, 1, pop.knowledge, pop.popular).passed);

  // A forgotten neighbor is caught.
  auto broken = pop.knowledge;
  broken[5].entries.pop_back();
  EXPECT_FALSE(check_knowledge(c64, col, 3, 1, broken, pop.popular).passed);

  // Wrong distance is caught.
  auto skewed = pop.knowledge;
  skewed[7].entries[1].distance = 2;
  EXPECT_FALSE(check_knowledge(c64, col, 3, 1, skewed, pop.popular).passed);

  const Graph path = path_graph(10);
  ClusterCollection ends;
  ends.clusters = {{0, {0}}, {9, {9}}};
  const auto far = detect_popular(path, ends, 50, 9);
  EXPECT_TRUE(check_knowledge(path, ends, 50, 9, far.knowledge, far.popular).passed);

  const Graph isolated(3);
  ClusterCollection one;
  one.clusters = {{1, {1}}};
  const auto lonely = detect_popular(isolated, one, 1, 2);
  EXPECT_TRUE(check_knowledge(isolated, one, 1, 2, lonely.knowledge, lonely.popular).passed);
}

TEST(Verifier, RulingExamples) {
  const Graph k16 = complete_graph(16);
  std::vector<VertexId> all(16);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(check_ruling(k16, all, std::vector<VertexId>{15}, 2, 6).passed);
  EXPECT_FALSE(check_ruling(k16, all, std::vector<VertexId>{14, 15}, 2, 6).passed);
  EXPECT_TRUE(check_ruling(k16, std::vector<VertexId>{}, std::vector<VertexId>{}, 2, 6).passed);
  EXPECT_TRUE(check_ruling(k16, std::vector<VertexId>{3}, std::vector<VertexId>{3}, 2, 6).passed);
  const Graph p = path_graph(10);
  std::vector<VertexId> ten(10);
  std::iota(ten.begin(), ten.end(), 0);
  EXPECT_FALSE(check_ruling(p, ten, std::vector<VertexId>{0}, 2, 4).passed);
  EXPECT_TRUE(check_ruling(p, ten, std::vector<VertexId>{0, 4, 8}, 2, 4).passed);
  // Not a subset of W.
  EXPECT_FALSE(check_ruling(p, std::vector<VertexId>{1}, std::vector<VertexId>{2}, 2, 4).passed);
}

TEST(Verifier, CompleteGraphRunPassesDeep) {
  const Built run = make_run(complete_graph(16), exploratory(16));
  const auto report = verify(run.graph, run.schedule, run.result.trace, deep());
  EXPECT_TRUE(report.passed()) << (report.first_failure() ? report.first_failure()->witness : "");
  EXPECT_EQ(report.edge_count, 15U);
  ASSERT_TRUE(report.stretch);
  EXPECT_EQ(report.stretch->worst_surplus, 1U);
}

TEST(Verifier, CycleRunHasStretchOne) {
  const Built run = make_run(cycle_graph(64), exploratory(64));
  const auto report = verify(run.graph, run.schedule, run.result.trace, deep());
  EXPECT_TRUE(report.passed());
  ASSERT_TRUE(report.stretch);
  EXPECT_EQ(report.stretch->worst_surplus, 0U);
  EXPECT_EQ(report.stretch->ratio_dh, report.stretch->ratio_dg);
}

TEST(Verifier, BarbellNeighborClusterDistance) {
  const Built run = make_run(barbell_graph(8, 30), exploratory(45));
  const auto report = verify(run.graph, run.schedule, run.result.trace, deep());
  EXPECT_TRUE(find_check(report, "neighbor_cluster_distance").passed);
  EXPECT_TRUE(report.passed());
}

TEST(Verifier, StretchSkipsDisconnectedPairs) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}};
  const Graph g = Graph::from_edges(5, e);
  const auto s = check_stretch(g, e, exploratory(5));
  EXPECT_GT(s.skipped_disconnected, 0U);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.worst_surplus, 0U);
}

TEST(Verifier, StretchFlagsMissingConnectivity) {
  const Graph g = path_graph(4);
  const std::vector<Edge> h{{0, 1}, {2, 3}};
  const auto s = check_stretch(g, h, exploratory(4));
  EXPECT_FALSE(s.passed());
  EXPECT_TRUE(s.disconnected);
}

TEST(Verifier, GuaranteedStretchBoundIsAsserted) {
  const Graph g = cycle_graph(40);
  const auto schedule = build_schedule(40, 4, 3, Mode::guaranteed, 1);
  // Drop one cycle edge: the surplus for its endpoints is 38, far below beta.
  std::vector<Edge> h = g.edges();
  h.erase(h.begin());
  const auto s = check_stretch(g, h, schedule);
  EXPECT_EQ(s.bound_kind, "guaranteed");
  EXPECT_EQ(s.worst_surplus, 38U);
  EXPECT_TRUE(s.passed());
}

TEST(Verifier, InternalBoundCatchesALongDetour) {
  // eps = 1/30, rho = 1/3: multiplicative 10, additive 30 * 3 * 30^2.
  const Graph g = cycle_graph(40);
  const auto schedule = build_schedule(40, 4, 3, Mode::exploratory, Rational(1, 30));
  std::vector<Edge> h = g.edges();
  h.erase(h.begin());
  const auto s = check_stretch(g, h, schedule);
  EXPECT_EQ(s.bound_kind, "internal");
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.additive, Rational(30 * 3 * 900));
}

TEST(Verifier, TamperedTracesAreCaught) {
  const Built run = make_run(gnp(96, Rational(1, 10), 11), exploratory(96));
  ASSERT_TRUE(verify(run.graph, run.schedule, run.result.trace, deep()).passed());

  {
    ExecutionTrace t = run.result.trace;
    ASSERT_FALSE(t.phases[0].popular.empty());
    t.phases[0].popular.pop_back();
    const auto r = verify(run.graph, run.schedule, t);
    EXPECT_FALSE(find_check(r, "popular_oracle").passed);
    EXPECT_FALSE(find_check(r, "popular_oracle").witness.empty());
  }
  {
    ExecutionTrace t = run.result.trace;
    t.spanner_edges.pop_back();
    t.origins.pop_back();
    EXPECT_FALSE(find_check(verify(run.graph, run.schedule, t), "edge_accounting").passed);
  }
  {
    ExecutionTrace t = run.result.trace;
    t.phases[1].rounds.interconnect += 100000;
    EXPECT_FALSE(find_check(verify(run.graph, run.schedule, t), "budgets").passed);
  }
  {
    ExecutionTrace t = run.result.trace;
    t.phases[0].rounds.popularity += 1;
    EXPECT_FALSE(find_check(verify(run.graph, run.schedule, t), "popularity_round_count").passed);
  }
  {
    ExecutionTrace t = run.result.trace;
    t.phases[0].stats.violations = 1;
    EXPECT_FALSE(find_check(verify(run.graph, run.schedule, t), "engine_safety").passed);
  }
  {
    ExecutionTrace t = run.result.trace;
    ASSERT_GE(t.phases[0].ruling.size(), 1U);
    t.phases[0].ruling.push_back(t.phases[0].popular.front() == t.phases[0].ruling.front()
                                     ? t.phases[0].popular.back()
                                     : t.phases[0].popular.front());
    std::sort(t.phases[0].ruling.begin(), t.phases[0].ruling.end());
    EXPECT_FALSE(verify(run.graph, run.schedule, t).passed());
  }
}

TEST(Verifier, RandomRunsPassEveryCheck) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const std::uint64_t n = 40 + 10 * seed;
    const Built run = make_run(gnp(n, Rational(1, 4 + seed), seed), exploratory(n));
    const auto report = verify(run.graph, run.schedule, run.result.trace, deep());
    EXPECT_TRUE(report.passed()) << "seed " << seed << ": "
                                 << (report.first_failure() ? report.first_failure()->name : "");
  }
}

TEST(Verifier, LevelParsing) {
  EXPECT_EQ(parse_verify_level("fast"), VerifyLevel::fast);
  EXPECT_EQ(parse_verify_level("deep"), VerifyLevel::deep);
  EXPECT_THROW(parse_verify_level("medium"), ConfigError);
}
