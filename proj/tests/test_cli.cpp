#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nearadd/graph_io.hpp"

namespace fs = std::filesystem;
using namespace nearadd;

namespace {

int nearadd_cli(const std::string& args) {
  const std::string cmd = std::string(NEARADD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nearadd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CompleteGraphRunPasses) {
  const int code = nearadd_cli("run --gen complete --n 16 --kappa 4 --c 3 --mode exploratory --eps 1/2 --level deep"
                               " --spanner " + path("h.txt") + " --report " + path("r.json") + " --trace " +
                               path("t.json"));
  EXPECT_EQ(code, 0);
  const Graph h = read_edge_list(fs::path(path("h.txt")));
  EXPECT_EQ(h.num_edges(), 15U);
  const auto report = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(report["passed"], true);
  EXPECT_EQ(nearadd_cli("report " + path("r.json")), 0);
}

TEST_F(Cli, CycleSpannerEqualsInput) {
  ASSERT_EQ(nearadd_cli("generate --gen cycle --n 64 -o " + path("g.txt")), 0);
  ASSERT_EQ(nearadd_cli("run --graph " + path("g.txt") + " --kappa 4 --c 3 --mode exploratory --eps 1/2 --spanner " +
                        path("h.txt")),
            0);
  EXPECT_EQ(read_edge_list(fs::path(path("h.txt"))).edges(), read_edge_list(fs::path(path("g.txt"))).edges());
}

TEST_F(Cli, InvalidParametersAreConfigErrors) {
  EXPECT_EQ(nearadd_cli("run --gen complete --n 16 --kappa 2 --c 3 --mode exploratory --eps 1/2"), 2);
  EXPECT_EQ(nearadd_cli("run --gen complete --n 16 --kappa 4 --c 5 --mode exploratory --eps 1/2"), 2);
  EXPECT_EQ(nearadd_cli("run --gen complete --n 16 --kappa 4 --c 3 --mode guaranteed --eps 3/2"), 2);
  EXPECT_EQ(nearadd_cli("run --graph " + path("missing.txt") + " --kappa 4 --c 3 --eps 1/2"), 2);
  EXPECT_EQ(nearadd_cli("build --gen gnp --n 64 --p abc --kappa 4 --c 3 --eps 1/2"), 2);
}

TEST_F(Cli, BuildIsIdempotent) {
  const std::string common = "build --gen gnp --n 128 --p 1/10 --seed 3 --kappa 4 --c 3 --mode exploratory --eps 1/2";
  ASSERT_EQ(nearadd_cli(common + " --spanner " + path("a.txt") + " --trace " + path("a.json")), 0);
  ASSERT_EQ(nearadd_cli(common + " --workers 4 --spanner " + path("b.txt") + " --trace " + path("b.json")), 0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, VerifyDetectsATamperedSpanner) {
  const std::string graph = "--gen gnp --n 96 --p 1/10 --seed 5 --kappa 4 --c 3 --mode exploratory --eps 1/2";
  ASSERT_EQ(nearadd_cli("build " + graph + " --spanner " + path("h.txt")), 0);
  EXPECT_EQ(nearadd_cli("verify " + graph + " --spanner " + path("h.txt")), 0);

  const Graph h = read_edge_list(fs::path(path("h.txt")));
  auto edges = h.edges();
  edges.pop_back();
  write_edge_list(fs::path(path("bad.txt")), h.num_vertices(), edges);
  EXPECT_EQ(nearadd_cli("verify " + graph + " --spanner " + path("bad.txt") + " --report " + path("r.json")), 1);
  const auto report = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(report["passed"], false);
}
