// nearadd: generate graphs, build near-additive spanners on the CONGEST
// simulator, and verify them.

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace nearadd;

void add_graph_flags(CLI::App* app, cli::GraphSource& src) {
  app->add_option("--graph", src.file, "Input edge list");
  app->add_option("--gen", src.generator.kind, "Generator: gnp, cycle, path, grid, barbell, complete");
  app->add_option("--n", src.generator.n, "Vertex count (gnp, cycle, path, complete)");
  app->add_option("--p", src.p_text, "Edge probability as p/q (gnp)");
  app->add_option("--rows", src.generator.rows, "Grid rows");
  app->add_option("--cols", src.generator.cols, "Grid columns");
  app->add_option("--clique", src.generator.clique, "Barbell clique size");
  app->add_option("--bridge", src.generator.bridge, "Barbell path length in edges");
  app->add_option("--seed", src.generator.seed, "Generator seed");
}

void add_schedule_flags(CLI::App* app, cli::ScheduleArgs& s) {
  app->add_option("--kappa", s.kappa, "Size parameter kappa >= 3")->required();
  app->add_option("--c", s.c, "Round parameter c = 1/rho, 3 <= c <= kappa")->required();
  app->add_option("--mode", s.mode, "guaranteed (eps = target eps') or exploratory (eps = internal eps)")
      ->check(CLI::IsMember({"guaranteed", "exploratory"}));
  app->add_option("--eps", s.eps, "Epsilon as an exact fraction p/q")->required();
}

void add_engine_flags(CLI::App* app, cli::EngineArgs& e) {
  app->add_option("--workers", e.workers, "Engine worker threads");
  app->add_flag("--verify-replay", e.verify_replay, "Re-run every protocol with another worker count");
}

void add_verify_flags(CLI::App* app, std::string& level, VerifyOptions& v) {
  app->add_option("--level", level, "fast, full or deep")->check(CLI::IsMember({"fast", "full", "deep"}));
  app->add_option("--sample-sources", v.sample_sources, "Stretch sources above the all-pairs limit");
  app->add_option("--all-pairs-limit", v.all_pairs_limit, "Largest n checked on all pairs");
  app->add_option("--verify-workers", v.workers, "Verifier threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-additive spanners on a CONGEST simulator"};
  app.require_subcommand(1);

  cli::GraphSource source;
  cli::ScheduleArgs schedule;
  cli::EngineArgs engine;
  cli::Outputs out;
  VerifyOptions verify;
  std::string level = "full";
  std::string gen_out;
  std::string spanner_in;
  std::string report_in;

  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  add_graph_flags(gen, source);
  gen->add_option("-o,--out", gen_out, "Output file (stdout if omitted)");

  auto* build = app.add_subcommand("build", "Build a spanner");
  add_graph_flags(build, source);
  add_schedule_flags(build, schedule);
  add_engine_flags(build, engine);
  build->add_option("--spanner", out.spanner, "Spanner edge list output");
  build->add_option("--trace", out.trace, "Trace JSON output");
  build->add_flag("--verbose-trace", out.verbose_trace, "Include member lists and forests in the trace");

  auto* ver = app.add_subcommand("verify", "Rebuild deterministically and verify a spanner");
  add_graph_flags(ver, source);
  add_schedule_flags(ver, schedule);
  add_engine_flags(ver, engine);
  add_verify_flags(ver, level, verify);
  ver->add_option("--spanner", spanner_in, "Spanner edge list to compare against the rebuild");
  ver->add_option("--report", out.report, "Report JSON output");

  auto* rep = app.add_subcommand("report", "Summarize a report JSON");
  rep->add_option("report", report_in, "Report file")->required();

  auto* run = app.add_subcommand("run", "Build and verify");
  add_graph_flags(run, source);
  add_schedule_flags(run, schedule);
  add_engine_flags(run, engine);
  add_verify_flags(run, level, verify);
  run->add_option("--spanner", out.spanner, "Spanner edge list output");
  run->add_option("--trace", out.trace, "Trace JSON output");
  run->add_option("--report", out.report, "Report JSON output");
  run->add_flag("--verbose-trace", out.verbose_trace, "Include member lists and forests in the trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kConfigError;
  }
  verify.level = parse_verify_level(level);

  if (*gen) return cli::cmd_generate(source, gen_out);
  if (*build) return cli::cmd_build(source, schedule, engine, out);
  if (*ver) return cli::cmd_verify(source, schedule, spanner_in, verify, engine, out);
  if (*rep) return cli::cmd_report(report_in);
  return cli::cmd_run(source, schedule, verify, engine, out);
}
