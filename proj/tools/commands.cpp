#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "nearadd/errors.hpp"
#include "nearadd/graph_io.hpp"
#include "nearadd/schedule.hpp"
#include "nearadd/spanner.hpp"
#include "nearadd/trace_json.hpp"

namespace nearadd::cli {

namespace {

using nlohmann::json;

Graph load_graph(const GraphSource& source) {
  if (!source.file.empty()) {
    if (!source.generator.kind.empty()) throw ConfigError("give either --graph or --gen, not both");
    return read_edge_list(source.file);
  }
  if (source.generator.kind.empty()) throw ConfigError("no input graph: pass --graph FILE or --gen KIND");
  GeneratorSpec spec = source.generator;
  spec.p = parse_rational(source.p_text);
  return generate(spec);
}

PhaseSchedule make_schedule(const Graph& g, const ScheduleArgs& args) {
  if (args.eps.empty()) throw ConfigError("--eps is required");
  return build_schedule(g.num_vertices(), args.kappa, args.c, parse_mode(args.mode), parse_rational(args.eps));
}

BuildOptions build_options(const EngineArgs& engine) {
  BuildOptions opts;
  opts.engine.workers = engine.workers;
  opts.engine.verify_replay = engine.verify_replay;
  return opts;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const json& value) { write_text(path, value.dump(2) + "\n"); }

void write_spanner(const std::string& path, std::size_t n, const std::vector<Edge>& edges) {
  if (path.empty()) return;
  std::ostringstream text;
  write_edge_list(text, n, edges);
  write_text(path, text.str());
}

/// Failure markers for artifacts of a run that aborted.
void write_failure_artifacts(const Outputs& out, const std::string& stage, const std::string& message) {
  const json marker = {{"status", "error"}, {"stage", stage}, {"error", message}, {"passed", false}};
  if (!out.spanner.empty()) write_text(out.spanner, "# status: error (" + stage + "): " + message + "\n0 0\n");
  if (!out.trace.empty()) write_json(out.trace, marker);
  if (!out.report.empty()) write_json(out.report, marker);
}

template <class Fn>
int guarded(const Outputs& out, const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    write_failure_artifacts(out, stage, e.what());
    return kProtocolError;
  } catch (const Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    write_failure_artifacts(out, stage, e.what());
    return kConfigError;
  }
}

void print_summary(const VerificationReport& report) {
  for (const CheckResult& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) std::cout << "  " << c.witness;
    std::cout << "\n";
  }
  if (report.stretch) {
    const StretchSummary& s = *report.stretch;
    std::cout << "stretch bound " << s.bound_kind << ": worst surplus " << s.worst_surplus << " at ("
              << s.surplus_u << ", " << s.surplus_v << "), pairs " << s.pairs << "\n";
  }
  std::cout << "edges " << report.edge_count << ", rounds " << report.round_total << "\n";
}

int verify_and_write(const Graph& g, const PhaseSchedule& schedule, const SpannerResult& built,
                     const std::vector<Edge>* claimed, const VerifyOptions& verify, const Outputs& out) {
  VerificationReport report = nearadd::verify(g, schedule, built.trace, verify);
  if (claimed) {
    CheckResult match{"spanner_matches_rebuild", *claimed == built.edges, "", claimed->size()};
    if (!match.passed) match.witness = "spanner file differs from the deterministic rebuild";
    report.checks.insert(report.checks.begin(), match);
  }
  json doc = to_json(report);
  doc["status"] = report.passed() ? "pass" : "fail";
  doc["schedule"] = to_json(schedule);
  write_json(out.report, doc);
  print_summary(report);
  return report.passed() ? kPass : kCheckFailure;
}

}  // namespace

int cmd_generate(const GraphSource& source, const std::string& out) {
  return guarded(Outputs{}, "generate", [&] {
    const Graph g = load_graph(source);
    const std::vector<Edge> edges = g.edges();
    if (out.empty()) {
      write_edge_list(std::cout, g.num_vertices(), edges);
    } else {
      write_edge_list(std::filesystem::path(out), g.num_vertices(), edges);
    }
    return kPass;
  });
}

int cmd_build(const GraphSource& source, const ScheduleArgs& args, const EngineArgs& engine, const Outputs& out) {
  return guarded(out, "build", [&] {
    const Graph g = load_graph(source);
    const PhaseSchedule schedule = make_schedule(g, args);
    const SpannerResult built = build_spanner(g, schedule, build_options(engine));
    write_spanner(out.spanner, g.num_vertices(), built.edges);
    json trace = to_json(built.trace, out.verbose_trace);
    trace["status"] = "complete";
    trace["schedule"] = to_json(schedule);
    write_json(out.trace, trace);
    std::cout << "spanner edges " << built.edges.size() << " of " << g.num_edges() << ", rounds "
              << built.trace.total_rounds() << "\n";
    return kPass;
  });
}

int cmd_verify(const GraphSource& source, const ScheduleArgs& args, const std::string& spanner_file,
               const VerifyOptions& verify, const EngineArgs& engine, const Outputs& out) {
  return guarded(out, "verify", [&] {
    const Graph g = load_graph(source);
    const PhaseSchedule schedule = make_schedule(g, args);
    std::vector<Edge> claimed;
    if (!spanner_file.empty()) {
      const Graph h = read_edge_list(spanner_file);
      if (h.num_vertices() != g.num_vertices()) throw InputError("spanner file has a different vertex count");
      claimed = h.edges();
    }
    const SpannerResult built = build_spanner(g, schedule, build_options(engine));
    return verify_and_write(g, schedule, built, spanner_file.empty() ? nullptr : &claimed, verify, out);
  });
}

int cmd_report(const std::string& report_file) {
  return guarded(Outputs{}, "report", [&] {
    std::ifstream in(report_file);
    if (!in) throw InputError("cannot read '" + report_file + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed report: ") + e.what());
    }
    if (doc.value("status", "") == "error") {
      std::cout << "run aborted in " << doc.value("stage", "?") << ": " << doc.value("error", "") << "\n";
      return kCheckFailure;
    }
    for (const auto& c : doc.at("checks")) {
      std::cout << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
      if (c.contains("witness")) std::cout << "  " << c.at("witness").get<std::string>();
      std::cout << "\n";
    }
    for (const auto& b : doc.at("bounds")) {
      std::cout << (b.at("asserted").get<bool>() ? "bound " : "shape ") << b.at("quantity").get<std::string>();
      if (!b.at("phase").is_null()) std::cout << "[" << b.at("phase").get<std::size_t>() << "]";
      std::cout << ": " << b.at("measured").get<std::string>() << " vs " << b.at("bound").get<std::string>();
      if (!b.at("slack").is_null()) std::cout << " (slack " << b.at("slack").get<double>() << ")";
      std::cout << "\n";
    }
    if (doc.contains("stretch")) {
      const auto& s = doc.at("stretch");
      std::cout << "stretch " << s.at("bound").get<std::string>() << ": worst surplus "
                << s.at("worst_surplus").at("surplus").get<std::uint64_t>() << ", worst ratio "
                << s.at("worst_ratio").at("ratio").get<std::string>() << "\n";
    }
    std::cout << "edges " << doc.at("edge_count").get<std::size_t>() << ", rounds "
              << doc.at("round_total").get<std::uint64_t>() << "\n";
    return doc.at("passed").get<bool>() ? kPass : kCheckFailure;
  });
}

int cmd_run(const GraphSource& source, const ScheduleArgs& args, const VerifyOptions& verify,
            const EngineArgs& engine, const Outputs& out) {
  return guarded(out, "run", [&] {
    const Graph g = load_graph(source);
    const PhaseSchedule schedule = make_schedule(g, args);
    const SpannerResult built = build_spanner(g, schedule, build_options(engine));
    write_spanner(out.spanner, g.num_vertices(), built.edges);
    json trace = to_json(built.trace, out.verbose_trace);
    trace["status"] = "complete";
    trace["schedule"] = to_json(schedule);
    write_json(out.trace, trace);
    return verify_and_write(g, schedule, built, nullptr, verify, out);
  });
}

}  // namespace nearadd::cli
