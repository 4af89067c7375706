#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "nearadd/errors.hpp"
#include "nearadd/generate.hpp"
#include "nearadd/graph_io.hpp"
#include "nearadd/schedule.hpp"
#include "nearadd/spanner.hpp"
#include "nearadd/trace_json.hpp"
#include "nearadd/verifier.hpp"

namespace py = pybind11;
using namespace nearadd;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId>;

std::vector<EdgeTuple> to_tuples(const std::vector<Edge>& edges) {
  std::vector<EdgeTuple> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

Graph graph_from_tuples(std::size_t n, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) list.push_back(make_edge(a, b));
  return Graph::from_edges(n, list);
}

// A finished construction, kept together so it can be verified later.
struct Construction {
  Graph graph;
  PhaseSchedule schedule;
  SpannerResult result;
};

}  // namespace

PYBIND11_MODULE(_nearadd, m) {
  m.doc() = "Near-additive spanner construction on a CONGEST simulator";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  auto protocol = py::register_exception<ProtocolError>(m, "ProtocolError", base.ptr());
  py::register_exception<BandwidthError>(m, "BandwidthError", protocol.ptr());
  py::register_exception<DeterminismError>(m, "DeterminismError", protocol.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_tuples), py::arg("num_vertices"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) { return to_tuples(g.edges()); })
      .def("neighbors", [](const Graph& g, VertexId v) {
        if (!g.contains(v)) throw py::index_error("vertex out of range");
        const auto span = g.neighbors(v);
        return std::vector<VertexId>(span.begin(), span.end());
      })
      .def("has_edge", &Graph::has_edge);

  m.def(
      "generate",
      [](const std::string& kind, std::uint64_t n, const std::string& p, std::uint64_t rows, std::uint64_t cols,
         std::uint64_t clique, std::uint64_t bridge, std::uint64_t seed) {
        GeneratorSpec spec{kind, n, parse_rational(p), rows, cols, clique, bridge, seed};
        return generate(spec);
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("p") = "1/10", py::arg("rows") = 0, py::arg("cols") = 0,
      py::arg("clique") = 0, py::arg("bridge") = 0, py::arg("seed") = 0);
  m.def("read_edge_list", [](const std::string& path) { return read_edge_list(std::filesystem::path(path)); });
  m.def("write_edge_list", [](const std::string& path, std::size_t n, const std::vector<EdgeTuple>& edges) {
    write_edge_list(std::filesystem::path(path), n, graph_from_tuples(n, edges).edges());
  });

  py::class_<PhaseSchedule>(m, "Schedule")
      .def_readonly("n", &PhaseSchedule::n)
      .def_readonly("kappa", &PhaseSchedule::kappa)
      .def_readonly("c", &PhaseSchedule::c)
      .def_readonly("ell", &PhaseSchedule::ell)
      .def_readonly("i0", &PhaseSchedule::i0)
      .def_readonly("deg", &PhaseSchedule::deg)
      .def_readonly("bound_guaranteed", &PhaseSchedule::bound_guaranteed)
      .def_property_readonly("mode", [](const PhaseSchedule& s) { return to_string(s.mode); })
      .def_property_readonly("eps", [](const PhaseSchedule& s) { return to_string(s.eps); })
      .def_property_readonly("eps_user", [](const PhaseSchedule& s) { return to_string(s.eps_user); })
      .def_property_readonly("beta", [](const PhaseSchedule& s) { return to_string(s.beta); })
      .def_property_readonly("radius", [](const PhaseSchedule& s) { return to_strings(s.radius); })
      .def_property_readonly("delta", [](const PhaseSchedule& s) { return to_strings(s.delta); })
      .def("to_json", [](const PhaseSchedule& s) { return to_json(s).dump(); });

  m.def(
      "build_schedule",
      [](std::uint64_t n, int kappa, int c, const std::string& mode, const std::string& eps) {
        return build_schedule(n, kappa, c, parse_mode(mode), parse_rational(eps));
      },
      py::arg("n"), py::arg("kappa"), py::arg("c"), py::arg("mode"), py::arg("eps"));

  py::class_<Construction>(m, "Construction")
      .def_property_readonly("edges", [](const Construction& c) { return to_tuples(c.result.edges); })
      .def_property_readonly("total_rounds", [](const Construction& c) { return c.result.trace.total_rounds(); })
      .def_property_readonly("schedule", [](const Construction& c) { return c.schedule; })
      .def(
          "trace_json", [](const Construction& c, bool verbose) { return to_json(c.result.trace, verbose).dump(); },
          py::arg("verbose") = false)
      .def(
          "verify",
          [](const Construction& c, const std::string& level, std::size_t all_pairs_limit,
             std::size_t sample_sources, unsigned workers) {
            VerifyOptions opts;
            opts.level = parse_verify_level(level);
            opts.all_pairs_limit = all_pairs_limit;
            opts.sample_sources = sample_sources;
            opts.workers = workers;
            VerificationReport report;
            {
              py::gil_scoped_release release;
              report = verify(c.graph, c.schedule, c.result.trace, opts);
            }
            return to_json(report).dump();
          },
          py::arg("level") = "full", py::arg("all_pairs_limit") = 2048, py::arg("sample_sources") = 256,
          py::arg("workers") = 0);

  m.def(
      "build_spanner",
      [](const Graph& graph, const PhaseSchedule& schedule, unsigned workers, bool verify_replay) {
        BuildOptions opts;
        opts.engine.workers = workers;
        opts.engine.verify_replay = verify_replay;
        Construction out{graph, schedule, {}};
        {
          py::gil_scoped_release release;
          out.result = build_spanner(out.graph, out.schedule, opts);
        }
        return out;
      },
      py::arg("graph"), py::arg("schedule"), py::arg("workers") = 1, py::arg("verify_replay") = false);
}
