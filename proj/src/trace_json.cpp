#include "nearadd/trace_json.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace nearadd {

namespace {

using nlohmann::json;

std::string hex(std::uint64_t value) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json clusters_json(const std::vector<Cluster>& clusters) {
  json out = json::array();
  for (const Cluster& c : clusters) out.push_back({{"center", c.center}, {"members", c.members}});
  return out;
}

json exact(const Rational& r) {
  return {{"num", to_string(numerator(r))}, {"den", to_string(denominator(r))}, {"decimal", to_double(r)}};
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& r : values) out.push_back(exact(r));
  return out;
}

json stats_json(const EngineStats& s) {
  return {{"messages", s.messages}, {"max_words", s.max_words}, {"violations", s.violations},
          {"replay_hash", hex(s.replay_hash)}};
}

}  // namespace

json to_json(const PhaseSchedule& s) {
  return {{"n", s.n},
          {"kappa", s.kappa},
          {"c", s.c},
          {"rho", exact(s.rho)},
          {"mode", to_string(s.mode)},
          {"eps_user", exact(s.eps_user)},
          {"eps", exact(s.eps)},
          {"ell", s.ell},
          {"i0", s.i0},
          {"i1", s.i1},
          {"radius", rationals(s.radius)},
          {"delta", rationals(s.delta)},
          {"deg", s.deg},
          {"n_rho_ceil", s.n_rho_ceil},
          {"beta", exact(s.beta)},
          {"bound_guaranteed", s.bound_guaranteed},
          {"internal_multiplicative", exact(s.internal_multiplicative())},
          {"internal_additive", exact(s.internal_additive())}};
}

json to_json(const ExecutionTrace& trace, bool verbose) {
  json phases = json::array();
  for (const PhaseRecord& p : trace.phases) {
    json rounds = {{"popularity", p.rounds.popularity}, {"ruling", p.rounds.ruling},
                   {"forest", p.rounds.forest},         {"marking", p.rounds.marking},
                   {"membership", p.rounds.membership}, {"interconnect", p.rounds.interconnect},
                   {"total", p.rounds.total()}};
    json ph = {{"phase", p.phase},
               {"deg", p.deg},
               {"delta", to_string(p.delta)},
               {"superclustering", p.superclustering},
               {"sizes",
                {{"P", p.input.size()},
                 {"W", p.popular.size()},
                 {"RS", p.ruling.size()},
                 {"U", p.unclustered.size()}}},
               {"rounds", rounds},
               {"edges_added", p.edges_added().size()},
               {"supercluster_edges", edges_json(p.supercluster_edges)},
               {"interconnect_edges", edges_json(p.interconnect_edges)},
               {"engine", stats_json(p.stats)}};
    if (p.superclustering) {
      ph["ruling"] = {{"q", p.ruling_q}, {"c", p.ruling_c}, {"base", p.ruling_base}};
      ph["forest_depth"] = p.forest_depth;
    }
    if (verbose) {
      ph["W"] = p.popular;
      ph["RS"] = p.ruling;
      ph["P"] = clusters_json(p.input.clusters);
      ph["U"] = clusters_json(p.unclustered);
      json forest = json::array();
      for (VertexId v = 0; v < p.forest.size(); ++v) {
        const ForestNode& node = p.forest[v];
        if (node.root) forest.push_back({{"vertex", v}, {"root", *node.root}, {"parent", node.parent}, {"hop", node.hop}});
      }
      ph["forest"] = std::move(forest);
    }
    phases.push_back(std::move(ph));
  }
  json origins = json::array();
  for (const EdgeOrigin& o : trace.origins) origins.push_back({o.edge.u, o.edge.v, o.phase, to_string(o.step)});
  const EngineStats stats = trace.stats();
  return {{"num_vertices", trace.num_vertices},
          {"phases", std::move(phases)},
          {"spanner_edges", trace.spanner_edges.size()},
          {"edge_origins", std::move(origins)},
          {"total_rounds", trace.total_rounds()},
          {"engine", stats_json(stats)}};
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry = {{"name", c.name}, {"passed", c.passed}, {"examined", c.examined}};
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  json bounds = json::array();
  for (const BoundComparison& b : report.bounds) {
    const double slack = b.slack();
    bounds.push_back({{"quantity", b.quantity},
                      {"phase", b.phase ? json(*b.phase) : json(nullptr)},
                      {"measured", to_string(b.measured)},
                      {"bound", to_string(b.bound)},
                      {"asserted", b.asserted},
                      {"holds", b.holds()},
                      {"slack", std::isfinite(slack) ? json(slack) : json(nullptr)}});
  }
  json out = {{"passed", report.passed()},
              {"checks", std::move(checks)},
              {"bounds", std::move(bounds)},
              {"edge_count", report.edge_count},
              {"round_total", report.round_total}};
  if (report.stretch) {
    const StretchSummary& s = *report.stretch;
    json st = {{"bound", s.bound_kind},
               {"multiplicative", to_string(s.multiplicative)},
               {"additive", to_string(s.additive)},
               {"sampled", s.sampled},
               {"sources", s.sources},
               {"pairs", s.pairs},
               {"skipped_disconnected", s.skipped_disconnected},
               {"worst_surplus",
                {{"surplus", s.worst_surplus}, {"u", s.surplus_u}, {"v", s.surplus_v}, {"d_G", s.surplus_dg},
                 {"d_H", s.surplus_dh}}},
               {"worst_ratio",
                {{"ratio", to_string(Rational(s.ratio_dh, s.ratio_dg))}, {"u", s.ratio_u}, {"v", s.ratio_v},
                 {"d_G", s.ratio_dg}, {"d_H", s.ratio_dh}}},
               {"violations", s.violations},
               {"passed", s.passed()}};
    if (s.violation) st["first_violation"] = {s.violation->first, s.violation->second};
    if (s.disconnected) st["disconnected_pair"] = {s.disconnected->first, s.disconnected->second};
    out["stretch"] = std::move(st);
  }
  return out;
}

}  // namespace nearadd
