#include "nearadd/generate.hpp"

#include <limits>
#include <string>

#include "nearadd/errors.hpp"

namespace nearadd {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 24;

void check_size(std::uint64_t n, const char* what) {
  if (n > kMaxVertices) throw ConfigError(std::string(what) + ": at most 2^24 vertices supported");
}

Graph build(std::uint64_t n, std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph gnp(std::uint64_t n, const Rational& p, std::uint64_t seed) {
  check_size(n, "gnp");
  if (p < 0 || p > 1) throw ConfigError("gnp: p must lie in [0, 1]");
  const BigInt num = numerator(p);
  const BigInt den = denominator(p);
  if (den > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw ConfigError("gnp: denominator of p must fit in 64 bits");
  }
  const auto num64 = static_cast<unsigned __int128>(static_cast<std::uint64_t>(num));
  const auto den64 = static_cast<unsigned __int128>(static_cast<std::uint64_t>(den));
  const unsigned __int128 threshold = num64 << 64;
  const std::uint64_t key = splitmix64(seed);
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      const std::uint64_t h = splitmix64(key ^ (u * n + v));
      if (static_cast<unsigned __int128>(h) * den64 < threshold) {
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      }
    }
  }
  return build(n, edges);
}

Graph cycle_graph(std::uint64_t n) {
  check_size(n, "cycle");
  if (n < 3) throw ConfigError("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (std::uint64_t v = 0; v < n; ++v) {
    edges.push_back(make_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n)));
  }
  return build(n, edges);
}

Graph path_graph(std::uint64_t n) {
  check_size(n, "path");
  std::vector<Edge> edges;
  for (std::uint64_t v = 0; v + 1 < n; ++v) edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(v + 1)});
  return build(n, edges);
}

Graph grid_graph(std::uint64_t rows, std::uint64_t cols) {
  if (rows != 0 && cols > kMaxVertices / rows) throw ConfigError("grid: at most 2^24 vertices supported");
  std::vector<Edge> edges;
  auto id = [&](std::uint64_t r, std::uint64_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return build(rows * cols, edges);
}

Graph barbell_graph(std::uint64_t clique, std::uint64_t bridge) {
  if (clique < 1) throw ConfigError("barbell: clique size must be positive");
  if (bridge < 1) throw ConfigError("barbell: bridge length must be positive");
  const std::uint64_t n = 2 * clique + bridge - 1;
  check_size(n, "barbell");
  std::vector<Edge> edges;
  const std::uint64_t second = clique + bridge - 1;
  for (std::uint64_t base : {std::uint64_t{0}, second}) {
    for (std::uint64_t a = 0; a < clique; ++a) {
      for (std::uint64_t b = a + 1; b < clique; ++b) {
        edges.push_back({static_cast<VertexId>(base + a), static_cast<VertexId>(base + b)});
      }
    }
  }
  for (std::uint64_t v = clique - 1; v < second; ++v) {
    edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(v + 1)});
  }
  return build(n, edges);
}

Graph complete_graph(std::uint64_t n) {
  if (n > 1 << 14) throw ConfigError("complete: at most 2^14 vertices supported");
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return build(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
  if (spec.kind == "gnp") return gnp(spec.n, spec.p, spec.seed);
  if (spec.kind == "cycle") return cycle_graph(spec.n);
  if (spec.kind == "path") return path_graph(spec.n);
  if (spec.kind == "grid") return grid_graph(spec.rows, spec.cols);
  if (spec.kind == "barbell") return barbell_graph(spec.clique, spec.bridge);
  if (spec.kind == "complete") return complete_graph(spec.n);
  throw ConfigError("unknown generator kind '" + spec.kind + "'");
}

}  // namespace nearadd
