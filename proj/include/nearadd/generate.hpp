#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearadd/graph.hpp"
#include "nearadd/rational.hpp"

namespace nearadd {

/// Counter-based 64-bit mixer (SplitMix64 finalizer applied to x + golden
/// ratio). Pure function, identical on every platform.
std::uint64_t splitmix64(std::uint64_t x);

/// G(n, p): edge {u, v}, u < v, exists iff h * den < num * 2^64 where
/// h = splitmix64(splitmix64(seed) ^ (u * n + v)) and p = num / den.
Graph gnp(std::uint64_t n, const Rational& p, std::uint64_t seed);
Graph cycle_graph(std::uint64_t n);
Graph path_graph(std::uint64_t n);
Graph grid_graph(std::uint64_t rows, std::uint64_t cols);
/// Two K_k joined by a path of `bridge` edges between vertex k-1 and the
/// first vertex of the second clique; n = 2k + bridge - 1.
Graph barbell_graph(std::uint64_t clique, std::uint64_t bridge);
Graph complete_graph(std::uint64_t n);

struct GeneratorSpec {
  std::string kind;
  std::uint64_t n = 0;
  Rational p;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t clique = 0;
  std::uint64_t bridge = 0;
  std::uint64_t seed = 0;
};

/// Dispatches on kind in {gnp, cycle, path, grid, barbell, complete}; throws
/// ConfigError on an unknown kind or invalid parameters.
Graph generate(const GeneratorSpec& spec);

}  // namespace nearadd
