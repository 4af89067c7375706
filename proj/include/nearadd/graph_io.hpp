#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "nearadd/graph.hpp"

namespace nearadd {

// Edge-list text format: a header line "n m", then m lines "u v" with 0-based
// ids, each undirected edge listed once.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Writes edges in the order given. Callers that need byte-identical files
/// pass sorted edges.
void write_edge_list(std::ostream& out, std::size_t num_vertices, std::span<const Edge> edges);
void write_edge_list(const std::filesystem::path& path, std::size_t num_vertices, std::span<const Edge> edges);

}  // namespace nearadd
