#include "nearadd/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nearadd/errors.hpp"

namespace nearadd {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw InputError("edge list: missing 'n m' header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw InputError("edge list line " + std::to_string(line_no) + ": expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_data_line(in, line, line_no)) {
      throw InputError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw InputError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u >= n || v >= n) {
      throw InputError("edge list line " + std::to_string(line_no) + ": vertex id out of range");
    }
    edges.push_back(make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)));
  }
  if (next_data_line(in, line, line_no)) {
    throw InputError("edge list line " + std::to_string(line_no) + ": trailing data after " +
                     std::to_string(m) + " edges");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, std::size_t num_vertices, std::span<const Edge> edges) {
  out << num_vertices << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, std::size_t num_vertices, std::span<const Edge> edges) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_edge_list(out, num_vertices, edges);
}

}  // namespace nearadd
