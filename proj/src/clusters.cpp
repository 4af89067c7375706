#include "nearadd/clusters.hpp"

#include <algorithm>
#include <string>

#include "nearadd/errors.hpp"

namespace nearadd {

ClusterCollection ClusterCollection::singletons(std::size_t num_vertices) {
  ClusterCollection out;
  out.clusters.reserve(num_vertices);
  for (VertexId v = 0; v < num_vertices; ++v) out.clusters.push_back({v, {v}});
  return out;
}

std::vector<VertexId> ClusterCollection::centers() const {
  std::vector<VertexId> out;
  out.reserve(clusters.size());
  for (const Cluster& c : clusters) out.push_back(c.center);
  return out;
}

const Cluster* ClusterCollection::find(VertexId center) const {
  auto it = std::lower_bound(clusters.begin(), clusters.end(), center,
                             [](const Cluster& c, VertexId id) { return c.center < id; });
  return it != clusters.end() && it->center == center ? &*it : nullptr;
}

std::vector<std::optional<VertexId>> ClusterCollection::owner_map(std::size_t num_vertices) const {
  std::vector<std::optional<VertexId>> owner(num_vertices);
  for (const Cluster& c : clusters) {
    for (VertexId m : c.members) owner[m] = c.center;
  }
  return owner;
}

void ClusterCollection::validate(std::size_t num_vertices) const {
  std::vector<bool> seen(num_vertices, false);
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const Cluster& c = clusters[k];
    if (k > 0 && clusters[k - 1].center >= c.center) {
      throw InputError("cluster centers must be unique and sorted");
    }
    if (!std::binary_search(c.members.begin(), c.members.end(), c.center)) {
      throw InputError("cluster " + std::to_string(c.center) + " does not contain its center");
    }
    for (VertexId m : c.members) {
      if (m >= num_vertices) throw InputError("cluster member " + std::to_string(m) + " out of range");
      if (seen[m]) throw InputError("vertex " + std::to_string(m) + " belongs to two clusters");
      seen[m] = true;
    }
  }
}

const KnowledgeEntry* CenterKnowledge::find(VertexId center) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const KnowledgeEntry& e) { return e.center == center; });
  return it == entries.end() ? nullptr : &*it;
}

}  // namespace nearadd
