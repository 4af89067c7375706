#include <algorithm>

#include "nearadd/protocol.hpp"

namespace nearadd {

void EngineStats::absorb(const congest::EngineTrace& trace) {
  messages += trace.total_messages;
  max_words = std::max(max_words, trace.max_words);
  violations += trace.violations.size();
  replay_hash = replay_hash * 0x100000001b3ULL ^ trace.replay_hash;
}

void EngineStats::absorb_stats(const EngineStats& other) {
  messages += other.messages;
  max_words = std::max(max_words, other.max_words);
  violations += other.violations;
  replay_hash = replay_hash * 0x100000001b3ULL ^ other.replay_hash;
}

std::vector<VertexMemory> fresh_memory(std::size_t num_vertices, const ClusterCollection& collection) {
  std::vector<VertexMemory> memory(num_vertices);
  for (const Cluster& c : collection.clusters) {
    memory[c.center].is_center = true;
    for (VertexId m : c.members) memory[m].cluster_center = c.center;
  }
  return memory;
}

}  // namespace nearadd
