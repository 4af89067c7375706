#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nearadd/errors.hpp"
#include "nearadd/protocol.hpp"
#include "protocol_detail.hpp"

namespace nearadd {

namespace {

using congest::Delivery;
using congest::Message;
using congest::Outbox;

struct PopularityParams {
  std::uint64_t deg = 1;
  std::uint64_t depth = 0;
  Round end = 0;
  std::size_t n = 0;
};

// Centers announce themselves in round 0. Afterwards macro-phase L (deg
// rounds starting at 1 + (L-1) deg) forwards the centers first retained at
// distance L, two per message. A vertex keeps at most deg + 1 entries.
class PopularityProgram {
 public:
  PopularityProgram(VertexId id, bool center, const PopularityParams& params)
      : id_(id), center_(center), params_(params) {
    if (center_) {
      entries_.push_back({id_, 0, id_});
      layers_.emplace_back(0, 1);
    }
  }

  void step(Round r, std::span<const Delivery> inbox, Outbox& out) {
    if (!inbox.empty()) absorb(r, inbox);
    if (r == 0) {
      if (center_ && params_.depth >= 1) out.broadcast(Message(detail::tag(Tag::announce), {id_}));
      return;
    }
    const std::uint64_t layer = (r - 1) / params_.deg + 1;
    const std::uint64_t slot = (r - 1) % params_.deg;
    if (layer >= params_.depth) return;
    if (frontier_layer_ != layer) {
      frontier_layer_ = layer;
      frontier_.clear();
      for (const KnowledgeEntry& e : entries_) {
        if (e.distance == layer) frontier_.push_back(e.center);
      }
      std::sort(frontier_.begin(), frontier_.end());
    }
    const std::size_t first = 2 * slot;
    if (first >= frontier_.size()) return;
    if (first + 1 < frontier_.size()) {
      out.broadcast(Message(detail::tag(Tag::announce), {frontier_[first], frontier_[first + 1]}));
    } else {
      out.broadcast(Message(detail::tag(Tag::announce), {frontier_[first]}));
    }
  }

  Round next_wake(Round r) const {
    if (r == 0 && center_ && params_.depth >= 1) return 0;
    for (const auto& [layer, count] : layers_) {
      if (layer == 0 || layer >= params_.depth) continue;
      const Round start = 1 + (layer - 1) * params_.deg;
      const Round last = start + (count + 1) / 2 - 1;
      if (last >= r) return std::max(start, r);
    }
    return r <= params_.end ? params_.end : congest::kQuiescent;
  }

  std::uint64_t digest() const {
    detail::Hasher h;
    h.mix(id_);
    for (const KnowledgeEntry& e : entries_) {
      h.mix(e.center);
      h.mix(e.distance);
      h.mix(e.predecessor);
    }
    return h.value();
  }

  bool popular() const { return center_ && entries_.size() - 1 >= params_.deg; }

  CenterKnowledge knowledge() const {
    CenterKnowledge k{entries_};
    std::sort(k.entries.begin(), k.entries.end(), [](const KnowledgeEntry& a, const KnowledgeEntry& b) {
      return std::pair(a.distance, a.center) < std::pair(b.distance, b.center);
    });
    return k;
  }

 private:
  void absorb(Round r, std::span<const Delivery> inbox) {
    const auto distance = static_cast<Distance>(r == 1 ? 1 : (r - 2) / params_.deg + 2);
    heard_.clear();
    for (const Delivery& d : inbox) {
      for (congest::Word w : d.message.payload()) heard_.emplace_back(detail::as_vertex(w, params_.n), d.from);
    }
    std::sort(heard_.begin(), heard_.end());
    const std::size_t capacity = params_.deg + 1;
    for (std::size_t k = 0; k < heard_.size() && entries_.size() < capacity; ++k) {
      const auto [center, from] = heard_[k];
      if (k > 0 && heard_[k - 1].first == center) continue;
      if (center == id_) continue;
      if (std::any_of(entries_.begin(), entries_.end(), [&](const KnowledgeEntry& e) { return e.center == center; })) {
        continue;
      }
      entries_.push_back({center, distance, from});
      if (layers_.empty() || layers_.back().first != distance) layers_.emplace_back(distance, 0);
      ++layers_.back().second;
    }
  }

  VertexId id_;
  bool center_;
  PopularityParams params_;
  std::vector<KnowledgeEntry> entries_;
  // (distance, number of retained entries), ascending distance.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> layers_;
  std::uint64_t frontier_layer_ = 0;
  std::vector<VertexId> frontier_;
  std::vector<std::pair<VertexId, VertexId>> heard_;
};

}  // namespace

Round popularity_rounds(std::uint64_t deg, const Rational& delta) { return 1 + floor_u64(delta) * deg; }

PopularityResult detect_popular(const Graph& graph, const ClusterCollection& collection, std::uint64_t deg,
                                const Rational& delta, const congest::EngineOptions& options) {
  if (deg == 0) throw ConfigError("popularity threshold deg must be positive");
  if (delta < 0) throw ConfigError("popularity distance delta must be nonnegative");
  const std::size_t n = graph.num_vertices();
  collection.validate(n);

  PopularityParams params;
  params.deg = deg;
  params.depth = floor_u64(delta);
  params.end = popularity_rounds(deg, delta);
  params.n = n;

  std::vector<bool> is_center(n, false);
  for (const Cluster& c : collection.clusters) is_center[c.center] = true;

  auto run = congest::run<PopularityProgram>(
      graph, [&](const congest::LocalView& view) { return PopularityProgram(view.id, is_center[view.id], params); },
      params.end, options);
  detail::require_completed(run.trace, "popularity detection");
  if (n > 0 && run.trace.rounds_executed != params.end) {
    throw ProtocolError("popularity detection took " + std::to_string(run.trace.rounds_executed) +
                        " rounds instead of " + std::to_string(params.end));
  }

  PopularityResult result;
  result.rounds = run.trace.rounds_executed;
  result.stats.absorb(run.trace);
  result.knowledge.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (run.states[v].popular()) result.popular.push_back(v);
    result.knowledge.push_back(run.states[v].knowledge());
  }
  return result;
}

}  // namespace nearadd
