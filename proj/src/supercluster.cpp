#include <algorithm>
#include <deque>
#include <map>
#include <set>
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

// BFS forest rooted at the ruling set, depth-limited. A vertex joins the
// smallest root id heard in its first arrival round, via the smallest sender.
class ForestProgram {
 public:
  ForestProgram(VertexId id, bool root, std::uint64_t depth, std::size_t n)
      : id_(id), is_root_(root), depth_(depth), n_(n) {}

  void step(Round r, std::span<const Delivery> inbox, Outbox& out) {
    if (r == 0 && is_root_) {
      node_.root = id_;
      node_.parent = id_;
      node_.hop = 0;
      if (depth_ >= 1) out.broadcast(Message(detail::tag(Tag::forest), {id_}));
      return;
    }
    if (inbox.empty() || node_.root) return;
    VertexId best = detail::as_vertex(inbox.front().message[0], n_);
    VertexId parent = inbox.front().from;
    for (const Delivery& d : inbox) {
      const VertexId root = detail::as_vertex(d.message[0], n_);
      if (root < best) {
        best = root;
        parent = d.from;
      }
    }
    node_.root = best;
    node_.parent = parent;
    node_.hop = static_cast<Distance>(r);
    if (r < depth_) out.broadcast(Message(detail::tag(Tag::forest), {best}));
  }

  Round next_wake(Round r) const {
    if (r == 0 && is_root_) return 0;
    return r <= depth_ ? depth_ : congest::kQuiescent;
  }

  std::uint64_t digest() const {
    detail::Hasher h;
    h.mix(id_);
    h.mix(node_.root.value_or(detail::kNoVertexId));
    h.mix(node_.parent);
    h.mix(node_.hop);
    return h.value();
  }

  const ForestNode& node() const { return node_; }

 private:
  VertexId id_;
  bool is_root_;
  std::uint64_t depth_;
  std::size_t n_;
  ForestNode node_;
};

// Spanned non-root centers send ACK toward their root. The first ACK a vertex
// receives or originates is propagated once; each ACK sender becomes a tree
// child of the receiver.
class AckProgram {
 public:
  AckProgram(VertexId id, const ForestNode& node, bool initiates, std::uint64_t depth)
      : id_(id), node_(node), initiates_(initiates), depth_(depth) {}

  void step(Round r, std::span<const Delivery> inbox, Outbox& out) {
    for (const Delivery& d : inbox) children_.push_back(d.from);
    const bool is_root = node_.root && *node_.root == id_;
    if (!acked_ && !is_root && ((r == 0 && initiates_) || !inbox.empty())) {
      acked_ = true;
      out.send(node_.parent, Message(detail::tag(Tag::ack), {}));
    }
  }

  Round next_wake(Round r) const {
    if (r == 0 && initiates_) return 0;
    return r <= depth_ ? depth_ : congest::kQuiescent;
  }

  std::uint64_t digest() const {
    detail::Hasher h;
    h.mix(id_);
    h.mix(acked_);
    for (VertexId c : children_) h.mix(c);
    return h.value();
  }

  bool acked() const { return acked_; }
  const std::vector<VertexId>& children() const { return children_; }

 private:
  VertexId id_;
  ForestNode node_;
  bool initiates_;
  std::uint64_t depth_;
  bool acked_ = false;
  std::vector<VertexId> children_;
};

// Absorbed centers push <old, new> down their cluster trees. Every vertex
// re-keys its tree children and, if it belonged to `old`, its own cluster.
class MembershipProgram {
 public:
  MembershipProgram(VertexId id, VertexMemory memory, std::optional<VertexId> absorbed_into, std::size_t n)
      : id_(id), memory_(std::move(memory)), absorbed_into_(absorbed_into), n_(n) {}

  void step(Round r, std::span<const Delivery> inbox, Outbox& out) {
    if (r == 0 && absorbed_into_) rekey(id_, *absorbed_into_);
    for (const Delivery& d : inbox) {
      rekey(detail::as_vertex(d.message[0], n_), detail::as_vertex(d.message[1], n_));
    }
    for (auto it = queues_.begin(); it != queues_.end();) {
      const auto [old_center, new_center] = it->second.front();
      out.send(it->first, Message(detail::tag(Tag::rekey), {old_center, new_center}));
      it->second.pop_front();
      it = it->second.empty() ? queues_.erase(it) : std::next(it);
    }
  }

  Round next_wake(Round r) const {
    if (r == 0 && absorbed_into_) return 0;
    return queues_.empty() ? congest::kQuiescent : r;
  }

  std::uint64_t digest() const {
    detail::Hasher h;
    h.mix(id_);
    h.mix(memory_.cluster_center.value_or(detail::kNoVertexId));
    for (const auto& [key, children] : memory_.tree_children) {
      h.mix(key);
      for (VertexId c : children) h.mix(c);
    }
    return h.value();
  }

  VertexMemory take_memory() { return std::move(memory_); }

 private:
  void rekey(VertexId old_center, VertexId new_center) {
    if (!done_.insert(old_center).second) return;
    if (memory_.cluster_center == old_center) memory_.cluster_center = new_center;
    auto it = memory_.tree_children.find(old_center);
    if (it == memory_.tree_children.end()) return;
    std::vector<VertexId> children = std::move(it->second);
    memory_.tree_children.erase(it);
    for (VertexId child : children) queues_[child].emplace_back(old_center, new_center);
    std::vector<VertexId>& merged = memory_.tree_children[new_center];
    merged.insert(merged.end(), children.begin(), children.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  }

  VertexId id_;
  VertexMemory memory_;
  std::optional<VertexId> absorbed_into_;
  std::size_t n_;
  std::set<VertexId> done_;
  std::map<VertexId, std::deque<std::pair<VertexId, VertexId>>> queues_;
};

}  // namespace

std::uint64_t forest_depth(const Rational& delta, const Rational& rho) {
  if (rho <= 0) throw ConfigError("rho must be positive");
  return ceil_u64(Rational(2) * delta / rho);
}

SuperclusterResult supercluster(const Graph& graph, const ClusterCollection& collection,
                                std::span<const VertexId> popular, std::span<const VertexId> ruling,
                                const Rational& delta, const Rational& rho, std::vector<VertexMemory>* memory,
                                const congest::EngineOptions& options) {
  const std::size_t n = graph.num_vertices();
  collection.validate(n);
  std::vector<bool> is_popular(n, false);
  for (VertexId v : popular) {
    if (v >= n || !collection.find(v)) {
      throw InputError("popular vertex " + std::to_string(v) + " is not a cluster center");
    }
    is_popular[v] = true;
  }
  std::vector<bool> is_root(n, false);
  for (VertexId v : ruling) {
    if (v >= n || !is_popular[v]) throw InputError("ruling vertex " + std::to_string(v) + " is not popular");
    is_root[v] = true;
  }

  std::vector<VertexMemory> local;
  if (!memory) {
    local = fresh_memory(n, collection);
    memory = &local;
  }
  if (memory->size() != n) throw InputError("vertex memory size does not match the graph");

  SuperclusterResult result;
  result.depth = forest_depth(delta, rho);
  result.clusters.phase = collection.phase + 1;
  const std::uint64_t depth = result.depth;

  auto forest = congest::run<ForestProgram>(
      graph, [&](const congest::LocalView& view) { return ForestProgram(view.id, is_root[view.id], depth, n); },
      depth, options);
  detail::require_completed(forest.trace, "superclustering forest");
  result.forest_rounds = forest.trace.rounds_executed;
  result.stats.absorb(forest.trace);
  result.forest.reserve(n);
  for (const auto& s : forest.states) result.forest.push_back(s.node());

  std::vector<bool> initiates(n, false);
  for (const Cluster& c : collection.clusters) {
    const ForestNode& node = result.forest[c.center];
    initiates[c.center] = node.root.has_value() && *node.root != c.center;
  }
  auto acks = congest::run<AckProgram>(
      graph,
      [&](const congest::LocalView& view) {
        return AckProgram(view.id, result.forest[view.id], initiates[view.id], depth);
      },
      depth, options);
  detail::require_completed(acks.trace, "superclustering path marking");
  result.marking_rounds = acks.trace.rounds_executed;
  result.stats.absorb(acks.trace);

  for (VertexId v = 0; v < n; ++v) {
    const auto& state = acks.states[v];
    if (state.acked()) result.edges.push_back(make_edge(v, result.forest[v].parent));
    if (!state.children().empty()) {
      std::vector<VertexId>& children = (*memory)[v].tree_children[*result.forest[v].root];
      children.insert(children.end(), state.children().begin(), state.children().end());
      std::sort(children.begin(), children.end());
      children.erase(std::unique(children.begin(), children.end()), children.end());
    }
  }
  std::sort(result.edges.begin(), result.edges.end());

  const Round membership_cap = (static_cast<Round>(n) + 1) * (static_cast<Round>(n) + 1);
  auto membership = congest::run<MembershipProgram>(
      graph,
      [&](const congest::LocalView& view) {
        std::optional<VertexId> target;
        if (initiates[view.id]) target = result.forest[view.id].root;
        return MembershipProgram(view.id, (*memory)[view.id], target, n);
      },
      membership_cap, options);
  detail::require_completed(membership.trace, "membership update");
  result.membership_rounds = membership.trace.rounds_executed;
  result.stats.absorb(membership.trace);
  for (VertexId v = 0; v < n; ++v) (*memory)[v] = membership.states[v].take_memory();

  std::map<VertexId, std::vector<VertexId>> merged;
  for (VertexId r : ruling) merged[r];
  for (const Cluster& c : collection.clusters) {
    const ForestNode& node = result.forest[c.center];
    if (!node.root) {
      result.unclustered.push_back(c);
      (*memory)[c.center].is_center = false;
      continue;
    }
    std::vector<VertexId>& members = merged[*node.root];
    members.insert(members.end(), c.members.begin(), c.members.end());
    if (*node.root != c.center) (*memory)[c.center].is_center = false;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (is_popular[v] && !result.forest[v].root) {
      throw ProtocolError("popular center " + std::to_string(v) + " was not reached by the forest");
    }
  }
  for (auto& [root, members] : merged) {
    std::sort(members.begin(), members.end());
    if (!collection.find(root)) throw ProtocolError("forest root " + std::to_string(root) + " is not a center");
    result.clusters.clusters.push_back({root, std::move(members)});
  }
  return result;
}

}  // namespace nearadd
