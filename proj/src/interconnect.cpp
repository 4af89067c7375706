#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nearadd/errors.hpp"
#include "nearadd/protocol.hpp"
#include "protocol_detail.hpp"

namespace nearadd {

namespace {

using congest::Delivery;
using congest::Message;
using congest::Outbox;

// Trace-back: a target center id travels from an unclustered center toward
// the target along the recorded predecessors, marking each edge it crosses.
// Each vertex forwards a given target at most once; up to two targets share a
// message on the same edge.
class TraceProgram {
 public:
  TraceProgram(VertexId id, const CenterKnowledge* knowledge, bool initiates, std::size_t n)
      : id_(id), knowledge_(knowledge), initiates_(initiates), n_(n) {}

  void step(Round r, std::span<const Delivery> inbox, Outbox& out) {
    if (r == 0 && initiates_) {
      for (const KnowledgeEntry& e : knowledge_->entries) handle(e.center);
    }
    for (const Delivery& d : inbox) {
      for (congest::Word w : d.message.payload()) handle(detail::as_vertex(w, n_));
    }
    for (auto it = queues_.begin(); it != queues_.end();) {
      std::deque<VertexId>& q = it->second;
      if (q.size() >= 2) {
        out.send(it->first, Message(detail::tag(Tag::trace), {q[0], q[1]}));
        q.pop_front();
        q.pop_front();
      } else {
        out.send(it->first, Message(detail::tag(Tag::trace), {q[0]}));
        q.pop_front();
      }
      it = q.empty() ? queues_.erase(it) : std::next(it);
    }
  }

  Round next_wake(Round r) const {
    if (r == 0 && initiates_) return 0;
    return queues_.empty() ? congest::kQuiescent : r;
  }

  std::uint64_t digest() const {
    detail::Hasher h;
    h.mix(id_);
    for (VertexId t : forwarded_) h.mix(t);
    for (VertexId p : marked_) h.mix(p);
    return h.value();
  }

  const std::set<VertexId>& marked() const { return marked_; }

 private:
  void handle(VertexId target) {
    if (target == id_ || forwarded_.count(target) > 0) return;
    const KnowledgeEntry* entry = knowledge_->find(target);
    if (!entry) {
      throw ProtocolError("vertex " + std::to_string(id_) + " has no predecessor toward center " +
                          std::to_string(target));
    }
    forwarded_.insert(target);
    queues_[entry->predecessor].push_back(target);
    marked_.insert(entry->predecessor);
  }

  VertexId id_;
  const CenterKnowledge* knowledge_;
  bool initiates_;
  std::size_t n_;
  std::set<VertexId> forwarded_;
  std::set<VertexId> marked_;
  std::map<VertexId, std::deque<VertexId>> queues_;
};

}  // namespace

InterconnectResult interconnect(const Graph& graph, const ClusterCollection& collection,
                                std::span<const Cluster> unclustered, std::span<const CenterKnowledge> knowledge,
                                const Rational& delta, std::uint64_t deg, const congest::EngineOptions& options) {
  const std::size_t n = graph.num_vertices();
  if (knowledge.size() != n) throw InputError("knowledge must hold one entry per vertex");
  std::vector<bool> initiates(n, false);
  for (const Cluster& c : unclustered) {
    if (c.center >= n || !collection.find(c.center)) {
      throw InputError("unclustered center " + std::to_string(c.center) + " is not in the collection");
    }
    initiates[c.center] = true;
  }

  InterconnectResult result;
  // Generous cap; the expected cost is at most deg * (floor(delta) + 1).
  const Round cap = 4 * (deg + 1) * (floor_u64(delta) + 2) + static_cast<Round>(n);
  auto run = congest::run<TraceProgram>(
      graph,
      [&](const congest::LocalView& view) {
        return TraceProgram(view.id, &knowledge[view.id], initiates[view.id], n);
      },
      cap, options);
  detail::require_completed(run.trace, "interconnection");
  result.rounds = run.trace.rounds_executed;
  result.stats.absorb(run.trace);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId p : run.states[v].marked()) result.edges.push_back(make_edge(v, p));
  }
  std::sort(result.edges.begin(), result.edges.end());
  result.edges.erase(std::unique(result.edges.begin(), result.edges.end()), result.edges.end());
  return result;
}

}  // namespace nearadd
