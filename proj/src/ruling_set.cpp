#include <algorithm>
#include <optional>
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

struct RulingParams {
  std::uint64_t c = 1;
  std::uint64_t base = 1;
  std::uint64_t q = 1;
  Round end = 0;
  std::size_t n = 0;
};

// Ids are read as c digits in base b, most significant first. Slot
// s = p*b + (b-1-d) lasts q rounds; at its start every active candidate whose
// digit p equals d floods its id to distance q. An active candidate reached in
// that slot with a smaller digit p drops out.
class RulingProgram {
 public:
  RulingProgram(VertexId id, bool candidate, const RulingParams& params)
      : id_(id), candidate_(candidate), active_(candidate), params_(params), digits_(params.c) {
    std::uint64_t rest = id;
    for (std::uint64_t p = params.c; p-- > 0;) {
      digits_[p] = rest % params.base;
      rest /= params.base;
    }
  }

  void step(Round r, std::span<const Delivery> inbox, Outbox& out) {
    const std::uint64_t q = params_.q;
    if (!inbox.empty()) {
      const std::uint64_t slot = (r - 1) / q;
      const std::uint64_t hop = r - slot * q;
      if (reached_ != static_cast<std::int64_t>(slot)) {
        reached_ = static_cast<std::int64_t>(slot);
        VertexId source = detail::as_vertex(inbox.front().message[0], params_.n);
        for (const Delivery& d : inbox) source = std::min(source, detail::as_vertex(d.message[0], params_.n));
        if (active_ && digit_of(slot) < value_of(slot)) {
          active_ = false;
          eliminator_ = source;
        }
        if (hop < q) out.broadcast(Message(detail::tag(Tag::dominate), {source}));
      }
    }
    if (r < params_.end && r % q == 0) {
      const std::uint64_t slot = r / q;
      if (active_ && digit_of(slot) == value_of(slot)) {
        reached_ = static_cast<std::int64_t>(slot);
        out.broadcast(Message(detail::tag(Tag::dominate), {id_}));
      }
    }
  }

  Round next_wake(Round r) const {
    if (active_) {
      for (std::uint64_t p = 0; p < params_.c; ++p) {
        const Round start = (p * params_.base + (params_.base - 1 - digits_[p])) * params_.q;
        if (start >= r) return start;
      }
    }
    return r <= params_.end ? params_.end : congest::kQuiescent;
  }

  std::uint64_t digest() const {
    detail::Hasher h;
    h.mix(id_);
    h.mix(active_);
    h.mix(eliminator_.value_or(detail::kNoVertexId));
    return h.value();
  }

  bool candidate() const { return candidate_; }
  bool active() const { return active_; }
  std::optional<VertexId> eliminator() const { return eliminator_; }

 private:
  std::uint64_t digit_of(std::uint64_t slot) const { return digits_[slot / params_.base]; }
  std::uint64_t value_of(std::uint64_t slot) const { return params_.base - 1 - slot % params_.base; }

  VertexId id_;
  bool candidate_;
  bool active_;
  RulingParams params_;
  std::vector<std::uint64_t> digits_;
  std::int64_t reached_ = -1;
  std::optional<VertexId> eliminator_;
};

}  // namespace

RulingSetResult ruling_set(const Graph& graph, std::span<const VertexId> candidates, std::uint64_t q, int c,
                           const congest::EngineOptions& options) {
  if (c < 1) throw ConfigError("ruling set needs c >= 1");
  const std::size_t n = graph.num_vertices();
  std::vector<bool> is_candidate(n, false);
  for (VertexId v : candidates) {
    if (v >= n) throw InputError("ruling set candidate " + std::to_string(v) + " out of range");
    is_candidate[v] = true;
  }

  RulingSetResult result;
  result.base = n < 2 ? 1 : to_u64(ceil_power(n, 1, static_cast<unsigned long>(c)));
  if (q == 0 || candidates.empty()) {
    for (VertexId v = 0; v < n; ++v) {
      if (is_candidate[v]) {
        result.ruling.push_back(v);
        result.dominators.emplace_back(v, v);
      }
    }
    return result;
  }

  RulingParams params;
  params.c = static_cast<std::uint64_t>(c);
  params.base = result.base;
  params.q = q;
  params.end = params.c * params.base * q;
  params.n = n;

  auto run = congest::run<RulingProgram>(
      graph, [&](const congest::LocalView& view) { return RulingProgram(view.id, is_candidate[view.id], params); },
      params.end, options);
  detail::require_completed(run.trace, "ruling set");
  result.rounds = run.trace.rounds_executed;
  result.stats.absorb(run.trace);

  for (VertexId v = 0; v < n; ++v) {
    if (!run.states[v].candidate()) continue;
    if (run.states[v].active()) result.ruling.push_back(v);
    VertexId top = v;
    while (!run.states[top].active()) {
      const auto next = run.states[top].eliminator();
      if (!next || !run.states[*next].candidate()) {
        throw ProtocolError("candidate " + std::to_string(top) + " eliminated without a valid dominator");
      }
      top = *next;
    }
    result.dominators.emplace_back(v, top);
  }
  return result;
}

}  // namespace nearadd
