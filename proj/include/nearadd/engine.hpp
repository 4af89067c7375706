#pragma once

// Round-synchronous CONGEST simulator.
//
// Every vertex runs an isolated program. In round r each due vertex consumes
// the messages sent to it in round r-1 and emits at most one message per
// incident edge. A message is a tag plus a short payload; tag and payload
// words together must fit the word budget (3 by default). Violations abort
// the run with BandwidthError.
//
// Rounds in which no message is in flight are skipped in O(1) per vertex via
// VertexProgram::next_wake, so long idle tails of fixed-length schedules cost
// nothing, yet are still counted in rounds_executed.

#include <algorithm>
#include <array>
#include <concepts>
#include <exception>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nearadd/errors.hpp"
#include "nearadd/graph.hpp"

namespace nearadd::congest {

using Round = std::uint64_t;
using Word = std::int64_t;

/// next_wake() value of a vertex that only reacts to incoming messages.
inline constexpr Round kQuiescent = std::numeric_limits<Round>::max();
inline constexpr std::size_t kDefaultWordBudget = 3;

class Message {
 public:
  static constexpr std::size_t kMaxPayload = 7;

  Message() = default;
  Message(std::uint8_t tag, std::initializer_list<Word> payload);

  std::uint8_t tag() const { return tag_; }
  std::span<const Word> payload() const { return {payload_.data(), size_}; }
  Word operator[](std::size_t i) const { return payload_[i]; }
  std::size_t size() const { return size_; }
  /// Tag plus payload.
  std::size_t words() const { return 1 + size_; }

  friend bool operator==(const Message& a, const Message& b) {
    return a.tag_ == b.tag_ && std::ranges::equal(a.payload(), b.payload());
  }

 private:
  std::uint8_t tag_ = 0;
  std::uint8_t size_ = 0;
  std::array<Word, kMaxPayload> payload_{};
};

struct Delivery {
  VertexId from = 0;
  Message message;
};

/// What a vertex is allowed to see about the network at start-up.
struct LocalView {
  VertexId id = 0;
  std::size_t n = 0;
  std::span<const VertexId> neighbors;
};

class Outbox {
 public:
  Outbox() = default;
  explicit Outbox(std::span<const VertexId> neighbors) : neighbors_(neighbors) {}

  void send(VertexId to, const Message& message) { sends_.emplace_back(to, message); }
  void broadcast(const Message& message) {
    for (VertexId to : neighbors_) sends_.emplace_back(to, message);
  }

  std::span<const std::pair<VertexId, Message>> sends() const { return sends_; }
  bool empty() const { return sends_.empty(); }
  void clear() { sends_.clear(); }

 private:
  std::span<const VertexId> neighbors_;
  std::vector<std::pair<VertexId, Message>> sends_;
};

/// Behavioral contract for per-vertex programs.
///  - step(r, inbox, out): inbox holds round r-1 messages sorted by sender.
///  - next_wake(r): earliest round >= r at which the vertex must run even with
///    an empty inbox, or kQuiescent. A vertex is never stepped with an empty
///    inbox before that round, so step() must be a no-op in that case anyway.
///  - digest(): hash of the local state, used for replay comparison.
template <class P>
concept VertexProgram = requires(P& p, const P& cp, Round r, std::span<const Delivery> inbox, Outbox& out) {
  p.step(r, inbox, out);
  { cp.next_wake(r) } -> std::convertible_to<Round>;
  { cp.digest() } -> std::convertible_to<std::uint64_t>;
};

struct TrafficSample {
  Round round = 0;
  std::uint64_t messages = 0;
};

struct BandwidthViolation {
  Round round = 0;
  VertexId from = 0;
  VertexId to = 0;
  std::string reason;
};

struct MessageRecord {
  Round round = 0;
  VertexId from = 0;
  VertexId to = 0;
  Message message;
};

struct EngineTrace {
  Round rounds_executed = 0;
  /// Rounds with nonzero traffic only, ascending.
  std::vector<TrafficSample> traffic;
  std::vector<BandwidthViolation> violations;
  std::uint64_t total_messages = 0;
  std::size_t max_words = 0;
  /// False when max_rounds cut the run short.
  bool completed = true;
  std::uint64_t replay_hash = 0;
  /// Populated only with EngineOptions::log_messages.
  std::vector<MessageRecord> message_log;
};

struct EngineOptions {
  std::size_t word_budget = kDefaultWordBudget;
  /// Worker threads evaluating step() within a round. Results are identical
  /// for every worker count.
  unsigned workers = 1;
  /// Re-run with a different worker count and compare replay hashes.
  bool verify_replay = false;
  bool log_messages = false;
};

template <class P>
struct RunResult {
  EngineTrace trace;
  std::vector<P> states;
};

/// "round r: msgs k" per round with traffic, plus the message log if present.
void write_trace_log(std::ostream& out, const EngineTrace& trace, bool include_messages = false);

namespace detail {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

class ReplayHasher {
 public:
  void mix(std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (value >> (8 * i)) & 0xffU;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void mix_message(Round round, VertexId from, VertexId to, const Message& m) {
    mix(round);
    mix(from);
    mix(to);
    mix(m.tag());
    mix(m.size());
    for (Word w : m.payload()) mix(static_cast<std::uint64_t>(w));
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

/// Runs fn(begin, end) over [0, count) split across `workers` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count < 2 * workers) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(count, w * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      if (begin == end) break;
      pool.emplace_back([&fn, &errors, w, begin, end] {
        try {
          fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  // The lowest chunk wins, matching what a single worker would have thrown.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <VertexProgram P, class Factory>
RunResult<P> run_once(const Graph& graph, Factory& make, Round max_rounds, const EngineOptions& options) {
  const std::size_t n = graph.num_vertices();
  RunResult<P> result;
  EngineTrace& trace = result.trace;
  result.states.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    result.states.push_back(make(LocalView{v, n, graph.neighbors(v)}));
  }
  std::vector<P>& states = result.states;

  std::vector<std::vector<Delivery>> inbox(n);
  std::vector<std::vector<Delivery>> next_inbox(n);
  std::vector<Outbox> outbox;
  outbox.reserve(n);
  for (VertexId v = 0; v < n; ++v) outbox.emplace_back(graph.neighbors(v));
  std::vector<VertexId> due;
  std::vector<VertexId> last_sender(n, kNoVertex);
  std::vector<VertexId> touched;
  ReplayHasher hasher;

  bool pending = false;
  Round round = 0;
  Round search_from = 0;
  Round last_step = 0;

  for (;;) {
    if (!pending) {
      Round wake = kQuiescent;
      for (const P& s : states) wake = std::min<Round>(wake, std::max<Round>(s.next_wake(search_from), search_from));
      if (wake == kQuiescent) break;
      if (wake > max_rounds) {
        last_step = max_rounds;
        trace.completed = false;
        break;
      }
      round = wake;
    }

    due.clear();
    bool woken = false;
    for (VertexId v = 0; v < n; ++v) {
      const bool wake_due = states[v].next_wake(round) <= round;
      woken = woken || wake_due;
      if (!inbox[v].empty() || wake_due) due.push_back(v);
    }
    parallel_for(due.size(), options.workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const VertexId v = due[k];
        outbox[v].clear();
        states[v].step(round, std::span<const Delivery>(inbox[v]), outbox[v]);
      }
    });

    std::uint64_t sent = 0;
    touched.clear();
    for (VertexId v : due) {
      inbox[v].clear();
      for (const auto& [to, message] : outbox[v].sends()) {
        std::string reason;
        if (!graph.has_edge(v, to)) {
          reason = "destination is not a neighbor";
        } else if (message.words() > options.word_budget) {
          reason = "message of " + std::to_string(message.words()) + " words exceeds budget of " +
                   std::to_string(options.word_budget);
        } else if (last_sender[to] == v) {
          reason = "second message on the same edge direction in one round";
        }
        if (!reason.empty()) {
          trace.violations.push_back({round, v, to, reason});
          trace.rounds_executed = round;
          throw BandwidthError("round " + std::to_string(round) + ", " + std::to_string(v) + " -> " +
                               std::to_string(to) + ": " + reason);
        }
        last_sender[to] = v;
        touched.push_back(to);
        next_inbox[to].push_back({v, message});
        hasher.mix_message(round, v, to, message);
        trace.max_words = std::max(trace.max_words, message.words());
        if (options.log_messages) trace.message_log.push_back({round, v, to, message});
        ++sent;
      }
      outbox[v].clear();
    }
    for (VertexId to : touched) last_sender[to] = kNoVertex;
    // A step that only absorbs the last deliveries, without a scheduled wake
    // or any output, is local computation and is not counted as a round.
    if (sent > 0 || woken) last_step = round;

    if (sent == 0) {
      pending = false;
      search_from = round + 1;
      continue;
    }
    trace.traffic.push_back({round, sent});
    trace.total_messages += sent;
    if (round >= max_rounds) {
      trace.completed = false;
      last_step = max_rounds;
      break;
    }
    inbox.swap(next_inbox);
    pending = true;
    ++round;
  }

  trace.rounds_executed = last_step;
  for (const P& s : states) hasher.mix(s.digest());
  hasher.mix(trace.rounds_executed);
  trace.replay_hash = hasher.value();
  return result;
}

}  // namespace detail

/// Executes `make`'s program at every vertex until every vertex is quiescent
/// with nothing in flight, or until max_rounds. `make(LocalView)` returns the
/// initial program state of one vertex; schedule constants reach the vertices
/// through whatever the factory captures.
template <VertexProgram P, class Factory>
RunResult<P> run(const Graph& graph, Factory&& make, Round max_rounds, const EngineOptions& options = {}) {
  RunResult<P> result = detail::run_once<P>(graph, make, max_rounds, options);
  if (options.verify_replay) {
    EngineOptions replay = options;
    replay.workers = options.workers > 1 ? 1 : 4;
    replay.log_messages = false;
    const RunResult<P> again = detail::run_once<P>(graph, make, max_rounds, replay);
    if (again.trace.replay_hash != result.trace.replay_hash) {
      throw DeterminismError("replay hash mismatch: " + std::to_string(result.trace.replay_hash) + " vs " +
                             std::to_string(again.trace.replay_hash));
    }
  }
  return result;
}

}  // namespace nearadd::congest
