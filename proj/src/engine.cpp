#include "nearadd/engine.hpp"

#include <ostream>

namespace nearadd::congest {

Message::Message(std::uint8_t tag, std::initializer_list<Word> payload) : tag_(tag) {
  if (payload.size() > kMaxPayload) {
    throw ProtocolError("message payload of " + std::to_string(payload.size()) + " words cannot be represented");
  }
  std::copy(payload.begin(), payload.end(), payload_.begin());
  size_ = static_cast<std::uint8_t>(payload.size());
}

void write_trace_log(std::ostream& out, const EngineTrace& trace, bool include_messages) {
  for (const TrafficSample& sample : trace.traffic) {
    out << "round " << sample.round << ": msgs " << sample.messages << '\n';
  }
  out << "rounds executed: " << trace.rounds_executed << (trace.completed ? "" : " (budget exhausted)") << '\n';
  if (!include_messages) return;
  for (const MessageRecord& rec : trace.message_log) {
    out << "  r" << rec.round << ' ' << rec.from << " -> " << rec.to << " tag=" << int(rec.message.tag());
    for (Word w : rec.message.payload()) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace nearadd::congest
