#pragma once

#include <string>

#include "nearadd/engine.hpp"
#include "nearadd/errors.hpp"
#include "nearadd/protocol.hpp"

namespace nearadd::detail {

inline constexpr std::uint8_t tag(Tag t) { return static_cast<std::uint8_t>(t); }

inline VertexId as_vertex(congest::Word w, std::size_t n) {
  if (w < 0 || static_cast<std::uint64_t>(w) >= n) {
    throw ProtocolError("message carries invalid vertex id " + std::to_string(w));
  }
  return static_cast<VertexId>(w);
}

/// Throws ProtocolError if the run was cut off.
inline void require_completed(const congest::EngineTrace& trace, const char* what) {
  if (!trace.completed) {
    throw ProtocolError(std::string(what) + " did not terminate within its round limit");
  }
}

using Hasher = congest::detail::ReplayHasher;

inline constexpr VertexId kNoVertexId = congest::detail::kNoVertex;

}  // namespace nearadd::detail
