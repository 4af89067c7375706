#pragma once

#include <json.hpp>

#include "nearadd/schedule.hpp"
#include "nearadd/spanner.hpp"
#include "nearadd/verifier.hpp"

namespace nearadd {

/// Rationals are written as exact "p/q" strings, 64-bit hashes as hex.
nlohmann::json to_json(const PhaseSchedule& schedule);

/// Per-phase sizes, rounds and added edges. `verbose` adds W, RS, cluster
/// member lists and the forest parent map.
nlohmann::json to_json(const ExecutionTrace& trace, bool verbose = false);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace nearadd
