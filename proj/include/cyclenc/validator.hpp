#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclenc/engine.hpp"
#include "cyclenc/trace.hpp"

namespace cyclenc {

enum class ViolationKind {
    CollisionDelivered,
    HalfDuplexReceive,
    NonDerivablePacket,
    PhantomReception,
    OutcomeMismatch,
    ObjectiveUnmet,
    MetricMismatch,
};
std::string_view violation_name(ViolationKind k);  // "COLLISION_DELIVERED", ...

struct Violation {
    int slot = 0;  // trace end for OBJECTIVE_UNMET / METRIC_MISMATCH
    std::vector<NodeId> nodes;
    ViolationKind kind{};
    std::string detail;
};
std::string to_string(const Violation& v);

// Re-checks a trace from scratch: spans are rebuilt from own messages and
// delivered packets only. Throws TraceSchemaError for structurally broken
// records (unknown node ids, missing outcomes); rule breaks become Violations.
std::vector<Violation> validate_trace(const std::vector<SlotEvent>& trace, int n, Objective objective, int claimed_T,
                                      int claimed_L);

}  // namespace cyclenc
