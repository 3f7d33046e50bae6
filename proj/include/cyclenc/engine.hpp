#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclenc/packet.hpp"
#include "cyclenc/protocols.hpp"
#include "cyclenc/trace.hpp"

namespace cyclenc {

enum class Objective { Multicast, Gaming };
std::string_view objective_name(Objective o);  // "multicast" / "gaming"
std::optional<Objective> parse_objective(std::string_view s);
Objective default_objective(Protocol p);

struct NodeState {
    NodeId id = 0;
    KnowledgeBase knowledge;
    // Previous round's first delivery from each side, stripped of what the node
    // already decoded when it arrived.
    std::optional<CodedPacket> buf_left, buf_right;
    std::optional<CodedPacket> stage_left, stage_right;
};

struct RunOptions {
    bool compaction = false;  // skip slots without intents
};

struct Completion {
    Objective objective{};
    int round = 0;
    int subset_slot = 0;
    friend bool operator==(const Completion&, const Completion&) = default;
};

struct RunResult {
    Protocol protocol{};
    int n = 0;
    bool compaction = false;
    std::vector<SlotEvent> trace;
    int T = 0;
    int L = 0;
    Completion completion;
    int overshoot_slots = 0;       // scheduled slots left after completion
    int redundant_deliveries = 0;  // deliveries that did not grow the receiver's span
    int collisions = 0;
    std::vector<std::string> violations;
    friend bool operator==(const RunResult&, const RunResult&) = default;
};

bool objective_met(const std::vector<NodeState>& states, Objective objective);

// Throws IncompleteSchedule, NonDerivablePacket or EmptyScheduleForObjective.
RunResult run(const Schedule& schedule, Objective objective, RunOptions options = {});

// make_schedule + run.
RunResult run_protocol(Protocol proto, int n, std::optional<Objective> objective = std::nullopt,
                       RunOptions options = {});

}  // namespace cyclenc
