#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclenc/packet.hpp"
#include "cyclenc/topology.hpp"

namespace cyclenc {

enum class OutcomeKind { Delivered, Collision, HalfDuplexBusy, Silence };
std::string_view outcome_name(OutcomeKind k);  // "delivered", "collision", ...
std::optional<OutcomeKind> parse_outcome(std::string_view s);

struct Transmission {
    NodeId node;
    CodedPacket packet;
    friend bool operator==(const Transmission&, const Transmission&) = default;
};

struct Outcome {
    NodeId node;
    OutcomeKind kind;
    std::optional<NodeId> from;          // delivered only
    std::optional<CodedPacket> packet;   // delivered only
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct SlotEvent {
    int slot = 0;         // 1-based counted slot
    int round = 0;
    int subset_slot = 0;  // label within the round
    std::vector<Transmission> transmitters;  // by node id
    std::vector<Outcome> outcomes;           // one per node, by node id
    friend bool operator==(const SlotEvent&, const SlotEvent&) = default;
};

// JSON-lines trace: one record per slot with fields slot, round, subset_slot,
// transmitters[{node, packet}], outcomes[{node, kind, from?, packet?}].
std::string slot_to_json(const SlotEvent& ev);
void write_trace(std::ostream& os, const std::vector<SlotEvent>& trace);
// Throws TraceSchemaError with the offending line number.
SlotEvent slot_from_json(std::string_view line);
std::vector<SlotEvent> read_trace(std::istream& is);

}  // namespace cyclenc
