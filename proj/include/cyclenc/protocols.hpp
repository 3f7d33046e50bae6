#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclenc/topology.hpp"

namespace cyclenc {

enum class Protocol { Circular, NcMulticast, Routing, NcGaming };
enum class Rule { Own, ForwardFromRight, ForwardFromLeft, XorBoth, SendM0 };

std::string_view protocol_name(Protocol p);  // CLI spelling: circular, nc-multicast, ...
std::string_view protocol_title(Protocol p);  // "Circular routing", "Algorithm 1", ...
std::optional<Protocol> parse_protocol(std::string_view s);
std::string_view rule_name(Rule r);
inline constexpr Protocol kAllProtocols[] = {Protocol::Circular, Protocol::NcMulticast, Protocol::Routing,
                                             Protocol::NcGaming};
inline bool is_gaming(Protocol p) { return p == Protocol::Routing || p == Protocol::NcGaming; }

struct TransmitIntent {
    NodeId node;
    Rule rule;
    friend bool operator==(const TransmitIntent&, const TransmitIntent&) = default;
};

struct Slot {
    int label = 0;                        // 1-based subset slot within the round
    std::vector<TransmitIntent> intents;  // sorted by node
};

struct Round {
    int t = 0;
    std::vector<Slot> slots;
};

struct Schedule {
    Protocol protocol{};
    int n = 0;
    std::vector<Round> rounds;

    std::size_t slot_count() const;
    std::size_t intent_count() const;
};

Schedule circular_schedule(const CycleTopology& t, const PhasePartition& p);
Schedule nc_multicast_schedule(const CycleTopology& t, const PhasePartition& p);
Schedule routing_schedule(const CycleTopology& t, const PhasePartition& p, const ProtocolParams& params);
Schedule nc_gaming_schedule(const CycleTopology& t, const PhasePartition& p, const ProtocolParams& params);

// Builds the topology, the protocol's partition and the schedule in one call.
Schedule make_schedule(Protocol proto, int n);

// Gaming-protocol forwarding sets for round t >= 1, exposed for tests.
struct GamingSets {
    std::vector<NodeId> to_right;  // S_-> : relay the right neighbour's packet toward V_0
    std::vector<NodeId> to_left;   // S_<- : relay the left neighbour's packet
    std::vector<NodeId> m0;        // relays of the broadcast message
};
GamingSets gaming_sets(const CycleTopology& t, int round);

}  // namespace cyclenc
