#include "cyclenc/protocols.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclenc {

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Circular: return "circular";
        case Protocol::NcMulticast: return "nc-multicast";
        case Protocol::Routing: return "routing";
        case Protocol::NcGaming: return "nc-gaming";
    }
    return "?";
}

std::string_view protocol_title(Protocol p) {
    switch (p) {
        case Protocol::Circular: return "Circular routing";
        case Protocol::NcMulticast: return "Algorithm 1";
        case Protocol::Routing: return "Algorithm 2";
        case Protocol::NcGaming: return "Algorithm 3";
    }
    return "?";
}

std::optional<Protocol> parse_protocol(std::string_view s) {
    for (Protocol p : kAllProtocols) {
        if (protocol_name(p) == s) return p;
    }
    return std::nullopt;
}

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::Own: return "OWN";
        case Rule::ForwardFromRight: return "FORWARD_FROM_RIGHT";
        case Rule::ForwardFromLeft: return "FORWARD_FROM_LEFT";
        case Rule::XorBoth: return "XOR_BOTH";
        case Rule::SendM0: return "SEND_M0";
    }
    return "?";
}

std::size_t Schedule::slot_count() const {
    std::size_t k = 0;
    for (const Round& r : rounds) k += r.slots.size();
    return k;
}

std::size_t Schedule::intent_count() const {
    std::size_t k = 0;
    for (const Round& r : rounds) {
        for (const Slot& s : r.slots) k += s.intents.size();
    }
    return k;
}

namespace {

// Places each intent in its node's subset slot. Round 0 keeps every subset slot;
// later rounds drop a trailing fourth slot that would stay empty. `extra` is
// appended as slot 4 (Algorithm 2's M_0 slot), merged with subset 4 if present.
Round make_round(int t, const PhasePartition& p, const std::map<NodeId, Rule>& intents,
                 const std::map<NodeId, Rule>* extra = nullptr) {
    Round round;
    round.t = t;
    const int k = p.phase_count;
    round.slots.resize(std::max(k, 3));
    for (std::size_t j = 0; j < round.slots.size(); ++j) round.slots[j].label = static_cast<int>(j) + 1;
    for (auto [v, rule] : intents) {
        const int label = p.slot_of(v);
        if (label == 0) throw std::logic_error("node outside partition");
        round.slots[label - 1].intents.push_back({v, rule});
    }
    if (k == 4 && t > 0 && round.slots[3].intents.empty() && extra == nullptr) round.slots.pop_back();
    if (extra != nullptr) {
        if (round.slots.size() < 4) round.slots.push_back(Slot{4, {}});
        for (auto [v, rule] : *extra) round.slots[3].intents.push_back({v, rule});
    }
    for (Slot& s : round.slots) {
        std::sort(s.intents.begin(), s.intents.end(),
                  [](const TransmitIntent& a, const TransmitIntent& b) { return a.node < b.node; });
        for (std::size_t i = 1; i < s.intents.size(); ++i) {
            if (s.intents[i].node == s.intents[i - 1].node) throw std::logic_error("node scheduled twice in a slot");
        }
    }
    return round;
}

std::map<NodeId, Rule> all_nodes(const CycleTopology& t, Rule rule) {
    std::map<NodeId, Rule> out;
    for (NodeId v = 0; v < t.size(); ++v) out[v] = rule;
    return out;
}

Schedule multicast(Protocol proto, const CycleTopology& t, const PhasePartition& p, int rounds, Rule relay) {
    Schedule s{proto, t.n(), {}};
    s.rounds.push_back(make_round(0, p, all_nodes(t, Rule::Own)));
    for (int r = 1; r < rounds; ++r) s.rounds.push_back(make_round(r, p, all_nodes(t, relay)));
    return s;
}

// Shared by Algorithms 2 and 3; they differ only in rounds 1..d.
Schedule gaming(Protocol proto, const CycleTopology& t, const PhasePartition& p, const ProtocolParams& params) {
    Schedule s{proto, t.n(), {}};
    s.rounds.push_back(make_round(0, p, all_nodes(t, Rule::Own)));
    const bool nc = proto == Protocol::NcGaming;
    for (int r = 1; r < params.D; ++r) {
        const GamingSets g = gaming_sets(t, r);
        std::map<NodeId, Rule> it;
        for (NodeId v : g.to_left) it[v] = Rule::ForwardFromLeft;
        for (NodeId v : g.to_right) it[v] = Rule::ForwardFromRight;
        if (r <= params.d && !nc) {
            std::map<NodeId, Rule> extra;
            for (NodeId v : g.m0) extra[v] = Rule::SendM0;
            s.rounds.push_back(make_round(r, p, it, &extra));
            continue;
        }
        for (NodeId v : g.m0) {
            // S_xor takes priority; a relay with no unicast to merge sends plain M_0.
            it[v] = (r <= params.d && it.contains(v)) ? Rule::XorBoth : Rule::SendM0;
        }
        s.rounds.push_back(make_round(r, p, it));
    }
    if (p.phase_count == 4) {
        const auto& v4 = p.subsets[3];
        for (std::size_t r = 1; r < s.rounds.size(); ++r) {
            for (const Slot& sl : s.rounds[r].slots) {
                for (const TransmitIntent& ti : sl.intents) {
                    if (std::binary_search(v4.begin(), v4.end(), ti.node)) {
                        throw std::logic_error("V4 node active after round 0");
                    }
                }
            }
        }
    }
    return s;
}

}  // namespace

GamingSets gaming_sets(const CycleTopology& t, int round) {
    const int n = t.n();
    const int D = t.params().D;
    const int r = t.size() % 3;
    const bool odd = n % 2 == 1;
    // Players 1..a send toward V_0 clockwise-down, a+1..n the other way.
    const int a = (r == 2 && odd) ? D - 1 : D;
    GamingSets g;
    if (round < 1 || round >= D) return g;
    for (int i = 1; i <= a - round; ++i) g.to_right.push_back(i);
    if (round == 1 && odd && a == D) g.to_left.push_back(D + 1);  // Fig. 2's duplicate hop of M_D
    for (int i = a + round + 1; i <= n; ++i) g.to_left.push_back(i);
    if (odd && round == D - 1) {
        g.m0 = {n + 1 - round};
    } else {
        g.m0 = {round, n + 1 - round};
    }
    return g;
}

Schedule circular_schedule(const CycleTopology& t, const PhasePartition& p) {
    return multicast(Protocol::Circular, t, p, t.n(), Rule::ForwardFromLeft);
}

Schedule nc_multicast_schedule(const CycleTopology& t, const PhasePartition& p) {
    return multicast(Protocol::NcMulticast, t, p, t.params().D + 1, Rule::XorBoth);
}

Schedule routing_schedule(const CycleTopology& t, const PhasePartition& p, const ProtocolParams& params) {
    return gaming(Protocol::Routing, t, p, params);
}

Schedule nc_gaming_schedule(const CycleTopology& t, const PhasePartition& p, const ProtocolParams& params) {
    return gaming(Protocol::NcGaming, t, p, params);
}

Schedule make_schedule(Protocol proto, int n) {
    const CycleTopology t = build_cycle(n);
    switch (proto) {
        case Protocol::Circular: return circular_schedule(t, multicast_partition(t));
        case Protocol::NcMulticast: return nc_multicast_schedule(t, multicast_partition(t));
        case Protocol::Routing: return routing_schedule(t, partition(t), t.params());
        case Protocol::NcGaming: return nc_gaming_schedule(t, partition(t), t.params());
    }
    throw std::invalid_argument("unknown protocol");
}

}  // namespace cyclenc
