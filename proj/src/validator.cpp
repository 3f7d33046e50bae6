#include "cyclenc/validator.hpp"

#include <algorithm>

#include "cyclenc/errors.hpp"

namespace cyclenc {

std::string_view violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::CollisionDelivered: return "COLLISION_DELIVERED";
        case ViolationKind::HalfDuplexReceive: return "HALF_DUPLEX_RECEIVE";
        case ViolationKind::NonDerivablePacket: return "NON_DERIVABLE_PACKET";
        case ViolationKind::PhantomReception: return "PHANTOM_RECEPTION";
        case ViolationKind::OutcomeMismatch: return "OUTCOME_MISMATCH";
        case ViolationKind::ObjectiveUnmet: return "OBJECTIVE_UNMET";
        case ViolationKind::MetricMismatch: return "METRIC_MISMATCH";
    }
    return "?";
}

std::string to_string(const Violation& v) {
    std::string s = std::string(violation_name(v.kind)) + " slot=" + std::to_string(v.slot);
    if (!v.nodes.empty()) {
        s += " nodes=";
        for (std::size_t i = 0; i < v.nodes.size(); ++i) s += (i ? "," : "") + std::to_string(v.nodes[i]);
    }
    return s + " " + v.detail;
}

namespace {

bool met(const std::vector<KnowledgeBase>& kb, Objective objective) {
    const int m = static_cast<int>(kb.size());
    for (int v = 0; v < m; ++v) {
        for (int i = 0; i < m; ++i) {
            const bool needed = objective == Objective::Multicast || (v == 0 && i != 0) || (v != 0 && i == 0);
            if (needed && !kb[v].can_decode(i)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Violation> validate_trace(const std::vector<SlotEvent>& trace, int n, Objective objective, int claimed_T,
                                      int claimed_L) {
    if (n < 2) throw TraceSchemaError("n must be >= 2");
    const int m = n + 1;
    auto in_range = [m](NodeId v) { return v >= 0 && v < m; };

    std::vector<KnowledgeBase> kb;
    for (int v = 0; v < m; ++v) {
        kb.emplace_back(m);
        kb.back().insert(CodedPacket::unit(v));
    }

    std::vector<Violation> out;
    int emissions = 0;
    int first_met = 0;
    int prev_round = -1, prev_label = 0;
    const int end_slot = static_cast<int>(trace.size());

    for (std::size_t k = 0; k < trace.size(); ++k) {
        const SlotEvent& ev = trace[k];
        const int expect_slot = static_cast<int>(k) + 1;
        if (ev.slot != expect_slot) {
            out.push_back({ev.slot, {}, ViolationKind::MetricMismatch,
                           "slot index " + std::to_string(ev.slot) + " at position " + std::to_string(expect_slot)});
        }
        if (ev.round < prev_round || (ev.round == prev_round && ev.subset_slot <= prev_label) || ev.subset_slot < 1) {
            out.push_back({ev.slot, {}, ViolationKind::MetricMismatch,
                           "round/subset_slot (" + std::to_string(ev.round) + "," + std::to_string(ev.subset_slot) +
                               ") out of sequence"});
        }
        prev_round = ev.round;
        prev_label = ev.subset_slot;

        std::vector<const CodedPacket*> sent(m, nullptr);
        for (const Transmission& tx : ev.transmitters) {
            if (!in_range(tx.node)) throw TraceSchemaError("slot " + std::to_string(ev.slot) + ": unknown node");
            if (sent[tx.node]) throw TraceSchemaError("slot " + std::to_string(ev.slot) + ": duplicate transmitter");
            sent[tx.node] = &tx.packet;
            if (tx.packet.is_zero() || tx.packet.max_index() >= m || !kb[tx.node].derivable(tx.packet)) {
                out.push_back({ev.slot, {tx.node}, ViolationKind::NonDerivablePacket,
                               "V" + std::to_string(tx.node) + " sent " + tx.packet.str() + " outside its span"});
            }
        }
        emissions += static_cast<int>(ev.transmitters.size());

        std::vector<const Outcome*> by_node(m, nullptr);
        for (const Outcome& o : ev.outcomes) {
            if (!in_range(o.node) || by_node[o.node]) {
                throw TraceSchemaError("slot " + std::to_string(ev.slot) + ": bad or duplicate outcome node");
            }
            by_node[o.node] = &o;
        }

        std::vector<std::pair<NodeId, const CodedPacket*>> accepted;
        for (NodeId v = 0; v < m; ++v) {
            const Outcome* o = by_node[v];
            if (!o) throw TraceSchemaError("slot " + std::to_string(ev.slot) + ": no outcome for V" + std::to_string(v));
            const NodeId l = (v + m - 1) % m, r = (v + 1) % m;
            const int active = (sent[l] != nullptr) + (sent[r] != nullptr);
            const bool delivered = o->kind == OutcomeKind::Delivered;
            auto flag = [&](ViolationKind kind, std::string detail, std::vector<NodeId> nodes) {
                out.push_back({ev.slot, std::move(nodes), kind, std::move(detail)});
            };
            const std::string who = "V" + std::to_string(v);

            if (sent[v]) {
                if (delivered) flag(ViolationKind::HalfDuplexReceive, who + " received while transmitting", {v});
                else if (o->kind != OutcomeKind::HalfDuplexBusy)
                    flag(ViolationKind::OutcomeMismatch, who + " transmits but outcome is " +
                                                             std::string(outcome_name(o->kind)), {v});
                continue;
            }
            if (active == 2) {
                if (delivered) flag(ViolationKind::CollisionDelivered, who + " received with both neighbours active", {v, l, r});
                else if (o->kind != OutcomeKind::Collision)
                    flag(ViolationKind::OutcomeMismatch, who + " has two active neighbours but outcome is " +
                                                             std::string(outcome_name(o->kind)), {v});
                continue;
            }
            if (active == 0) {
                if (delivered) flag(ViolationKind::PhantomReception, who + " received with no active neighbour", {v});
                else if (o->kind != OutcomeKind::Silence)
                    flag(ViolationKind::OutcomeMismatch, who + " has no active neighbour but outcome is " +
                                                             std::string(outcome_name(o->kind)), {v});
                continue;
            }
            const NodeId u = sent[l] ? l : r;
            if (!delivered) {
                flag(ViolationKind::OutcomeMismatch, who + " has one active neighbour V" + std::to_string(u) +
                                                         " but outcome is " + std::string(outcome_name(o->kind)), {v, u});
                continue;
            }
            if (*o->from != u || *o->packet != *sent[u]) {
                flag(ViolationKind::PhantomReception, who + " recorded " + o->packet->str() + " from V" +
                                                          std::to_string(*o->from) + ", V" + std::to_string(u) +
                                                          " sent " + sent[u]->str(), {v, u});
                continue;
            }
            accepted.emplace_back(v, sent[u]);
        }
        for (auto [v, p] : accepted) {
            if (!p->is_zero() && p->max_index() < m) kb[v].insert(*p);
        }
        if (first_met == 0 && met(kb, objective)) first_met = ev.slot;
    }

    if (first_met == 0) {
        out.push_back({end_slot, {}, ViolationKind::ObjectiveUnmet,
                       std::string(objective_name(objective)) + " objective unmet at trace end"});
    } else if (first_met != end_slot) {
        out.push_back({end_slot, {}, ViolationKind::MetricMismatch,
                       "objective already met at slot " + std::to_string(first_met)});
    }
    if (claimed_T != end_slot) {
        out.push_back({end_slot, {}, ViolationKind::MetricMismatch,
                       "claimed T=" + std::to_string(claimed_T) + ", trace has " + std::to_string(end_slot) + " slots"});
    }
    if (claimed_L != emissions) {
        out.push_back({end_slot, {}, ViolationKind::MetricMismatch,
                       "claimed L=" + std::to_string(claimed_L) + ", trace has " + std::to_string(emissions) +
                           " emissions"});
    }
    return out;
}

}  // namespace cyclenc
