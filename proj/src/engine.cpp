#include "cyclenc/engine.hpp"

#include "cyclenc/errors.hpp"

namespace cyclenc {

std::string_view objective_name(Objective o) { return o == Objective::Gaming ? "gaming" : "multicast"; }

std::optional<Objective> parse_objective(std::string_view s) {
    if (s == "gaming") return Objective::Gaming;
    if (s == "multicast") return Objective::Multicast;
    return std::nullopt;
}

Objective default_objective(Protocol p) { return is_gaming(p) ? Objective::Gaming : Objective::Multicast; }

bool objective_met(const std::vector<NodeState>& states, Objective objective) {
    const int m = static_cast<int>(states.size());
    if (objective == Objective::Gaming) {
        for (int i = 1; i < m; ++i) {
            if (!states[0].knowledge.can_decode(i)) return false;
        }
        for (int i = 1; i < m; ++i) {
            if (!states[i].knowledge.can_decode(0)) return false;
        }
        return true;
    }
    for (const NodeState& s : states) {
        if (s.knowledge.rank() < m) return false;
    }
    return true;
}

namespace {

std::string where(int round, int label, NodeId v) {
    return "round " + std::to_string(round) + " slot " + std::to_string(label) + " V" + std::to_string(v);
}

CodedPacket resolve(const NodeState& s, const TransmitIntent& ti, int round, int label) {
    auto need = [&](const std::optional<CodedPacket>& b, const char* side) -> const CodedPacket& {
        if (!b) throw NonDerivablePacket(where(round, label, s.id) + " has no " + side + " buffer for " +
                                         std::string(rule_name(ti.rule)));
        return *b;
    };
    switch (ti.rule) {
        case Rule::Own: return CodedPacket::unit(s.id);
        case Rule::ForwardFromRight: return need(s.buf_right, "right");
        case Rule::ForwardFromLeft: return need(s.buf_left, "left");
        case Rule::XorBoth: return packet_xor(need(s.buf_left, "left"), need(s.buf_right, "right"));
        case Rule::SendM0:
            if (!s.knowledge.can_decode(0)) throw NonDerivablePacket(where(round, label, s.id) + " cannot decode M0");
            return CodedPacket::unit(0);
    }
    throw std::logic_error("unknown rule");
}

}  // namespace

RunResult run(const Schedule& schedule, Objective objective, RunOptions options) {
    if (schedule.intent_count() == 0) {
        throw EmptyScheduleForObjective(std::string(protocol_name(schedule.protocol)) + " n=" +
                                        std::to_string(schedule.n) + " has no transmissions");
    }
    const CycleTopology topo = build_cycle(schedule.n);
    const int m = topo.size();

    std::vector<NodeState> st(m);
    for (NodeId v = 0; v < m; ++v) {
        st[v].id = v;
        st[v].knowledge = KnowledgeBase(m);
        st[v].knowledge.insert(CodedPacket::unit(v));
    }

    RunResult res;
    res.protocol = schedule.protocol;
    res.n = schedule.n;
    res.compaction = options.compaction;
    bool done = false;

    for (const Round& round : schedule.rounds) {
        for (NodeState& s : st) s.stage_left.reset(), s.stage_right.reset();
        for (const Slot& slot : round.slots) {
            if (options.compaction && slot.intents.empty()) continue;
            if (done) {
                ++res.overshoot_slots;
                continue;
            }
            SlotEvent ev;
            ev.slot = static_cast<int>(res.trace.size()) + 1;
            ev.round = round.t;
            ev.subset_slot = slot.label;

            std::vector<const CodedPacket*> sent(m, nullptr);
            for (const TransmitIntent& ti : slot.intents) {
                CodedPacket p = resolve(st[ti.node], ti, round.t, slot.label);
                if (p.is_zero() || !st[ti.node].knowledge.derivable(p)) {
                    throw NonDerivablePacket(where(round.t, slot.label, ti.node) + " resolved " + p.str() +
                                             " outside its span");
                }
                ev.transmitters.push_back({ti.node, std::move(p)});
            }
            for (const Transmission& tx : ev.transmitters) sent[tx.node] = &tx.packet;
            res.L += static_cast<int>(ev.transmitters.size());

            for (NodeId v = 0; v < m; ++v) {
                if (sent[v]) {
                    ev.outcomes.push_back({v, OutcomeKind::HalfDuplexBusy, {}, {}});
                    continue;
                }
                const NodeId l = topo.left(v), r = topo.right(v);
                if (sent[l] && sent[r]) {
                    ++res.collisions;
                    for (NodeId u : {l, r}) {
                        if (!st[v].knowledge.derivable(*sent[u])) {
                            res.violations.push_back("harmful collision at " + where(round.t, slot.label, v) +
                                                     ": lost " + sent[u]->str() + " from V" + std::to_string(u));
                        }
                    }
                    ev.outcomes.push_back({v, OutcomeKind::Collision, {}, {}});
                    continue;
                }
                if (!sent[l] && !sent[r]) {
                    ev.outcomes.push_back({v, OutcomeKind::Silence, {}, {}});
                    continue;
                }
                const NodeId u = sent[l] ? l : r;
                const CodedPacket& p = *sent[u];
                NodeState& s = st[v];
                std::vector<int> fresh;
                for (int i : p.support()) {
                    if (!s.knowledge.can_decode(i)) fresh.push_back(i);
                }
                CodedPacket stored = fresh.empty() ? p : CodedPacket(std::move(fresh));
                if (!s.knowledge.insert(p)) ++res.redundant_deliveries;
                auto& stage = (u == l) ? s.stage_left : s.stage_right;
                if (!stage) stage = std::move(stored);
                ev.outcomes.push_back({v, OutcomeKind::Delivered, u, p});
            }
            res.trace.push_back(std::move(ev));

            if (objective_met(st, objective)) {
                done = true;
                res.T = static_cast<int>(res.trace.size());
                res.completion = {objective, round.t, slot.label};
            }
        }
        for (NodeState& s : st) {
            s.buf_left = std::move(s.stage_left);
            s.buf_right = std::move(s.stage_right);
        }
    }
    if (!done) {
        throw IncompleteSchedule(std::string(protocol_name(schedule.protocol)) + " n=" + std::to_string(schedule.n) +
                                 " ended without meeting the " + std::string(objective_name(objective)) +
                                 " objective");
    }
    return res;
}

RunResult run_protocol(Protocol proto, int n, std::optional<Objective> objective, RunOptions options) {
    return run(make_schedule(proto, n), objective.value_or(default_objective(proto)), options);
}

}  // namespace cyclenc
