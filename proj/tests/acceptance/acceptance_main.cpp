// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failing criteria.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cyclenc/analysis.hpp"
#include "cyclenc/sweep.hpp"
#include "cyclenc/validator.hpp"

using namespace cyclenc;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> misses;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        misses.push_back(what);
    }
};

std::string summarize(const std::vector<std::string>& misses, std::size_t show = 6) {
    std::ostringstream os;
    for (std::size_t i = 0; i < misses.size() && i < show; ++i) os << (i ? "; " : "") << misses[i];
    if (misses.size() > show) os << "; ... (" << misses.size() << " total)";
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

const std::vector<Protocol> kAll{std::begin(kAllProtocols), std::end(kAllProtocols)};

// Sweep outcomes for 2 <= n <= 60, shared by criteria 3, 6, 7, 8.
const std::vector<SweepOutcome>& base_sweep() {
    static const std::vector<SweepOutcome> out = sweep_parallel(make_jobs(range(2, 60), kAll));
    return out;
}

std::string label(Protocol p, int n) { return std::string(protocol_name(p)) + " n=" + std::to_string(n); }

Verdict criterion1(std::string& info) {
    const auto t0 = std::chrono::steady_clock::now();
    // Table 1 as printed: {T_lb, T_ub, L} per (n, protocol).
    const int table[3][4][3] = {
        {{21, 28, 42}, {12, 16, 24}, {12, 15, 23}, {10, 13, 19}},
        {{24, 32, 72}, {12, 16, 36}, {12, 15, 27}, {10, 13, 23}},
        {{27, 36, 81}, {15, 20, 60}, {15, 18, 34}, {13, 16, 30}},
    };
    Verdict v;
    for (int row = 0; row < 3; ++row) {
        const int n = 7 + row;
        for (int c = 0; c < 4; ++c) {
            const Protocol p = kAllProtocols[c];
            const Bounds b = bounds_for(p, n);
            const int L = paper_L_column(p, n);
            std::ostringstream got;
            got << b.T_lb << '/' << b.T_ub << ", " << L;
            v.require(b.T_lb == table[row][c][0] && b.T_ub == table[row][c][1] && L == table[row][c][2],
                      label(p, n) + " computed " + got.str());
        }
    }
    const double s = seconds_since(t0);
    v.require(s < 1.0, "runtime " + std::to_string(s) + " s");
    info = "12 entries, " + std::to_string(s) + " s";
    return v;
}

Verdict criterion2(std::string& info) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto outs = sweep_parallel(make_jobs(range(4, 60), {Protocol::Routing, Protocol::NcGaming}));
    Verdict v;
    for (const auto& o : outs) {
        if (!o.result) {
            v.require(false, label(o.job.protocol, o.job.n) + " " + o.error);
            continue;
        }
        const Bounds b = bounds_for(o.job.protocol, o.job.n);
        v.require(o.result->L == b.L_value, label(o.job.protocol, o.job.n) + " L=" + std::to_string(o.result->L) +
                                                " formula " + std::to_string(b.L_value));
    }
    const double s = seconds_since(t0);
    v.require(s < 5.0, "runtime " + std::to_string(s) + " s");
    info = std::to_string(outs.size()) + " runs, " + std::to_string(s) + " s";
    return v;
}

Verdict criterion3(std::string& info) {
    Verdict v;
    for (const auto& o : base_sweep()) {
        if (!o.result) {
            v.require(false, label(o.job.protocol, o.job.n) + " " + o.error);
            continue;
        }
        const Bounds b = bounds_for(o.job.protocol, o.job.n);
        const int T = o.result->T;
        v.require(b.T_lb <= T && T <= b.T_ub, label(o.job.protocol, o.job.n) + " T=" + std::to_string(T) + " not in [" +
                                                  std::to_string(b.T_lb) + "," + std::to_string(b.T_ub) + "]");
    }
    info = std::to_string(base_sweep().size()) + " runs";
    return v;
}

Verdict criterion4(std::string& info) {
    Verdict v;
    std::ostringstream os;
    const double g99 = nc_gain(99);
    v.require(g99 >= 0.12 && g99 <= 0.16, "nc_gain(99)=" + std::to_string(g99));
    os << "gain(99)=" << g99;
    for (int n : {199, 299}) {
        const double g = nc_gain(n);
        v.require(std::abs(g - 1.0 / 7.0) <= 0.01, "nc_gain(" + std::to_string(n) + ")=" + std::to_string(g));
        os << " gain(" << n << ")=" << g;
    }
    info = os.str();
    return v;
}

Verdict criterion5(std::string& info) {
    Verdict v;
    std::ostringstream os;
    for (int n : {48, 49, 50}) {
        const double ratio = static_cast<double>(run_protocol(Protocol::NcMulticast, n).T) /
                             run_protocol(Protocol::Circular, n).T;
        v.require(ratio >= 0.45 && ratio <= 0.55, "n=" + std::to_string(n) + " ratio " + std::to_string(ratio));
        os << "n=" << n << ":" << ratio << ' ';
    }
    info = os.str();
    return v;
}

// Replays the trace and checks that every collided node could already derive
// both packets it missed.
bool collisions_harmless(const RunResult& r) {
    const int m = r.n + 1;
    std::vector<KnowledgeBase> kb;
    for (int i = 0; i < m; ++i) {
        kb.emplace_back(m);
        kb.back().insert(CodedPacket::unit(i));
    }
    for (const SlotEvent& ev : r.trace) {
        for (const Outcome& o : ev.outcomes) {
            if (o.kind != OutcomeKind::Collision) continue;
            for (const Transmission& tx : ev.transmitters) {
                const bool neighbour = (tx.node + 1) % m == o.node || (o.node + 1) % m == tx.node;
                if (neighbour && !kb[o.node].derivable(tx.packet)) return false;
            }
        }
        for (const Outcome& o : ev.outcomes) {
            if (o.kind == OutcomeKind::Delivered) kb[o.node].insert(*o.packet);
        }
    }
    return true;
}

Verdict criterion6(std::string& info) {
    Verdict v;
    int collisions = 0;
    for (const auto& o : base_sweep()) {
        const std::string who = label(o.job.protocol, o.job.n);
        if (!o.result) {
            v.require(false, who + " " + o.error);
            continue;
        }
        const RunResult& r = *o.result;
        collisions += r.collisions;
        v.require(r.violations.empty(), who + " engine violations: " + summarize(r.violations, 1));
        const auto found = validate_trace(r.trace, r.n, o.job.objective, r.T, r.L);
        v.require(found.empty(), who + " rule/causality violations: " + (found.empty() ? "" : to_string(found[0])));
        v.require(collisions_harmless(r), who + " collision lost a needed packet");
    }
    info = std::to_string(base_sweep().size()) + " runs, " + std::to_string(collisions) + " collision events";
    return v;
}

Verdict criterion7(std::string& info) {
    Verdict v;
    int checked = 0;
    for (const auto& o : base_sweep()) {
        if (!is_gaming(o.job.protocol)) continue;
        if (!o.result) {
            v.require(false, label(o.job.protocol, o.job.n) + " " + o.error);
            continue;
        }
        ++checked;
        v.require(arrival_order(o.result->trace, o.job.n, o.job.protocol).conforms,
                  label(o.job.protocol, o.job.n) + " arrival order");
    }
    info = std::to_string(checked) + " runs";
    return v;
}

struct Mutation {
    std::string name;
    std::function<void(std::vector<SlotEvent>&, int& claimed_T, int& claimed_L)> apply;
};

template <class Pred>
std::pair<std::size_t, std::size_t> find_outcome(const std::vector<SlotEvent>& tr, Pred pred) {
    for (std::size_t s = 0; s < tr.size(); ++s) {
        for (std::size_t k = 0; k < tr[s].outcomes.size(); ++k) {
            if (pred(tr[s], tr[s].outcomes[k])) return {s, k};
        }
    }
    throw std::runtime_error("mutation target not found");
}

std::vector<Mutation> mutation_suite() {
    auto kind_is = [](OutcomeKind k) { return [k](const SlotEvent&, const Outcome& o) { return o.kind == k; }; };
    return {
        {"delivered->collision",
         [=](auto& tr, int&, int&) {
             auto [s, k] = find_outcome(tr, kind_is(OutcomeKind::Delivered));
             tr[s].outcomes[k] = {tr[s].outcomes[k].node, OutcomeKind::Collision, {}, {}};
         }},
        {"collision->delivered",
         [=](auto& tr, int&, int&) {
             auto [s, k] = find_outcome(tr, kind_is(OutcomeKind::Collision));
             const Transmission& tx = tr[s].transmitters.front();
             tr[s].outcomes[k].kind = OutcomeKind::Delivered;
             tr[s].outcomes[k].from = tx.node;
             tr[s].outcomes[k].packet = tx.packet;
         }},
        {"silence->delivered",
         [=](auto& tr, int&, int&) {
             auto [s, k] = find_outcome(tr, [](const SlotEvent& ev, const Outcome& o) {
                 return o.kind == OutcomeKind::Silence && !ev.transmitters.empty();
             });
             tr[s].outcomes[k].kind = OutcomeKind::Delivered;
             tr[s].outcomes[k].from = tr[s].transmitters.front().node;
             tr[s].outcomes[k].packet = tr[s].transmitters.front().packet;
         }},
        {"half_duplex_busy->delivered",
         [=](auto& tr, int&, int&) {
             auto [s, k] = find_outcome(tr, kind_is(OutcomeKind::HalfDuplexBusy));
             tr[s].outcomes[k].kind = OutcomeKind::Delivered;
             tr[s].outcomes[k].from = (tr[s].outcomes[k].node + 1) % static_cast<int>(tr[s].outcomes.size());
             tr[s].outcomes[k].packet = CodedPacket::unit(0);
         }},
        {"delivered packet support",
         [=](auto& tr, int&, int&) {
             auto [s, k] = find_outcome(tr, kind_is(OutcomeKind::Delivered));
             tr[s].outcomes[k].packet = packet_xor(*tr[s].outcomes[k].packet, CodedPacket::unit(0));
         }},
        {"delivered from",
         [=](auto& tr, int&, int&) {
             auto [s, k] = find_outcome(tr, kind_is(OutcomeKind::Delivered));
             const int m = static_cast<int>(tr[s].outcomes.size());
             const int v = tr[s].outcomes[k].node;
             const int other = *tr[s].outcomes[k].from == (v + 1) % m ? (v + m - 1) % m : (v + 1) % m;
             tr[s].outcomes[k].from = other;
         }},
        {"transmitter packet support",
         [=](auto& tr, int&, int&) {
             // a round-0 sender only knows its own message
             Transmission& tx = tr[0].transmitters.front();
             tx.packet = packet_xor(tx.packet, CodedPacket::unit(tx.node == 1 ? 2 : 1));
         }},
        {"transmitter node",
         [=](auto& tr, int&, int&) {
             Transmission& tx = tr[0].transmitters.front();
             const int m = static_cast<int>(tr[0].outcomes.size());
             tx.node = (tx.node + 1) % m;
         }},
        {"slot index", [=](auto& tr, int&, int&) { tr[1].slot += 1; }},
        {"claimed L", [=](auto&, int&, int& L) { L += 1; }},
    };
}

Verdict criterion8(std::string& info) {
    Verdict v;
    int traces = 0;
    for (const auto& o : base_sweep()) {
        if (!o.result) continue;  // reported by criterion 6
        ++traces;
        const auto found = validate_trace(o.result->trace, o.job.n, o.job.objective, o.result->T, o.result->L);
        v.require(found.empty(), label(o.job.protocol, o.job.n) + ": " + (found.empty() ? "" : to_string(found[0])));
    }
    for (int n : {99, 199, 299}) {
        for (Protocol p : {Protocol::Routing, Protocol::NcGaming}) {
            const RunResult r = run_protocol(p, n);
            ++traces;
            v.require(validate_trace(r.trace, n, Objective::Gaming, r.T, r.L).empty(), label(p, n) + " trace");
        }
    }
    for (int n : {48, 49, 50}) {
        for (Protocol p : {Protocol::Circular, Protocol::NcMulticast}) {
            const RunResult r = run_protocol(p, n);
            ++traces;
            v.require(validate_trace(r.trace, n, Objective::Multicast, r.T, r.L).empty(), label(p, n) + " trace");
        }
    }

    // The routing trace for n=5 has all four outcome kinds.
    const RunResult base = run_protocol(Protocol::Routing, 5);
    int caught = 0;
    const auto suite = mutation_suite();
    for (const Mutation& mu : suite) {
        auto tr = base.trace;
        int T = base.T, L = base.L;
        mu.apply(tr, T, L);
        const bool hit = !validate_trace(tr, 5, Objective::Gaming, T, L).empty();
        caught += hit;
        v.require(hit, "mutation '" + mu.name + "' not detected");
    }
    info = std::to_string(traces) + " engine traces validated, " + std::to_string(caught) + "/" +
           std::to_string(suite.size()) + " mutations caught";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict(std::string&)>>> criteria{
        {"Table 1 bound reproduction", criterion1},
        {"closed-form L for Algorithms 2 and 3, 4<=n<=60", criterion2},
        {"T within Lemma/Theorem interval, 2<=n<=60", criterion3},
        {"NC gain near 1/7", criterion4},
        {"multicast halving, n in {48,49,50}", criterion5},
        {"completion and safety, 2<=n<=60", criterion6},
        {"arrival order at V_0", criterion7},
        {"oracle agreement and mutation suite", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string info;
        Verdict v;
        try {
            v = criteria[i].second(info);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ["
                  << info << "]";
        if (!v.pass) std::cout << "  misses: " << summarize(v.misses, 12);
        std::cout << std::endl;
    }
    return failed;
}
