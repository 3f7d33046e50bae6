#include "cyclenc/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "cyclenc/errors.hpp"
#include "cyclenc/sweep.hpp"

namespace cyclenc {

Bounds bounds_for(Protocol p, int n) {
    const CycleTopology t = build_cycle(n);
    const int D = t.params().D, d = t.params().d, h = n / 2;
    const int coeff = (n + 1) / 3;
    switch (p) {
        case Protocol::Circular: return {p, n, 3 * n, 4 * n, LKind::UpperBound, coeff};
        case Protocol::NcMulticast: return {p, n, 3 * D, 4 * D, LKind::UpperBound, coeff};
        case Protocol::Routing: return {p, n, 3 * D + d - 2, 3 * D + d + 1, LKind::Exact, D * (h + 3) - 1};
        case Protocol::NcGaming: return {p, n, 3 * D - 2, 3 * D + 1, LKind::Exact, D * (h + 3) - 2 * d - 1};
    }
    throw DomainError("unknown protocol");
}

Conformance check_run(const RunResult& result, const Bounds& b) {
    if (result.protocol != b.protocol || result.n != b.n) throw DomainError("run and bounds describe different cases");
    Conformance c;
    c.T_ok = b.T_lb <= result.T && result.T <= b.T_ub;
    const int limit = b.L_limit(result.T);
    c.L_ok = b.L_kind == LKind::Exact ? result.L == limit : result.L <= limit;
    c.pass = c.T_ok && c.L_ok;
    std::ostringstream os;
    os << "T=" << result.T << (c.T_ok ? " in " : " outside ") << '[' << b.T_lb << ',' << b.T_ub << "], L=" << result.L
       << (b.L_kind == LKind::Exact ? (c.L_ok ? " == " : " != ") : (c.L_ok ? " <= " : " > ")) << limit;
    c.detail = os.str();
    return c;
}

ArrivalReport arrival_order(const std::vector<SlotEvent>& trace, int n, Protocol p) {
    if (!is_gaming(p)) throw DomainError("arrival order is defined for Algorithms 2 and 3 only");
    const int m = n + 1;
    KnowledgeBase kb(m);
    kb.insert(CodedPacket::unit(0));
    std::map<int, std::vector<int>> per_round;
    std::set<int> known;
    for (const SlotEvent& ev : trace) {
        for (const Outcome& o : ev.outcomes) {
            if (o.node != 0 || o.kind != OutcomeKind::Delivered || !o.packet) continue;
            kb.insert(*o.packet);
        }
        per_round.try_emplace(ev.round);
        for (int i = 1; i < m; ++i) {
            if (!known.contains(i) && kb.can_decode(i)) {
                known.insert(i);
                per_round[ev.round].push_back(i);
            }
        }
    }
    ArrivalReport rep;
    const int D = (n + 1) / 2;
    rep.conforms = static_cast<int>(known.size()) == n;
    for (auto& [round, idx] : per_round) {
        std::sort(idx.begin(), idx.end());
        std::vector<int> expect;
        if (round < D) expect = round + 1 == n - round ? std::vector<int>{round + 1} : std::vector<int>{round + 1, n - round};
        if (idx != expect) rep.conforms = false;
        rep.rounds.push_back({round, idx});
    }
    return rep;
}

bool paper_L_uses_upper(Protocol p, int n) { return p == Protocol::NcMulticast && n == 9; }

int paper_L_column(Protocol p, int n) {
    const Bounds b = bounds_for(p, n);
    if (b.L_kind == LKind::Exact) return b.L_value;
    return b.L_limit(paper_L_uses_upper(p, n) ? b.T_ub : b.T_lb);
}

std::vector<TableRow> comparison_table(const std::vector<int>& ns, const std::vector<Protocol>& protocols,
                                       RunOptions options) {
    for (int n : ns) build_cycle(n);
    const auto outcomes = sweep_parallel(make_jobs(ns, protocols, std::nullopt, options));
    std::vector<TableRow> rows;
    for (const SweepOutcome& o : outcomes) {
        const Bounds b = bounds_for(o.job.protocol, o.job.n);
        TableRow row{o.job.n, o.job.protocol, b.T_lb, b.T_ub, 0, paper_L_column(o.job.protocol, o.job.n), 0, o.error};
        if (o.result) {
            row.T_measured = o.result->T;
            row.L_measured = o.result->L;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,protocol,T_lb,T_ub,T_measured,L_formula_or_bound,L_measured\n";
    for (const TableRow& r : rows) {
        os << r.n << ',' << protocol_name(r.protocol) << ',' << r.T_lb << ',' << r.T_ub << ',' << r.T_measured << ','
           << r.L_paper << ',' << r.L_measured << '\n';
    }
    return os.str();
}

std::string table_markdown(const std::vector<TableRow>& rows) {
    const std::vector<std::string> head{"n", "protocol", "paper T_lb/T_ub, L", "T_measured", "L_measured"};
    std::vector<std::vector<std::string>> cells;
    bool footnote = false;
    for (const TableRow& r : rows) {
        std::string paper = std::to_string(r.T_lb) + "/" + std::to_string(r.T_ub) + ", " + std::to_string(r.L_paper);
        if (paper_L_uses_upper(r.protocol, r.n)) {
            paper += " (a)";
            footnote = true;
        }
        cells.push_back({std::to_string(r.n), std::string(protocol_title(r.protocol)), paper,
                         r.error.empty() ? std::to_string(r.T_measured) : "error",
                         r.error.empty() ? std::to_string(r.L_measured) : "error"});
    }
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        w[c] = head[c].size();
        for (const auto& row : cells) w[c] = std::max(w[c], row[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& v) {
        os << '|';
        for (std::size_t c = 0; c < v.size(); ++c) os << ' ' << std::left << std::setw(static_cast<int>(w[c])) << v[c] << " |";
        os << '\n';
    };
    line(head);
    os << '|';
    for (std::size_t c = 0; c < head.size(); ++c) os << std::string(w[c] + 2, '-') << '|';
    os << '\n';
    for (const auto& row : cells) line(row);

    std::map<int, std::pair<int, int>> gain;  // n -> (T alg2, T alg3)
    for (const TableRow& r : rows) {
        if (!r.error.empty() || r.n < 5) continue;
        if (r.protocol == Protocol::Routing) gain[r.n].first = r.T_measured;
        if (r.protocol == Protocol::NcGaming) gain[r.n].second = r.T_measured;
    }
    for (auto [n, tt] : gain) {
        if (tt.first == 0 || tt.second == 0) continue;
        os << "NC gain (Algorithm 3 vs Algorithm 2) at n=" << n << ": " << std::fixed << std::setprecision(1)
           << 100.0 * (tt.first - tt.second) / tt.first << "%\n";
    }
    for (const TableRow& r : rows) {
        if (!r.error.empty()) os << "error n=" << r.n << ' ' << protocol_name(r.protocol) << ": " << r.error << '\n';
    }
    if (footnote) {
        os << "(a) the published table evaluates Algorithm 1's L bound at T_ub for n=9 but at T_lb for n=7,8; "
              "the entry is reproduced as printed.\n";
    }
    return os.str();
}

double nc_gain(const RunResult& routing, const RunResult& nc) {
    if (routing.protocol != Protocol::Routing || nc.protocol != Protocol::NcGaming || routing.n != nc.n) {
        throw DomainError("nc_gain needs an Algorithm 2 run and an Algorithm 3 run for the same n");
    }
    return static_cast<double>(routing.T - nc.T) / routing.T;
}

double nc_gain(int n, RunOptions options) {
    if (n < 5) throw DomainError("nc_gain needs n >= 5");
    return nc_gain(run_protocol(Protocol::Routing, n, std::nullopt, options),
                   run_protocol(Protocol::NcGaming, n, std::nullopt, options));
}

}  // namespace cyclenc
