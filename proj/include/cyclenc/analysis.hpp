#pragma once

#include <string>
#include <vector>

#include "cyclenc/engine.hpp"

namespace cyclenc {

enum class LKind { Exact, UpperBound };

struct Bounds {
    Protocol protocol{};
    int n = 0;
    int T_lb = 0;
    int T_ub = 0;
    LKind L_kind{};
    int L_value = 0;  // exact L, or the coefficient c in L <= c*T

    int L_limit(int T) const { return L_kind == LKind::Exact ? L_value : L_value * T; }
};

// Lemma 1 / Lemma 2 / Theorem 1 / Theorem 2. Throws DomainError for n < 2.
Bounds bounds_for(Protocol p, int n);

struct Conformance {
    bool pass = false;
    bool T_ok = false;
    bool L_ok = false;
    std::string detail;
};

// Throws DomainError when result and bounds disagree on protocol or n.
Conformance check_run(const RunResult& result, const Bounds& bounds);

struct RoundArrival {
    int round = 0;
    std::vector<int> indices;  // newly decodable at V_0, ascending
};

struct ArrivalReport {
    std::vector<RoundArrival> rounds;
    bool conforms = false;  // round t yields exactly {t+1, n-t}
};

// Rebuilds V_0's span from the trace's deliveries. Throws DomainError for the
// multicast protocols.
ArrivalReport arrival_order(const std::vector<SlotEvent>& trace, int n, Protocol p);

// Table 1's L entry: the exact formula for Algorithms 2-3; for circular routing
// and Algorithm 1 the Lemma bound evaluated where the published table did.
int paper_L_column(Protocol p, int n);
// True where the published table evaluates the bound at T_ub instead of T_lb.
bool paper_L_uses_upper(Protocol p, int n);

struct TableRow {
    int n = 0;
    Protocol protocol{};
    int T_lb = 0;
    int T_ub = 0;
    int T_measured = 0;  // 0 if the run failed
    int L_paper = 0;
    int L_measured = 0;
    std::string error;
};

std::vector<TableRow> comparison_table(const std::vector<int>& ns, const std::vector<Protocol>& protocols,
                                       RunOptions options = {});

std::string table_csv(const std::vector<TableRow>& rows);
// Aligned markdown with a "paper" cell in Table 1 notation and gain/footnote lines.
std::string table_markdown(const std::vector<TableRow>& rows);

// (T_alg2 - T_alg3) / T_alg2 from engine runs. Throws DomainError for n < 5.
double nc_gain(int n, RunOptions options = {});
double nc_gain(const RunResult& routing, const RunResult& nc);

}  // namespace cyclenc
