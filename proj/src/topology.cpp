#include "cyclenc/topology.hpp"

#include <algorithm>
#include <cstdlib>

#include "cyclenc/errors.hpp"

namespace cyclenc {

CycleTopology::CycleTopology(int n) : n_(n) {
    if (n < kMinPlayers) {
        throw DomainError("n must be >= " + std::to_string(kMinPlayers) + " (got " + std::to_string(n) + ")");
    }
    params_.D = (n + 1) / 2;
    params_.d = (n + 1) / 4;
}

int CycleTopology::distance(NodeId a, NodeId b) const noexcept {
    const int m = size();
    const int k = std::abs(a - b) % m;
    return std::min(k, m - k);
}

CycleTopology build_cycle(int n) { return CycleTopology(n); }

int PhasePartition::slot_of(NodeId v) const {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        if (std::binary_search(subsets[j].begin(), subsets[j].end(), v)) return static_cast<int>(j) + 1;
    }
    return 0;
}

PhasePartition partition(const CycleTopology& t) {
    const int n = t.n();
    const int m = n + 1;
    PhasePartition p;
    p.r = m % 3;
    if (p.r == 0) {
        p.phase_count = 3;
        p.subsets.resize(3);
        for (int i = 0; i < m; ++i) p.subsets[i % 3].push_back(i);
        return p;
    }

    // Remark construction. For r == 2 the fourth subset is {V_h, V_{h+1}}; for odd
    // n this is the paper's {V_floor(n/2), V_ceil(n/2)}, for even n it replaces the
    // collapsed singleton, which would leave a distance-1 pair in another subset.
    const int h = n / 2;
    std::vector<NodeId> v4 = p.r == 1 ? std::vector<NodeId>{t.params().D} : std::vector<NodeId>{h, h + 1};
    p.phase_count = 4;
    p.subsets.resize(4);
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < m; ++i) {
            if (std::find(v4.begin(), v4.end(), i) != v4.end()) continue;
            const bool lower = i <= h && i % 3 == j;
            const bool upper = i > h && i % 3 == (p.r + j) % 3;
            if (lower || upper) p.subsets[j].push_back(i);
        }
    }
    p.subsets[3] = v4;
    return p;
}

PhasePartition multicast_partition(const CycleTopology& t) {
    const int m = t.size();
    if (m % 3 != 2) return partition(t);

    PhasePartition p;
    p.r = 2;
    if (m == 5) {
        // C_5 has no distance-3 colouring with 4 colours.
        p.phase_count = 5;
        for (int i = 0; i < m; ++i) p.subsets.push_back({i});
        return p;
    }
    p.phase_count = 4;
    p.subsets.resize(4);
    for (int i = 0; i < m - 8; ++i) p.subsets[i % 3].push_back(i);
    for (int k = 0; k < 8; ++k) p.subsets[k % 4].push_back(m - 8 + k);
    return p;
}

PartitionCheck check_partition(const PhasePartition& p, const CycleTopology& t) {
    PartitionCheck out;
    std::vector<int> seen(t.size(), 0);
    for (const auto& s : p.subsets) {
        for (NodeId v : s) {
            if (v < 0 || v >= t.size()) {
                out.violations.push_back("node " + std::to_string(v) + " outside the ring");
                continue;
            }
            ++seen[v];
        }
    }
    for (int v = 0; v < t.size(); ++v) {
        if (seen[v] != 1) {
            out.violations.push_back("node " + std::to_string(v) + " covered " + std::to_string(seen[v]) + " times");
        }
    }
    for (std::size_t j = 0; j < p.subsets.size(); ++j) {
        const auto& s = p.subsets[j];
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                const int dist = t.distance(s[a], s[b]);
                if (dist >= 3) continue;
                std::string msg = "subset " + std::to_string(j + 1) + ": V" + std::to_string(s[a]) + ", V" +
                                  std::to_string(s[b]) + " at distance " + std::to_string(dist);
                if (j == 3) out.notes.push_back(msg);
                else out.violations.push_back(msg);
            }
        }
    }
    return out;
}

}  // namespace cyclenc
