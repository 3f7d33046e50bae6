#pragma once

#include <string>
#include <vector>

namespace cyclenc {

using NodeId = int;

struct ProtocolParams {
    int D = 0;  // ceil(n/2)
    int d = 0;  // floor((n+1)/4)
};

class CycleTopology {
public:
    explicit CycleTopology(int n);

    int n() const noexcept { return n_; }
    int size() const noexcept { return n_ + 1; }
    NodeId left(NodeId i) const noexcept { return (i + n_) % (n_ + 1); }
    NodeId right(NodeId i) const noexcept { return (i + 1) % (n_ + 1); }
    int distance(NodeId a, NodeId b) const noexcept;
    const ProtocolParams& params() const noexcept { return params_; }

private:
    int n_;
    ProtocolParams params_;
};

inline constexpr int kMinPlayers = 2;

// Throws DomainError for n < 2.
CycleTopology build_cycle(int n);

struct PhasePartition {
    std::vector<std::vector<NodeId>> subsets;  // subset j+1 at index j, each sorted
    int r = 0;                                  // (n+1) mod 3
    int phase_count = 0;

    // 1-based subset label of node v; 0 if v is not covered.
    int slot_of(NodeId v) const;
};

// The Remark's partition used by the gaming protocols (Algorithms 2, 3).
PhasePartition partition(const CycleTopology& t);

// Proper distance-3 colouring used by the multicast protocols. Equals partition()
// unless r == 2, where the Remark's V4 pair is adjacent.
PhasePartition multicast_partition(const CycleTopology& t);

struct PartitionCheck {
    std::vector<std::string> violations;
    std::vector<std::string> notes;  // informational (V4 adjacency)
};

// Distance >= 3 within subsets 1..3; the fourth subset of a 4-phase Remark
// partition is exempt and only reported as a note.
PartitionCheck check_partition(const PhasePartition& p, const CycleTopology& t);

}  // namespace cyclenc
