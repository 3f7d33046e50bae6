#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclenc/engine.hpp"

namespace cyclenc {

struct SweepJob {
    Protocol protocol{};
    int n = 0;
    Objective objective{};
    RunOptions options;
};

struct SweepOutcome {
    SweepJob job;
    std::optional<RunResult> result;  // empty when the run threw
    std::string error;                // "<ErrorName>: detail"
};

// Jobs ordered by (n, protocol) as given in the lists; objective defaults per protocol.
std::vector<SweepJob> make_jobs(const std::vector<int>& ns, const std::vector<Protocol>& protocols,
                                std::optional<Objective> objective = std::nullopt, RunOptions options = {});

// Reference implementation: one run after another.
std::vector<SweepOutcome> sweep_serial(const std::vector<SweepJob>& jobs);

// OpenMP fan-out over jobs; output slot i always holds job i.
std::vector<SweepOutcome> sweep_parallel(const std::vector<SweepJob>& jobs);

bool same_outcomes(const std::vector<SweepOutcome>& a, const std::vector<SweepOutcome>& b);

}  // namespace cyclenc
