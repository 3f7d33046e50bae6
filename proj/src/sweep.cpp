#include "cyclenc/sweep.hpp"

#include <exception>

#include "cyclenc/errors.hpp"

namespace cyclenc {

std::vector<SweepJob> make_jobs(const std::vector<int>& ns, const std::vector<Protocol>& protocols,
                                std::optional<Objective> objective, RunOptions options) {
    std::vector<SweepJob> jobs;
    for (int n : ns) {
        for (Protocol p : protocols) jobs.push_back({p, n, objective.value_or(default_objective(p)), options});
    }
    return jobs;
}

namespace {

SweepOutcome run_job(const SweepJob& job) {
    SweepOutcome out{job, std::nullopt, {}};
    try {
        out.result = run_protocol(job.protocol, job.n, job.objective, job.options);
    } catch (const EngineError& e) {
        out.error = e.what();
    } catch (const std::exception& e) {
        out.error = std::string("InternalError: ") + e.what();
    }
    return out;
}

}  // namespace

std::vector<SweepOutcome> sweep_serial(const std::vector<SweepJob>& jobs) {
    std::vector<SweepOutcome> out;
    out.reserve(jobs.size());
    for (const SweepJob& job : jobs) out.push_back(run_job(job));
    return out;
}

std::vector<SweepOutcome> sweep_parallel(const std::vector<SweepJob>& jobs) {
    std::vector<SweepOutcome> out(jobs.size());
    const long count = static_cast<long>(jobs.size());
    // Run cost grows ~n^3, so hand out jobs dynamically.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) out[i] = run_job(jobs[i]);
    return out;
}

bool same_outcomes(const std::vector<SweepOutcome>& a, const std::vector<SweepOutcome>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const SweepJob &x = a[i].job, &y = b[i].job;
        if (x.protocol != y.protocol || x.n != y.n || x.objective != y.objective ||
            x.options.compaction != y.options.compaction)
            return false;
        if (a[i].result != b[i].result || a[i].error != b[i].error) return false;
    }
    return true;
}

}  // namespace cyclenc
