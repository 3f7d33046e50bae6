#include "cli_app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclenc/analysis.hpp"
#include "cyclenc/errors.hpp"
#include "cyclenc/sweep.hpp"
#include "cyclenc/validator.hpp"

namespace cyclenc::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("--n: '" + item + "' is not an integer");
        }
        if (pos != item.size()) throw UsageError("--n: '" + item + "' is not an integer");
        if (v < kMinPlayers) throw UsageError("--n: n must be >= " + std::to_string(kMinPlayers) + " (got " + item + ")");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("--n: empty list");
    return out;
}

struct RunRecord {
    SweepOutcome outcome;
    Bounds bounds;
    Conformance conf;
    bool in_scope = true;
};

json record_json(const RunRecord& r) {
    const SweepJob& job = r.outcome.job;
    json j;
    j["protocol"] = protocol_name(job.protocol);
    j["n"] = job.n;
    j["objective"] = objective_name(job.objective);
    j["compaction"] = job.options.compaction;
    j["paper_scope"] = r.in_scope ? "in paper scope" : "out of paper scope";
    j["T_lb"] = r.bounds.T_lb;
    j["T_ub"] = r.bounds.T_ub;
    j["L_kind"] = r.bounds.L_kind == LKind::Exact ? "exact" : "upper_bound";
    if (!r.outcome.result) {
        j["error"] = r.outcome.error;
        j["conformance"] = "FAIL";
        return j;
    }
    const RunResult& res = *r.outcome.result;
    j["T"] = res.T;
    j["L"] = res.L;
    j["L_expected"] = r.bounds.L_limit(res.T);
    j["conformance"] = r.conf.pass ? "PASS" : "FAIL";
    j["T_ok"] = r.conf.T_ok;
    j["L_ok"] = r.conf.L_ok;
    j["completion"] = {{"round", res.completion.round}, {"subset_slot", res.completion.subset_slot}};
    j["overshoot_slots"] = res.overshoot_slots;
    j["redundant_deliveries"] = res.redundant_deliveries;
    j["collisions"] = res.collisions;
    j["violations"] = res.violations;
    return j;
}

int cmd_run(const std::string& protocol, const std::string& n_arg, const std::string& objective, bool compaction,
            const std::string& format, const std::string& trace_out, std::ostream& out, std::ostream& err) {
    const auto proto = parse_protocol(protocol);
    if (!proto) throw UsageError("--protocol: unknown protocol '" + protocol + "'");
    std::optional<Objective> obj;
    if (!objective.empty()) {
        obj = parse_objective(objective);
        if (!obj) throw UsageError("--objective: expected gaming or multicast");
    }
    const auto ns = parse_n_list(n_arg);
    if (!trace_out.empty() && ns.size() != 1) throw UsageError("--trace-out needs a single --n value");

    const auto outcomes = sweep_parallel(make_jobs(ns, {*proto}, obj, RunOptions{compaction}));
    std::vector<RunRecord> records;
    bool ok = true;
    for (const SweepOutcome& o : outcomes) {
        RunRecord r{o, bounds_for(o.job.protocol, o.job.n), {}, o.job.objective == default_objective(o.job.protocol)};
        if (o.result) {
            r.conf = check_run(*o.result, r.bounds);
            ok = ok && r.conf.pass && o.result->violations.empty();
        } else {
            ok = false;
            err << o.error << '\n';
        }
        records.push_back(std::move(r));
    }

    if (!trace_out.empty() && records.front().outcome.result) {
        std::ofstream f(trace_out);
        if (!f) throw std::runtime_error("cannot write " + trace_out);
        write_trace(f, records.front().outcome.result->trace);
    }

    if (format == "json") {
        for (const RunRecord& r : records) out << record_json(r).dump() << '\n';
    } else if (format == "csv") {
        out << "protocol,n,objective,compaction,T,L,T_lb,T_ub,L_expected,conformance,scope\n";
        for (const RunRecord& r : records) {
            const auto& res = r.outcome.result;
            out << protocol_name(r.outcome.job.protocol) << ',' << r.outcome.job.n << ','
                << objective_name(r.outcome.job.objective) << ',' << (compaction ? "on" : "off") << ','
                << (res ? std::to_string(res->T) : "") << ',' << (res ? std::to_string(res->L) : "") << ','
                << r.bounds.T_lb << ',' << r.bounds.T_ub << ','
                << (res ? std::to_string(r.bounds.L_limit(res->T)) : "") << ','
                << (res && r.conf.pass ? "PASS" : "FAIL") << ',' << (r.in_scope ? "paper" : "out-of-scope") << '\n';
        }
    } else {
        for (const RunRecord& r : records) {
            out << protocol_title(r.outcome.job.protocol) << " n=" << r.outcome.job.n
                << " objective=" << objective_name(r.outcome.job.objective);
            if (!r.outcome.result) {
                out << " error: " << r.outcome.error << " FAIL\n";
                continue;
            }
            out << ' ' << r.conf.detail << ' ' << (r.conf.pass ? "PASS" : "FAIL");
            if (!r.in_scope) out << " (out of paper scope)";
            out << '\n';
            for (const auto& v : r.outcome.result->violations) out << "  violation: " << v << '\n';
        }
    }
    return ok ? kOk : kFail;
}

int cmd_table(const std::string& n_arg, bool compaction, const std::string& format, std::ostream& out) {
    const auto rows = comparison_table(parse_n_list(n_arg), {std::begin(kAllProtocols), std::end(kAllProtocols)},
                                       RunOptions{compaction});
    if (format == "csv") {
        out << table_csv(rows);
    } else if (format == "json") {
        for (const TableRow& r : rows) {
            json j{{"n", r.n},
                   {"protocol", protocol_name(r.protocol)},
                   {"T_lb", r.T_lb},
                   {"T_ub", r.T_ub},
                   {"T_measured", r.T_measured},
                   {"L_formula_or_bound", r.L_paper},
                   {"L_measured", r.L_measured}};
            if (!r.error.empty()) j["error"] = r.error;
            out << j.dump() << '\n';
        }
    } else {
        out << table_markdown(rows);
    }
    for (const TableRow& r : rows) {
        if (!r.error.empty()) return kFail;
    }
    return kOk;
}

int cmd_validate(const std::string& path, const std::string& n_arg, const std::string& objective, int claimed_T,
                 int claimed_L, std::ostream& out, std::ostream& err) {
    const auto ns = parse_n_list(n_arg);
    if (ns.size() != 1) throw UsageError("validate takes a single --n");
    const auto obj = parse_objective(objective);
    if (!obj) throw UsageError("--objective: expected gaming or multicast");
    std::ifstream f(path);
    if (!f) {
        err << "file error: cannot read " << path << '\n';
        return kInternal;
    }
    std::vector<SlotEvent> trace;
    std::vector<Violation> found;
    try {
        trace = read_trace(f);
        found = validate_trace(trace, ns.front(), *obj, claimed_T, claimed_L);
    } catch (const TraceSchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return kInternal;
    }
    for (const Violation& v : found) out << to_string(v) << '\n';
    if (found.empty()) out << "OK " << trace.size() << " slots, no violations\n";
    return found.empty() ? kOk : kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Slot-synchronous simulator of routing and network-coding protocols on a ring"};
    app.require_subcommand(1);

    std::string protocol, n_arg, objective, format = "table", trace_out, validate_in;
    bool compaction = false;
    int claimed_T = -1, claimed_L = -1;

    auto* run = app.add_subcommand("run", "run one protocol for one or more n");
    run->add_option("--protocol", protocol, "circular | nc-multicast | routing | nc-gaming")->required();
    run->add_option("--n", n_arg, "number of players, scalar or comma list")->required();
    run->add_option("--objective", objective, "gaming | multicast (default per protocol)");
    run->add_flag("--compaction{true},--no-compaction{false}", compaction, "skip slots with no transmitters");
    run->add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    run->add_option("--trace-out", trace_out, "write the JSON-lines trace here");

    auto* table = app.add_subcommand("table", "bounds vs measured values for all four protocols");
    table->add_option("--n", n_arg, "comma list of n")->required();
    table->add_flag("--compaction{true},--no-compaction{false}", compaction, "skip slots with no transmitters");
    table->add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));

    auto* validate = app.add_subcommand("validate", "re-check a JSON-lines trace");
    validate->add_option("--validate-in", validate_in, "trace file")->required();
    validate->add_option("--n", n_arg, "number of players")->required();
    validate->add_option("--objective", objective, "gaming | multicast")->required();
    validate->add_option("--claimed-T", claimed_T, "claimed period T")->required();
    validate->add_option("--claimed-L", claimed_L, "claimed emission count L")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (*run) return cmd_run(protocol, n_arg, objective, compaction, format, trace_out, out, err);
        if (*table) return cmd_table(n_arg, compaction, format, out);
        return cmd_validate(validate_in, n_arg, objective, claimed_T, claimed_L, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const EngineError& e) {
        err << e.name() << ": " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace cyclenc::cli
