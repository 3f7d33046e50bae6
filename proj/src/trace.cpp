#include "cyclenc/trace.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "cyclenc/errors.hpp"

namespace cyclenc {

using json = nlohmann::ordered_json;

std::string_view outcome_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Delivered: return "delivered";
        case OutcomeKind::Collision: return "collision";
        case OutcomeKind::HalfDuplexBusy: return "half_duplex_busy";
        case OutcomeKind::Silence: return "silence";
    }
    return "?";
}

std::optional<OutcomeKind> parse_outcome(std::string_view s) {
    for (auto k : {OutcomeKind::Delivered, OutcomeKind::Collision, OutcomeKind::HalfDuplexBusy, OutcomeKind::Silence}) {
        if (outcome_name(k) == s) return k;
    }
    return std::nullopt;
}

namespace {

json packet_json(const CodedPacket& p) { return json(p.support()); }

CodedPacket packet_from(const json& j) {
    if (!j.is_array()) throw TraceSchemaError("packet must be an index array");
    std::vector<int> idx;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw TraceSchemaError("packet index must be an integer");
        idx.push_back(x.get<int>());
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (idx[i] <= idx[i - 1]) throw TraceSchemaError("packet indices must be sorted and unique");
    }
    return CodedPacket(std::move(idx));
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw TraceSchemaError(std::string("missing or non-integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

const json& array_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw TraceSchemaError(std::string("missing array '") + key + "'");
    return j.at(key);
}

}  // namespace

std::string slot_to_json(const SlotEvent& ev) {
    json j;
    j["slot"] = ev.slot;
    j["round"] = ev.round;
    j["subset_slot"] = ev.subset_slot;
    j["transmitters"] = json::array();
    for (const Transmission& tx : ev.transmitters) {
        j["transmitters"].push_back({{"node", tx.node}, {"packet", packet_json(tx.packet)}});
    }
    j["outcomes"] = json::array();
    for (const Outcome& o : ev.outcomes) {
        json oj{{"node", o.node}, {"kind", std::string(outcome_name(o.kind))}};
        if (o.from) oj["from"] = *o.from;
        if (o.packet) oj["packet"] = packet_json(*o.packet);
        j["outcomes"].push_back(std::move(oj));
    }
    return j.dump();
}

void write_trace(std::ostream& os, const std::vector<SlotEvent>& trace) {
    for (const SlotEvent& ev : trace) os << slot_to_json(ev) << '\n';
}

SlotEvent slot_from_json(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw TraceSchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw TraceSchemaError("record must be an object");
    SlotEvent ev;
    ev.slot = int_field(j, "slot");
    ev.round = int_field(j, "round");
    ev.subset_slot = int_field(j, "subset_slot");
    for (const auto& t : array_field(j, "transmitters")) {
        if (!t.contains("packet")) throw TraceSchemaError("transmitter without packet");
        ev.transmitters.push_back({int_field(t, "node"), packet_from(t.at("packet"))});
    }
    for (const auto& o : array_field(j, "outcomes")) {
        if (!o.contains("kind") || !o.at("kind").is_string()) throw TraceSchemaError("outcome without kind");
        auto kind = parse_outcome(o.at("kind").get<std::string>());
        if (!kind) throw TraceSchemaError("unknown outcome kind '" + o.at("kind").get<std::string>() + "'");
        Outcome out{int_field(o, "node"), *kind, {}, {}};
        if (o.contains("from")) out.from = int_field(o, "from");
        if (o.contains("packet")) out.packet = packet_from(o.at("packet"));
        if (*kind == OutcomeKind::Delivered && (!out.from || !out.packet)) {
            throw TraceSchemaError("delivered outcome needs 'from' and 'packet'");
        }
        ev.outcomes.push_back(std::move(out));
    }
    return ev;
}

std::vector<SlotEvent> read_trace(std::istream& is) {
    std::vector<SlotEvent> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(slot_from_json(line));
        } catch (const TraceSchemaError& e) {
            throw TraceSchemaError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace cyclenc
