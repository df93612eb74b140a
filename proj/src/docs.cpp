#include "irvzones/docs.hpp"

#include <sstream>

namespace irvz {

using nlohmann::json;

namespace {

json ratio_json(const Ratio& r) {
    return json{{"num", r.num}, {"den", r.den}, {"approx", r.approx()}};
}

std::string join(const std::vector<int>& values, const char* sep = ",") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

} // namespace

json trace_to_json(const ElectionTrace& trace) {
    json rounds = json::array();
    for (const auto& round : trace.rounds) {
        json tally = json::array();
        for (auto [c, v] : round.tally)
            tally.push_back({{"candidate", c}, {"votes", v}});
        rounds.push_back({{"tally", tally}, {"eliminated", round.eliminated}});
    }
    return json{{"candidates", trace.candidates},
                {"rounds", rounds},
                {"winner", trace.winner}};
}

json kill_to_json(const KillQuery& query, const KillVerdict& verdict) {
    json j{{"designated", query.designated},
           {"allowed", query.allowed},
           {"killed", verdict.killed}};
    if (verdict.killed) j["witness"] = verdict.witness;
    return j;
}

json zone_report_to_json(const ZoneReport& report) {
    json per_vertex = json::array();
    for (const auto& [u, verdict] : report.per_vertex) {
        json e{{"vertex", u}, {"killed", verdict.killed}};
        if (verdict.killed) e["witness"] = verdict.witness;
        per_vertex.push_back(e);
    }
    json j{{"zone", report.zone},
           {"is_zone", report.is_zone},
           {"kill_results", per_vertex}};
    if (report.refutation) {
        j["refutation"] = {{"designated", report.refutation->designated},
                           {"candidates", report.refutation->candidates},
                           {"winner", report.refutation->winner}};
    }
    return j;
}

json zone_enumeration_to_json(const ZoneEnumeration& e) {
    json violations = json::array();
    for (const auto& [a, b] : e.nesting_violations)
        violations.push_back({{"first", a}, {"second", b}});
    return json{{"zones", e.zones}, {"nesting_violations", violations}};
}

json distortion_to_json(const DistortionReport& report) {
    json records = json::array();
    for (const auto& rec : report.records) {
        records.push_back({{"config", rec.config},
                           {"winner", rec.winner},
                           {"sc_winner", rec.sc_winner},
                           {"optimum", rec.optimum},
                           {"sc_optimum", rec.sc_optimum},
                           {"ratio", ratio_json(rec.ratio)}});
    }
    return json{{"policy", report.policy},
                {"records", records},
                {"max_ratio", ratio_json(report.max_ratio)},
                {"argmax_config", report.argmax_config}};
}

std::string trace_to_text(const ElectionTrace& trace) {
    std::ostringstream out;
    out << "candidates: " << join(trace.candidates, " ") << "\n";
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
        const auto& round = trace.rounds[i];
        out << "round " << i + 1 << ":";
        for (auto [c, v] : round.tally) out << " " << c << ":" << v;
        out << " -> eliminated " << round.eliminated << "\n";
    }
    out << "winner: " << trace.winner << "\n";
    return out.str();
}

std::string distortion_to_table(const DistortionReport& report) {
    std::ostringstream out;
    out << "config\twinner\tsc_winner\toptimum\tsc_optimum\tratio_num\tratio_den\tratio\n";
    for (const auto& rec : report.records) {
        out << join(rec.config) << "\t" << rec.winner << "\t" << rec.sc_winner
            << "\t" << rec.optimum << "\t" << rec.sc_optimum << "\t"
            << rec.ratio.num << "\t" << rec.ratio.den << "\t"
            << rec.ratio.approx() << "\n";
    }
    return out.str();
}

} // namespace irvz
