#ifndef IRVZONES_DOCS_HPP
#define IRVZONES_DOCS_HPP

#include <string>

#include <json.hpp>

#include "irvzones/distortion.hpp"
#include "irvzones/election.hpp"
#include "irvzones/kill.hpp"
#include "irvzones/zones.hpp"

namespace irvz {

inline constexpr const char* kToolName = "irvzones";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json trace_to_json(const ElectionTrace& trace);
nlohmann::json kill_to_json(const KillQuery& query, const KillVerdict& verdict);
nlohmann::json zone_report_to_json(const ZoneReport& report);
nlohmann::json zone_enumeration_to_json(const ZoneEnumeration& e);
nlohmann::json distortion_to_json(const DistortionReport& report);

// Round-per-line report: tallies, then the eliminated candidate.
std::string trace_to_text(const ElectionTrace& trace);

// Tab-separated scan rows for external plotting.
std::string distortion_to_table(const DistortionReport& report);

} // namespace irvz

#endif
