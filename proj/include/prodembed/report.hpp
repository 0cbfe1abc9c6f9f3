#pragma once

// Stable JSON report documents: schema-versioned, inputs and seeds echoed so
// every report replays. The CLI appends elapsed_ms last, so everything
// before it is byte-identical for identical inputs and seeds.

#include "prodembed/campaign.hpp"
#include "prodembed/dimension.hpp"
#include "prodembed/linking.hpp"

#include "json.hpp"

#include <string>

namespace prodembed {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// {"schema": 1, "version": ..., "command": ...}
Json report_shell(const std::string& command);

// A join sphere as per-factor selection strings over letters A-D, e.g.
// ["AC", "BD"] for n = 2.
std::string sphere_text(const JoinSphere& s);
Json sphere_json(const JoinSphere& s);

Json dimension_json(const DimensionResult& r);
Json obstruction_json(const ObstructionReport& r);
Json campaign_json(const CampaignResult& r);
Json vanishing_json(const VanishingResult& r);

} // namespace prodembed
