#pragma once

#include "finmat/pipeline/pipeline.hpp"

#include "json.hpp"

#include <string>

namespace finmat {

nlohmann::json entry_to_json(const RealizedSubgroup& R);
RealizedSubgroup entry_from_json(const nlohmann::json& j, const FieldDescriptor& K);

// Deterministic report document (no timing or cache data).
nlohmann::json report_to_json(const EnumerationReport& r);
EnumerationReport report_from_json(const nlohmann::json& j);
std::string report_to_table(const EnumerationReport& r, bool sl_only = false);

nlohmann::json diff_to_json(const ReportDiff& d);

}  // namespace finmat
