#pragma once

#include <string>

#include "reasonkit/pipeline.hpp"

namespace reasonkit {

// One JSON object per report, schema-stable across runs. Terms render as
// arrays of literal strings ("x3", "!x7"); counts render as decimal strings
// because they can exceed 2^64; rationals render as "p/q".
std::string report_to_json_line(const ReasonReport& report);

std::string batch_stats_to_json(const BatchStats& stats);

std::string feature_map_to_json(const FeatureMap& features, const std::vector<Column>& columns);
FeatureMap feature_map_from_json(const std::string& text);

} // namespace reasonkit
