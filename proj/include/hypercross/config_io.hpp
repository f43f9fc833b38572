#pragma once

#include <string>

#include <json.hpp>

#include "hypercross/config.hpp"

namespace hypercross {

/// {"dim": d, "points": [["p/q", ...], ...]} with exact rational strings.
nlohmann::json to_json(const PointConfig& c);
PointConfig config_from_json(const nlohmann::json& j);

nlohmann::json rationals_to_json(const RationalVector& v);
RationalVector rationals_from_json(const nlohmann::json& j);

PointConfig read_config_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hypercross
