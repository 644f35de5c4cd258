#pragma once

#include <string>

#include "json.hpp"

namespace tqftdef::detail {

/// Indented JSON with sorted keys; arrays of scalars stay on one line.
std::string pretty_json(const nlohmann::json& value);

}  // namespace tqftdef::detail
