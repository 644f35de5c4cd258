#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqftdef/complex.hpp"
#include "tqftdef/frobenius_data.hpp"
#include "tqftdef/fuzz.hpp"
#include "tqftdef/statesum.hpp"

namespace tqftdef {

/// JSON renderings shared by the C API and the command line tool.
std::string check_report_json(const SystemData& system, const std::vector<CheckResult>& results);
std::string invariant_json(const InvariantValue& value);
std::string fuzz_report_json(const FuzzReport& report);
std::string violations_json(const std::vector<Violation>& violations);

}  // namespace tqftdef
