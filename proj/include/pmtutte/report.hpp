#pragma once

#include <json.hpp>

#include <string>

namespace pmtutte {

// Outcome of one executable theorem check on one instance. witness is null
// exactly when the check passed; note carries non-failure remarks (e.g. a
// skipped clause).
struct CheckReport {
    std::string name;
    std::string instanceId;
    bool passed = false;
    nlohmann::json witness;  // structured counterexample
    std::string note;
    double elapsedSeconds = 0.0;
};

nlohmann::ordered_json report_to_json(const CheckReport& report, bool includeElapsed = false);

}  // namespace pmtutte
