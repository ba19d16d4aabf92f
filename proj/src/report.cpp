#include <pmtutte/report.hpp>

namespace pmtutte {

nlohmann::ordered_json report_to_json(const CheckReport& report, bool includeElapsed) {
    nlohmann::ordered_json out;
    out["check"] = report.name;
    out["instance"] = report.instanceId;
    out["passed"] = report.passed;
    out["witness"] = report.witness;
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    if (includeElapsed) {
        out["elapsed_seconds"] = report.elapsedSeconds;
    }
    return out;
}

}  // namespace pmtutte
