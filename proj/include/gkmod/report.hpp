#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace gkmod {

struct TaskResult {
    std::string kind;
    std::string name;
    bool verdict = false;
    nlohmann::ordered_json params;  // truncation parameters etc., echoed
    nlohmann::ordered_json data;    // tables, dimensions, certificates
    std::string error;              // nonempty when the task threw
    double seconds = 0.0;           // markdown only; never in report.json
};

struct Report {
    std::vector<TaskResult> tasks;
    bool all_passed() const {
        for (const auto& t : tasks)
            if (!t.verdict) return false;
        return true;
    }
};

// Fixed-precision float formatting ("%.12e"); floats are serialized as
// strings so identical configs produce byte-identical reports.
std::string format_float(double x);

// Deterministic machine report: no timing, fixed key order.
nlohmann::ordered_json report_to_json(const Report& report);

// Human-readable tables, including wall-clock timing.
std::string report_to_markdown(const Report& report);

// Structural validation of a machine report against the published schema
// (docs/report_schema.json describes the same shape).
bool validate_report_json(const nlohmann::json& doc, std::string* why = nullptr);

}  // namespace gkmod
