#include "gkmod/report.hpp"

#include <cstdio>
#include <sstream>

namespace gkmod {

std::string format_float(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", x);
    return buf;
}

nlohmann::ordered_json report_to_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["tool"] = "gkmod";
    doc["format"] = 1;
    nlohmann::ordered_json tasks = nlohmann::ordered_json::array();
    for (const auto& t : report.tasks) {
        nlohmann::ordered_json jt;
        jt["kind"] = t.kind;
        jt["name"] = t.name;
        jt["verdict"] = t.verdict;
        jt["params"] = t.params;
        jt["data"] = t.data;
        if (!t.error.empty()) jt["error"] = t.error;
        tasks.push_back(std::move(jt));
    }
    doc["tasks"] = std::move(tasks);
    doc["all_passed"] = report.all_passed();
    return doc;
}

std::string report_to_markdown(const Report& report) {
    std::ostringstream os;
    os << "# gkmod report\n\n";
    os << "| task | kind | verdict | time (s) |\n|---|---|---|---|\n";
    for (const auto& t : report.tasks) {
        char tbuf[32];
        std::snprintf(tbuf, sizeof(tbuf), "%.3f", t.seconds);
        os << "| " << t.name << " | " << t.kind << " | " << (t.verdict ? "pass" : "FAIL") << " | "
           << tbuf << " |\n";
    }
    os << "\n";
    for (const auto& t : report.tasks) {
        os << "## " << t.name << "\n\n";
        os << "- kind: `" << t.kind << "`\n";
        os << "- verdict: " << (t.verdict ? "pass" : "**FAIL**") << "\n";
        if (!t.error.empty()) os << "- error: " << t.error << "\n";
        if (!t.params.empty()) os << "- params: `" << t.params.dump() << "`\n";
        if (!t.data.empty()) os << "\n```json\n" << t.data.dump(2) << "\n```\n";
        os << "\n";
    }
    return os.str();
}

bool validate_report_json(const nlohmann::json& doc, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!doc.is_object()) return fail("root is not an object");
    if (!doc.contains("tool") || doc["tool"] != "gkmod") return fail("missing tool tag");
    if (!doc.contains("format") || !doc["format"].is_number_integer()) return fail("missing format");
    if (!doc.contains("all_passed") || !doc["all_passed"].is_boolean())
        return fail("missing all_passed");
    if (!doc.contains("tasks") || !doc["tasks"].is_array()) return fail("missing tasks array");
    bool all = true;
    for (const auto& t : doc["tasks"]) {
        if (!t.is_object()) return fail("task entry is not an object");
        for (const char* key : {"kind", "name"})
            if (!t.contains(key) || !t[key].is_string()) return fail(std::string("task lacks ") + key);
        if (!t.contains("verdict") || !t["verdict"].is_boolean()) return fail("task lacks verdict");
        if (!t.contains("params") || !t["params"].is_object()) return fail("task lacks params");
        if (!t.contains("data")) return fail("task lacks data");
        all = all && t["verdict"].get<bool>();
    }
    if (all != doc["all_passed"].get<bool>()) return fail("all_passed is inconsistent");
    return true;
}

}  // namespace gkmod
