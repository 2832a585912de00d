#pragma once

#include "gkmod/lie_algebra.hpp"
#include "gkmod/rep_ops.hpp"
#include "gkmod/variety.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gkmod {

// A malformed document or unparseable literal (CLI exit code 2).
struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A well-formed document with inconsistent contents (CLI exit code 3).
struct ConfigValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TaskSpec {
    std::string kind;
    std::string name;
    nlohmann::json params;
};

struct JobConfig {
    Variety variety;
    std::optional<LieAlgebra> lie;
    std::string preset;  // empty when the Lie data is custom
    std::vector<TaskSpec> tasks;

    JobConfig() : variety(Variety::affine(1)) {}

    const LieAlgebra& algebra() const {
        if (!lie) throw ConfigValidationError("no Lie algebra configured");
        return *lie;
    }
};

// Parses and validates a config document. preset_override, when nonempty,
// replaces the config's lie section by the named preset.
JobConfig parse_config(const nlohmann::json& doc, const std::string& preset_override = "");
JobConfig load_config(const std::string& path, const std::string& preset_override = "");

// Shared literal helpers (all exact; no floats accepted).
ExactMatrix parse_matrix(const nlohmann::json& rows, const std::string& field);
GroupElement parse_group_element(const nlohmann::json& rows, const std::string& field);

// A Lie element reference: either a preset element name ("X+", "a1", ...)
// or an explicit matrix.
LieElement parse_lie_element(const nlohmann::json& ref, const JobConfig& cfg,
                             const std::string& field);

// Word sums for Casimir checks: "default" (presets only) or
// {"terms": [{"coeff": "...", "word": ["X+", "X-"]}, ...]}.
WordSum parse_word_sum(const nlohmann::json& spec, const JobConfig& cfg, const std::string& field);
WordSum default_sl2_casimir(const JobConfig& cfg);

}  // namespace gkmod
