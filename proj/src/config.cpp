#include "gkmod/config.hpp"

#include "gkmod/expr_parse.hpp"

#include <fstream>

namespace gkmod {

namespace {

GaussianRational parse_scalar(const nlohmann::json& j, const std::string& field) {
    if (!j.is_string())
        throw ConfigParseError("field '" + field + "': exact scalars must be strings, not numbers");
    try {
        return gaussian_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigParseError("field '" + field + "': " + e.what());
    }
}

Polynomial parse_poly(const nlohmann::json& j, int n, const std::string& field) {
    if (!j.is_string()) throw ConfigParseError("field '" + field + "': expected an expression string");
    try {
        return parse_polynomial(j.get<std::string>(), n);
    } catch (const std::exception& e) {
        throw ConfigParseError("field '" + field + "': " + e.what());
    }
}

}  // namespace

ExactMatrix parse_matrix(const nlohmann::json& rows, const std::string& field) {
    if (!rows.is_array() || rows.empty())
        throw ConfigParseError("field '" + field + "': expected a non-empty array of rows");
    int n = static_cast<int>(rows.size());
    ExactMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n)
            throw ConfigValidationError("field '" + field + "': matrix must be square (row " +
                                        std::to_string(r) + ")");
        for (int c = 0; c < n; ++c)
            m.at(r, c) = parse_scalar(rows[r][c], field + "[" + std::to_string(r) + "][" +
                                                      std::to_string(c) + "]");
    }
    return m;
}

GroupElement parse_group_element(const nlohmann::json& rows, const std::string& field) {
    ExactMatrix m = parse_matrix(rows, field);
    try {
        return GroupElement(std::move(m));
    } catch (const std::exception& e) {
        throw ConfigValidationError("field '" + field + "': " + e.what());
    }
}

LieElement parse_lie_element(const nlohmann::json& ref, const JobConfig& cfg,
                             const std::string& field) {
    if (ref.is_string()) {
        if (cfg.preset.empty())
            throw ConfigValidationError("field '" + field +
                                        "': named Lie elements need a preset configuration");
        return preset_named_element(cfg.preset, ref.get<std::string>());
    }
    if (ref.is_array()) return parse_matrix(ref, field);
    throw ConfigParseError("field '" + field + "': expected an element name or a matrix");
}

WordSum default_sl2_casimir(const JobConfig& cfg) {
    if (cfg.preset.empty())
        throw ConfigValidationError("default Casimir word is only defined for presets");
    LieElement xp = preset_named_element(cfg.preset, "X+");
    LieElement xm = preset_named_element(cfg.preset, "X-");
    LieElement h = preset_named_element(cfg.preset, "H");
    // X+X- + X-X+ - 2H^2 commutes with the whole algebra under
    // [H, X±] = ±2i X±, [X+, X-] = -4i H.
    WordSum ws;
    OperatorWord w1;
    w1.factors = {{xp, OpTag::dpi_prime}, {xm, OpTag::dpi_prime}};
    OperatorWord w2;
    w2.factors = {{xm, OpTag::dpi_prime}, {xp, OpTag::dpi_prime}};
    OperatorWord w3;
    w3.factors = {{h, OpTag::dpi_prime}, {h, OpTag::dpi_prime}};
    ws.terms = {{GaussianRational(1), w1}, {GaussianRational(1), w2}, {GaussianRational(-2), w3}};
    return ws;
}

WordSum parse_word_sum(const nlohmann::json& spec, const JobConfig& cfg, const std::string& field) {
    if (spec.is_string() && spec.get<std::string>() == "default") return default_sl2_casimir(cfg);
    if (!spec.is_object() || !spec.contains("terms") || !spec["terms"].is_array())
        throw ConfigParseError("field '" + field + "': expected \"default\" or {\"terms\": [...]}");
    WordSum ws;
    int idx = 0;
    for (const auto& term : spec["terms"]) {
        std::string tfield = field + ".terms[" + std::to_string(idx++) + "]";
        if (!term.is_object() || !term.contains("coeff") || !term.contains("word"))
            throw ConfigParseError("field '" + tfield + "': expected {coeff, word}");
        GaussianRational c = parse_scalar(term["coeff"], tfield + ".coeff");
        OperatorWord w;
        for (const auto& el : term["word"])
            w.factors.emplace_back(parse_lie_element(el, cfg, tfield + ".word"), OpTag::dpi_prime);
        ws.terms.emplace_back(std::move(c), std::move(w));
    }
    return ws;
}

JobConfig parse_config(const nlohmann::json& doc, const std::string& preset_override) {
    if (!doc.is_object()) throw ConfigParseError("config root must be a JSON object");
    JobConfig cfg;

    // variety
    if (!doc.contains("variety") || !doc["variety"].is_object())
        throw ConfigValidationError("missing 'variety' section");
    const auto& var = doc["variety"];
    if (!var.contains("ambient_dim") || !var["ambient_dim"].is_number_integer())
        throw ConfigValidationError("field 'variety.ambient_dim': expected an integer");
    int n = var["ambient_dim"].get<int>();
    if (n < 1 || n > 8) throw ConfigValidationError("field 'variety.ambient_dim': out of range [1, 8]");

    MonomialOrder order = MonomialOrder::standard(n);
    if (var.contains("variable_ranking")) {
        const auto& rk = var["variable_ranking"];
        if (!rk.is_array() || static_cast<int>(rk.size()) != n)
            throw ConfigValidationError("field 'variety.variable_ranking': expected " +
                                        std::to_string(n) + " entries");
        std::vector<int> priority;
        for (const auto& e : rk) {
            if (!e.is_number_integer())
                throw ConfigValidationError("field 'variety.variable_ranking': entries are 1-based ints");
            priority.push_back(e.get<int>() - 1);
        }
        try {
            order = MonomialOrder::ranked(priority);
        } catch (const std::exception& e) {
            throw ConfigValidationError(std::string("field 'variety.variable_ranking': ") + e.what());
        }
    }
    if (var.contains("ideal_generator")) {
        Polynomial gen = parse_poly(var["ideal_generator"], n, "variety.ideal_generator");
        try {
            cfg.variety = Variety::hypersurface(n, std::move(gen), order);
        } catch (const std::exception& e) {
            throw ConfigValidationError(std::string("field 'variety.ideal_generator': ") + e.what());
        }
    } else {
        cfg.variety = Variety::affine(n, order);
    }

    // lie
    std::string preset = preset_override;
    if (preset.empty() && doc.contains("lie") && doc["lie"].is_object() &&
        doc["lie"].contains("preset"))
        preset = doc["lie"]["preset"].get<std::string>();

    if (!preset.empty()) {
        cfg.preset = preset;
        if (preset == "sl2_standard")
            cfg.lie = sl2_standard();
        else if (preset == "sl2_adjoint")
            cfg.lie = sl2_adjoint();
        else
            throw ConfigValidationError("field 'lie.preset': unknown preset '" + preset + "'");
    } else if (doc.contains("lie") && doc["lie"].is_object()) {
        const auto& lie = doc["lie"];
        if (!lie.contains("basis"))
            throw ConfigValidationError("field 'lie.basis': required without a preset");
        std::vector<LieElement> basis;
        int bi = 0;
        for (const auto& b : lie["basis"])
            basis.push_back(parse_matrix(b, "lie.basis[" + std::to_string(bi++) + "]"));
        std::optional<LieElement> kgen;
        if (lie.contains("k_generator")) kgen = parse_matrix(lie["k_generator"], "lie.k_generator");
        auto parse_list = [&](const char* key) {
            std::vector<LieElement> out;
            if (lie.contains(key)) {
                int li = 0;
                for (const auto& b : lie[key])
                    out.push_back(
                        parse_matrix(b, std::string("lie.") + key + "[" + std::to_string(li++) + "]"));
            }
            return out;
        };
        try {
            cfg.lie = LieAlgebra(n, std::move(basis), std::move(kgen), parse_list("cartan"),
                                 parse_list("pos_root_vectors"), parse_list("neg_root_vectors"));
        } catch (const std::exception& e) {
            throw ConfigValidationError(std::string("field 'lie': ") + e.what());
        }
    } else {
        throw ConfigValidationError("missing 'lie' section (preset or basis)");
    }
    if (cfg.lie && cfg.lie->ambient_dim() != n)
        throw ConfigValidationError("lie/variety ambient dimension mismatch: " +
                                    std::to_string(cfg.lie->ambient_dim()) + " vs " +
                                    std::to_string(n));

    // tasks
    if (!doc.contains("tasks") || !doc["tasks"].is_array())
        throw ConfigValidationError("missing 'tasks' array");
    int ti = 0;
    for (const auto& t : doc["tasks"]) {
        std::string tfield = "tasks[" + std::to_string(ti++) + "]";
        if (!t.is_object() || !t.contains("kind"))
            throw ConfigValidationError("field '" + tfield + "': expected an object with 'kind'");
        TaskSpec spec;
        spec.kind = t["kind"].get<std::string>();
        spec.name = t.contains("name") ? t["name"].get<std::string>()
                                       : spec.kind + "#" + std::to_string(ti);
        spec.params = t;
        cfg.tasks.push_back(std::move(spec));
    }
    return cfg;
}

JobConfig load_config(const std::string& path, const std::string& preset_override) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ConfigParseError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc, preset_override);
}

}  // namespace gkmod
