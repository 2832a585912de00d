#include "gkmod/engine.hpp"

#include "gkmod/approx.hpp"
#include "gkmod/expr_parse.hpp"
#include "gkmod/isotypic.hpp"
#include "gkmod/log.hpp"
#include "gkmod/module_lab.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <random>

namespace gkmod {

namespace {

using nlohmann::ordered_json;

int param_int(const nlohmann::json& params, const char* key, int fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number_integer())
        throw ConfigValidationError(std::string("field '") + key + "': expected an integer");
    return params[key].get<int>();
}

GenerationLimits param_limits(const nlohmann::json& params) {
    GenerationLimits lim;
    lim.l_max = param_int(params, "l_max", lim.l_max);
    lim.l_stab = param_int(params, "l_stab", lim.l_stab);
    return lim;
}

Polynomial param_poly(const JobConfig& cfg, const nlohmann::json& params, const char* key) {
    if (!params.contains(key) || !params[key].is_string())
        throw ConfigValidationError(std::string("field '") + key + "': expected an expression string");
    try {
        return cfg.variety.normal_form(
            parse_polynomial(params[key].get<std::string>(), cfg.variety.ambient_dim()));
    } catch (const ConfigValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigParseError(std::string("field '") + key + "': " + e.what());
    }
}

// Small deterministic source of exact rationals for randomized exact checks.
struct ExactRng {
    std::mt19937 rng;
    explicit ExactRng(unsigned seed) : rng(seed) {}
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rational small_rational(long max_num = 3, long max_den = 3) {
        long num = pick(-max_num, max_num);
        long den = pick(1, max_den);
        return make_rational(num, den);
    }
};

// det-1 matrix assembled from elementary factors, then transported to the
// active preset's ambient space.
GroupElement random_group_element(const JobConfig& cfg, ExactRng& rng) {
    Rational t = rng.small_rational(2, 4);
    Rational s = rng.small_rational(2, 4);
    long u_num = rng.pick(1, 3);
    ExactMatrix upper(2, 2), lower(2, 2), diag(2, 2);
    upper.at(0, 0) = upper.at(1, 1) = GaussianRational::one();
    upper.at(0, 1) = GaussianRational(t);
    lower.at(0, 0) = lower.at(1, 1) = GaussianRational::one();
    lower.at(1, 0) = GaussianRational(s);
    diag.at(0, 0) = GaussianRational(make_rational(u_num));
    diag.at(1, 1) = GaussianRational(make_rational(1, u_num));
    GroupElement g(upper * lower * diag);
    if (cfg.preset == "sl2_adjoint") return adjoint_embed_group(g, sl2_adjoint_frame());
    return g;
}

LieElement random_lie_element(const JobConfig& cfg, ExactRng& rng) {
    const auto& basis = cfg.algebra().basis();
    ExactMatrix acc(cfg.algebra().ambient_dim(), cfg.algebra().ambient_dim());
    bool nonzero = false;
    while (!nonzero) {
        for (const auto& b : basis) {
            Rational c = rng.small_rational(2, 2);
            if (c != 0) {
                acc = acc + b.scaled(GaussianRational(c));
                nonzero = true;
            }
        }
    }
    return acc;
}

std::vector<std::vector<double>> unit_grid(int n, int per_axis) {
    std::vector<std::vector<double>> pts;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<double> p(n);
        for (int v = 0; v < n; ++v)
            p[v] = per_axis == 1 ? 0.0 : -1.0 + 2.0 * idx[v] / (per_axis - 1);
        pts.push_back(std::move(p));
        int v = 0;
        for (; v < n; ++v) {
            if (++idx[v] < per_axis) break;
            idx[v] = 0;
        }
        if (v == n) break;
    }
    return pts;
}

// Closed-form operators the raw matrices must reproduce.
struct GoldenOps {
    std::function<Polynomial(const Polynomial&)> xp, xm, h;
};

GoldenOps golden_ops(const JobConfig& cfg) {
    const int n = cfg.variety.ambient_dim();
    GoldenOps ops;
    GaussianRational i = GaussianRational::i();
    if (cfg.preset == "sl2_standard") {
        Polynomial qp = Polynomial::variable(n, 0) + Polynomial::variable(n, 1).scaled(i);
        Polynomial qm = Polynomial::variable(n, 0) - Polynomial::variable(n, 1).scaled(i);
        ops.xp = [=](const Polynomial& p) {
            return qp.scaled(i) * (p.partial(0) + p.partial(1).scaled(i));
        };
        ops.xm = [=](const Polynomial& p) {
            return qm.scaled(-i) * (p.partial(0) - p.partial(1).scaled(i));
        };
        ops.h = [n](const Polynomial& p) {
            return Polynomial::variable(n, 0) * p.partial(1) - Polynomial::variable(n, 1) * p.partial(0);
        };
        return ops;
    }
    if (cfg.preset == "sl2_adjoint") {
        Polynomial qp = Polynomial::variable(n, 0) + Polynomial::variable(n, 1).scaled(i);
        Polynomial qm = Polynomial::variable(n, 0) - Polynomial::variable(n, 1).scaled(i);
        Polynomial m3 = Polynomial::variable(n, 2);
        GaussianRational twoi = i * GaussianRational(2);
        ops.xp = [=](const Polynomial& p) {
            return (m3 * (p.partial(0) - p.partial(1).scaled(i)) + qm * p.partial(2)).scaled(twoi);
        };
        ops.xm = [=](const Polynomial& p) {
            return (m3 * (p.partial(0) + p.partial(1).scaled(i)) + qp * p.partial(2)).scaled(-twoi);
        };
        ops.h = [n](const Polynomial& p) {
            return (Polynomial::variable(n, 1) * p.partial(0) -
                    Polynomial::variable(n, 0) * p.partial(1))
                .scaled(GaussianRational(2));
        };
        return ops;
    }
    throw ConfigValidationError("task 'verify_operators' needs a preset configuration");
}

// ---- task implementations -------------------------------------------------

void task_verify_operators(const JobConfig& cfg, const nlohmann::json& params, unsigned seed,
                           TaskResult& out) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 6);
    int pairs = param_int(params, "equivariance_pairs", 10);
    double tol = 1e-10;
    out.params["max_degree"] = d;
    out.params["equivariance_pairs"] = pairs;
    out.params["tolerance"] = format_float(tol);

    GoldenOps golden = golden_ops(cfg);
    LieElement xp = preset_named_element(cfg.preset, "X+");
    LieElement xm = preset_named_element(cfg.preset, "X-");
    LieElement h = preset_named_element(cfg.preset, "H");

    bool golden_ok = true;
    for (const auto& mono : v.nf_monomials_up_to(d)) {
        Polynomial p = Polynomial::monomial(v.ambient_dim(), mono, GaussianRational::one());
        if (apply_drho(xp, p, v) != v.normal_form(golden.xp(p)) ||
            apply_drho(xm, p, v) != v.normal_form(golden.xm(p)) ||
            apply_drho(h, p, v) != v.normal_form(golden.h(p))) {
            golden_ok = false;
            break;
        }
    }
    out.data["golden_operators_exact"] = golden_ok;

    // Conjugation identity, sampled with symbolically derived closed forms.
    ExactRng rng(seed * 977 + 13);
    const int n = v.ambient_dim();
    std::vector<std::vector<double>> points =
        v.has_ideal() ? sample_points(v, 25, 1.0, seed) : unit_grid(n, n == 2 ? 5 : 3);
    double max_resid = 0.0;
    Polynomial phi = Polynomial::constant(n, GaussianRational::one()) +
                     v.normal_form(Polynomial::variable(n, 0));
    for (int k = 0; k < pairs; ++k) {
        GroupElement g = random_group_element(cfg, rng);
        LieElement x = random_lie_element(cfg, rng);
        max_resid = std::max(max_resid, ad_equivariance_check(g, x, phi, v, points));
    }
    out.data["max_equivariance_residual"] = format_float(max_resid);
    out.verdict = golden_ok && max_resid <= tol;
}

void task_commutators(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    const LieAlgebra& lie = cfg.algebra();
    int d = param_int(params, "max_degree", 6);
    out.params["max_degree"] = d;

    bool all_ok = true;
    ordered_json table = ordered_json::array();
    for (int i = 0; i < lie.dim(); ++i) {
        for (int j = i + 1; j < lie.dim(); ++j) {
            bool ok = check_hom_identity(lie.basis()[i], lie.basis()[j], d, v);
            all_ok = all_ok && ok;
            table.push_back(ordered_json{{"pair", {i, j}}, {"ok", ok}});
        }
    }
    out.data["basis_pairs"] = table;

    if (!cfg.preset.empty()) {
        LieElement xp = preset_named_element(cfg.preset, "X+");
        LieElement xm = preset_named_element(cfg.preset, "X-");
        LieElement h = preset_named_element(cfg.preset, "H");
        GaussianRational m4i(Rational(0), Rational(-4));
        bool sl2_ok = bracket(xp, xm) == h.scaled(m4i);
        bool op_ok = check_hom_identity(xp, xm, d, v);
        out.data["sl2_bracket_matrix_ok"] = sl2_ok;
        out.data["sl2_bracket_operator_ok"] = op_ok;
        all_ok = all_ok && sl2_ok && op_ok;
    }
    out.verdict = all_ok;
}

void task_vkl_table(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    if (cfg.preset != "sl2_adjoint" || v.has_ideal())
        throw ConfigValidationError("task 'vkl_table' runs on preset sl2_adjoint over R^3");
    int k_max = param_int(params, "k_max", 6);
    out.params["k_max"] = k_max;

    const int n = 3;
    Polynomial pg = sl2_adjoint_invariant();
    Polynomial qm = Polynomial::variable(n, 0) - Polynomial::variable(n, 1).scaled(GaussianRational::i());

    bool all_ok = true;
    ordered_json table = ordered_json::array();
    for (int k = 0; k <= k_max; ++k) {
        std::vector<GradedSubspace> parts;
        int dim_sum = 0;
        for (int l = 0; 2 * l <= k; ++l) {
            Polynomial seed = pg.pow(l) * qm.pow(k - 2 * l);
            GradedSubspace space = generate_drho_module(seed, cfg.algebra(), v);
            int expected = 2 * (k - 2 * l) + 1;
            bool ok = space.dim() == expected;
            all_ok = all_ok && ok;
            dim_sum += space.dim();
            parts.push_back(space);
            table.push_back(ordered_json{
                {"k", k}, {"l", l}, {"dim", space.dim()}, {"expected", expected}, {"ok", ok}});
        }
        // The layer C^k[R^3] must decompose as the direct sum of the parts.
        int layer_dim = (k + 1) * (k + 2) / 2;
        std::vector<Polynomial> layer_monos;
        for (const auto& mono : v.nf_monomials_up_to(k))
            if (monomial_degree(mono) == k)
                layer_monos.push_back(Polynomial::monomial(n, mono, GaussianRational::one()));
        GradedSubspace layer = GradedSubspace::from_vectors(layer_monos, n, k, v.order());
        GradedSubspace total(n, k, v.order());
        for (const auto& part : parts) total = total.sum(part);
        bool direct = dim_sum == layer_dim && total.equals(layer);
        all_ok = all_ok && direct;
        table.push_back(ordered_json{{"k", k},
                                     {"layer_dim", layer_dim},
                                     {"sum_of_dims", dim_sum},
                                     {"direct_sum_ok", direct}});
    }
    out.data["table"] = table;
    out.verdict = all_ok;
}

ordered_json isotypic_dims_json(const GradedSubspace& space, const LieAlgebra& lie,
                                const Variety& v) {
    ordered_json dims = ordered_json::object();
    for (const auto& [idx, part] : isotypic_decompose(space, lie, v))
        dims[std::to_string(idx)] = part.dim();
    return dims;
}

ordered_json handle_json(const SubmoduleHandle& h) {
    ordered_json j;
    j["dim"] = h.space.dim();
    j["stabilized"] = h.stabilized;
    j["rounds"] = h.rounds;
    j["words_applied"] = h.words_applied;
    j["max_degree"] = h.max_degree;
    j["l_max"] = h.limits.l_max;
    j["l_stab"] = h.limits.l_stab;
    return j;
}

void task_submodule(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 6);
    GenerationLimits lim = param_limits(params);
    Polynomial seed = param_poly(cfg, params, "seed");
    out.params["max_degree"] = d;
    out.params["l_max"] = lim.l_max;
    out.params["l_stab"] = lim.l_stab;
    out.params["seed"] = seed.to_string();

    SubmoduleHandle h = generate_submodule(seed, cfg.algebra(), v, d, lim);
    out.data["model"] = handle_json(h);
    out.data["isotypic_dims"] = isotypic_dims_json(h.space, cfg.algebra(), v);
    out.verdict = h.stabilized;
}

void task_reducing_chain(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 8);
    GenerationLimits lim = param_limits(params);
    Polynomial seed = param_poly(cfg, params, "seed");
    if (!params.contains("ops") || !params["ops"].is_array())
        throw ConfigValidationError("field 'ops': expected an array of Lie elements");
    std::vector<LieElement> ops;
    int oi = 0;
    for (const auto& el : params["ops"])
        ops.push_back(parse_lie_element(el, cfg, "ops[" + std::to_string(oi++) + "]"));
    out.params["max_degree"] = d;
    out.params["l_max"] = lim.l_max;
    out.params["l_stab"] = lim.l_stab;
    out.params["seed"] = seed.to_string();
    out.params["chain_length"] = static_cast<int>(ops.size()) + 1;

    ReducingChain chain = build_reducing_chain(seed, ops, cfg.algebra(), v, d, lim);
    ordered_json steps = ordered_json::array();
    bool ok = true;
    int prev_dim = -1;
    for (size_t i = 0; i < chain.handles.size(); ++i) {
        ordered_json step = handle_json(chain.handles[i]);
        step["seed"] = chain.seeds[i].to_string();
        if (i > 0) {
            step["included_in_previous"] = static_cast<bool>(chain.inclusion_ok[i - 1]);
            ok = ok && chain.inclusion_ok[i - 1];
            ok = ok && chain.handles[i].space.dim() <= prev_dim;
        }
        prev_dim = chain.handles[i].space.dim();
        steps.push_back(std::move(step));
    }
    out.data["chain"] = steps;
    out.verdict = ok;
}

void task_direct_sum(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out,
                     std::vector<std::string> seed_exprs = {}) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 6);
    GenerationLimits lim = param_limits(params);
    bool require_independence = true;
    if (params.contains("require_independence"))
        require_independence = params["require_independence"].get<bool>();

    if (seed_exprs.empty()) {
        if (!params.contains("seeds") || !params["seeds"].is_array())
            throw ConfigValidationError("field 'seeds': expected an array of expressions");
        for (const auto& s : params["seeds"]) seed_exprs.push_back(s.get<std::string>());
    }
    out.params["max_degree"] = d;
    out.params["l_max"] = lim.l_max;
    out.params["l_stab"] = lim.l_stab;
    out.params["seeds"] = seed_exprs;
    out.params["require_independence"] = require_independence;

    std::vector<SubmoduleHandle> handles;
    for (const auto& expr : seed_exprs) {
        Polynomial seed = cfg.variety.normal_form(parse_polynomial(expr, v.ambient_dim()));
        handles.push_back(generate_submodule(seed, cfg.algebra(), v, d, lim));
    }
    GradedSubspace target = v.full_truncation(d);
    DirectSumReport rep = direct_sum_check(handles, target);

    ordered_json jr;
    jr["dims"] = rep.dims;
    jr["dim_sum"] = rep.dim_sum;
    jr["target_dim"] = rep.target_dim;
    jr["pairwise_intersections"] = rep.pairwise_intersections;
    jr["pairwise_trivial"] = rep.pairwise_trivial;
    jr["spanning"] = rep.spanning;
    jr["all_stabilized"] = rep.all_stabilized;
    out.data["direct_sum"] = jr;
    out.verdict = rep.spanning && rep.all_stabilized &&
                  (!require_independence || (rep.pairwise_trivial && rep.dim_sum == rep.target_dim));
}

void task_isotypic_table(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 6);
    out.params["max_degree"] = d;

    auto dims = isotypic_dimensions(cfg.algebra(), v, d);
    int total = 0;
    ordered_json jd = ordered_json::object();
    std::vector<int> indices;
    for (const auto& [idx, dim] : dims) {
        jd[std::to_string(idx)] = dim;
        total += dim;
        indices.push_back(idx);
    }
    if (params.contains("indices")) {
        indices.clear();
        for (const auto& e : params["indices"]) indices.push_back(e.get<int>());
        out.params["indices"] = indices;
    }
    int full_dim = static_cast<int>(v.nf_monomials_up_to(d).size());
    bool projectors_ok = projector_identities_check(indices, d, cfg.algebra(), v);
    out.data["dims"] = jd;
    out.data["total"] = total;
    out.data["full_dim"] = full_dim;
    out.data["projector_identities_ok"] = projectors_ok;
    out.verdict = total == full_dim && projectors_ok;
}

void task_weight_table(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 6);
    out.params["max_degree"] = d;
    if (!params.contains("weights") || !params["weights"].is_array())
        throw ConfigValidationError("field 'weights': expected an array of weight value lists");

    ordered_json table = ordered_json::array();
    for (const auto& wspec : params["weights"]) {
        std::vector<GaussianRational> values;
        if (wspec.is_array()) {
            for (const auto& s : wspec) values.push_back(gaussian_from_string(s.get<std::string>()));
        } else {
            values.push_back(gaussian_from_string(wspec.get<std::string>()));
        }
        if (values.empty()) throw ConfigValidationError("field 'weights': empty weight value list");
        GradedSubspace space = weight_space(values, cfg.algebra(), v, d);
        std::string key = "(";
        for (size_t k = 0; k < values.size(); ++k) key += (k ? "," : "") + values[k].to_string();
        key += ")";
        table.push_back(ordered_json{{"weight", key}, {"dim", space.dim()}});
    }
    out.data["table"] = table;
    out.verdict = true;
}

void task_highest_weight(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    const Variety& v = cfg.variety;
    int d = param_int(params, "max_degree", 6);
    GenerationLimits lim = param_limits(params);
    Polynomial seed = param_poly(cfg, params, "seed");
    std::optional<WordSum> casimir;
    if (params.contains("casimir")) casimir = parse_word_sum(params["casimir"], cfg, "casimir");
    out.params["max_degree"] = d;
    out.params["l_max"] = lim.l_max;
    out.params["l_stab"] = lim.l_stab;
    out.params["seed"] = seed.to_string();
    out.params["casimir"] = casimir.has_value();

    HighestWeightReport rep = highest_weight_check(seed, cfg.algebra(), v, d, casimir, lim);
    ordered_json j;
    std::string wkey = "(";
    for (size_t k = 0; k < rep.weight.size(); ++k)
        wkey += (k ? "," : "") + rep.weight[k].to_string();
    j["weight"] = wkey + ")";
    j["nplus_images_in_vnp"] = rep.nplus_images_in_vnp;
    j["nminus_span_property"] = rep.nminus_span_property;
    j["vp_dim"] = rep.vp_dim;
    j["vnp_dim"] = rep.vnp_dim;
    j["vp_stabilized"] = rep.vp_stabilized;
    j["vnp_stabilized"] = rep.vnp_stabilized;
    j["nminus_stabilized"] = rep.nminus_stabilized;
    ordered_json qd = ordered_json::object();
    for (const auto& [key, dim] : rep.quotient_weight_dims) qd[key] = dim;
    j["quotient_weight_dims"] = qd;
    if (rep.casimir_checked) {
        j["casimir_scalar"] = rep.casimir_scalar;
        if (rep.casimir_scalar) j["casimir_value"] = rep.casimir_value.to_string();
    }
    out.data["report"] = j;
    out.verdict = rep.nplus_images_in_vnp && rep.nminus_span_property && rep.vp_stabilized &&
                  rep.vnp_stabilized && rep.nminus_stabilized &&
                  (!rep.casimir_checked || rep.casimir_scalar);
}

void task_approx_certificate(const JobConfig& cfg, const nlohmann::json& params, unsigned seed,
                             TaskResult& out) {
    const Variety& v = cfg.variety;
    if (!params.contains("group_element"))
        throw ConfigValidationError("field 'group_element': required");
    GroupElement g = parse_group_element(params["group_element"], "group_element");
    if (g.dim() != v.ambient_dim())
        throw ConfigValidationError("field 'group_element': size != ambient_dim");
    Polynomial p = params.contains("p") ? param_poly(cfg, params, "p")
                                        : Polynomial::constant(v.ambient_dim(), GaussianRational::one());
    std::vector<int> orders;
    if (params.contains("orders"))
        for (const auto& e : params["orders"]) orders.push_back(e.get<int>());
    else
        for (int k = 1; k <= 8; ++k) orders.push_back(k);
    int budget = param_int(params, "budget", 2000);
    out.params["orders"] = orders;
    out.params["budget"] = budget;
    out.params["p"] = p.to_string();
    out.params["seed_rng"] = seed;

    ordered_json certs = ordered_json::array();
    bool sound = true, decreasing = true;
    double prev_tail = HUGE_VAL;
    bool kappa_positive = false;
    for (int k : orders) {
        ApproxCertificate cert = certify(g, p, k, v, budget, seed);
        kappa_positive = cert.kappa_of_g_inv > 0;
        ordered_json jc;
        jc["k"] = cert.k;
        jc["kappa_g"] = rational_to_string(cert.kappa_of_g);
        jc["kappa_g_inv"] = rational_to_string(cert.kappa_of_g_inv);
        jc["c_upper"] = format_float(cert.c_upper);
        jc["tail"] = format_float(cert.tail);
        jc["empirical_sup"] = format_float(cert.empirical_sup);
        jc["valid"] = cert.valid;
        certs.push_back(std::move(jc));
        if (cert.valid && cert.empirical_sup > cert.tail) sound = false;
        if (kappa_positive ? cert.tail >= prev_tail : cert.tail > prev_tail) decreasing = false;
        prev_tail = cert.tail;
    }
    out.data["certificates"] = certs;
    out.data["empirical_within_tail"] = sound;
    out.data["tail_decreasing"] = decreasing;

    // Series term bounds against the coarse asymptotic (2 kappa)^l / sqrt(l).
    Rational kap = kappa(g.inv);
    bool tracking = true;
    if (kap > 0) {
        double c_upper = mul_up(2.0, sup_norm_upper(rho_substitute(g, p, v), Rational(1, 2)));
        double two_kappa = to_double_up(2 * kap);
        ordered_json terms = ordered_json::array();
        for (int l = 5; l <= 30; ++l) {
            double bound = series_term_bound(l, kap, c_upper);
            double asym = c_upper * std::pow(two_kappa, l) / std::sqrt(static_cast<double>(l));
            double ratio = bound / asym;
            if (!(ratio >= 1.0 / 3.0 && ratio <= 3.0)) tracking = false;
            if (l <= 10 || l == 20 || l == 30)
                terms.push_back(ordered_json{
                    {"l", l}, {"bound", format_float(bound)}, {"asymptotic", format_float(asym)}});
        }
        out.data["term_bounds"] = terms;
        out.data["term_tracking_within_factor_3"] = tracking;
    }
    out.verdict = sound && decreasing && tracking;
}

void task_lemma1_probe(const JobConfig& cfg, const nlohmann::json& params, TaskResult& out) {
    (void)cfg;
    Rational kap = params.contains("kappa")
                       ? rational_from_string(params["kappa"].get<std::string>())
                       : make_rational(1, 8);
    Rational rho = params.contains("rho") ? rational_from_string(params["rho"].get<std::string>())
                                          : make_rational(1, 4);
    int l_max = param_int(params, "l_max", 40);
    int grid_points = param_int(params, "grid_points", 1601);
    double x_max = params.contains("x_max") ? params["x_max"].get<double>() : 8.0;
    double slack = 1e-9;
    if (kap <= 0 || rho <= 0) throw ConfigValidationError("field 'kappa'/'rho': must be positive");
    Rational lambda = rho / kap - 1;
    if (lambda < 1)
        throw ConfigValidationError("field 'rho': need rho/kappa >= 2 for the uniform bound");
    out.params["kappa"] = rational_to_string(kap);
    out.params["rho"] = rational_to_string(rho);
    out.params["lambda"] = rational_to_string(lambda);
    out.params["l_max"] = l_max;
    out.params["grid_points"] = grid_points;
    out.params["x_max"] = format_float(x_max);
    out.params["slack"] = format_float(slack);

    ordered_json table = ordered_json::array();
    bool bounded = true, monotone = true;
    double prev = HUGE_VAL;
    for (int l = 1; l <= l_max; ++l) {
        double sup = lemma1_defect_grid_sup(l, kap, rho, x_max, grid_points);
        double ts = tail_sigma(l, lambda);
        if (sup > ts + slack) bounded = false;
        if (ts >= prev) monotone = false;
        prev = ts;
        if (l <= 5 || l % 5 == 0)
            table.push_back(
                ordered_json{{"l", l}, {"grid_sup", format_float(sup)}, {"tail_sigma", format_float(ts)}});
    }
    out.data["table"] = table;
    out.data["grid_sup_bounded_by_tail"] = bounded;
    out.data["tail_monotone_decreasing"] = monotone;
    out.data["tail_sigma_at_l_max"] = format_float(prev);
    out.verdict = bounded && monotone;
}

}  // namespace

TaskResult run_single_task(const JobConfig& cfg, const TaskSpec& spec, unsigned seed_rng) {
    TaskResult out;
    out.kind = spec.kind;
    out.name = spec.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (spec.kind == "verify_operators") {
            task_verify_operators(cfg, spec.params, seed_rng, out);
        } else if (spec.kind == "commutators") {
            task_commutators(cfg, spec.params, out);
        } else if (spec.kind == "vkl_table") {
            task_vkl_table(cfg, spec.params, out);
        } else if (spec.kind == "submodule") {
            task_submodule(cfg, spec.params, out);
        } else if (spec.kind == "reducing_chain") {
            task_reducing_chain(cfg, spec.params, out);
        } else if (spec.kind == "direct_sum") {
            task_direct_sum(cfg, spec.params, out);
        } else if (spec.kind == "verify_example1") {
            if (cfg.variety.ambient_dim() != 2)
                throw ConfigValidationError("task 'verify_example1' needs ambient_dim 2");
            task_direct_sum(cfg, spec.params, out,
                            {"1", "m1^2+m2^2", "m1+i*m2", "m1-i*m2"});
        } else if (spec.kind == "isotypic_table") {
            task_isotypic_table(cfg, spec.params, out);
        } else if (spec.kind == "weight_table") {
            task_weight_table(cfg, spec.params, out);
        } else if (spec.kind == "highest_weight") {
            task_highest_weight(cfg, spec.params, out);
        } else if (spec.kind == "approx_certificate") {
            task_approx_certificate(cfg, spec.params, seed_rng, out);
        } else if (spec.kind == "lemma1_probe") {
            task_lemma1_probe(cfg, spec.params, out);
        } else {
            throw ConfigValidationError("unknown task kind '" + spec.kind + "'");
        }
    } catch (const ConfigParseError&) {
        throw;
    } catch (const ConfigValidationError&) {
        throw;
    } catch (const std::exception& e) {
        out.verdict = false;
        out.error = e.what();
        log_error("task '" + spec.name + "' failed: " + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

Report run_tasks(const JobConfig& cfg, unsigned seed_rng, int jobs) {
    Report report;
    report.tasks.resize(cfg.tasks.size());
    if (jobs <= 1) {
        for (size_t k = 0; k < cfg.tasks.size(); ++k) {
            log_info("running task " + cfg.tasks[k].name);
            report.tasks[k] = run_single_task(cfg, cfg.tasks[k], seed_rng);
        }
        return report;
    }
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> workers;
    int pool = std::min<int>(jobs, static_cast<int>(cfg.tasks.size()));
    std::mutex err_mutex;
    std::exception_ptr first_error;
    for (int w = 0; w < pool; ++w) {
        workers.push_back(std::async(std::launch::async, [&]() {
            while (true) {
                size_t k = next.fetch_add(1);
                if (k >= cfg.tasks.size()) return;
                try {
                    report.tasks[k] = run_single_task(cfg, cfg.tasks[k], seed_rng);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        }));
    }
    for (auto& w : workers) w.get();
    if (first_error) std::rethrow_exception(first_error);
    return report;
}

int run_job(const RunOptions& opt) {
    JobConfig cfg;
    try {
        cfg = load_config(opt.config_path, opt.preset_override);
    } catch (const ConfigParseError& e) {
        log_error(std::string("parse error: ") + e.what());
        std::fprintf(stderr, "gkmod: parse error: %s\n", e.what());
        return 2;
    } catch (const ConfigValidationError& e) {
        log_error(std::string("validation error: ") + e.what());
        std::fprintf(stderr, "gkmod: validation error: %s\n", e.what());
        return 3;
    }

    Report report;
    try {
        report = run_tasks(cfg, opt.seed_rng, opt.jobs);
    } catch (const ConfigParseError& e) {
        std::fprintf(stderr, "gkmod: parse error: %s\n", e.what());
        return 2;
    } catch (const ConfigValidationError& e) {
        std::fprintf(stderr, "gkmod: validation error: %s\n", e.what());
        return 3;
    }

    std::filesystem::create_directories(opt.out_dir);
    {
        std::ofstream js(std::filesystem::path(opt.out_dir) / "report.json");
        js << report_to_json(report).dump(2) << "\n";
    }
    {
        std::ofstream md(std::filesystem::path(opt.out_dir) / "report.md");
        md << report_to_markdown(report);
    }
    for (const auto& t : report.tasks)
        std::printf("[%s] %s (%s)\n", t.verdict ? "pass" : "FAIL", t.name.c_str(), t.kind.c_str());
    return report.all_passed() ? 0 : 1;
}

}  // namespace gkmod
