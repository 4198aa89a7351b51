#include "nsac/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace nsac {

namespace {

using nlohmann::json;

void reject_unknown(const json& section, const std::set<std::string>& allowed,
                    const std::string& prefix) {
    if (!section.is_object()) throw ConfigError("section '" + prefix + "' must be a JSON object");
    for (auto it = section.begin(); it != section.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key '" + prefix + "." + it.key() + "'");
}

double get_num(const json& section, const std::string& prefix, const std::string& key,
               double fallback) {
    if (!section.contains(key) || section.at(key).is_null()) return fallback;
    const json& v = section.at(key);
    if (!v.is_number()) throw ConfigError("'" + prefix + "." + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& section, const std::string& prefix, const std::string& key, int fallback) {
    if (!section.contains(key)) return fallback;
    const json& v = section.at(key);
    if (!v.is_number_integer()) throw ConfigError("'" + prefix + "." + key + "' must be an integer");
    return v.get<int>();
}

bool get_bool(const json& section, const std::string& prefix, const std::string& key,
              bool fallback) {
    if (!section.contains(key)) return fallback;
    const json& v = section.at(key);
    if (!v.is_boolean()) throw ConfigError("'" + prefix + "." + key + "' must be a boolean");
    return v.get<bool>();
}

std::string get_str(const json& section, const std::string& prefix, const std::string& key,
                    const std::string& fallback) {
    if (!section.contains(key)) return fallback;
    const json& v = section.at(key);
    if (!v.is_string()) throw ConfigError("'" + prefix + "." + key + "' must be a string");
    return v.get<std::string>();
}

json section_or_empty(const json& doc, const std::string& name) {
    return doc.contains(name) ? doc.at(name) : json::object();
}

}  // namespace

Config parse_config_json(const json& doc, bool force_allow_unproven) {
    if (!doc.is_object()) throw ConfigError("configuration root must be a JSON object");
    reject_unknown(doc, {"params", "far_field", "grid", "time", "ic", "output", "checks"}, "");

    Config cfg;

    const json params = section_or_empty(doc, "params");
    reject_unknown(params, {"a", "b", "R", "h", "epsilon", "kappa_tilde", "beta", "c_v", "e_int0"},
                   "params");
    VdwParams& p = cfg.params;
    p.a = get_num(params, "params", "a", p.a);
    p.b = get_num(params, "params", "b", p.b);
    p.R = get_num(params, "params", "R", p.R);
    p.h = get_num(params, "params", "h", 0.05 * p.b);
    p.epsilon = get_num(params, "params", "epsilon", p.epsilon);
    p.kappa_tilde = get_num(params, "params", "kappa_tilde", p.kappa_tilde);
    p.beta = get_num(params, "params", "beta", p.beta);
    p.c_v = get_num(params, "params", "c_v", p.c_v);
    p.e_int0 = get_num(params, "params", "e_int0", p.e_int0);
    p.validate();

    const json far = section_or_empty(doc, "far_field");
    reject_unknown(far, {"v_bar", "theta_bar"}, "far_field");
    cfg.far.v_bar = get_num(far, "far_field", "v_bar", cfg.far.v_bar);
    cfg.far.theta_bar = get_num(far, "far_field", "theta_bar", cfg.far.theta_bar);
    if (!admissible_far_field(p, cfg.far.v_bar, cfg.far.theta_bar))
        throw ConfigError("far_field: (v_bar, theta_bar) is not in the stable region");

    const json grid = section_or_empty(doc, "grid");
    reject_unknown(grid, {"x_min", "x_max", "n"}, "grid");
    cfg.grid = Grid1D::make(get_num(grid, "grid", "x_min", -16.0),
                            get_num(grid, "grid", "x_max", 16.0), get_int(grid, "grid", "n", 512));

    const json time = section_or_empty(doc, "time");
    reject_unknown(time,
                   {"dt", "t_end", "cfl", "mode", "stepper", "picard_tol", "picard_max_iter",
                    "allow_unproven"},
                   "time");
    SimConfig& sim = cfg.sim;
    sim.dt = get_num(time, "time", "dt", sim.dt);
    sim.t_end = get_num(time, "time", "t_end", sim.t_end);
    sim.cfl = get_num(time, "time", "cfl", sim.cfl);
    const std::string mode = get_str(time, "time", "mode", "nsac");
    if (mode == "nsac")
        sim.mode = Mode::nsac;
    else if (mode == "ns")
        sim.mode = Mode::ns;
    else
        throw ConfigError("'time.mode' must be \"nsac\" or \"ns\"");
    const std::string stepper = get_str(time, "time", "stepper", "imex");
    if (stepper == "imex")
        sim.stepper = StepperKind::imex;
    else if (stepper == "picard")
        sim.stepper = StepperKind::picard;
    else
        throw ConfigError("'time.stepper' must be \"imex\" or \"picard\"");
    sim.picard_tol = get_num(time, "time", "picard_tol", sim.picard_tol);
    sim.picard_max_iter = get_int(time, "time", "picard_max_iter", sim.picard_max_iter);
    sim.allow_unproven = get_bool(time, "time", "allow_unproven", false) || force_allow_unproven;
    if (sim.mode == Mode::nsac && !(p.beta > 0.0) && !sim.allow_unproven)
        throw ConfigError(
            "time.mode=nsac requires params.beta > 0 (set time.allow_unproven to override)");

    const json ic = section_or_empty(doc, "ic");
    reject_unknown(ic, {"profile", "width", "center", "v_mid", "k"}, "ic");
    const std::string profile = get_str(ic, "ic", "profile", "constant");
    if (profile == "constant")
        cfg.profile.kind = ProfileSpec::Kind::constant;
    else if (profile == "tanh_interface")
        cfg.profile.kind = ProfileSpec::Kind::tanh_interface;
    else if (profile == "elliptic_bump")
        cfg.profile.kind = ProfileSpec::Kind::elliptic_bump;
    else if (profile == "manufactured")
        cfg.profile.kind = ProfileSpec::Kind::manufactured;
    else
        throw ConfigError("'ic.profile' must be one of constant, tanh_interface, elliptic_bump, "
                          "manufactured");
    cfg.profile.width = get_num(ic, "ic", "width", 1.0);
    if (!(cfg.profile.width > 0.0)) throw ConfigError("'ic.width' must be positive");
    cfg.profile.center = get_num(ic, "ic", "center", 0.0);
    cfg.profile.v_mid = get_num(ic, "ic", "v_mid", cfg.profile.v_mid);
    cfg.profile.k = get_int(ic, "ic", "k", 1);
    if (cfg.profile.kind == ProfileSpec::Kind::elliptic_bump && std::isnan(cfg.profile.v_mid)) {
        // resolve the default (spinodal midpoint) so the echo is fully concrete
        const CriticalPoint cp = critical_point(p);
        if (cfg.far.theta_bar < cp.theta_c) {
            const SpinodalPoints sp = spinodal(p, cfg.far.theta_bar);
            cfg.profile.v_mid = 0.5 * (sp.v_alpha + sp.v_beta);
        }
    }

    const json output = section_or_empty(doc, "output");
    reject_unknown(output, {"out_dir", "output_every"}, "output");
    cfg.out_dir = get_str(output, "output", "out_dir", cfg.out_dir);
    sim.output_every = get_int(output, "output", "output_every", sim.output_every);

    const json checks = section_or_empty(doc, "checks");
    reject_unknown(checks,
                   {"algebraic_eq_form", "tol_chi", "mass_tol", "kazhikhov_tol",
                    "energy_budget_constant", "truncation_p_list"},
                   "checks");
    const std::string form = get_str(checks, "checks", "algebraic_eq_form", "phi_consistent");
    if (form == "phi_consistent")
        cfg.checks.algebraic_eq_form = AlgebraicEqForm::phi_consistent;
    else if (form == "as_printed")
        cfg.checks.algebraic_eq_form = AlgebraicEqForm::as_printed;
    else
        throw ConfigError("'checks.algebraic_eq_form' must be phi_consistent or as_printed");
    cfg.checks.tol_chi = get_num(checks, "checks", "tol_chi", cfg.checks.tol_chi);
    cfg.checks.mass_tol = get_num(checks, "checks", "mass_tol", cfg.checks.mass_tol);
    cfg.checks.kazhikhov_tol = get_num(checks, "checks", "kazhikhov_tol", cfg.checks.kazhikhov_tol);
    cfg.checks.energy_budget_constant =
        get_num(checks, "checks", "energy_budget_constant", cfg.checks.energy_budget_constant);
    if (checks.contains("truncation_p_list")) {
        const json& lst = checks.at("truncation_p_list");
        if (!lst.is_array()) throw ConfigError("'checks.truncation_p_list' must be an array");
        cfg.checks.truncation_p_list.clear();
        for (const json& v : lst) cfg.checks.truncation_p_list.push_back(v.get<double>());
    }

    sim.validate();
    // CFL sanity against the far-field characteristic speed; the per-step
    // check still guards the evolving state
    const PressureDerivatives d = pressure_derivatives(p, cfg.far.v_bar, cfg.far.theta_bar);
    const double c_far = std::sqrt(std::max(0.0, -d.dp_dv) * cfg.far.v_bar);
    if (sim.dt * c_far > sim.cfl * cfg.grid.dx)
        throw ConfigError("time.dt violates the CFL bound cfl*dx/c at the far field");

    // normalized echo
    nlohmann::ordered_json echo;
    echo["params"] = {{"a", p.a},       {"b", p.b},
                      {"R", p.R},       {"h", p.h},
                      {"epsilon", p.epsilon}, {"kappa_tilde", p.kappa_tilde},
                      {"beta", p.beta}, {"c_v", p.c_v},
                      {"e_int0", p.e_int0}};
    echo["far_field"] = {{"v_bar", cfg.far.v_bar}, {"theta_bar", cfg.far.theta_bar}};
    echo["grid"] = {{"x_min", cfg.grid.x_min}, {"x_max", cfg.grid.x_max}, {"n", cfg.grid.n}};
    echo["time"] = {{"dt", sim.dt},
                    {"t_end", sim.t_end},
                    {"cfl", sim.cfl},
                    {"mode", sim.mode == Mode::nsac ? "nsac" : "ns"},
                    {"stepper", sim.stepper == StepperKind::imex ? "imex" : "picard"},
                    {"picard_tol", sim.picard_tol},
                    {"picard_max_iter", sim.picard_max_iter},
                    {"allow_unproven", sim.allow_unproven}};
    echo["ic"] = {{"profile", profile},
                  {"width", cfg.profile.width},
                  {"center", cfg.profile.center},
                  {"v_mid", std::isnan(cfg.profile.v_mid) ? json() : json(cfg.profile.v_mid)},
                  {"k", cfg.profile.k}};
    echo["output"] = {{"out_dir", cfg.out_dir}, {"output_every", sim.output_every}};
    echo["checks"] = {{"algebraic_eq_form", form},
                      {"tol_chi", cfg.checks.tol_chi},
                      {"mass_tol", cfg.checks.mass_tol},
                      {"kazhikhov_tol", cfg.checks.kazhikhov_tol},
                      {"energy_budget_constant", cfg.checks.energy_budget_constant},
                      {"truncation_p_list", cfg.checks.truncation_p_list}};
    cfg.echo = echo;
    return cfg;
}

Config parse_config(const std::string& path, bool force_allow_unproven) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open configuration file " + path);
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
    }
    return parse_config_json(doc, force_allow_unproven);
}

}  // namespace nsac
