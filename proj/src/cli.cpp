#include "r2kit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "r2kit/analysis.hpp"
#include "r2kit/biortho.hpp"
#include "r2kit/error.hpp"
#include "r2kit/hypergeom.hpp"
#include "r2kit/pencil.hpp"
#include "r2kit/perturbation.hpp"
#include "r2kit/scenario.hpp"
#include "r2kit/spectrum.hpp"
#include "r2kit/verify.hpp"

namespace r2kit::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    FamilySpec family;
    RuleSpec rule;
    bool rule_given = false;
    int n = 8;
    std::string format;
    std::string output;
    std::string method = "pencil";
    std::string mode = "consecutive";
    std::string sign = "+";
    std::string decomp = "all";
    std::string figure = "all";
    std::uint32_t seed = 42;
    std::vector<std::string> modules;
};

// Command-line values; applied on top of the config file only when given.
struct Flags {
    std::string config;
    std::string family, rule, variant, kind, format, output, method, mode, sign, decomp, figure;
    double zeta = 0, theta = 0, omega = 0, rho = 0, c = 0, d = 0, seed_re = 0, seed_im = 0;
    int n = 0, branch = 1;
    std::uint32_t seed = 42;
    std::vector<double> values;
    std::vector<std::string> modules;
    CLI::Option *o_family{}, *o_rule{}, *o_variant{}, *o_kind{}, *o_format{}, *o_output{}, *o_method{}, *o_mode{},
        *o_sign{}, *o_decomp{}, *o_figure{}, *o_zeta{}, *o_theta{}, *o_omega{}, *o_rho{}, *o_c{}, *o_d{},
        *o_seed_re{}, *o_seed_im{}, *o_n{}, *o_branch{}, *o_seed{}, *o_values{}, *o_modules{};
};

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
    throw ConfigError("expected a number, [re, im] or {re, im}");
}

json complex_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

json poly_to_json(const ComplexPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(complex_to_json(c));
    return a;
}

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        if (j.contains("family")) {
            const json& f = j["family"];
            if (f.is_string()) {
                cfg.family.kind = f.get<std::string>();
            } else {
                cfg.family.kind = f.value("kind", cfg.family.kind);
                cfg.family.zeta = f.value("zeta", cfg.family.zeta);
                cfg.family.theta = f.value("theta", cfg.family.theta);
                cfg.family.omega = f.value("omega", cfg.family.omega);
                cfg.family.rho = f.value("rho", cfg.family.rho);
                cfg.family.c = f.value("c", cfg.family.c);
                cfg.family.d = f.value("d", cfg.family.d);
            }
        }
        if (j.contains("rule")) {
            const json& r = j["rule"];
            cfg.rule_given = true;
            if (r.is_null()) {
                cfg.rule.preset = "none";
            } else if (r.is_string()) {
                cfg.rule.preset = r.get<std::string>();
            } else {
                cfg.rule.preset = r.value("preset", std::string(r.contains("variant") ? "custom" : "none"));
                cfg.rule.variant = r.value("variant", cfg.rule.variant);
                cfg.rule.kind = r.value("kind", cfg.rule.kind);
                cfg.rule.branch = r.value("branch", cfg.rule.branch);
                if (r.contains("seed")) cfg.rule.seed = complex_from_json(r["seed"]);
                if (r.contains("values"))
                    for (const auto& v : r["values"]) cfg.rule.values.push_back(complex_from_json(v));
            }
        }
        cfg.n = j.value("n", cfg.n);
        cfg.format = j.value("format", cfg.format);
        cfg.output = j.value("output", cfg.output);
        cfg.method = j.value("method", cfg.method);
        cfg.mode = j.value("mode", cfg.mode);
        cfg.sign = j.value("sign", cfg.sign);
        cfg.decomp = j.value("decomp", cfg.decomp);
        cfg.figure = j.value("figure", cfg.figure);
        cfg.seed = j.value("seed", cfg.seed);
        if (j.contains("modules")) cfg.modules = j["modules"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    }
}

void add_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file; flags override its values");
    f.o_family = sub->add_option("--family", f.family, "gcrr | gcrr-scaled | constant");
    f.o_zeta = sub->add_option("--zeta", f.zeta, "GCRR zeta");
    f.o_theta = sub->add_option("--theta", f.theta, "GCRR theta");
    f.o_omega = sub->add_option("--omega", f.omega, "omega in x^2 + omega^2");
    f.o_rho = sub->add_option("--rho", f.rho, "constant family rho");
    f.o_c = sub->add_option("--c", f.c, "constant family center");
    f.o_d = sub->add_option("--d", f.d, "constant family d");
    f.o_rule = sub->add_option("--rule", f.rule, "none | alpha-gcrr | beta-gcrr | kappa | kappa-minus | vanishing | custom");
    f.o_variant = sub->add_option("--variant", f.variant,
                                  "custom rule: explicit-list | balanced-recursion | mirrored-recursion | "
                                  "vanishing-recursion | quadratic-root | constant-kappa");
    f.o_kind = sub->add_option("--kind", f.kind, "reduction: balanced | mirrored | vanishing");
    f.o_branch = sub->add_option("--branch", f.branch, "root branch, +1 or -1");
    f.o_seed_re = sub->add_option("--alpha1-re", f.seed_re, "recursion seed alpha_1, real part");
    f.o_seed_im = sub->add_option("--alpha1-im", f.seed_im, "recursion seed alpha_1, imaginary part");
    f.o_values = sub->add_option("--values", f.values, "explicit alpha_1..alpha_m (real)");
    f.o_n = sub->add_option("--n", f.n, "degree / size");
    f.o_format = sub->add_option("--format", f.format, "json | csv");
    f.o_output = sub->add_option("--output,-o", f.output, "output path (default stdout)");
    f.o_seed = sub->add_option("--seed", f.seed, "seed for random sweeps (default 42)");
}

RunConfig resolve(const Flags& f, const std::string& default_rule, const std::string& default_format) {
    RunConfig cfg;
    cfg.rule.preset = default_rule;
    cfg.format = default_format;
    if (!f.config.empty()) load_config(f.config, cfg);
    auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(f.o_family)) cfg.family.kind = f.family;
    if (given(f.o_zeta)) cfg.family.zeta = f.zeta;
    if (given(f.o_theta)) cfg.family.theta = f.theta;
    if (given(f.o_omega)) cfg.family.omega = f.omega;
    if (given(f.o_rho)) cfg.family.rho = f.rho;
    if (given(f.o_c)) cfg.family.c = f.c;
    if (given(f.o_d)) cfg.family.d = f.d;
    if (given(f.o_rule)) {
        cfg.rule.preset = f.rule;
        cfg.rule_given = true;
    }
    if (given(f.o_variant)) {
        cfg.rule.variant = f.variant;
        if (!given(f.o_rule)) cfg.rule.preset = "custom";
        cfg.rule_given = true;
    }
    if (given(f.o_kind)) cfg.rule.kind = f.kind;
    if (given(f.o_branch)) cfg.rule.branch = f.branch;
    if (given(f.o_seed_re) || given(f.o_seed_im)) cfg.rule.seed = cplx(f.seed_re, f.seed_im);
    if (given(f.o_values)) {
        cfg.rule.values.clear();
        for (double v : f.values) cfg.rule.values.emplace_back(v, 0.0);
    }
    if (given(f.o_n)) cfg.n = f.n;
    if (given(f.o_format)) cfg.format = f.format;
    if (given(f.o_output)) cfg.output = f.output;
    if (given(f.o_method)) cfg.method = f.method;
    if (given(f.o_mode)) cfg.mode = f.mode;
    if (given(f.o_sign)) cfg.sign = f.sign;
    if (given(f.o_decomp)) cfg.decomp = f.decomp;
    if (given(f.o_figure)) cfg.figure = f.figure;
    if (given(f.o_seed)) cfg.seed = f.seed;
    if (given(f.o_modules)) cfg.modules = f.modules;
    if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
    if (cfg.n < 0) throw ConfigError("n must be nonnegative");
    cfg.family.validate();
    return cfg;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + cfg.output + "'");
    out << text;
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

json family_json(const FamilySpec& f) {
    json j{{"kind", f.kind}, {"omega", f.omega}};
    if (f.is_gcrr()) {
        j["zeta"] = f.zeta;
        j["theta"] = f.theta;
    } else {
        j["rho"] = f.rho;
        j["c"] = f.c;
        j["d"] = f.d;
    }
    return j;
}

json rule_json(const Scenario& s) {
    if (!s.rule) return nullptr;
    json j{{"preset", s.rule_spec.preset}, {"variant", to_string(s.rule->variant)},
           {"kind", to_string(s.rule->kind)}, {"branch", s.rule->branch}};
    return j;
}

std::string seq_tag(const Scenario& s, int k) {
    if (!s.rule) return "P" + std::to_string(k);
    if (s.rule->kind == Reduction::Mirrored) return "T" + std::to_string(k);
    return "L" + std::to_string(k);
}

// Closed form of P_k when the family has one; nullopt otherwise.
std::optional<ComplexPoly> closed_form(const FamilySpec& f, int k) {
    if (f.is_gcrr() && f.omega == 1.0) {
        ComplexPoly p = gcrr_closed_form(f.gcrr(), k);
        if (f.kind == "gcrr-scaled") p = (pochhammer(f.zeta, k) / pochhammer(2.0 * f.zeta, k)) * p;
        return p;
    }
    if (f.kind == "constant" && f.rho == 1.0 && f.c == 0.0 && f.d == 0.25) return constant_family_closed_form(k, f.omega);
    return std::nullopt;
}

int cmd_gen(const RunConfig& cfg) {
    const auto P = generate(cfg.family.params(), cfg.n);
    json polys = json::array();
    std::ostringstream csv;
    csv << "k,power,re,im,closed_form_delta\n";
    for (int k = 0; k <= cfg.n; ++k) {
        const auto& p = P[static_cast<std::size_t>(k)];
        const auto cf = closed_form(cfg.family, k);
        const double delta = cf ? max_coeff_diff(*cf, p) : 0.0;
        polys.push_back({{"k", k}, {"coeffs", poly_to_json(p)}, {"closed_form_delta", cf ? json(delta) : json(nullptr)}});
        for (int j = 0; j <= p.degree(); ++j)
            csv << k << ',' << j << ',' << num(p[j].real()) << ',' << num(p[j].imag()) << ','
                << (cf ? num(delta) : std::string()) << '\n';
    }
    if (cfg.format == "csv")
        emit(cfg, csv.str());
    else
        emit_json(cfg, {{"command", "gen"}, {"family", family_json(cfg.family)}, {"n", cfg.n}, {"polynomials", polys}});
    return 0;
}

int cmd_perturb(const RunConfig& cfg) {
    const Scenario s = build_scenario(cfg.family, cfg.rule, cfg.n);
    if (!s.rule) throw ConfigError("perturb needs a rule");
    json alpha = json::array(), polys = json::array(), ledger = json::array();
    std::ostringstream csv;
    csv << "k,power,re,im,alpha_re,alpha_im\n";
    for (int k = 0; k <= cfg.n; ++k) {
        const auto& L = s.L[static_cast<std::size_t>(k)];
        polys.push_back({{"k", k}, {"coeffs", poly_to_json(L)}});
        if (k >= 1) alpha.push_back(complex_to_json(s.alpha[static_cast<std::size_t>(k)]));
        const cplx a = k >= 1 ? s.alpha[static_cast<std::size_t>(k)] : cplx(0.0);
        for (int j = 0; j <= L.degree(); ++j)
            csv << k << ',' << j << ',' << num(L[j].real()) << ',' << num(L[j].imag()) << ',' << num(a.real()) << ','
                << num(a.imag()) << '\n';
    }
    const int top = static_cast<int>(s.L.size()) - 2;
    for (int k = 1; k <= std::min(cfg.n, top); ++k) {
        if (k + 1 >= static_cast<int>(s.alpha.size())) break;
        const auto c = ledger_special(s.params, s.alpha, k);
        ledger.push_back({{"n", k}, {"residual", verify_ledger_identity(s.L, c)}});
    }
    json reduced = nullptr;
    int code = 0;
    if (s.reduced) {
        const auto R = generate(s.reduced->params, cfg.n);
        double dev = 0.0;
        for (int k = 0; k <= cfg.n; ++k) dev = std::max(dev, max_coeff_diff(R[static_cast<std::size_t>(k)], s.L[static_cast<std::size_t>(k)]));
        json centers = json::array();
        for (const auto& c : s.reduced->centers) centers.push_back(complex_to_json(c));
        reduced = {{"admissible", true},
                   {"centers", centers},
                   {"max_condition_residual", s.reduced->admissibility.max_residual},
                   {"regeneration_deviation", dev},
                   {"closed_form_center_gap", s.reduced->printed_gap}};
    } else if (s.reduced_failure) {
        reduced = {{"admissible", false},
                   {"condition", s.reduced_failure->condition()},
                   {"index", s.reduced_failure->index()},
                   {"residual", s.reduced_failure->residual()}};
        code = 1;
    }
    if (cfg.format == "csv")
        emit(cfg, csv.str());
    else
        emit_json(cfg, {{"command", "perturb"},
                        {"family", family_json(cfg.family)},
                        {"rule", rule_json(s)},
                        {"n", cfg.n},
                        {"alpha", alpha},
                        {"polynomials", polys},
                        {"ledger", ledger},
                        {"reduced_recurrence", reduced}});
    return code;
}

ZeroSet target_zeros(const Scenario& s, int n, const std::string& method) {
    if (method == "aberth") return poly_roots(s.target()[static_cast<std::size_t>(n)]);
    return generalized_eigs(scenario_pencil(s, n));
}

int cmd_zeros(const RunConfig& cfg) {
    if (cfg.n < 1) throw ConfigError("zeros needs n >= 1");
    if (cfg.method != "pencil" && cfg.method != "aberth" && cfg.method != "both")
        throw ConfigError("method must be pencil, aberth or both");
    const Scenario s = build_scenario(cfg.family, cfg.rule, cfg.n);
    const ZeroSet primary = target_zeros(s, cfg.n, cfg.method == "aberth" ? "aberth" : "pencil");
    std::optional<ZeroSet> other;
    std::vector<double> delta;
    if (cfg.method == "both") {
        other = poly_roots(s.target()[static_cast<std::size_t>(cfg.n)]);
        std::vector<std::vector<double>> cost(primary.size(), std::vector<double>(other->size()));
        for (std::size_t i = 0; i < primary.size(); ++i)
            for (std::size_t j = 0; j < other->size(); ++j) cost[i][j] = std::abs(primary.values[i] - other->values[j]);
        const auto match = hungarian(cost);
        for (std::size_t i = 0; i < primary.size(); ++i) delta.push_back(cost[i][static_cast<std::size_t>(match[i])]);
    }
    std::ostringstream csv;
    csv << "re,im,residual" << (other ? ",match_delta" : "") << '\n';
    json zs = json::array();
    for (std::size_t i = 0; i < primary.size(); ++i) {
        csv << num(primary.values[i].real()) << ',' << num(primary.values[i].imag()) << ',' << num(primary.residuals[i]);
        json z{{"value", complex_to_json(primary.values[i])}, {"residual", primary.residuals[i]}};
        if (other) {
            csv << ',' << num(delta[i]);
            z["match_delta"] = delta[i];
        }
        csv << '\n';
        zs.push_back(z);
    }
    if (cfg.format == "csv") {
        emit(cfg, csv.str());
    } else {
        json j{{"command", "zeros"},
               {"family", family_json(cfg.family)},
               {"rule", rule_json(s)},
               {"n", cfg.n},
               {"polynomial", seq_tag(s, cfg.n)},
               {"method", to_string(primary.method)},
               {"note", primary.note},
               {"min_gap", primary.min_gap},
               {"zeros", zs}};
        if (other) j["cross_check_delta"] = cross_check(primary, *other);
        emit_json(cfg, j);
    }
    return 0;
}

json report_json(const InterlaceReport& r) {
    json merged = json::array();
    for (const auto& t : r.merged) merged.push_back({{"value", t.value}, {"tag", t.tag}});
    return {{"status", to_string(r.status)},
            {"first_violation", r.first_violation < 0 ? json(nullptr) : json(r.first_violation)},
            {"margin", r.margin},
            {"detail", r.detail},
            {"merged", merged}};
}

std::string merged_csv(const InterlaceReport& r) {
    std::ostringstream csv;
    csv << "value,source_tag\n";
    for (const auto& t : r.merged) csv << num(t.value) << ',' << csv_field(t.tag) << '\n';
    return csv.str();
}

RuleSpec preset_rule(const std::string& name) {
    RuleSpec r;
    r.preset = name;
    return r;
}

int cmd_interlace(const RunConfig& cfg) {
    const int n = cfg.n;
    if (n < 2) throw ConfigError("interlace needs n >= 2");
    InterlaceReport rep;
    json extra = json::object();
    if (cfg.mode == "consecutive") {
        const Scenario s = build_scenario(cfg.family, cfg.rule, n);
        rep = check_interlace(target_zeros(s, n, "pencil"), target_zeros(s, n - 1, "pencil"), InterlaceMode::Consecutive,
                              seq_tag(s, n), seq_tag(s, n - 1));
    } else if (cfg.mode == "triple") {
        if (cfg.sign != "+" && cfg.sign != "-") throw ConfigError("sign must be + or -");
        const int want = cfg.sign == "+" ? 1 : -1;
        const RuleSpec rule = cfg.rule_given ? cfg.rule : preset_rule(want > 0 ? "alpha-gcrr" : "beta-gcrr");
        const Scenario s = build_scenario(cfg.family, rule, n);
        if (!s.rule) throw ConfigError("triple interlacing needs a rule");
        const int sign = alpha_sign(s.alpha, 1, n);
        if (sign != want) throw ConfigError("requested sign does not match the sign of the alpha sequence");
        rep = triple_interlace(poly_roots(s.P[static_cast<std::size_t>(n)]), poly_roots(s.P[static_cast<std::size_t>(n - 1)]),
                               target_zeros(s, n, "pencil"), sign);
        for (auto& t : rep.merged) {
            if (t.tag == "P_n") t.tag = "P" + std::to_string(n);
            else if (t.tag == "P_{n-1}") t.tag = "P" + std::to_string(n - 1);
            else t.tag = seq_tag(s, n);
        }
    } else if (cfg.mode == "cross") {
        const Scenario a = build_scenario(cfg.family, preset_rule("alpha-gcrr"), n);
        const Scenario b = build_scenario(cfg.family, preset_rule("beta-gcrr"), n);
        const auto k = static_cast<std::size_t>(n);
        rep = check_interlace(target_zeros(a, n, "pencil"), target_zeros(b, n, "pencil"), InterlaceMode::Cross,
                              "L" + std::to_string(n), "T" + std::to_string(n));
        const auto pz = poly_roots(a.P[k]);
        const double radius = 1.1 * std::max(std::abs(pz.values.front()), std::abs(pz.values.back()));
        double scale = 0.0;
        const double res = wronskian_identity_residual(recurrence_evaluator(a.reduced->params, n),
                                                       recurrence_evaluator(b.reduced->params, n), a.alpha[k], b.alpha[k],
                                                       recurrence_evaluator(a.params, n),
                                                       recurrence_evaluator(a.params, n - 1), 64, radius, &scale);
        extra = {{"wronskian_residual", res},
                 {"wronskian_scale", scale},
                 {"grid_radius", radius},
                 {"common_zero_gap", common_zero_gap(a.L[k], b.L[k])}};
    } else {
        throw ConfigError("mode must be consecutive, triple or cross");
    }
    if (cfg.format == "csv") {
        emit(cfg, merged_csv(rep));
    } else {
        json j{{"command", "interlace"}, {"family", family_json(cfg.family)}, {"mode", cfg.mode}, {"n", n},
               {"report", report_json(rep)}};
        if (!extra.empty()) j["wronskian"] = extra;
        emit_json(cfg, j);
    }
    return rep.pass() ? 0 : 1;
}

int cmd_biortho(const RunConfig& cfg) {
    const int n = cfg.n;
    if (n < 1) throw ConfigError("biortho needs n >= 1");
    const Scenario s = build_scenario(cfg.family, cfg.rule, n);
    if (!s.rule) throw ConfigError("biortho needs a rule");
    const auto K = scenario_pencil(s, n);
    const auto zeros = generalized_eigs(K);
    const auto f = factor_all(K);
    std::vector<Decomposition> decs;
    if (cfg.decomp == "all")
        decs = {Decomposition::Cholesky, Decomposition::UL, Decomposition::LDU};
    else
        decs = {decomposition_from_string(cfg.decomp)};
    bool ok = true;
    json reports = json::array();
    std::ostringstream csv;
    csv << "decomposition,max_offdiag,max_diag_dev,unfactored_max_offdiag,unfactored_max_diag_rel\n";
    for (auto dec : decs) {
        const auto rep = gram_check(s.L, s.params, zeros, K, f, dec);
        ok = ok && rep.max_offdiag < 1e-8 && rep.max_diag_dev < 1e-8 && rep.unfactored_max_offdiag < 1e-9 &&
             rep.unfactored_max_diag_rel < 1e-9;
        reports.push_back({{"decomposition", to_string(dec)},
                           {"max_offdiag", rep.max_offdiag},
                           {"max_diag_dev", rep.max_diag_dev},
                           {"unfactored_max_offdiag", rep.unfactored_max_offdiag},
                           {"unfactored_max_diag_rel", rep.unfactored_max_diag_rel}});
        csv << to_string(dec) << ',' << num(rep.max_offdiag) << ',' << num(rep.max_diag_dev) << ','
            << num(rep.unfactored_max_offdiag) << ',' << num(rep.unfactored_max_diag_rel) << '\n';
    }
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    double kernel = 0.0;
    for (int i = 0; i < 100; ++i) kernel = std::max(kernel, cd_kernel(s.L, s.params, K, cplx(U(rng)), cplx(U(rng))));
    ok = ok && kernel < 1e-9;
    if (cfg.format == "csv") {
        emit(cfg, csv.str());
    } else {
        json z = json::array();
        for (const auto& v : zeros.values) z.push_back(v.real());
        emit_json(cfg, {{"command", "biortho"},
                        {"family", family_json(cfg.family)},
                        {"rule", rule_json(s)},
                        {"n", n},
                        {"zeros", z},
                        {"reports", reports},
                        {"kernel_max_residual", kernel},
                        {"pass", ok}});
    }
    return ok ? 0 : 1;
}

json vec_json(const std::vector<double>& v) { return json(v); }

int cmd_factor(const RunConfig& cfg) {
    if (cfg.n < 1) throw ConfigError("factor needs n >= 1");
    const Scenario s = build_scenario(cfg.family, preset_rule("none"), cfg.n);
    const auto J = scenario_pencil(s, cfg.n);
    const auto f = factor_all(J);
    const auto r = factor_residuals(J, f);
    const bool ok = r.chol < 1e-12 && r.ul < 1e-12 && r.ldu < 1e-12 && r.pivot_consistency < 1e-13;
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "i,chol_m,chol_l,ul_m,ul_l,ldu_e,ldu_l\n";
        for (int i = 0; i < cfg.n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            csv << i << ',' << num(f.chol.m[k]) << ',' << num(f.chol.l[k]) << ',' << num(f.ul.m[k]) << ','
                << num(f.ul.l[k]) << ',' << num(f.ldu.e[k]) << ',' << num(f.ldu.l[k]) << '\n';
        }
        emit(cfg, csv.str());
    } else {
        emit_json(cfg, {{"command", "factor"},
                        {"family", family_json(cfg.family)},
                        {"n", cfg.n},
                        {"cholesky", {{"m", vec_json(f.chol.m)}, {"l", vec_json(f.chol.l)}}},
                        {"ul", {{"m", vec_json(f.ul.m)}, {"l", vec_json(f.ul.l)}, {"s0", f.ul.s0}}},
                        {"ldu", {{"e", vec_json(f.ldu.e)}, {"l", vec_json(f.ldu.l)}}},
                        {"residuals",
                         {{"chol", r.chol},
                          {"ul", r.ul},
                          {"ldu", r.ldu},
                          {"pivot_consistency", r.pivot_consistency},
                          {"sc_consistency", r.sc_consistency}}},
                        {"pass", ok}});
    }
    return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.modules = cfg.modules;
    const auto results = run_verify_suite(opt);
    const bool ok = all_passed(results);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "module,name,status,value,tol,detail\n";
        for (const auto& r : results)
            csv << r.module << ',' << csv_field(r.name) << ','
                << (r.informational ? "info" : (r.pass ? "pass" : "fail")) << ',' << num(r.value) << ',' << num(r.tol)
                << ',' << csv_field(r.detail) << '\n';
        emit(cfg, csv.str());
    } else {
        json checks = json::array();
        int failed = 0;
        for (const auto& r : results) {
            if (!r.pass && !r.informational) ++failed;
            checks.push_back({{"module", r.module},
                              {"name", r.name},
                              {"status", r.informational ? "info" : (r.pass ? "pass" : "fail")},
                              {"value", r.value},
                              {"tol", r.tol},
                              {"detail", r.detail}});
        }
        emit_json(cfg, {{"command", "verify"}, {"seed", cfg.seed}, {"failed", failed}, {"checks", checks}, {"pass", ok}});
    }
    return ok ? 0 : 1;
}

int cmd_plot_data(const RunConfig& cfg) {
    const int n = cfg.n;
    if (n < 2) throw ConfigError("plot-data needs n >= 2");
    const Scenario a = build_scenario(cfg.family, preset_rule("alpha-gcrr"), n);
    const Scenario b = build_scenario(cfg.family, preset_rule("beta-gcrr"), n);
    const auto k = static_cast<std::size_t>(n);
    const std::string sn = std::to_string(n), sp = std::to_string(n - 1);
    const auto pn = poly_roots(a.P[k]).real_parts(), pp = poly_roots(a.P[k - 1]).real_parts();
    const auto ln = generalized_eigs(scenario_pencil(a, n)).real_parts();
    const auto tn = generalized_eigs(scenario_pencil(b, n)).real_parts();
    struct Series {
        std::string tag;
        const std::vector<double>* values;
    };
    const std::vector<std::pair<std::string, std::vector<Series>>> figures{
        {"1", {{"P" + sp, &pp}, {"P" + sn, &pn}, {"L" + sn, &ln}}},
        {"2", {{"P" + sp, &pp}, {"P" + sn, &pn}, {"T" + sn, &tn}}},
        {"3", {{"L" + sn, &ln}, {"T" + sn, &tn}}}};
    if (cfg.figure != "all" && cfg.figure != "1" && cfg.figure != "2" && cfg.figure != "3")
        throw ConfigError("figure must be 1, 2, 3 or all");
    std::ostringstream csv;
    csv << "value,source_tag\n";
    json j{{"command", "plot-data"}, {"family", family_json(cfg.family)}, {"n", n}};
    json figs = json::object();
    for (const auto& [id, series] : figures) {
        if (cfg.figure != "all" && cfg.figure != id) continue;
        json rows = json::array();
        for (const auto& s : series)
            for (double v : *s.values) {
                const std::string tag = cfg.figure == "all" ? "fig" + id + ":" + s.tag : s.tag;
                csv << num(v) << ',' << tag << '\n';
                rows.push_back({{"value", v}, {"source_tag", s.tag}});
            }
        figs[id] = rows;
    }
    j["figures"] = figs;
    if (cfg.format == "csv")
        emit(cfg, csv.str());
    else
        emit_json(cfg, j);
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"R_II polynomial toolkit: recurrences, perturbations, pencils and zero analysis"};
    app.require_subcommand(1);
    std::vector<Flags> flags;

    struct Entry {
        const char* name;
        const char* help;
        const char* rule;
        const char* format;
        int (*fn)(const RunConfig&);
    };
    const std::vector<Entry> entries{
        {"gen", "coefficients of P_0..P_n with closed-form deltas", "none", "csv", cmd_gen},
        {"perturb", "perturbed sequence, ledger residuals and reduced recurrence", "alpha-gcrr", "json", cmd_perturb},
        {"zeros", "zeros of P_n (no rule) or L_n", "none", "csv", cmd_zeros},
        {"interlace", "interlacing checks: consecutive, triple, cross", "none", "json", cmd_interlace},
        {"biortho", "biorthogonality gram checks", "alpha-gcrr", "json", cmd_biortho},
        {"factor", "Cholesky, UL and LDU factorizations of J", "none", "json", cmd_factor},
        {"verify", "run every invariant suite", "none", "json", cmd_verify},
        {"plot-data", "zero tables for the interlacing figures", "none", "csv", cmd_plot_data},
    };
    flags.resize(entries.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        subs.push_back(app.add_subcommand(entries[i].name, entries[i].help));
        add_flags(subs.back(), flags[i]);
    }
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (name == entries[i].name) return i;
        return entries.size();
    };
    Flags& fz = flags[index_of("zeros")];
    fz.o_method = subs[index_of("zeros")]->add_option("--method", fz.method, "pencil | aberth | both");
    Flags& fi = flags[index_of("interlace")];
    fi.o_mode = subs[index_of("interlace")]->add_option("--mode", fi.mode, "consecutive | triple | cross");
    fi.o_sign = subs[index_of("interlace")]->add_option("--sign", fi.sign, "sign of alpha for the triple pattern: + or -");
    Flags& fb = flags[index_of("biortho")];
    fb.o_decomp = subs[index_of("biortho")]->add_option("--decomp", fb.decomp, "cholesky | ul | ldu | all");
    Flags& fp = flags[index_of("plot-data")];
    fp.o_figure = subs[index_of("plot-data")]->add_option("--figure", fp.figure, "1 | 2 | 3 | all");
    Flags& fv = flags[index_of("verify")];
    fv.o_modules = subs[index_of("verify")]->add_option("--module", fv.modules, "restrict to these modules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        try {
            const RunConfig cfg = resolve(flags[i], entries[i].rule, entries[i].format);
            return entries[i].fn(cfg);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return e.exit_code();
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 3;
        }
    }
    return 2;
}

}  // namespace r2kit::cli
