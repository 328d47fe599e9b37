#include "r2kit/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "r2kit/error.hpp"

namespace r2kit {

void FamilySpec::validate() const {
    if (kind == "gcrr" || kind == "gcrr-scaled") {
        gcrr().validate();
    } else if (kind == "constant") {
        if (!(omega > 0.0)) throw ConfigError("omega must be positive");
        if (!(d > 0.0)) throw ConfigError("constant family needs d > 0");
        if (rho == 0.0) throw ConfigError("constant family needs rho != 0");
    } else {
        throw ConfigError("unknown family '" + kind + "'");
    }
}

GCRRSpec FamilySpec::gcrr() const {
    GCRRSpec s;
    s.zeta = zeta;
    s.theta = theta;
    s.omega = omega;
    s.scaled = kind == "gcrr-scaled";
    return s;
}

RIIParams FamilySpec::params() const {
    validate();
    if (is_gcrr()) return gcrr_params(gcrr());
    return constant_family<cplx>(omega, rho, c, d);
}

std::vector<std::string> rule_presets() {
    return {"none", "alpha-gcrr", "beta-gcrr", "kappa", "kappa-minus", "vanishing", "custom"};
}

std::optional<PerturbRule> RuleSpec::rule() const {
    PerturbRule r;
    r.branch = branch >= 0 ? 1 : -1;
    if (preset == "none") return std::nullopt;
    if (preset == "alpha-gcrr") {
        r.variant = RuleVariant::QuadraticRoot;
        r.kind = Reduction::Balanced;
        r.branch = 1;
        return r;
    }
    if (preset == "beta-gcrr") {
        r.variant = RuleVariant::QuadraticRoot;
        r.kind = Reduction::Mirrored;
        r.branch = 1;
        return r;
    }
    if (preset == "kappa" || preset == "kappa-minus") {
        r.variant = RuleVariant::ConstantKappa;
        r.kind = Reduction::Balanced;
        r.branch = preset == "kappa" ? 1 : -1;
        return r;
    }
    if (preset == "vanishing") {
        r.variant = RuleVariant::QuadraticRoot;
        r.kind = Reduction::Vanishing;
        r.branch = 1;
        return r;
    }
    if (preset != "custom") throw ConfigError("unknown rule preset '" + preset + "'");
    r.kind = reduction_from_string(kind);
    r.seed = seed;
    r.values = values;
    if (variant == "explicit-list") {
        r.variant = RuleVariant::ExplicitList;
        if (values.empty()) throw ConfigError("explicit-list rule needs values");
    } else if (variant == "balanced-recursion" || variant == "mirrored-recursion" || variant == "vanishing-recursion") {
        r.variant = RuleVariant::Recursion;
        r.kind = reduction_from_string(variant.substr(0, variant.find('-')));
        if (seed == cplx(0.0, 0.0)) throw ConfigError("recursion rule needs a nonzero seed alpha_1");
    } else if (variant == "quadratic-root") {
        r.variant = RuleVariant::QuadraticRoot;
    } else if (variant == "constant-kappa") {
        r.variant = RuleVariant::ConstantKappa;
    } else {
        throw ConfigError("unknown rule variant '" + variant + "'");
    }
    return r;
}

Scenario build_scenario(const FamilySpec& family, const RuleSpec& rule_spec, int n) {
    if (n < 0) throw ConfigError("n must be nonnegative");
    Scenario s;
    s.family = family;
    s.rule_spec = rule_spec;
    s.params = family.params();
    s.rule = rule_spec.rule();
    s.n = n;
    int top = n + 1;
    if (s.rule && s.rule->variant == RuleVariant::ExplicitList)
        top = std::min(top, static_cast<int>(s.rule->values.size()));
    if (top < n) throw ConfigError("explicit alpha list shorter than n");
    s.P = generate(s.params, top);
    if (!s.rule) return s;
    s.alpha = alpha_sequence(s.params, *s.rule, top);
    s.L = perturb(s.P, s.alpha);
    if (n >= 1) {
        try {
            s.reduced = reduced_recurrence(s.params, s.alpha, s.rule->kind, n);
        } catch (const AdmissibilityError& e) {
            s.reduced_failure = e;
        }
    }
    return s;
}

HermTridiagPencil scenario_pencil(const Scenario& s, int m) {
    if (m < 1 || m > s.n) throw ConfigError("pencil size out of range");
    if (!s.rule) return build_pencil(s.params, m, PencilKind::G);
    if (!s.reduced) {
        if (s.reduced_failure) throw *s.reduced_failure;
        throw ConfigError("reduced recurrence unavailable");
    }
    return build_pencil(s.params, m, PencilKind::K, s.reduced->centers);
}

}  // namespace r2kit
