#pragma once

#include <optional>
#include <string>
#include <vector>

#include "r2kit/pencil.hpp"
#include "r2kit/perturbation.hpp"
#include "r2kit/recurrence.hpp"

namespace r2kit {

// kind: gcrr (rho = 1), gcrr-scaled, constant.
struct FamilySpec {
    std::string kind = "gcrr-scaled";
    double zeta = 1.0;
    double theta = 0.0;
    double omega = 1.0;
    double rho = 1.0;   // constant kind only
    double c = 0.0;     // constant kind only
    double d = 0.25;    // constant kind only

    void validate() const;
    RIIParams params() const;
    GCRRSpec gcrr() const;
    bool is_gcrr() const { return kind == "gcrr" || kind == "gcrr-scaled"; }
};

// preset: none, alpha-gcrr, beta-gcrr, kappa, kappa-minus, vanishing, custom.
// custom reads variant (explicit-list, balanced-recursion, mirrored-recursion, vanishing-recursion,
// quadratic-root, constant-kappa), kind, branch, seed and values.
struct RuleSpec {
    std::string preset = "none";
    std::string variant;
    std::string kind = "balanced";
    int branch = +1;
    cplx seed = 0.0;
    std::vector<cplx> values;

    std::optional<PerturbRule> rule() const;
};

std::vector<std::string> rule_presets();

struct Scenario {
    FamilySpec family;
    RuleSpec rule_spec;
    std::optional<PerturbRule> rule;
    RIIParams params;
    int n = 0;
    std::vector<ComplexPoly> P;      // P_0 .. P_{n+1}
    std::vector<cplx> alpha;         // alpha_0 .. alpha_{n+1} when a rule is set
    std::vector<ComplexPoly> L;      // L_0 .. L_{n+1} when a rule is set
    std::optional<ReducedRecurrence> reduced;  // generating L_0..L_n
    std::optional<AdmissibilityError> reduced_failure;

    // L when a rule is set, else P.
    const std::vector<ComplexPoly>& target() const { return rule ? L : P; }
};

Scenario build_scenario(const FamilySpec& family, const RuleSpec& rule, int n);

// Pencil of size m <= n: K with the reduced centers when a rule is set, G otherwise.
HermTridiagPencil scenario_pencil(const Scenario& s, int m);

}  // namespace r2kit
