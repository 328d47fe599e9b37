#include "r2kit/perturbation.hpp"

#include <cmath>

#include "r2kit/hypergeom.hpp"

namespace r2kit {

std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::Balanced: return "balanced";
        case Reduction::Mirrored: return "mirrored";
        case Reduction::Vanishing: return "vanishing";
    }
    return "?";
}

Reduction reduction_from_string(const std::string& s) {
    if (s == "balanced" || s == "alpha") return Reduction::Balanced;
    if (s == "mirrored" || s == "beta") return Reduction::Mirrored;
    if (s == "vanishing") return Reduction::Vanishing;
    throw ConfigError("unknown reduction kind '" + s + "'");
}

std::string to_string(RuleVariant v) {
    switch (v) {
        case RuleVariant::ExplicitList: return "explicit-list";
        case RuleVariant::Recursion: return "recursion";
        case RuleVariant::QuadraticRoot: return "quadratic-root";
        case RuleVariant::ConstantKappa: return "constant-kappa";
    }
    return "?";
}

std::vector<cplx> alpha_sequence(const RIIParams& P, const PerturbRule& rule, int count) {
    if (count < 0) throw ConfigError("alpha_sequence: count must be nonnegative");
    std::vector<cplx> a(static_cast<std::size_t>(count) + 1, 0.0);
    switch (rule.variant) {
        case RuleVariant::ExplicitList:
            if (static_cast<int>(rule.values.size()) < count)
                throw ConfigError("explicit alpha list has " + std::to_string(rule.values.size()) + " values, need " +
                                  std::to_string(count));
            for (int n = 1; n <= count; ++n) a[static_cast<std::size_t>(n)] = rule.values[static_cast<std::size_t>(n - 1)];
            break;
        case RuleVariant::Recursion:
            if (count >= 1) a[1] = rule.seed;
            for (int n = 2; n <= count; ++n)
                a[static_cast<std::size_t>(n)] = alpha_recursion(P, rule.kind, a[static_cast<std::size_t>(n - 1)], n);
            break;
        case RuleVariant::QuadraticRoot:
            for (int n = 1; n <= count; ++n)
                a[static_cast<std::size_t>(n)] = quadratic_root(reduction_quadratic(P, rule.kind, n), rule.branch);
            break;
        case RuleVariant::ConstantKappa: {
            const cplx k = kappa_value(P, rule.branch);
            for (auto& v : a) v = k;
            break;
        }
    }
    for (int n = 1; n <= count; ++n)
        if (a[static_cast<std::size_t>(n)] == cplx(0.0, 0.0))
            throw ConfigError("perturbation constant alpha_" + std::to_string(n) + " is zero");
    return a;
}

ConditionResult check_condition2(const RIIParams& P, const std::vector<cplx>& alpha, int n, double tol) {
    ConditionResult r;
    r.residual = std::abs(ratio_condition(P, alpha, n));
    r.pass = r.residual <= tol;
    return r;
}

std::vector<double> zeta_from_discriminant(int n, double omega) {
    if (omega < 1.0) throw ConfigError("zero discriminant needs omega >= 1");
    if (n < 1) throw ConfigError("zeta_from_discriminant needs n >= 1");
    const double s = 1.0 - omega * omega;
    const double B = 2.0 * n * s - 1.0;
    const double C = s * (static_cast<double>(n) * n - n);
    const double disc = B * B - 4.0 * C;
    if (disc < 0.0) throw NumericalError("zero-discriminant equation has no real zeta", n);
    const double sq = std::sqrt(disc);
    std::vector<double> out;
    for (double z : {(-B - sq) / 2.0, (-B + sq) / 2.0})
        if (z > 1e-14) out.push_back(z);
    if (out.empty()) throw NumericalError("zero-discriminant equation has no positive zeta", n);
    return out;
}

cplx kappa_value(const RIIParams& P, int branch) {
    require_special(P.special(), "kappa_value");
    const cplx B = P.rho(0) * (1.0 - P.c(0));
    const cplx disc = B * B - 4.0 * P.omega_sq() * P.d(1);
    if (std::abs(disc) <= kRepeatedRootTol * std::norm(B)) return B / 2.0;
    return (B + static_cast<double>(branch >= 0 ? 1 : -1) * std::sqrt(disc)) / 2.0;
}

ComplexPoly constant_family_closed_form(int n, double omega) {
    const cplx I(0.0, 1.0);
    const cplx iw = I * omega;
    const double scale = std::pow(2.0, n + 1);
    return (I / omega / scale) * (power_of_linear(iw, n + 1) - power_of_linear(-iw, n + 1));
}

ComplexPoly kappa_closed_form(int n, double omega, cplx kappa) {
    if (n == 0) return ComplexPoly::constant(1.0);
    const cplx I(0.0, 1.0);
    const cplx iw = I * omega;
    const ComplexPoly left = power_of_linear(iw, n) * ComplexPoly::linear(1.0, -iw - 2.0 * kappa);
    const ComplexPoly right = power_of_linear(-iw, n) * ComplexPoly::linear(1.0, iw - 2.0 * kappa);
    return (I / (omega * std::pow(2.0, n + 1))) * (left - right);
}

ComplexPoly i_half_series_form(int n) {
    if (n == 0) return ComplexPoly::constant(1.0);
    const cplx I(0.0, 1.0);
    const ComplexPoly z = ComplexPoly::linear(-I / 2.0, 0.5);
    ComplexPoly sum;
    ComplexPoly zk = ComplexPoly::constant(1.0);
    for (int k = 0; k < n; ++k) {
        sum += pochhammer(static_cast<double>(-n), k) * zk;
        zk = zk * z;
    }
    const cplx pre = 1.0 / (2.0 * std::pow(I, n + 1));
    return pre * (ComplexPoly::linear(1.0, I) * sum);
}

}  // namespace r2kit
