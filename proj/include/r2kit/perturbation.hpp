#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "r2kit/error.hpp"
#include "r2kit/poly.hpp"
#include "r2kit/recurrence.hpp"

namespace r2kit {

// Which linear relation between the ledger constants f_n and g_n is imposed.
enum class Reduction { Balanced, Mirrored, Vanishing };  // f=-g, f=g, g=0

enum class RuleVariant { ExplicitList, Recursion, QuadraticRoot, ConstantKappa };

struct PerturbRule {
    RuleVariant variant = RuleVariant::QuadraticRoot;
    Reduction kind = Reduction::Balanced;
    int branch = +1;
    cplx seed = 0.0;            // alpha_1 for Recursion
    std::vector<cplx> values;   // alpha_1, alpha_2, ... for ExplicitList
};

std::string to_string(Reduction r);
Reduction reduction_from_string(const std::string& s);
std::string to_string(RuleVariant v);

template <class T>
struct CoeffLedgerT {
    int n = 0;
    T e, f, g;
    T p, q, r, s;
    T t, u, v, w, z;
};
using CoeffLedger = CoeffLedgerT<cplx>;

template <class T>
double magnitude(const T& v) {
    return std::abs(to_cplx(v));
}

template <class T>
bool negligible(const T& v, double tol) {
    if constexpr (is_exact_v<T>) {
        (void)tol;
        return v.is_zero();
    } else {
        return std::abs(v) <= tol;
    }
}

inline void require_special(bool special, const char* what) {
    if (!special) throw ConfigError(std::string(what) + " needs the special (omega) form");
}

template <class T>
const T& alpha_at(const std::vector<T>& alpha, int k) {
    if (k < 0 || k >= static_cast<int>(alpha.size())) throw ConfigError("alpha sequence too short for index " + std::to_string(k));
    return alpha[static_cast<std::size_t>(k)];
}

// L_0 = P_0, L_n = P_n - alpha_n P_{n-1}.
template <class T>
std::vector<Poly<T>> perturb(const std::vector<Poly<T>>& P, const std::vector<T>& alpha) {
    std::vector<Poly<T>> L;
    L.reserve(P.size());
    if (P.empty()) return L;
    L.push_back(P[0]);
    for (std::size_t n = 1; n < P.size(); ++n) {
        const T& a = alpha_at(alpha, static_cast<int>(n));
        if (exactly_zero(a)) throw ConfigError("perturbation constant alpha_" + std::to_string(n) + " is zero");
        L.push_back(P[n] - a * P[n - 1]);
    }
    return L;
}

template <class T>
CoeffLedgerT<T> ledger_special(const RIIParamsT<T>& P, const std::vector<T>& alpha, int n) {
    require_special(P.special(), "ledger_special");
    if (n < 1) throw ConfigError("ledger index must be >= 1");
    const T w2 = P.omega_sq();
    const T am = alpha_at(alpha, n - 1), a0 = alpha_at(alpha, n), ap = alpha_at(alpha, n + 1);
    const T rm = P.rho(n - 1), r0 = P.rho(n);
    const T cm = P.c(n - 1), c0 = P.c(n);
    const T dm = P.d(n - 1), d0 = P.d(n);

    CoeffLedgerT<T> L;
    L.n = n;
    L.e = dm;
    L.f = T(0) - am * rm;
    L.g = dm * w2 + am * (a0 + rm * cm);
    L.p = r0 * L.e;
    L.q = am * (d0 - r0 * rm) - dm * (r0 * c0 + ap);
    L.r = am * rm * (ap + r0 * (c0 + cm)) + r0 * dm * w2;
    L.s = T(0) - (am * rm * cm + dm * w2) * (r0 * c0 + ap) + am * d0 * w2;
    const T e_next = d0;
    const T f_next = T(0) - a0 * r0;
    const T g_next = d0 * w2 + a0 * (ap + r0 * c0);
    L.t = T(0) - e_next * dm;
    L.u = T(0) - dm * f_next;
    L.w = L.u * w2;
    L.v = T(0) - dm * (g_next + w2 * e_next);
    L.z = T(0) - dm * w2 * g_next;
    return L;
}

// General-form constants. The r_n term carries -alpha_{n-1} d_n (a_n + b_n); see README.
template <class T>
CoeffLedgerT<T> ledger_general(const RIIParamsT<T>& P, const std::vector<T>& alpha, int n) {
    if (n < 1) throw ConfigError("ledger index must be >= 1");
    const T am = alpha_at(alpha, n - 1), a0 = alpha_at(alpha, n), ap = alpha_at(alpha, n + 1);
    const T rm = P.rho(n - 1), r0 = P.rho(n);
    const T cm = P.c(n - 1), c0 = P.c(n);
    const T dm = P.d(n - 1), d0 = P.d(n);
    const T Sm = P.root_a(n - 1) + P.root_b(n - 1), S0 = P.root_a(n) + P.root_b(n);
    const T Pm = P.root_a(n - 1) * P.root_b(n - 1), P0 = P.root_a(n) * P.root_b(n);
    const T h = a0 * (ap + r0 * c0);

    CoeffLedgerT<T> L;
    L.n = n;
    L.e = dm;
    L.f = T(0) - dm * Sm - am * rm;
    L.g = dm * Pm + am * (a0 + rm * cm);
    L.p = r0 * dm;
    L.q = am * (d0 - r0 * rm) - dm * (r0 * (Sm + c0) + ap);
    L.r = am * rm * (ap + r0 * (c0 + cm)) + dm * Sm * (ap + r0 * c0) - am * d0 * S0 + r0 * dm * Pm;
    L.s = T(0) - (am * rm * cm + dm * Pm) * (r0 * c0 + ap) + am * d0 * P0;
    L.t = T(0) - d0 * dm;
    L.u = dm * (d0 * (S0 + Sm) + a0 * r0);
    L.v = T(0) - dm * (h + d0 * (P0 + Pm) + Sm * (d0 * S0 + a0 * r0));
    L.w = T(0) - dm * (Pm * (T(0) - d0 * S0 - a0 * r0) - Sm * (h + d0 * P0));
    L.z = T(0) - dm * Pm * (h + d0 * P0);
    return L;
}

// (e x^2 + f x + g) L_{n+1} - (p x^3 + q x^2 + r x + s) L_n - (t x^4 + u x^3 + v x^2 + w x + z) L_{n-1}
template <class T>
Poly<T> ledger_residual(const std::vector<Poly<T>>& L, const CoeffLedgerT<T>& c) {
    const int n = c.n;
    if (n < 1 || n + 1 >= static_cast<int>(L.size())) throw ConfigError("ledger_residual: L_{n+1} not available");
    const Poly<T> A(std::vector<T>{c.g, c.f, c.e});
    const Poly<T> B(std::vector<T>{c.s, c.r, c.q, c.p});
    const Poly<T> C(std::vector<T>{c.z, c.w, c.v, c.u, c.t});
    const auto idx = [](int k) { return static_cast<std::size_t>(k); };
    return A * L[idx(n + 1)] - B * L[idx(n)] - C * L[idx(n - 1)];
}

inline double verify_ledger_identity(const std::vector<ComplexPoly>& L, const CoeffLedger& c) {
    return max_abs_coeff(ledger_residual(L, c));
}

template <class T>
struct Quadratic {
    T A, B, C;
    T disc() const { return B * B - T(4) * A * C; }
};

// Quadratic whose roots are the alpha_n compatible with both the chosen reduction and the ratio condition.
template <class T>
Quadratic<T> reduction_quadratic(const RIIParamsT<T>& P, Reduction kind, int n) {
    require_special(P.special(), "reduction_quadratic");
    if (n < 1) throw ConfigError("quadratic index must be >= 1");
    const T r0 = P.rho(n), rm = P.rho(n - 1), cm = P.c(n - 1);
    Quadratic<T> q;
    q.A = r0;
    q.C = P.omega_sq() * P.d(n) * rm;
    switch (kind) {
        case Reduction::Balanced: q.B = T(0) - r0 * rm * (T(1) - cm); break;
        case Reduction::Mirrored: q.B = r0 * rm * (T(1) + cm); break;
        case Reduction::Vanishing: q.B = r0 * rm * cm; break;
    }
    return q;
}

// Relative discriminant size below which the two roots are treated as one repeated root.
inline constexpr double kRepeatedRootTol = 1e-13;

template <class T>
T quadratic_root(const Quadratic<T>& q, int branch) {
    const T two_a = T(2) * q.A;
    if (exactly_zero(two_a)) throw NumericalError("quadratic leading coefficient vanishes");
    const T disc = q.disc();
    if constexpr (is_exact_v<T>) {
        if (!disc.is_zero()) throw NumericalError("quadratic root is irrational in exact mode");
        return (T(0) - q.B) / two_a;
    } else {
        const double scale = std::max(std::norm(q.B), std::abs(T(4) * q.A * q.C));
        if (std::abs(disc) <= kRepeatedRootTol * scale) return -q.B / two_a;
        const T sq = std::sqrt(disc);
        return (-q.B + static_cast<double>(branch >= 0 ? 1 : -1) * sq) / two_a;
    }
}

// alpha_n from alpha_{n-1} so that the chosen f/g relation holds at index n.
template <class T>
T alpha_recursion(const RIIParamsT<T>& P, Reduction kind, const T& alpha_prev, int n) {
    require_special(P.special(), "alpha_recursion");
    if (exactly_zero(alpha_prev)) throw NumericalError("alpha recursion divides by alpha_{n-1} = 0", n - 1);
    const T rm = P.rho(n - 1), cm = P.c(n - 1);
    const T tail = P.omega_sq() * P.d(n - 1) / alpha_prev;
    switch (kind) {
        case Reduction::Balanced: return rm * (T(1) - cm) - tail;
        case Reduction::Mirrored: return T(0) - rm * (T(1) + cm) - tail;
        case Reduction::Vanishing: return T(0) - (tail + rm * cm);
    }
    return T(0);
}

template <class T>
T reduction_lhs(const RIIParamsT<T>& P, const std::vector<T>& alpha, Reduction kind, int n) {
    const T am = alpha_at(alpha, n - 1), a0 = alpha_at(alpha, n);
    const T rm = P.rho(n - 1), cm = P.c(n - 1), dm = P.d(n - 1);
    const T f = T(0) - am * rm;
    const T g = dm * P.omega_sq() + am * (a0 + rm * cm);
    switch (kind) {
        case Reduction::Balanced: return f + g;
        case Reduction::Mirrored: return f - g;
        case Reduction::Vanishing: return g;
    }
    return T(0);
}

// d_n alpha_{n-1} rho_{n-1} - d_{n-1} alpha_n rho_n
template <class T>
T ratio_condition(const RIIParamsT<T>& P, const std::vector<T>& alpha, int n) {
    return P.d(n) * alpha_at(alpha, n - 1) * P.rho(n - 1) - P.d(n - 1) * alpha_at(alpha, n) * P.rho(n);
}

// alpha_2 - [rho_1 (c_0 - c_1) + rho_1 alpha_1 / rho_0]
template <class T>
T initial_step_condition(const RIIParamsT<T>& P, const std::vector<T>& alpha) {
    const T r1 = P.rho(1);
    return alpha_at(alpha, 2) - (r1 * (P.c(0) - P.c(1)) + r1 * alpha_at(alpha, 1) / P.rho(0));
}

inline constexpr double kConditionTol = 1e-12;

struct ConditionCheck {
    std::string condition;
    int n = 0;
    double residual = 0.0;
    bool pass = true;
};

struct AdmissibilityReport {
    std::vector<ConditionCheck> checks;
    bool ok = true;
    double max_residual = 0.0;
    const ConditionCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

template <class T>
AdmissibilityReport check_reduction(const RIIParamsT<T>& P, const std::vector<T>& alpha, Reduction kind, int N,
                                    double tol = kConditionTol) {
    require_special(P.special(), "check_reduction");
    AdmissibilityReport rep;
    auto add = [&](const std::string& name, int n, const T& v) {
        ConditionCheck c{name, n, magnitude(v), negligible(v, tol)};
        rep.ok = rep.ok && c.pass;
        rep.max_residual = std::max(rep.max_residual, c.residual);
        rep.checks.push_back(c);
    };
    if (N >= 2) add("initial-step", 1, initial_step_condition(P, alpha));
    for (int n = 2; n <= N; ++n) {
        add(to_string(kind), n, reduction_lhs(P, alpha, kind, n));
        add("ratio", n, ratio_condition(P, alpha, n));
    }
    return rep;
}

template <class T>
struct ReducedRecurrenceT {
    RIIParamsT<T> params;
    std::vector<T> centers;          // c'_0 .. c'_{N-1}
    std::vector<T> printed_centers;  // closed-form centers for n >= 2 (index 0,1 copied)
    double printed_gap = 0.0;
    AdmissibilityReport admissibility;
};
using ReducedRecurrence = ReducedRecurrenceT<cplx>;

// Special-form R_II parameters (same rho, d, omega) generating L_0..L_N.
template <class T>
ReducedRecurrenceT<T> reduced_recurrence(const RIIParamsT<T>& P, const std::vector<T>& alpha, Reduction kind, int N,
                                         double tol = kConditionTol) {
    require_special(P.special(), "reduced_recurrence");
    if (N < 1) throw ConfigError("reduced_recurrence needs N >= 1");
    ReducedRecurrenceT<T> out;
    out.admissibility = check_reduction(P, alpha, kind, N, tol);
    if (const auto* bad = out.admissibility.first_failure()) throw AdmissibilityError(bad->condition, bad->n, bad->residual);

    out.centers.push_back(P.c(0) + alpha_at(alpha, 1) / P.rho(0));
    if (N >= 2) out.centers.push_back(P.c(0));
    for (int n = 2; n <= N - 1; ++n) {
        const auto led = ledger_special(P, alpha, n);
        out.centers.push_back(led.f / led.e - led.q / led.p);
    }
    out.printed_centers = out.centers;
    for (int n = 2; n <= N - 1; ++n) {
        const auto led = ledger_special(P, alpha, n);
        const T denom = led.f * P.rho(n);
        if (exactly_zero(denom)) continue;
        T pc;
        switch (kind) {
            case Reduction::Balanced: pc = T(0) - led.s / denom; break;
            case Reduction::Mirrored: pc = led.s / denom; break;
            case Reduction::Vanishing: pc = T(0) - led.r / denom; break;
        }
        out.printed_centers[static_cast<std::size_t>(n)] = pc;
        out.printed_gap = std::max(out.printed_gap, magnitude(pc - out.centers[static_cast<std::size_t>(n)]));
    }

    out.params = P;
    const auto centers = out.centers;
    out.params.c = [centers](int k) {
        if (k < 0 || k >= static_cast<int>(centers.size())) throw ConfigError("reduced recurrence center out of range");
        return centers[static_cast<std::size_t>(k)];
    };
    return out;
}

// alpha_0 .. alpha_count for a rule (alpha_0 is a placeholder except for constant sequences).
std::vector<cplx> alpha_sequence(const RIIParams& P, const PerturbRule& rule, int count);

struct ConditionResult {
    double residual = 0.0;
    bool pass = false;
};
ConditionResult check_condition2(const RIIParams& P, const std::vector<cplx>& alpha, int n, double tol = kConditionTol);

// Positive roots zeta of the zero-discriminant condition at theta = 0.
std::vector<double> zeta_from_discriminant(int n, double omega);

// Constant sequence solving the balanced recursion: rho(1-c)/2 +- sqrt(rho^2 (1-c)^2 - 4 w^2 d)/2.
cplx kappa_value(const RIIParams& P, int branch);

// Constant family (rho=1, c=0, d=1/4): P_n = (i/w)[((x-iw)/2)^{n+1} - ((x+iw)/2)^{n+1}].
ComplexPoly constant_family_closed_form(int n, double omega);
// P_n - kappa P_{n-1} for the same family: (i/(w 2^{n+1}))[(x-iw)^n (x-iw-2k) - (x+iw)^n (x+iw-2k)].
ComplexPoly kappa_closed_form(int n, double omega, cplx kappa);
// ((x+i)/(2 i^{n+1})) sum_{k<n} (-n)_k ((1-ix)/2)^k, kept for comparison only.
ComplexPoly i_half_series_form(int n);

}  // namespace r2kit
