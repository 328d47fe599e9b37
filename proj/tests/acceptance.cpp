// Acceptance run: one PASS/FAIL line per criterion. Optional argument selects a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "r2kit/analysis.hpp"
#include "r2kit/biortho.hpp"
#include "r2kit/exact.hpp"
#include "r2kit/hypergeom.hpp"
#include "r2kit/pencil.hpp"
#include "r2kit/perturbation.hpp"
#include "r2kit/recurrence.hpp"
#include "r2kit/scenario.hpp"
#include "r2kit/spectrum.hpp"

using namespace r2kit;
using GR = GaussRational;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

FamilySpec constant_spec(double omega = 1.0) {
    FamilySpec f;
    f.kind = "constant";
    f.omega = omega;
    return f;
}

FamilySpec scaled_spec(double zeta = 1.0, double theta = 0.0) {
    FamilySpec f;
    f.kind = "gcrr-scaled";
    f.zeta = zeta;
    f.theta = theta;
    return f;
}

RuleSpec preset(const std::string& name) {
    RuleSpec r;
    r.preset = name;
    return r;
}

RIIParamsT<GR> exact_constant_family() { return constant_family<GR>(GR(1)); }

// Scaled GCRR at zeta = 1, theta = 0, omega = 1: rho_n = (n+1)/(n+2), d_n = n/(4(n+2)), c_n = 0.
RIIParamsT<GR> exact_scaled_gcrr() {
    RIIParamsT<GR> p;
    p.rho = [](int n) { return GR::frac(n + 1, n + 2); };
    p.c = [](int) { return GR(0); };
    p.d = [](int n) { return GR::frac(n, 4LL * (n + 2)); };
    p.omega = GR(1);
    return p;
}

// Closed form vs recurrence for the GCRR family at omega = 1.
void ac01(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double zeta : {1.0, 2.5})
        for (double theta : {0.0, 0.7}) {
            GCRRSpec s{zeta, theta, 1.0, false};
            const auto P = generate(gcrr_params(s), 20);
            for (int n = 0; n <= 20; ++n)
                worst = std::max(worst, max_coeff_diff(gcrr_closed_form(s, n), P[static_cast<std::size_t>(n)]));
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail << "max coeff dev " << sci(worst) << " (tol 1e-12), runtime " << secs << " s (limit 1 s)";
    o.require(worst < 1e-12, "coefficient deviation");
    o.require(secs < 1.0, "runtime");
}

// Ledger identity: exact for the constant example, numerical over random special-form draws.
void ac02(Outcome& o) {
    const auto P = exact_constant_family();
    const auto Ps = generate(P, 13);
    const std::vector<GR> alpha(14, GR::frac(1, 2));
    const auto L = perturb(Ps, alpha);
    bool exact_zero = true;
    for (int n = 1; n <= 12; ++n) exact_zero = exact_zero && ledger_residual(L, ledger_special(P, alpha, n)).is_zero();
    o.require(exact_zero, "exact residual polynomial is zero");

    const auto c = ledger_special(P, alpha, 3);
    const auto q = [](long long a, long long b) { return GR::frac(a, b); };
    struct Item {
        const char* name;
        GR got, want;
    };
    const std::vector<Item> items{{"e", c.e, q(1, 4)},   {"p", c.p, q(1, 4)},    {"f", c.f, q(-1, 2)},
                                  {"q", c.q, q(-1, 2)},  {"g", c.g, q(1, 2)},    {"r", c.r, q(1, 4)},
                                  {"s", c.s, q(0, 1)},   {"t", c.t, q(-1, 16)},  {"u", c.u, q(1, 8)},
                                  {"w", c.w, q(1, 8)},   {"v", c.v, q(-3, 16)},  {"z", c.z, q(-1, 8)}};
    std::string mismatched;
    for (const auto& it : items)
        if (it.got != it.want) mismatched += std::string(" ") + it.name + "=" + it.got.str() + "(listed " + it.want.str() + ")";
    o.require(mismatched.empty(), "listed constants:" + mismatched);

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double worst = 0.0;
    for (int draw = 0; draw < 50; ++draw) {
        const int n_max = 12;
        std::vector<double> rho, cc, dd;
        for (int k = 0; k <= n_max + 1; ++k) {
            rho.push_back(1.0 + 0.5 * U(rng));
            cc.push_back(U(rng));
            dd.push_back(0.55 + 0.45 * U(rng));
        }
        RIIParams rp;
        rp.rho = [rho](int k) { return cplx(rho.at(static_cast<std::size_t>(k))); };
        rp.c = [cc](int k) { return cplx(cc.at(static_cast<std::size_t>(k))); };
        rp.d = [dd](int k) { return cplx(dd.at(static_cast<std::size_t>(k))); };
        rp.omega = cplx(1.25 + 0.75 * U(rng));
        std::vector<cplx> a(n_max + 2);
        for (auto& v : a) v = cplx(U(rng), U(rng));
        const auto Lr = perturb(generate(rp, n_max + 1), a);
        for (int n = 1; n <= n_max; ++n)
            worst = std::max(worst, verify_ledger_identity(Lr, ledger_special(rp, a, n)));
    }
    o.require(worst < 1e-10, "random draws residual");
    o.detail << "exact residual zero for n<=12: " << (exact_zero ? "yes" : "no") << "; random draws max residual "
             << sci(worst) << " (tol 1e-10)";
}

// General-form constants at a = i w, b = -i w equal the special-form constants exactly.
void ac03(Outcome& o) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto rnd = [&] { return GR(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
    int compared = 0;
    bool all_equal = true;
    for (int draw = 0; draw < 10; ++draw) {
        std::vector<GR> rho, cc, dd, a;
        for (int k = 0; k <= 10; ++k) {
            GR r = rnd();
            if (r.is_zero()) r = GR(1);
            rho.push_back(r);
            cc.push_back(rnd());
            dd.push_back(rnd());
            a.push_back(rnd());
        }
        const GR w(Rational(den(rng), den(rng)));
        RIIParamsT<GR> sp;
        sp.rho = [rho](int k) { return rho.at(static_cast<std::size_t>(k)); };
        sp.c = [cc](int k) { return cc.at(static_cast<std::size_t>(k)); };
        sp.d = [dd](int k) { return dd.at(static_cast<std::size_t>(k)); };
        sp.omega = w;
        RIIParamsT<GR> gp = sp;
        gp.omega.reset();
        gp.a = [w](int) { return GR::i() * w; };
        gp.b = [w](int) { return GR(0) - GR::i() * w; };
        for (int n = 1; n <= 9; ++n) {
            const auto s = ledger_special(sp, a, n);
            const auto g = ledger_general(gp, a, n);
            const bool eq = s.e == g.e && s.f == g.f && s.g == g.g && s.p == g.p && s.q == g.q && s.r == g.r &&
                            s.s == g.s && s.t == g.t && s.u == g.u && s.v == g.v && s.w == g.w && s.z == g.z;
            all_equal = all_equal && eq;
            ++compared;
        }
    }
    o.require(all_equal, "exact ledger equality");
    o.detail << compared << " exact ledger comparisons, all equal: " << (all_equal ? "yes" : "no");
}

// Reduced recurrences for the three rules and the constant-family closed forms.
void ac04(Outcome& o) {
    const int N = 16;
    double reduced_worst = 0.0;
    for (const auto& fam : {constant_spec(), scaled_spec()})
        for (const char* rule : {"alpha-gcrr", "beta-gcrr", "vanishing"}) {
            const Scenario s = build_scenario(fam, preset(rule), N);
            if (!s.reduced) {
                o.require(false, std::string("reduction for ") + rule + " on " + fam.kind + " inadmissible");
                continue;
            }
            const auto R = generate(s.reduced->params, N);
            for (int n = 0; n <= N; ++n)
                reduced_worst = std::max(reduced_worst,
                                         max_coeff_diff(R[static_cast<std::size_t>(n)], s.L[static_cast<std::size_t>(n)]));
        }
    o.require(reduced_worst < 1e-10, "reduced recurrence residual");

    const cplx I(0.0, 1.0);
    const Scenario a = build_scenario(constant_spec(), preset("alpha-gcrr"), N);
    const Scenario b = build_scenario(constant_spec(), preset("beta-gcrr"), N);
    const Scenario v = build_scenario(constant_spec(), preset("vanishing"), N);
    double closed_worst = 0.0;
    for (int n = 0; n <= N; ++n) {
        const auto k = static_cast<std::size_t>(n);
        closed_worst = std::max(closed_worst, max_coeff_diff(constant_family_closed_form(n, 1.0), a.P[k]));
        if (n >= 1) {
            closed_worst = std::max(closed_worst, max_coeff_diff(kappa_closed_form(n, 1.0, 0.5), a.L[k]));
            closed_worst = std::max(closed_worst, max_coeff_diff(kappa_closed_form(n, 1.0, -0.5), b.L[k]));
            closed_worst = std::max(closed_worst, max_coeff_diff(kappa_closed_form(n, 1.0, 0.5 * I), v.L[k]));
        }
    }
    o.require(closed_worst < 1e-12, "closed forms");
    o.detail << "reduced recurrence max residual " << sci(reduced_worst) << " (tol 1e-10); closed forms P, L, T, "
             << "alpha=i/2 max dev " << sci(closed_worst) << " (tol 1e-12)";
}

// Unique sequences n/(2(n+1)) and -n/(2(n+1)) from the zero-discriminant quadratics.
void ac05(Outcome& o) {
    bool zeta_forced = true;
    for (int n = 1; n <= 16; ++n) {
        const auto roots = zeta_from_discriminant(n, 1.0);
        zeta_forced = zeta_forced && roots.size() == 1 && std::abs(roots[0] - 1.0) < 1e-15;
    }
    o.require(zeta_forced, "zeta = 1 forced by the discriminant");

    const auto P = exact_scaled_gcrr();
    bool exact_ok = true;
    std::vector<GR> al(18, GR(0)), be(18, GR(0));
    for (int n = 1; n <= 17; ++n) {
        al[static_cast<std::size_t>(n)] = quadratic_root(reduction_quadratic(P, Reduction::Balanced, n), 1);
        be[static_cast<std::size_t>(n)] = quadratic_root(reduction_quadratic(P, Reduction::Mirrored, n), 1);
        exact_ok = exact_ok && al[static_cast<std::size_t>(n)] == GR::frac(n, 2LL * (n + 1)) &&
                   be[static_cast<std::size_t>(n)] == GR::frac(-n, 2LL * (n + 1));
    }
    bool ratio_exact = true;
    for (int n = 2; n <= 17; ++n)
        ratio_exact = ratio_exact && ratio_condition(P, al, n).is_zero() && ratio_condition(P, be, n).is_zero();
    o.require(exact_ok, "exact alpha/beta sequences");
    o.require(ratio_exact, "exact ratio condition");

    double ratio_worst = 0.0;
    for (const char* rule : {"alpha-gcrr", "beta-gcrr"}) {
        const Scenario s = build_scenario(scaled_spec(), preset(rule), 16);
        for (int n = 2; n <= 17; ++n) ratio_worst = std::max(ratio_worst, check_condition2(s.params, s.alpha, n).residual);
    }
    o.require(ratio_worst < 1e-14, "floating ratio condition");
    o.detail << "exact sequences reproduced: " << (exact_ok ? "yes" : "no") << "; ratio condition floating max "
             << sci(ratio_worst) << " (tol 1e-14)";
}

// Pencil eigenvalues vs Aberth roots, plus the n = 2 anchors.
void ac06(Outcome& o) {
    double worst_k = 0.0, worst_g = 0.0;
    for (const auto& fam : {constant_spec(), scaled_spec()}) {
        const Scenario s = build_scenario(fam, preset("alpha-gcrr"), 32);
        const Scenario g = build_scenario(fam, preset("none"), 32);
        for (int n = 1; n <= 32; ++n) {
            const auto k = static_cast<std::size_t>(n);
            worst_k = std::max(worst_k, cross_check(generalized_eigs(scenario_pencil(s, n)), poly_roots(s.L[k])));
            worst_g = std::max(worst_g, cross_check(generalized_eigs(scenario_pencil(g, n)), poly_roots(g.P[k])));
        }
    }
    o.require(worst_k < 1e-9, "K pencil vs L_n roots");
    o.require(worst_g < 1e-9, "G pencil vs P_n roots");

    const Scenario s = build_scenario(constant_spec(), preset("alpha-gcrr"), 2);
    const auto ek = generalized_eigs(scenario_pencil(s, 2));
    const Scenario g = build_scenario(constant_spec(), preset("none"), 2);
    const auto eg = generalized_eigs(scenario_pencil(g, 2));
    const double r3 = 1.0 / std::sqrt(3.0);
    double anchor = std::max({std::abs(ek.values[0] - (-1.0 / 3.0)), std::abs(ek.values[1] - 1.0),
                              std::abs(eg.values[0] + r3), std::abs(eg.values[1] - r3)});
    o.require(anchor < 1e-12, "n=2 anchors");
    o.detail << "K vs L max dev " << sci(worst_k) << ", G vs P max dev " << sci(worst_g) << " (tol 1e-9); n=2 anchors "
             << sci(anchor) << " (tol 1e-12)";
}

// Factorization residuals of J.
void ac07(Outcome& o) {
    double worst = 0.0, pivot = 0.0;
    for (const auto& fam : {constant_spec(), scaled_spec(), scaled_spec(2.5, 0.7)}) {
        const Scenario g = build_scenario(fam, preset("none"), 32);
        for (int n = 1; n <= 32; ++n) {
            const auto J = scenario_pencil(g, n);
            const auto r = factor_residuals(J, factor_all(J));
            worst = std::max({worst, r.chol, r.ul, r.ldu});
            pivot = std::max(pivot, r.pivot_consistency);
        }
    }
    o.require(worst < 1e-12, "factor residuals");
    o.require(pivot < 1e-13, "pivot consistency");
    o.detail << "max factor residual " << sci(worst) << " (tol 1e-12); max |e_i - m_i^2| " << sci(pivot)
             << " (tol 1e-13)";
}

// Gram checks, unfactored structure and the kernel identity.
void ac08(Outcome& o) {
    double gram = 0.0, unf_off = 0.0, unf_diag = 0.0;
    const Scenario s = build_scenario(constant_spec(), preset("alpha-gcrr"), 10);
    const Scenario t = build_scenario(scaled_spec(), preset("alpha-gcrr"), 10);
    for (const Scenario* sc : {&s, &t})
        for (int n = 1; n <= 10; ++n) {
            const auto K = scenario_pencil(*sc, n);
            const auto zeros = generalized_eigs(K);
            const auto f = factor_all(K);
            for (auto dec : {Decomposition::Cholesky, Decomposition::UL, Decomposition::LDU}) {
                const auto rep = gram_check(sc->L, sc->params, zeros, K, f, dec);
                gram = std::max({gram, rep.max_offdiag, rep.max_diag_dev});
                unf_off = std::max(unf_off, rep.unfactored_max_offdiag);
                unf_diag = std::max(unf_diag, rep.unfactored_max_diag_rel);
            }
        }
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    std::uniform_int_distribution<int> N(1, 10);
    double kernel = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Scenario& sc = (i % 2 == 0) ? s : t;
        const int n = N(rng);
        const cplx x(U(rng), 0.0), y(U(rng), 0.0);
        kernel = std::max(kernel, cd_kernel(sc.L, sc.params, scenario_pencil(sc, n), x, y));
    }
    o.require(gram < 1e-8, "gram checks");
    o.require(unf_off < 1e-9 && unf_diag < 1e-9, "unfactored structure");
    o.require(kernel < 1e-9, "kernel identity");
    o.detail << "gram max |entry - delta| " << sci(gram) << " (tol 1e-8); unfactored off " << sci(unf_off)
             << ", diag rel " << sci(unf_diag) << " (tol 1e-9); kernel max residual " << sci(kernel) << " (tol 1e-9)";
}

// Interlacing patterns and the Wronskian identity.
void ac09(Outcome& o) {
    bool consecutive = true;
    for (const auto& fam : {constant_spec(), scaled_spec()}) {
        const Scenario g = build_scenario(fam, preset("none"), 32);
        std::vector<ZeroSet> z;
        for (int n = 1; n <= 32; ++n) z.push_back(generalized_eigs(scenario_pencil(g, n)));
        for (int n = 1; n <= 31; ++n)
            consecutive = consecutive &&
                          check_interlace(z[static_cast<std::size_t>(n)], z[static_cast<std::size_t>(n - 1)],
                                          InterlaceMode::Consecutive)
                              .pass();
    }
    o.require(consecutive, "consecutive interlacing n<=31");

    const int n = 8;
    const Scenario a = build_scenario(scaled_spec(), preset("alpha-gcrr"), n);
    const Scenario b = build_scenario(scaled_spec(), preset("beta-gcrr"), n);
    const auto p8 = poly_roots(a.P[8]), p7 = poly_roots(a.P[7]);
    const auto l8 = generalized_eigs(scenario_pencil(a, n)), t8 = generalized_eigs(scenario_pencil(b, n));
    const auto tri_a = triple_interlace(p8, p7, l8, alpha_sign(a.alpha, 1, n));
    const auto tri_b = triple_interlace(p8, p7, t8, alpha_sign(b.alpha, 1, n));
    const auto cross = check_interlace(l8, t8, InterlaceMode::Cross, "L_8", "T_8");
    o.require(tri_a.pass(), "triple pattern alpha>0");
    o.require(tri_b.pass(), "triple pattern beta<0");
    o.require(cross.pass(), "cross interlacing L_8/T_8");

    // Absolute identity residual for the n = 8 pair, L and T from their own reduced recurrences,
    // on a grid spanning every zero of P_8.
    const double radius8 = 1.1 * std::max(std::abs(p8.values.front()), std::abs(p8.values.back()));
    const double wr = wronskian_identity_residual(recurrence_evaluator(a.reduced->params, n),
                                                  recurrence_evaluator(b.reduced->params, n), a.alpha[8], b.alpha[8],
                                                  recurrence_evaluator(a.params, n),
                                                  recurrence_evaluator(a.params, n - 1), 64, radius8);

    // n = 2..16: cross interlacing, no common zeros, and the residual relative to max |(beta - alpha) W|.
    double wr_rel = 0.0;
    bool distinct = true;
    for (int m = 2; m <= 16; ++m) {
        const Scenario sa = build_scenario(scaled_spec(), preset("alpha-gcrr"), m);
        const Scenario sb = build_scenario(scaled_spec(), preset("beta-gcrr"), m);
        const auto k = static_cast<std::size_t>(m);
        const auto pz = poly_roots(sa.P[k]);
        const double radius = 1.1 * std::max(std::abs(pz.values.front()), std::abs(pz.values.back()));
        double scale = 0.0;
        const double res = wronskian_identity_residual(recurrence_evaluator(sa.reduced->params, m),
                                                       recurrence_evaluator(sb.reduced->params, m), sa.alpha[k],
                                                       sb.alpha[k], recurrence_evaluator(sa.params, m),
                                                       recurrence_evaluator(sa.params, m - 1), 64, radius, &scale);
        wr_rel = std::max(wr_rel, res / scale);
        distinct = distinct && common_zero_gap(sa.L[k], sb.L[k]) > 1e-8;
        distinct = distinct && check_interlace(generalized_eigs(scenario_pencil(sa, m)),
                                               generalized_eigs(scenario_pencil(sb, m)), InterlaceMode::Cross)
                                   .pass();
    }
    o.require(wr < 1e-10, "Wronskian identity n=8");
    o.require(wr_rel < 1e-10, "relative Wronskian identity n=2..16");
    o.require(distinct, "cross interlacing n=2..16");
    o.detail << "consecutive n<=31: " << (consecutive ? "ok" : "violated") << "; triple margins " << sci(tri_a.margin)
             << " / " << sci(tri_b.margin) << "; cross margin " << sci(cross.margin) << "; Wronskian residual n=8 " << sci(wr)
             << ", relative n=2..16 " << sci(wr_rel) << " (tol 1e-10)";
}

// Anchor integral and the GCRR-weight orthogonality suite.
void ac10(Outcome& o) {
    WeightSpec cauchy;
    const ComplexPoly p2({-0.25, 0.0, 0.75});
    const auto anchor = rational_moment(cauchy, p2, 0, 2);
    o.require(std::abs(anchor.value) < 1e-10, "anchor integral");
    double worst = 0.0;
    for (double theta : {0.0, 0.5}) {
        WeightSpec w;
        w.kind = WeightKind::Gcrr;
        w.zeta = 1.0;
        w.theta = theta;
        const auto P = generate(gcrr_params(GCRRSpec{1.0, theta, 1.0, false}), 5);
        const auto rep = orthogonality_suite(w, P, 5);
        worst = std::max(worst, rep.max_magnitude);
    }
    o.require(worst < 1e-8, "orthogonality suite");
    o.detail << "anchor |integral| " << sci(std::abs(anchor.value)) << " (tol 1e-10); suite max |moment| "
             << sci(worst) << " (tol 1e-8)";
}

// Leading-coefficient ratios of the constant family.
void ac11(Outcome& o) {
    const auto P = generate(constant_spec().params(), 16);
    double worst = 0.0;
    for (int n = 1; n <= 16; ++n) {
        const double l_prev = (n - 1) / (2.0 * n);
        const double ratio = (P[static_cast<std::size_t>(n)].lead() / P[static_cast<std::size_t>(n - 1)].lead()).real();
        worst = std::max(worst, std::abs(ratio - (1.0 - l_prev)));
    }
    const auto rep = leading_coeffs(constant_spec().params(), 16);
    o.require(rep.hypotheses, "chain-sequence hypotheses");
    o.require(worst < 1e-12 && rep.max_law_dev < 1e-12, "ratio law");
    o.detail << "max |k_n/k_{n-1} - (1 - l_{n-1})| " << sci(worst) << " (tol 1e-12)";
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"closed form vs recurrence", ac01},      {"ledger identity", ac02},
        {"general ledger specialization", ac03},  {"reduced recurrences and closed forms", ac04},
        {"unique sequences", ac05},               {"spectral equivalence", ac06},
        {"factorizations", ac07},                 {"biorthogonality", ac08},
        {"interlacing", ac09},                    {"moments", ac10},
        {"leading coefficients", ac11}};
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        std::printf("[AC-%02zu] %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.str().c_str());
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
