#include "r2kit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "r2kit/analysis.hpp"
#include "r2kit/biortho.hpp"
#include "r2kit/exact.hpp"
#include "r2kit/hypergeom.hpp"
#include "r2kit/pencil.hpp"
#include "r2kit/perturbation.hpp"
#include "r2kit/recurrence.hpp"
#include "r2kit/scenario.hpp"
#include "r2kit/spectrum.hpp"
#include "r2kit/util.hpp"

namespace r2kit {

namespace {

using GR = GaussRational;

class Suite {
public:
    explicit Suite(std::string module) : module_(std::move(module)) {}

    void below(const std::string& name, double value, double tol, std::string detail = {}) {
        out_.push_back({module_, name, value < tol, value, tol, std::move(detail), false});
    }
    void truth(const std::string& name, bool ok, std::string detail = {}) {
        out_.push_back({module_, name, ok, ok ? 1.0 : 0.0, 0.0, std::move(detail), false});
    }
    void info(const std::string& name, double value, std::string detail = {}) {
        out_.push_back({module_, name, true, value, 0.0, std::move(detail), true});
    }
    // Runs body; an exception becomes a failed check instead of aborting the suite.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            out_.push_back({module_, name, false, 0.0, 0.0, std::string("exception: ") + e.what(), false});
        }
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string module_;
    std::vector<CheckResult> out_;
};

FamilySpec constant_family_spec(double omega = 1.0) {
    FamilySpec f;
    f.kind = "constant";
    f.omega = omega;
    return f;
}

FamilySpec scaled_family_spec(double zeta = 1.0, double theta = 0.0) {
    FamilySpec f;
    f.kind = "gcrr-scaled";
    f.zeta = zeta;
    f.theta = theta;
    return f;
}

RuleSpec rule_preset(const std::string& name) {
    RuleSpec r;
    r.preset = name;
    return r;
}

RIIParams random_special_params(std::mt19937& rng, int count) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> rho, c, d;
    for (int k = 0; k < count; ++k) {
        rho.push_back(1.0 + 0.5 * U(rng));
        c.push_back(U(rng));
        d.push_back(0.55 + 0.45 * U(rng));
    }
    RIIParams p;
    p.rho = [rho](int k) { return cplx(rho.at(static_cast<std::size_t>(k))); };
    p.c = [c](int k) { return cplx(c.at(static_cast<std::size_t>(k))); };
    p.d = [d](int k) { return cplx(d.at(static_cast<std::size_t>(k))); };
    p.omega = cplx(1.25 + 0.75 * U(rng));
    return p;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

std::vector<CheckResult> poly_core_suite(std::uint32_t seed) {
    Suite s("poly_core");
    s.guarded("real coefficients", [&] {
        double worst = 0.0;
        for (const auto& p : generate(gcrr_params(GCRRSpec{1.0, 0.7, 1.0, false}), 20)) worst = std::max(worst, max_imag_coeff(p));
        for (const char* rule : {"alpha-gcrr", "beta-gcrr"}) {
            const Scenario sc = build_scenario(scaled_family_spec(), rule_preset(rule), 20);
            for (const auto& p : sc.L) worst = std::max(worst, max_imag_coeff(p));
        }
        s.below("imaginary coefficient parts of P_n, L_n, T_n", worst, 1e-12);
    });
    s.guarded("product rule", [&] {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 5), deg(0, 5);
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            auto rnd = [&] {
                std::vector<GR> c;
                for (int k = 0, m = deg(rng); k <= m; ++k)
                    c.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
                return ExactPoly(std::move(c));
            };
            const ExactPoly p = rnd(), q = rnd();
            ok = ok && (p * q).derivative() == p.derivative() * q + p * q.derivative();
        }
        s.truth("product rule exact in rational mode", ok);
    });
    s.guarded("wronskian antisymmetry", [&] {
        std::mt19937 rng(seed + 1);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<cplx> a(6), b(5);
            for (auto& v : a) v = cplx(U(rng), U(rng));
            for (auto& v : b) v = cplx(U(rng), U(rng));
            const ComplexPoly p(a), q(b);
            worst = std::max(worst, max_coeff_diff(wronskian(p, q), cplx(-1.0) * wronskian(q, p)));
        }
        s.below("wronskian(p,q) + wronskian(q,p)", worst, 1e-15);
    });
    return s.take();
}

std::vector<CheckResult> recurrence_suite(std::uint32_t seed) {
    Suite s("recurrence");
    s.guarded("degree exactness", [&] {
        bool ok = true;
        for (double zeta : {0.5, 1.0, 2.5})
            for (double theta : {0.0, 0.7})
                for (double omega : {1.0, 2.0})
                    for (bool scaled : {false, true}) {
                        const auto P = generate(gcrr_params(GCRRSpec{zeta, theta, omega, scaled}), 32);
                        for (int k = 0; k <= 32; ++k) ok = ok && P[static_cast<std::size_t>(k)].degree() == k;
                    }
        s.truth("deg P_k = k up to 32", ok);
    });
    s.guarded("rescale", [&] {
        double worst = 0.0;
        for (double zeta : {1.0, 2.5})
            for (double theta : {0.0, 0.7}) worst = std::max(worst, rescale_check(GCRRSpec{zeta, theta, 1.0, false}, 20));
        s.below("scaled vs unscaled", worst, 1e-12);
    });
    s.guarded("leading coefficients", [&] {
        const auto rep = leading_coeffs(constant_family_spec().params(), 16);
        s.truth("chain-sequence hypotheses hold for the constant family", rep.hypotheses, rep.hypothesis_note);
        s.below("ratio law 1 - l_{k-1}", rep.max_law_dev, 1e-12);
        const auto scaled = leading_coeffs(scaled_family_spec().params(), 16);
        s.truth("law not asserted when rho != 1", !scaled.hypotheses, scaled.hypothesis_note);
    });
    s.guarded("continued fraction", [&] {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> U(-3.0, 3.0);
        const RIIParams p = scaled_family_spec(1.5, 0.3).params();
        const auto P = generate(p, 12);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const cplx x(U(rng), 0.0);
            const int n = 1 + i % 12;
            const cplx want = P[static_cast<std::size_t>(n)].eval(x);
            const cplx got = cf_convergent(p, n, x).denominator;
            worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
        }
        s.below("convergent denominators vs P_n(x), relative", worst, 1e-10);
    });
    return s.take();
}

std::vector<CheckResult> hypergeom_suite(std::uint32_t) {
    Suite s("hypergeom");
    s.guarded("closed form", [&] {
        double dev = 0.0, imag = 0.0, ode = 0.0;
        for (double zeta : {1.0, 2.5})
            for (double theta : {0.0, 0.7}) {
                const GCRRSpec g{zeta, theta, 1.0, false};
                const auto P = generate(gcrr_params(g), 20);
                for (int n = 0; n <= 20; ++n) {
                    const auto cf = gcrr_closed_form(g, n);
                    dev = std::max(dev, max_coeff_diff(cf, P[static_cast<std::size_t>(n)]));
                    imag = std::max(imag, max_imag_coeff(cf));
                    ode = std::max(ode, max_abs_coeff(ode_residual(g, n)));
                }
            }
        s.below("closed form vs recurrence", dev, 1e-12);
        s.below("closed form imaginary parts", imag, 1e-12);
        s.below("differential equation residual", ode, 1e-10);
    });
    s.guarded("Q_n relation", [&] {
        double worst = 0.0;
        for (double zeta : {1.0, 2.5})
            for (double theta : {0.0, 0.7})
                for (int n = 0; n <= 12; ++n) worst = std::max(worst, qn_relation_gap(GCRRSpec{zeta, theta, 1.0, false}, n));
        s.below("(-1)^n Q_n / (2^n (zeta)_n) vs P_n", worst, 1e-10);
    });
    return s.take();
}

std::vector<CheckResult> perturbation_suite(std::uint32_t seed) {
    Suite s("perturbation");
    s.guarded("ledger identity", [&] {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        double worst = 0.0;
        for (int draw = 0; draw < 50; ++draw) {
            const RIIParams p = random_special_params(rng, 14);
            std::vector<cplx> a(14);
            for (auto& v : a) v = cplx(U(rng), U(rng));
            const auto L = perturb(generate(p, 13), a);
            for (int n = 1; n <= 12; ++n) worst = std::max(worst, verify_ledger_identity(L, ledger_special(p, a, n)));
        }
        s.below("special ledger, 50 random draws", worst, 1e-10);

        const auto P = constant_family<GR>(GR(1));
        const std::vector<GR> alpha(14, GR::frac(1, 2));
        const auto L = perturb(generate(P, 13), alpha);
        bool zero = true;
        for (int n = 1; n <= 12; ++n) zero = zero && ledger_residual(L, ledger_special(P, alpha, n)).is_zero();
        s.truth("exact zero residual for the constant example", zero);
    });
    s.guarded("general ledger", [&] {
        std::mt19937 rng(seed + 7);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        double worst = 0.0;
        for (int draw = 0; draw < 50; ++draw) {
            std::vector<cplx> rho, c, d, ra, rb;
            for (int k = 0; k < 14; ++k) {
                rho.push_back(1.0 + 0.5 * U(rng));
                c.push_back(U(rng));
                d.push_back(0.55 + 0.45 * U(rng));
                ra.emplace_back(U(rng), U(rng));
                rb.emplace_back(U(rng), U(rng));
            }
            RIIParams p;
            p.rho = [rho](int k) { return rho.at(static_cast<std::size_t>(k)); };
            p.c = [c](int k) { return c.at(static_cast<std::size_t>(k)); };
            p.d = [d](int k) { return d.at(static_cast<std::size_t>(k)); };
            p.a = [ra](int k) { return ra.at(static_cast<std::size_t>(k)); };
            p.b = [rb](int k) { return rb.at(static_cast<std::size_t>(k)); };
            std::vector<cplx> a(14);
            for (auto& v : a) v = cplx(U(rng), U(rng));
            const auto L = perturb(generate(p, 13), a);
            for (int n = 1; n <= 12; ++n) worst = std::max(worst, verify_ledger_identity(L, ledger_general(p, a, n)));
        }
        s.below("general ledger, 50 random draws", worst, 1e-10);

        std::mt19937 qr(seed + 11);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
        auto rnd = [&] { return GR(Rational(num(qr), den(qr)), Rational(num(qr), den(qr))); };
        bool equal = true;
        for (int draw = 0; draw < 5; ++draw) {
            std::vector<GR> rho, c, d, a;
            for (int k = 0; k < 10; ++k) {
                rho.push_back(rnd());
                c.push_back(rnd());
                d.push_back(rnd());
                a.push_back(rnd());
            }
            const GR w(Rational(den(qr), den(qr)));
            RIIParamsT<GR> sp;
            sp.rho = [rho](int k) { return rho.at(static_cast<std::size_t>(k)); };
            sp.c = [c](int k) { return c.at(static_cast<std::size_t>(k)); };
            sp.d = [d](int k) { return d.at(static_cast<std::size_t>(k)); };
            sp.omega = w;
            RIIParamsT<GR> gp = sp;
            gp.omega.reset();
            gp.a = [w](int) { return GR::i() * w; };
            gp.b = [w](int) { return GR(0) - GR::i() * w; };
            for (int n = 1; n <= 8; ++n) {
                const auto x = ledger_special(sp, a, n), y = ledger_general(gp, a, n);
                equal = equal && x.e == y.e && x.f == y.f && x.g == y.g && x.p == y.p && x.q == y.q && x.r == y.r &&
                        x.s == y.s && x.t == y.t && x.u == y.u && x.v == y.v && x.w == y.w && x.z == y.z;
            }
        }
        s.truth("general ledger specializes exactly at a = i w, b = -i w", equal);
    });
    s.guarded("reduced recurrences", [&] {
        struct Case {
            FamilySpec fam;
            const char* rule;
        };
        const std::vector<Case> cases{{constant_family_spec(), "alpha-gcrr"}, {constant_family_spec(), "beta-gcrr"},
                                      {constant_family_spec(), "vanishing"},  {constant_family_spec(), "kappa"},
                                      {constant_family_spec(), "kappa-minus"}, {scaled_family_spec(), "alpha-gcrr"},
                                      {scaled_family_spec(), "beta-gcrr"},    {scaled_family_spec(), "vanishing"}};
        double worst = 0.0, cond = 0.0;
        std::string inadmissible;
        for (const auto& c : cases) {
            const Scenario sc = build_scenario(c.fam, rule_preset(c.rule), 16);
            if (!sc.reduced) {
                inadmissible += std::string(" ") + c.rule + "/" + c.fam.kind;
                continue;
            }
            cond = std::max(cond, sc.reduced->admissibility.max_residual);
            const auto R = generate(sc.reduced->params, 16);
            for (int n = 0; n <= 16; ++n)
                worst = std::max(worst, max_coeff_diff(R[static_cast<std::size_t>(n)], sc.L[static_cast<std::size_t>(n)]));
        }
        s.below("regenerated vs perturbed coefficients", worst, 1e-10);
        s.below("reduction and ratio conditions of quadratic-root sequences", cond, 1e-12);
        s.truth("all listed rules admissible", inadmissible.empty(), inadmissible);
        // With theta != 0 the centers are nonzero and the quadratic-root alpha_2 no longer matches the initial step.
        const Scenario skew = build_scenario(scaled_family_spec(2.5, 0.7), rule_preset("alpha-gcrr"), 16);
        const bool rejected = !skew.reduced && skew.reduced_failure && skew.reduced_failure->condition() == "initial-step";
        s.truth("quadratic-root rule rejected at the initial step when theta != 0", rejected,
                rejected ? "residual " + std::to_string(skew.reduced_failure->residual()) : "not rejected");
    });
    s.guarded("inadmissible rule rejected", [&] {
        // A constant sequence breaks the ratio condition for the scaled family.
        const Scenario sc = build_scenario(scaled_family_spec(), rule_preset("kappa"), 8);
        s.truth("constant kappa on scaled family flagged", !sc.reduced && sc.reduced_failure.has_value());
    });
    s.guarded("kappa", [&] {
        const RIIParams one = constant_family_spec(1.0).params();
        const double d1 = std::abs(kappa_value(one, 1) - 0.5) + std::abs(kappa_value(one, -1) - 0.5);
        s.below("omega = 1: both branches give 1/2", d1, 1e-15);
        const RIIParams two = constant_family_spec(2.0).params();
        s.truth("omega = 2: kappa complex", std::abs(kappa_value(two, 1).imag()) > 0.1);
    });
    return s.take();
}

std::vector<CheckResult> pencil_suite(std::uint32_t) {
    Suite s("pencil");
    s.guarded("factorizations", [&] {
        double recon = 0.0, pivot = 0.0, sc = 0.0;
        for (const auto& fam : {constant_family_spec(), scaled_family_spec(), scaled_family_spec(2.5, 0.7)}) {
            const Scenario g = build_scenario(fam, rule_preset("none"), 32);
            for (int n = 1; n <= 32; ++n) {
                const auto J = scenario_pencil(g, n);
                const auto r = factor_residuals(J, factor_all(J));
                recon = std::max({recon, r.chol, r.ul, r.ldu});
                pivot = std::max(pivot, r.pivot_consistency);
                sc = std::max(sc, r.sc_consistency);
            }
        }
        s.below("C C^T, C^T C, S D S^T reconstruct J", recon, 1e-12);
        s.below("e_i = m_i^2", pivot, 1e-13);
        s.below("S^C equals the Cholesky factor", sc, 1e-13);
    });
    s.guarded("Hermitian structure", [&] {
        const Scenario a = build_scenario(scaled_family_spec(), rule_preset("alpha-gcrr"), 8);
        const Scenario v = build_scenario(constant_family_spec(), rule_preset("vanishing"), 8);
        s.truth("K Hermitian for real alpha", scenario_pencil(a, 8).k_hermitian());
        s.truth("K non-Hermitian for alpha = i/2", !scenario_pencil(v, 8).k_hermitian());
    });
    s.guarded("determinant", [&] {
        double worst = 0.0;
        for (const char* rule : {"alpha-gcrr", "beta-gcrr", "vanishing"}) {
            const Scenario sc = build_scenario(constant_family_spec(), rule_preset(rule), 16);
            for (int n = 1; n <= 16; ++n)
                worst = std::max(worst, max_coeff_diff(pencil_determinant(scenario_pencil(sc, n)), sc.L[static_cast<std::size_t>(n)]));
        }
        s.below("det(x J - K) = L_n", worst, 1e-12);
    });
    return s.take();
}

std::vector<CheckResult> eigen_suite(std::uint32_t) {
    Suite s("eigen");
    s.guarded("spectra", [&] {
        double match = 0.0, resid = 0.0, gap = 1e300, imag = 0.0;
        for (const auto& fam : {constant_family_spec(), scaled_family_spec()})
            for (const char* rule : {"none", "alpha-gcrr", "beta-gcrr"}) {
                const Scenario sc = build_scenario(fam, rule_preset(rule), 32);
                for (int n = 1; n <= 32; ++n) {
                    const auto z = generalized_eigs(scenario_pencil(sc, n));
                    match = std::max(match, cross_check(z, poly_roots(sc.target()[static_cast<std::size_t>(n)])));
                    resid = std::max(resid, z.max_residual());
                    imag = std::max(imag, z.max_imag());
                    if (n >= 2) gap = std::min(gap, z.min_gap);
                }
            }
        s.below("pencil eigenvalues vs Aberth roots", match, 1e-9);
        s.below("eigenvector residual |K v - x J v|", resid, 1e-9);
        s.below("zeros real", imag, 1e-10);
        s.truth("zeros simple (min gap > 1e-8)", gap > 1e-8, "min gap " + fmt(gap));
    });
    s.guarded("non-Hermitian fallback", [&] {
        const Scenario sc = build_scenario(constant_family_spec(), rule_preset("vanishing"), 6);
        const auto z = generalized_eigs(scenario_pencil(sc, 6));
        s.truth("alpha = i/2 routed to polynomial roots", z.method == ZeroMethod::Aberth, z.note);
        s.below("roots satisfy L_6", z.max_residual(), 1e-9);
    });
    return s.take();
}

std::vector<CheckResult> biortho_suite(std::uint32_t seed) {
    Suite s("biortho");
    for (const auto& fam : {constant_family_spec(), scaled_family_spec()}) {
        s.guarded(fam.kind, [&] {
            const Scenario sc = build_scenario(fam, rule_preset("alpha-gcrr"), 10);
            double gram = 0.0, off = 0.0, diag = 0.0;
            for (int n = 1; n <= 10; ++n) {
                const auto K = scenario_pencil(sc, n);
                const auto zeros = generalized_eigs(K);
                const auto f = factor_all(K);
                for (auto dec : {Decomposition::Cholesky, Decomposition::UL, Decomposition::LDU}) {
                    const auto rep = gram_check(sc.L, sc.params, zeros, K, f, dec);
                    gram = std::max({gram, rep.max_offdiag, rep.max_diag_dev});
                    off = std::max(off, rep.unfactored_max_offdiag);
                    diag = std::max(diag, rep.unfactored_max_diag_rel);
                }
            }
            std::mt19937 rng(seed);
            std::uniform_real_distribution<double> U(-2.0, 2.0);
            double kernel = 0.0;
            for (int i = 0; i < 100; ++i) {
                const int n = 1 + i % 10;
                kernel = std::max(kernel, cd_kernel(sc.L, sc.params, scenario_pencil(sc, n), cplx(U(rng)), cplx(U(rng))));
            }
            s.below(fam.kind + ": gram deviation, three decompositions", gram, 1e-8);
            s.below(fam.kind + ": unfactored off-diagonal", off, 1e-9);
            s.below(fam.kind + ": unfactored diagonal vs inverse weight, relative", diag, 1e-9);
            s.below(fam.kind + ": kernel identity, 100 random pairs", kernel, 1e-9);
        });
    }
    return s.take();
}

std::vector<CheckResult> analysis_suite(std::uint32_t) {
    Suite s("analysis");
    s.guarded("consecutive interlacing", [&] {
        bool ok = true;
        double margin = 1e300;
        for (const auto& fam : {constant_family_spec(), scaled_family_spec()}) {
            const Scenario g = build_scenario(fam, rule_preset("none"), 32);
            std::vector<ZeroSet> z;
            for (int n = 1; n <= 32; ++n) z.push_back(generalized_eigs(scenario_pencil(g, n)));
            for (int n = 1; n <= 31; ++n) {
                const auto rep = check_interlace(z[static_cast<std::size_t>(n)], z[static_cast<std::size_t>(n - 1)],
                                                 InterlaceMode::Consecutive);
                ok = ok && rep.pass();
                margin = std::min(margin, rep.margin);
            }
        }
        s.truth("P_{n+1} / P_n alternate, 1 <= n <= 31", ok, "min margin " + fmt(margin));
    });
    s.guarded("triple interlacing", [&] {
        for (const char* rule : {"alpha-gcrr", "beta-gcrr"}) {
            const Scenario sc = build_scenario(scaled_family_spec(), rule_preset(rule), 8);
            const auto rep = triple_interlace(poly_roots(sc.P[8]), poly_roots(sc.P[7]),
                                              generalized_eigs(scenario_pencil(sc, 8)), alpha_sign(sc.alpha, 1, 8));
            s.truth(std::string("n = 8 pattern, ") + rule, rep.pass(), "margin " + fmt(rep.margin));
        }
    });
    s.guarded("cross interlacing", [&] {
        bool ok = true;
        double rel = 0.0, abs8 = 0.0;
        for (int m = 2; m <= 16; ++m) {
            const Scenario a = build_scenario(scaled_family_spec(), rule_preset("alpha-gcrr"), m);
            const Scenario b = build_scenario(scaled_family_spec(), rule_preset("beta-gcrr"), m);
            const auto k = static_cast<std::size_t>(m);
            ok = ok && check_interlace(generalized_eigs(scenario_pencil(a, m)), generalized_eigs(scenario_pencil(b, m)),
                                       InterlaceMode::Cross)
                           .pass();
            ok = ok && common_zero_gap(a.L[k], b.L[k]) > 1e-8;
            const auto pz = poly_roots(a.P[k]);
            const double radius = 1.1 * std::max(std::abs(pz.values.front()), std::abs(pz.values.back()));
            double scale = 0.0;
            const double res = wronskian_identity_residual(
                recurrence_evaluator(a.reduced->params, m), recurrence_evaluator(b.reduced->params, m), a.alpha[k],
                b.alpha[k], recurrence_evaluator(a.params, m), recurrence_evaluator(a.params, m - 1), 64, radius, &scale);
            rel = std::max(rel, res / scale);
            if (m == 8) abs8 = res;
        }
        s.truth("L_n / T_n alternate without common zeros, 2 <= n <= 16", ok);
        s.below("Wronskian identity at n = 8", abs8, 1e-10);
        s.below("Wronskian identity relative to |(beta - alpha) W|, 2 <= n <= 16", rel, 1e-10);
    });
    s.guarded("anchor integrals", [&] {
        WeightSpec cauchy;
        const ComplexPoly one = ComplexPoly::constant(1.0);
        const double a1 = std::abs(rational_moment(cauchy, one, 0, 1).value - 0.5);
        const double a2 = std::abs(rational_moment(cauchy, one, 0, 2).value - 0.375);
        const ComplexPoly p2({-0.25, 0.0, 0.75});
        const double a3 = std::abs(rational_moment(cauchy, p2, 0, 2).value);
        const double a4 = std::abs(rational_moment(cauchy, p2, 1, 2).value);
        s.below("int dx/(1+x^2)^2 = pi/2", a1, 1e-10);
        s.below("int dx/(1+x^2)^3 = 3 pi/8", a2, 1e-10);
        s.below("int (3x^2-1)/(4 pi (1+x^2)^3) dx = 0", a3, 1e-10);
        s.below("odd moment vanishes", a4, 1e-10);
    });
    s.guarded("orthogonality", [&] {
        double worst = 0.0;
        for (double theta : {0.0, 0.5}) {
            WeightSpec w;
            w.kind = WeightKind::Gcrr;
            w.theta = theta;
            worst = std::max(worst, orthogonality_suite(w, generate(gcrr_params(GCRRSpec{1.0, theta, 1.0, false}), 5), 5)
                                        .max_magnitude);
        }
        s.below("GCRR weight, zeta = 1, n <= 5", worst, kOrthogonalityTol);
        const auto c = orthogonality_suite(WeightSpec{}, generate(constant_family_spec().params(), 5), 5);
        s.below("Cauchy weight, constant family, n <= 5", c.max_magnitude, kOrthogonalityTol);
    });
    s.guarded("exploratory", [&] {
        const Scenario v = build_scenario(constant_family_spec(), rule_preset("vanishing"), 4);
        WeightSpec wsq;
        wsq.kind = WeightKind::CauchySquared;
        for (const auto& sweep : exploratory_sweep(wsq, v.L, 4))
            s.info("alpha = i/2 against the squared Cauchy weight, " + sweep.convention, sweep.report.max_magnitude,
                   "max |moment|, reported without pass/fail");
    });
    return s.take();
}

using SuiteFn = std::vector<CheckResult> (*)(std::uint32_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"poly_core", poly_core_suite}, {"recurrence", recurrence_suite}, {"hypergeom", hypergeom_suite},
        {"perturbation", perturbation_suite}, {"pencil", pencil_suite}, {"eigen", eigen_suite},
        {"biortho", biortho_suite}, {"analysis", analysis_suite}};
    return r;
}

}  // namespace

std::vector<std::string> verify_modules() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<CheckResult> run_verify_suite(const VerifyOptions& opt) {
    std::vector<SuiteFn> selected;
    for (const auto& [name, fn] : registry())
        if (opt.modules.empty() || std::find(opt.modules.begin(), opt.modules.end(), name) != opt.modules.end())
            selected.push_back(fn);
    for (const auto& m : opt.modules) {
        const auto names = verify_modules();
        if (std::find(names.begin(), names.end(), m) == names.end()) throw ConfigError("unknown verify module '" + m + "'");
    }
    const auto parts = parallel_map(selected.size(), [&](std::size_t i) { return selected[i](opt.seed); });
    std::vector<CheckResult> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass || r.informational; });
}

}  // namespace r2kit
