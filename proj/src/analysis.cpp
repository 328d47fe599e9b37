#include "r2kit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "r2kit/error.hpp"
#include "r2kit/util.hpp"

namespace r2kit {

std::string to_string(InterlaceStatus s) {
    switch (s) {
        case InterlaceStatus::Pass: return "pass";
        case InterlaceStatus::Fail: return "fail";
        case InterlaceStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<double> real_sorted(const ZeroSet& z, const char* what) {
    if (!z.all_real(1e-8)) throw NumericalError(std::string("interlacing needs real zeros (") + what + ")");
    auto v = z.real_parts();
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<TaggedValue> merge(const std::vector<double>& a, const std::string& ta, const std::vector<double>& b,
                               const std::string& tb) {
    std::vector<TaggedValue> m;
    for (double x : a) m.push_back({x, ta});
    for (double x : b) m.push_back({x, tb});
    std::stable_sort(m.begin(), m.end(), [](const TaggedValue& l, const TaggedValue& r) { return l.value < r.value; });
    return m;
}

// Each gap must be strictly positive; index is reported 1-based.
void judge(InterlaceReport& rep, const std::vector<double>& gaps, const std::vector<int>& index) {
    rep.margin = std::numeric_limits<double>::infinity();
    rep.status = InterlaceStatus::Pass;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        rep.margin = std::min(rep.margin, gaps[i]);
        if (gaps[i] <= 0.0 && rep.status != InterlaceStatus::Fail) {
            rep.status = InterlaceStatus::Fail;
            rep.first_violation = index[i];
        }
    }
    if (gaps.empty()) rep.margin = 0.0;
    if (rep.status == InterlaceStatus::Pass && !gaps.empty() && rep.margin < kInterlaceMargin) {
        rep.status = InterlaceStatus::Inconclusive;
        rep.detail = "separation below roundoff threshold";
    }
}

}  // namespace

InterlaceReport check_interlace(const ZeroSet& a, const ZeroSet& b, InterlaceMode mode, const std::string& tag_a,
                                const std::string& tag_b) {
    const auto va = real_sorted(a, tag_a.c_str());
    const auto vb = real_sorted(b, tag_b.c_str());
    if (mode == InterlaceMode::Consecutive && va.size() != vb.size() + 1)
        throw ConfigError("consecutive interlacing needs |a| = |b| + 1");
    if (mode == InterlaceMode::Cross && va.size() != vb.size()) throw ConfigError("cross interlacing needs |a| = |b|");

    InterlaceReport rep;
    rep.merged = merge(va, tag_a, vb, tag_b);
    const bool a_first = mode == InterlaceMode::Consecutive || va.empty() || va[0] <= vb[0];
    const auto& first = a_first ? va : vb;
    const auto& second = a_first ? vb : va;
    std::vector<double> seq;
    for (std::size_t i = 0; i < first.size(); ++i) {
        seq.push_back(first[i]);
        if (i < second.size()) seq.push_back(second[i]);
    }
    std::vector<double> gaps;
    std::vector<int> idx;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        gaps.push_back(seq[i] - seq[i - 1]);
        idx.push_back(static_cast<int>(i));
    }
    judge(rep, gaps, idx);
    return rep;
}

InterlaceReport triple_interlace(const ZeroSet& Pn, const ZeroSet& Pprev, const ZeroSet& Ln, int sign) {
    const auto x = real_sorted(Pn, "P_n");
    const auto xp = real_sorted(Pprev, "P_{n-1}");
    const auto y = real_sorted(Ln, "L_n");
    const std::size_t n = x.size();
    if (xp.size() + 1 != n || y.size() != n) throw ConfigError("triple interlacing needs degrees n, n-1, n");
    if (sign == 0) throw ConfigError("triple interlacing needs a nonzero alpha sign");

    InterlaceReport rep;
    for (double v : x) rep.merged.push_back({v, "P_n"});
    for (double v : xp) rep.merged.push_back({v, "P_{n-1}"});
    for (double v : y) rep.merged.push_back({v, "L_n"});
    std::stable_sort(rep.merged.begin(), rep.merged.end(),
                     [](const TaggedValue& l, const TaggedValue& r) { return l.value < r.value; });

    std::vector<double> gaps;
    std::vector<int> idx;
    if (sign > 0) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            gaps.push_back(y[i] - x[i]);
            gaps.push_back(xp[i] - y[i]);
            idx.push_back(static_cast<int>(i) + 1);
            idx.push_back(static_cast<int>(i) + 1);
        }
    } else {
        for (std::size_t i = 1; i < n; ++i) {
            gaps.push_back(y[i] - xp[i - 1]);
            gaps.push_back(x[i] - y[i]);
            idx.push_back(static_cast<int>(i) + 1);
            idx.push_back(static_cast<int>(i) + 1);
        }
    }
    judge(rep, gaps, idx);
    return rep;
}

int alpha_sign(const std::vector<cplx>& alpha, int lo, int hi) {
    int s = 0;
    for (int k = lo; k <= hi; ++k) {
        if (k < 0 || k >= static_cast<int>(alpha.size())) throw ConfigError("alpha sign: index out of range");
        const cplx a = alpha[static_cast<std::size_t>(k)];
        if (std::abs(a.imag()) > 1e-12 * std::max(1.0, std::abs(a))) throw ConfigError("alpha sign: non-real alpha");
        const int sk = a.real() > 0.0 ? 1 : (a.real() < 0.0 ? -1 : 0);
        if (sk == 0) throw ConfigError("alpha sign: zero alpha at index " + std::to_string(k));
        if (s != 0 && sk != s) throw ConfigError("alpha sign: mixed signs");
        s = sk;
    }
    return s;
}

Evaluator poly_evaluator(const ComplexPoly& p) {
    const ComplexPoly dp = p.derivative();
    return [p, dp](cplx x) { return PointValue{p.eval(x), dp.eval(x)}; };
}

Evaluator recurrence_evaluator(const RIIParams& p, int n) {
    return [p, n](cplx x) { return evaluate_at(p, n, x); };
}

double wronskian_identity_residual(const Evaluator& L, const Evaluator& T, cplx alpha, cplx beta, const Evaluator& Pn,
                                   const Evaluator& Pprev, int grid_points, double grid_radius, double* scale) {
    if (alpha == beta) throw ConfigError("wronskian check needs alpha != beta");
    double worst = 0.0, size = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const cplx x(grid_points == 1 ? 0.0 : -grid_radius + 2.0 * grid_radius * i / (grid_points - 1), 0.0);
        const PointValue l = L(x), t = T(x), p = Pn(x), q = Pprev(x);
        const cplx lhs = l.value * t.derivative - t.value * l.derivative;
        const cplx rhs = (beta - alpha) * (q.value * p.derivative - p.value * q.derivative);
        worst = std::max(worst, std::abs(lhs - rhs));
        size = std::max(size, std::abs(rhs));
    }
    if (scale) *scale = size;
    return worst;
}

double common_zero_gap(const ComplexPoly& a, const ComplexPoly& b) {
    auto scaled_min = [](const ComplexPoly& roots_of, const ComplexPoly& other) {
        double m = std::numeric_limits<double>::infinity();
        if (roots_of.degree() < 1) return m;
        for (const cplx z : poly_roots(roots_of).values) {
            double scale = 0.0;
            for (int k = 0; k <= other.degree(); ++k) scale += std::abs(other[k]) * std::pow(std::abs(z), k);
            m = std::min(m, std::abs(other.eval(z)) / scale);
        }
        return m;
    };
    return std::min(scaled_min(a, b), scaled_min(b, a));
}

WronskianCheck wronskian_cross_check(const ComplexPoly& Ln, const ComplexPoly& Tn, cplx alpha, cplx beta,
                                     const ComplexPoly& Pn, const ComplexPoly& Pprev, int grid_points,
                                     double grid_radius) {
    WronskianCheck out;
    out.residual = wronskian_identity_residual(poly_evaluator(Ln), poly_evaluator(Tn), alpha, beta, poly_evaluator(Pn),
                                               poly_evaluator(Pprev), grid_points, grid_radius);
    out.min_cross_value = common_zero_gap(Ln, Tn);
    out.no_common_zeros = out.min_cross_value > 1e-8;
    return out;
}

std::string to_string(WeightKind k) {
    switch (k) {
        case WeightKind::Gcrr: return "gcrr";
        case WeightKind::Cauchy: return "cauchy";
        case WeightKind::CauchySquared: return "cauchy-squared";
    }
    return "?";
}

WeightKind weight_kind_from_string(const std::string& s) {
    if (s == "gcrr") return WeightKind::Gcrr;
    if (s == "cauchy") return WeightKind::Cauchy;
    if (s == "cauchy-squared") return WeightKind::CauchySquared;
    throw ConfigError("unknown weight kind '" + s + "'");
}

double WeightSpec::operator()(double x) const {
    const double w2x2 = omega * omega + x * x;
    switch (kind) {
        case WeightKind::Gcrr: {
            const double arccot = std::numbers::pi / 2.0 - std::atan(x / omega);
            return std::exp(-2.0 * theta * arccot) / std::pow(w2x2, zeta);
        }
        case WeightKind::Cauchy: return omega / (std::numbers::pi * w2x2);
        case WeightKind::CauchySquared: return 4.0 * omega * omega * omega / (std::numbers::pi * w2x2 * w2x2);
    }
    return 0.0;
}

double WeightSpec::decay() const {
    switch (kind) {
        case WeightKind::Gcrr: return -2.0 * zeta;
        case WeightKind::Cauchy: return -2.0;
        case WeightKind::CauchySquared: return -4.0;
    }
    return 0.0;
}

void WeightSpec::validate() const {
    if (!(omega > 0.0)) throw ConfigError("weight omega must be positive");
    if (kind == WeightKind::Gcrr && !(zeta > 0.5)) throw ConfigError("gcrr weight needs zeta > 1/2");
}

MomentResult rational_integral(const WeightSpec& weight, const ComplexPoly& num, const ComplexPoly& den) {
    weight.validate();
    if (den.is_zero()) throw ConfigError("rational integral: zero denominator");
    if (num.is_zero()) return {};
    if (num.degree() - den.degree() + weight.decay() >= -1.0)
        throw ConfigError("rational integral does not converge (degree " + std::to_string(num.degree()) + " over " +
                          std::to_string(den.degree()) + ")");
    const double w = weight.omega;
    auto integrand = [&](double u, bool imag) {
        const double x = w * std::tan(u);
        const double c = std::cos(u);
        const cplx v = num.eval(cplx(x)) / den.eval(cplx(x)) * (weight(x) * w / (c * c));
        return imag ? v.imag() : v.real();
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double h = std::numbers::pi / 2.0;
    MomentResult r;
    double err_re = 0.0, err_im = 0.0;
    const double re = GK::integrate([&](double u) { return integrand(u, false); }, -h, h, 14, 1e-14, &err_re);
    const double im = GK::integrate([&](double u) { return integrand(u, true); }, -h, h, 14, 1e-14, &err_im);
    r.value = cplx(re, im);
    r.error = std::hypot(err_re, err_im);
    return r;
}

namespace {

ComplexPoly moment_denominator(double omega, int n) {
    return power_of_linear(cplx(0.0, omega), n) * power_of_linear(cplx(0.0, -omega), n);
}

}  // namespace

MomentResult rational_moment(const WeightSpec& weight, const ComplexPoly& p, int k, int n) {
    if (k < 0 || n < 0) throw ConfigError("moment indices must be nonnegative");
    return rational_integral(weight, ComplexPoly::monomial(k) * p, moment_denominator(weight.omega, n));
}

namespace {

OrthogonalityReport run_suite(const WeightSpec& weight, const std::vector<ComplexPoly>& seq, int n_max,
                              bool exploratory, const std::function<ComplexPoly(int)>& den) {
    if (n_max < 1 || n_max >= static_cast<int>(seq.size())) throw ConfigError("orthogonality suite: n_max out of range");
    std::vector<std::pair<int, int>> jobs;
    for (int n = 1; n <= n_max; ++n) {
        const ComplexPoly d = den(n);
        for (int k = 0; k < n; ++k) {
            if (static_cast<double>(k + seq[static_cast<std::size_t>(n)].degree() - d.degree()) + weight.decay() >= -1.0)
                continue;  // not integrable under this convention
            jobs.emplace_back(n, k);
        }
    }
    const auto values = parallel_map(jobs.size(), [&](std::size_t i) {
        const auto [n, k] = jobs[i];
        return std::abs(rational_integral(weight, ComplexPoly::monomial(k) * seq[static_cast<std::size_t>(n)],
                                          den(n))
                            .value);
    });
    OrthogonalityReport rep;
    rep.exploratory = exploratory;
    rep.magnitude.assign(static_cast<std::size_t>(n_max), {});
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        rep.magnitude[static_cast<std::size_t>(jobs[i].first - 1)].push_back(values[i]);
        rep.max_magnitude = std::max(rep.max_magnitude, values[i]);
    }
    rep.pass = !exploratory && rep.max_magnitude < kOrthogonalityTol;
    return rep;
}

}  // namespace

OrthogonalityReport orthogonality_suite(const WeightSpec& weight, const std::vector<ComplexPoly>& seq, int n_max,
                                        bool exploratory) {
    const double w = weight.omega;
    return run_suite(weight, seq, n_max, exploratory, [w](int n) { return moment_denominator(w, n); });
}

std::vector<ConventionSweep> exploratory_sweep(const WeightSpec& weight, const std::vector<ComplexPoly>& seq,
                                               int n_max) {
    const double w = weight.omega;
    const cplx iw(0.0, w);
    std::vector<ConventionSweep> out;
    out.push_back({"(x^2+w^2)^n", run_suite(weight, seq, n_max, true, [w](int n) { return moment_denominator(w, n); })});
    out.push_back({"(x^2+w^2)^(n-1)",
                   run_suite(weight, seq, n_max, true, [w](int n) { return moment_denominator(w, n - 1); })});
    out.push_back({"(x-iw)^n", run_suite(weight, seq, n_max, true, [iw](int n) { return power_of_linear(iw, n); })});
    out.push_back({"(x+iw)^n", run_suite(weight, seq, n_max, true, [iw](int n) { return power_of_linear(-iw, n); })});
    return out;
}

}  // namespace r2kit
