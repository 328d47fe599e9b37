#include "r2kit/recurrence.hpp"

#include <cmath>
#include <string>

#include "r2kit/hypergeom.hpp"

namespace r2kit {

void GCRRSpec::validate() const {
    if (!(zeta > 0.0)) throw ConfigError("zeta must be positive");
    if (!(omega > 0.0)) throw ConfigError("omega must be positive");
    if (!std::isfinite(theta)) throw ConfigError("theta must be finite");
}

RIIParams gcrr_params(const GCRRSpec& spec) {
    spec.validate();
    const double z = spec.zeta;
    const double th = spec.theta;
    RIIParams p;
    p.omega = cplx(spec.omega, 0.0);
    p.c = [z, th](int n) { return cplx(th / (z + n), 0.0); };
    if (spec.scaled) {
        p.rho = [z](int n) { return cplx((z + n) / (2.0 * z + n), 0.0); };
        p.d = [z](int n) { return cplx(n / (4.0 * (2.0 * z + n)), 0.0); };
    } else {
        p.rho = [](int) { return cplx(1.0, 0.0); };
        p.d = [z](int n) {
            if (n == 0) return cplx(0.0, 0.0);
            return cplx(n * (2.0 * z + n - 1.0) / (4.0 * (z + n) * (z + n - 1.0)), 0.0);
        };
    }
    return p;
}

double rescale_check(const GCRRSpec& spec, int n) {
    if (n < 1) throw ConfigError("rescale_check needs n >= 1");
    GCRRSpec s = spec;
    s.scaled = true;
    GCRRSpec u = spec;
    u.scaled = false;
    const auto ps = generate(gcrr_params(s), n);
    const auto pu = generate(gcrr_params(u), n);
    double dev = 0.0;
    for (int k = 0; k <= n; ++k) {
        const cplx ratio = pochhammer(spec.zeta, k) / pochhammer(2.0 * spec.zeta, k);
        if (ratio == cplx(0.0, 0.0)) throw NumericalError("vanishing Pochhammer ratio", k);
        dev = std::max(dev, max_coeff_diff(ps[static_cast<std::size_t>(k)], ratio * pu[static_cast<std::size_t>(k)]));
    }
    return dev;
}

ChainSeqInfo minimal_params(const std::vector<double>& d) {
    ChainSeqInfo info;
    info.l.assign(d.empty() ? 1 : d.size(), 0.0);
    info.valid = true;
    for (std::size_t n = 1; n < d.size(); ++n) {
        const double prev = info.l[n - 1];
        info.l[n] = d[n] / (1.0 - prev);
        if (!(info.l[n] > 0.0 && info.l[n] < 1.0)) {
            if (info.valid) info.first_invalid = static_cast<int>(n);
            info.valid = false;
        }
    }
    return info;
}

LeadingCoeffReport leading_coeffs(const RIIParams& p, int n) {
    LeadingCoeffReport rep;
    const auto P = generate(p, n);
    for (const auto& q : P) rep.k.push_back(q.lead().real());
    for (int j = 1; j <= n; ++j) rep.ratios.push_back(rep.k[static_cast<std::size_t>(j)] / rep.k[static_cast<std::size_t>(j - 1)]);

    rep.hypotheses = p.special();
    if (!p.special()) rep.hypothesis_note = "general form";
    std::vector<double> d(static_cast<std::size_t>(std::max(n, 1)), 0.0);
    for (int j = 0; j < n && rep.hypotheses; ++j) {
        const cplx r = p.rho(j);
        if (std::abs(r - cplx(1.0, 0.0)) > 1e-14) {
            rep.hypotheses = false;
            rep.hypothesis_note = "rho_" + std::to_string(j) + " != 1";
        }
        if (j >= 1) {
            const cplx dj = p.d(j);
            if (std::abs(dj.imag()) > 0.0 || !(dj.real() > 0.0)) {
                rep.hypotheses = false;
                rep.hypothesis_note = "d_" + std::to_string(j) + " not positive real";
            }
            d[static_cast<std::size_t>(j)] = dj.real();
        }
    }
    if (rep.hypotheses) {
        const ChainSeqInfo chain = minimal_params(d);
        if (!chain.valid) {
            rep.hypotheses = false;
            rep.hypothesis_note = "d is not a chain sequence with minimal parameters in (0,1)";
        } else {
            for (int j = 2; j <= n; ++j) {
                const double expect = 1.0 - chain.l[static_cast<std::size_t>(j - 1)];
                rep.max_law_dev = std::max(rep.max_law_dev, std::abs(rep.ratios[static_cast<std::size_t>(j - 1)] - expect));
            }
        }
    }
    return rep;
}

PointValue evaluate_at(const RIIParams& p, int n, cplx x) {
    if (n < 0) throw ConfigError("evaluate_at: n must be nonnegative");
    cplx v_prev = 0.0, v = 1.0, d_prev = 0.0, d = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx rk = p.rho(k);
        const cplx lin = rk * (x - p.c(k));
        cplx vn = lin * v;
        cplx dn = rk * v + lin * d;
        if (k >= 1) {
            const ComplexPoly q = p.quad(k);
            const cplx dk = p.d(k);
            vn -= dk * q.eval(x) * v_prev;
            dn -= dk * (q.derivative().eval(x) * v_prev + q.eval(x) * d_prev);
        }
        v_prev = v;
        v = vn;
        d_prev = d;
        d = dn;
    }
    return {v, d};
}

CFResult cf_convergent(const RIIParams& p, int n, cplx x) {
    if (n < 0) throw ConfigError("cf_convergent: n must be nonnegative");
    CFResult res;
    if (n == 0) {
        res.numerator = 0.0;
        res.denominator = 1.0;
        res.value = 0.0;
        return res;
    }
    auto b = [&](int k) { return p.rho(k) * (x - p.c(k)); };
    auto a = [&](int k) { return p.d(k) * p.quad(k).eval(x); };

    cplx A_prev = 0.0, A = 1.0, B_prev = 1.0, B = b(0);
    for (int k = 1; k < n; ++k) {
        const cplx ak = a(k), bk = b(k);
        const cplx An = bk * A - ak * A_prev;
        const cplx Bn = bk * B - ak * B_prev;
        A_prev = A;
        A = An;
        B_prev = B;
        B = Bn;
    }
    res.numerator = A;
    res.denominator = B;

    int depth = n;
    for (int k = 1; k < n; ++k) {
        if (std::abs(a(k)) <= 1e-300) {
            res.terminates_at = k;
            depth = k;
            break;
        }
    }
    cplx t = b(depth - 1);
    for (int k = depth - 1; k >= 1; --k) {
        if (std::abs(t) < 1e-300) throw NumericalError("near-zero partial denominator in continued fraction", k);
        t = b(k - 1) - a(k) / t;
    }
    if (std::abs(t) < 1e-300) throw NumericalError("near-zero partial denominator in continued fraction", 0);
    res.value = 1.0 / t;
    return res;
}

}  // namespace r2kit
