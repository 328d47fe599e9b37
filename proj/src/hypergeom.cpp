#include "r2kit/hypergeom.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace r2kit {

cplx pochhammer(cplx a, int n) {
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= a + static_cast<double>(k);
    return r;
}

namespace {

void check_poles(int n, cplx c) {
    for (int k = 0; k < n; ++k)
        if (c + static_cast<double>(k) == cplx(0.0, 0.0)) throw NumericalError("pole in terminating 2F1 lower parameter", k);
}

}  // namespace

cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z) {
    if (n < 0) throw ConfigError("hyp2f1_terminating: n must be nonnegative");
    check_poles(n, c);
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        const double kd = k;
        term *= (kd - n) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
        sum += term;
    }
    return sum;
}

ComplexPoly hyp2f1_terminating_poly(int n, cplx b, cplx c, const ComplexPoly& z) {
    if (n < 0) throw ConfigError("hyp2f1_terminating: n must be nonnegative");
    check_poles(n, c);
    cplx coef = 1.0;
    ComplexPoly zk = ComplexPoly::constant(1.0);
    ComplexPoly sum = zk;
    for (int k = 0; k < n; ++k) {
        const double kd = k;
        coef *= (kd - n) * (b + kd) / ((c + kd) * (kd + 1.0));
        zk = zk * z;
        sum += coef * zk;
    }
    return sum;
}

ComplexPoly gcrr_closed_form(const GCRRSpec& spec, int n) {
    spec.validate();
    if (spec.omega != 1.0) throw ConfigError("GCRR hypergeometric form is only available at omega = 1");
    if (n < 0) throw ConfigError("gcrr_closed_form: n must be nonnegative");
    check_poles(n, cplx(2.0 * spec.zeta));

    // Expanding (x - i w)^{n-k} binomially cancels heavily; accumulate in extended precision.
    using lcplx = std::complex<long double>;
    const long double zeta = spec.zeta;
    const lcplx I(0.0L, 1.0L);
    const lcplx e(zeta, static_cast<long double>(spec.theta));
    const long double c = 2.0L * zeta;
    const lcplx shift = -I * static_cast<long double>(spec.omega);

    long double pre = 1.0L;
    for (int k = 0; k < n; ++k) pre *= (c + k) / ((zeta + k) * 2.0L);

    std::vector<lcplx> shift_pow(static_cast<std::size_t>(n) + 1, 1.0L);
    for (int t = 1; t <= n; ++t) shift_pow[static_cast<std::size_t>(t)] = shift_pow[static_cast<std::size_t>(t - 1)] * shift;

    std::vector<lcplx> acc(static_cast<std::size_t>(n) + 1, 0.0L);
    lcplx term = 1.0L;  // (-n)_k (e)_k / ((c)_k k!) (-2i)^k
    for (int k = 0; k <= n; ++k) {
        const int m = n - k;
        long double binom = 1.0L;
        for (int j = 0; j <= m; ++j) {
            acc[static_cast<std::size_t>(j)] += term * binom * shift_pow[static_cast<std::size_t>(m - j)];
            binom = binom * static_cast<long double>(m - j) / static_cast<long double>(j + 1);
        }
        const long double kd = k;
        term *= (kd - n) * (e + kd) / ((c + kd) * (kd + 1.0L)) * (-2.0L * I);
    }
    std::vector<cplx> out;
    out.reserve(acc.size());
    for (const auto& v : acc) out.emplace_back(static_cast<double>((pre * v).real()), static_cast<double>((pre * v).imag()));
    return ComplexPoly(std::move(out));
}

ComplexPoly qn_closed_form(double alpha, double beta, double omega, int n) {
    if (!(omega > 0.0)) throw ConfigError("omega must be positive");
    if (n < 0) throw ConfigError("qn_closed_form: n must be nonnegative");
    const cplx I(0.0, 1.0);
    const cplx c = cplx(beta - n, alpha / 2.0);
    const cplx pre = std::pow(-2.0 * I * omega, n) * pochhammer(c, n);
    if (std::abs(pre) == 0.0) throw NumericalError("vanishing Pochhammer prefactor in Q_n", n);
    const ComplexPoly z = ComplexPoly::linear(-I / (2.0 * omega), 0.5);
    return pre * hyp2f1_terminating_poly(n, 2.0 * beta - n - 1.0, c, z);
}

double qn_relation_gap(const GCRRSpec& spec, int n) {
    GCRRSpec u = spec;
    u.scaled = false;
    const ComplexPoly q = qn_closed_form(2.0 * spec.theta, 1.0 - spec.zeta, spec.omega, n);
    const ComplexPoly p = generate(gcrr_params(u), n)[static_cast<std::size_t>(n)];
    const cplx scale = std::pow(-1.0, n) / (std::pow(2.0, n) * pochhammer(spec.zeta, n));
    return max_coeff_diff(scale * q, p);
}

ComplexPoly ode_residual(const GCRRSpec& spec, int n) {
    GCRRSpec u = spec;
    u.scaled = false;
    const ComplexPoly p = generate(gcrr_params(u), n)[static_cast<std::size_t>(n)];
    const double w = spec.omega;
    const double bb = 1.0 - spec.zeta - n;
    const double aa = 2.0 * spec.theta;
    const ComplexPoly quad({w * w, 0.0, 1.0});
    const ComplexPoly lin = ComplexPoly::linear(2.0 * bb, aa * w);
    const ComplexPoly d1 = p.derivative();
    return quad * d1.derivative() + lin * d1 - cplx(n * (n + 2.0 * bb - 1.0)) * p;
}

}  // namespace r2kit
