#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "r2kit/error.hpp"
#include "r2kit/poly.hpp"

namespace r2kit {

template <class T>
using Seq = std::function<T(int)>;

// Parameters of P_{n+1} = rho_n (x - c_n) P_n - d_n (x - a_n)(x - b_n) P_{n-1}.
// Setting omega selects the special form a_n = i*omega, b_n = -i*omega.
template <class T>
struct RIIParamsT {
    Seq<T> rho;
    Seq<T> c;
    Seq<T> d;
    std::optional<T> omega;
    Seq<T> a;
    Seq<T> b;

    bool special() const { return omega.has_value(); }
    T root_a(int n) const { return special() ? imag_unit<T>() * *omega : a(n); }
    T root_b(int n) const { return special() ? T(0) - imag_unit<T>() * *omega : b(n); }
    T omega_sq() const { return *omega * *omega; }

    // (x - a_n)(x - b_n)
    Poly<T> quad(int n) const {
        if (special()) return Poly<T>(std::vector<T>{omega_sq(), T(0), T(1)});
        const T an = a(n);
        const T bn = b(n);
        return Poly<T>(std::vector<T>{an * bn, T(0) - (an + bn), T(1)});
    }
};

using RIIParams = RIIParamsT<cplx>;

struct GCRRSpec {
    double zeta = 1.0;
    double theta = 0.0;
    double omega = 1.0;
    bool scaled = false;

    void validate() const;
};

struct ChainSeqInfo {
    std::vector<double> l;
    bool valid = false;
    int first_invalid = -1;
};

struct LeadingCoeffReport {
    std::vector<double> k;
    std::vector<double> ratios;
    bool hypotheses = false;
    std::string hypothesis_note;
    double max_law_dev = 0.0;
};

struct CFResult {
    cplx numerator;
    cplx denominator;
    cplx value;
    // First k >= 1 with d_k (x-a_k)(x-b_k) = 0, where the fraction terminates; -1 if none.
    int terminates_at = -1;
};

// P_{-1} = 0, P_0 = 1, so P_1 = rho_0 (x - c_0).
template <class T>
std::vector<Poly<T>> generate(const RIIParamsT<T>& p, int n, bool check_degree = true) {
    if (n < 0) throw ConfigError("generate: n must be nonnegative");
    std::vector<Poly<T>> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(Poly<T>::constant(T(1)));
    for (int k = 0; k < n; ++k) {
        const T rk = p.rho(k);
        Poly<T> next = Poly<T>::linear(rk, T(0) - rk * p.c(k)) * out[static_cast<std::size_t>(k)];
        if (k >= 1) next -= p.d(k) * (p.quad(k) * out[static_cast<std::size_t>(k - 1)]);
        if (check_degree && next.degree() != k + 1)
            throw NumericalError("degree collapse in recurrence", k + 1);
        out.push_back(std::move(next));
    }
    return out;
}

RIIParams gcrr_params(const GCRRSpec& spec);

template <class T>
RIIParamsT<T> constant_family(T omega, T rho = T(1), T c = T(0), T d = T(0)) {
    if constexpr (is_exact_v<T>) {
        if (d.is_zero()) d = GaussRational::frac(1, 4);
    } else {
        if (d == T(0)) d = T(0.25);
    }
    RIIParamsT<T> p;
    p.rho = [rho](int) { return rho; };
    p.c = [c](int) { return c; };
    p.d = [d](int) { return d; };
    p.omega = omega;
    return p;
}

struct PointValue {
    cplx value;
    cplx derivative;
};

// P_n(x) and P_n'(x) by running the recurrence at the point; no coefficient expansion.
PointValue evaluate_at(const RIIParams& p, int n, cplx x);

double rescale_check(const GCRRSpec& spec, int n);
ChainSeqInfo minimal_params(const std::vector<double>& d);
LeadingCoeffReport leading_coeffs(const RIIParams& p, int n);
CFResult cf_convergent(const RIIParams& p, int n, cplx x);

}  // namespace r2kit
