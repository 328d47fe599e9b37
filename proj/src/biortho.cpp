#include "r2kit/biortho.hpp"

#include <cmath>

#include "r2kit/error.hpp"

namespace r2kit {

std::string to_string(Decomposition d) {
    switch (d) {
        case Decomposition::Cholesky: return "cholesky";
        case Decomposition::UL: return "ul";
        case Decomposition::LDU: return "ldu";
    }
    return "?";
}

Decomposition decomposition_from_string(const std::string& s) {
    if (s == "cholesky" || s == "lu") return Decomposition::Cholesky;
    if (s == "ul") return Decomposition::UL;
    if (s == "ldu") return Decomposition::LDU;
    throw ConfigError("unknown decomposition '" + s + "'");
}

namespace {

cplx shift(double omega, cplx x, Side side) {
    const cplx iw(0.0, omega);
    const cplx s = side == Side::R ? x - iw : x + iw;
    if (std::abs(s) == 0.0) throw NumericalError("u components have a pole at x = +-i omega");
    return s;
}

}  // namespace

std::vector<cplx> u_components(const std::vector<ComplexPoly>& L, const Seq<cplx>& d, double omega, cplx x, Side side,
                               int upto) {
    if (upto >= static_cast<int>(L.size())) throw ConfigError("u_components: L_" + std::to_string(upto) + " not available");
    const cplx s = shift(omega, x, side);
    std::vector<cplx> u;
    u.reserve(static_cast<std::size_t>(upto) + 1);
    cplx denom = 1.0;
    for (int k = 0; k <= upto; ++k) {
        if (k >= 1) denom *= -s * std::sqrt(d(k));
        u.push_back(L[static_cast<std::size_t>(k)].eval(x) / denom);
    }
    return u;
}

cplx u_right_derivative(const std::vector<ComplexPoly>& L, const Seq<cplx>& d, double omega, cplx x, int n) {
    const cplx s = shift(omega, x, Side::R);
    cplx prod = 1.0;
    for (int j = 1; j <= n; ++j) prod *= std::sqrt(d(j));
    const ComplexPoly& Ln = L[static_cast<std::size_t>(n)];
    const cplx sn = std::pow(s, n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign / prod * (Ln.derivative().eval(x) / sn - static_cast<double>(n) * Ln.eval(x) / (sn * s));
}

DenseComplex weight_table(const std::vector<ComplexPoly>& L, const RIIParams& p, const ZeroSet& zeros, int n) {
    if (static_cast<int>(zeros.size()) != n) throw ConfigError("weight_table: expected n zeros");
    const double w = p.omega->real();
    const cplx iw(0.0, w);
    const cplx sdn = std::sqrt(p.d(n));
    DenseComplex table(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
    std::vector<cplx> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const cplx xj = zeros.values[static_cast<std::size_t>(j)];
        left[static_cast<std::size_t>(j)] = u_components(L, p.d, w, xj, Side::L, n - 1).back();
        right[static_cast<std::size_t>(j)] = -sdn * (xj - iw) * u_right_derivative(L, p.d, w, xj, n);
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const cplx inv = right[static_cast<std::size_t>(k)] * left[static_cast<std::size_t>(j)];
            if (std::abs(inv) == 0.0) throw NumericalError("weight inverse vanishes", j * n + k);
            table[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = 1.0 / inv;
        }
    return table;
}

std::vector<cplx> rational_values(const FactorSet& f, Decomposition which, const std::vector<cplx>& u) {
    const std::size_t n = u.size();
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (which) {
            case Decomposition::Cholesky:
                out[i] = f.chol.m[i] * u[i] + (i + 1 < n ? f.chol.l[i + 1] * u[i + 1] : cplx(0.0));
                break;
            case Decomposition::UL:
                out[i] = f.ul.m[i] * u[i] + (i >= 1 ? f.ul.l[i] * u[i - 1] : cplx(0.0));
                break;
            case Decomposition::LDU:
                out[i] = f.ldu.sc_diag[i] * u[i] + (i + 1 < n ? f.ldu.sc_sub[i + 1] * u[i + 1] : cplx(0.0));
                break;
        }
    }
    return out;
}

cplx pencil_form(const HermTridiagPencil& J, const std::vector<cplx>& uL, const std::vector<cplx>& uR) {
    const std::size_t n = static_cast<std::size_t>(J.size());
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += uL[i] * J.j_diag[i] * uR[i];
        if (i + 1 < n) s += J.j_off[i] * (uL[i] * uR[i + 1] + uL[i + 1] * uR[i]);
    }
    return s;
}

BiorthoReport gram_check(const std::vector<ComplexPoly>& L, const RIIParams& p, const ZeroSet& zeros,
                         const HermTridiagPencil& J, const FactorSet& f, Decomposition which) {
    const int n = J.size();
    if (!zeros.all_real(1e-8)) throw NumericalError("biorthogonality needs real zeros of L_n");
    if (zeros.size() > 1 && !(zeros.min_gap > 0.0)) throw NumericalError("biorthogonality needs simple zeros of L_n");
    BiorthoReport rep;
    rep.n = n;
    rep.decomposition = which;
    rep.weights = weight_table(L, p, zeros, n);
    const double w = p.omega->real();
    std::vector<std::vector<cplx>> uL, uR;
    for (int j = 0; j < n; ++j) {
        const cplx x(zeros.values[static_cast<std::size_t>(j)].real(), 0.0);
        uL.push_back(u_components(L, p.d, w, x, Side::L, n - 1));
        uR.push_back(u_components(L, p.d, w, x, Side::R, n - 1));
    }
    std::vector<std::vector<cplx>> vL, vR;
    for (int j = 0; j < n; ++j) {
        vL.push_back(rational_values(f, which, uL[static_cast<std::size_t>(j)]));
        vR.push_back(rational_values(f, which, uR[static_cast<std::size_t>(j)]));
    }
    rep.gram.assign(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const auto jj = static_cast<std::size_t>(j), kk = static_cast<std::size_t>(k);
            cplx s = 0.0;
            for (int i = 0; i < n; ++i) s += vL[jj][static_cast<std::size_t>(i)] * vR[kk][static_cast<std::size_t>(i)];
            rep.gram[jj][kk] = s * rep.weights[jj][kk];
            if (j == k) {
                rep.max_diag_dev = std::max(rep.max_diag_dev, std::abs(rep.gram[jj][kk] - 1.0));
            } else {
                rep.max_offdiag = std::max(rep.max_offdiag, std::abs(rep.gram[jj][kk]));
            }
            const cplx form = pencil_form(J, uL[jj], uR[kk]);
            if (j == k) {
                const cplx inv = 1.0 / rep.weights[jj][kk];
                rep.unfactored_max_diag_rel = std::max(rep.unfactored_max_diag_rel, std::abs(form - inv) / std::abs(inv));
            } else {
                rep.unfactored_max_offdiag = std::max(rep.unfactored_max_offdiag, std::abs(form));
            }
        }
    return rep;
}

cplx cd_kernel_rhs(const std::vector<ComplexPoly>& L, const RIIParams& p, int n, cplx x, cplx y) {
    if (x == y) throw ConfigError("cd_kernel needs x != y");
    const double w = p.omega->real();
    const cplx iw(0.0, w);
    const auto uLx = u_components(L, p.d, w, x, Side::L, n);
    const auto uRy = u_components(L, p.d, w, y, Side::R, n);
    const auto nn = static_cast<std::size_t>(n);
    return std::sqrt(p.d(n)) * ((y - iw) * uRy[nn] * uLx[nn - 1] - (x + iw) * uRy[nn - 1] * uLx[nn]) / (x - y);
}

double cd_kernel(const std::vector<ComplexPoly>& L, const RIIParams& p, const HermTridiagPencil& J, cplx x, cplx y) {
    const int n = J.size();
    const double w = p.omega->real();
    const auto uLx = u_components(L, p.d, w, x, Side::L, n - 1);
    const auto uRy = u_components(L, p.d, w, y, Side::R, n - 1);
    return std::abs(pencil_form(J, uLx, uRy) - cd_kernel_rhs(L, p, n, x, y));
}

}  // namespace r2kit
