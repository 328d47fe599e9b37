#include "r2kit/pencil.hpp"

#include <cmath>
#include <string>

#include "r2kit/error.hpp"

namespace r2kit {

namespace {

constexpr double kRealTol = 1e-14;

double require_real(cplx v, const char* what, int k) {
    if (std::abs(v.imag()) > kRealTol * std::max(1.0, std::abs(v)))
        throw ConfigError(std::string(what) + "_" + std::to_string(k) + " must be real for the pencil");
    return v.real();
}

}  // namespace

bool HermTridiagPencil::k_hermitian(double tol) const {
    for (const auto& v : k_diag)
        if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v))) return false;
    for (std::size_t i = 0; i < k_super.size(); ++i)
        if (std::abs(k_super[i] - std::conj(k_sub[i])) > tol * std::max(1.0, std::abs(k_super[i]))) return false;
    return true;
}

HermTridiagPencil build_pencil(const RIIParams& p, int n, PencilKind kind, const std::vector<cplx>& centers) {
    if (!p.special()) throw ConfigError("pencil needs the special (omega) form");
    if (n < 1) throw ConfigError("pencil dimension must be >= 1");
    if (kind == PencilKind::K && static_cast<int>(centers.size()) < n)
        throw ConfigError("K pencil needs " + std::to_string(n) + " perturbed centers");
    HermTridiagPencil out;
    out.kind = kind;
    const cplx iw = cplx(0.0, 1.0) * *p.omega;
    for (int k = 0; k < n; ++k) {
        const double rho = require_real(p.rho(k), "rho", k);
        out.j_diag.push_back(rho);
        const cplx center = kind == PencilKind::K ? centers[static_cast<std::size_t>(k)] : p.c(k);
        out.k_diag.push_back(rho * center);
        if (k >= 1) {
            const double d = require_real(p.d(k), "d", k);
            if (!(d > 0.0)) throw ConfigError("pencil needs d_" + std::to_string(k) + " > 0");
            const double sd = std::sqrt(d);
            out.j_off.push_back(sd);
            out.k_super.push_back(iw * sd);
            out.k_sub.push_back(-iw * sd);
        }
    }
    return out;
}

ComplexPoly pencil_determinant(const HermTridiagPencil& P) {
    const int n = P.size();
    auto diag = [&](int m) { return ComplexPoly::linear(P.j_diag[static_cast<std::size_t>(m)], -P.k_diag[static_cast<std::size_t>(m)]); };
    ComplexPoly prev = ComplexPoly::constant(1.0);
    ComplexPoly cur = diag(0);
    for (int m = 1; m < n; ++m) {
        const auto i = static_cast<std::size_t>(m - 1);
        const ComplexPoly up = ComplexPoly::linear(P.j_off[i], -P.k_super[i]);
        const ComplexPoly lo = ComplexPoly::linear(P.j_off[i], -P.k_sub[i]);
        ComplexPoly next = diag(m) * cur - up * lo * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Cholesky cholesky_lu(const HermTridiagPencil& J) {
    const int n = J.size();
    Cholesky c;
    c.m.assign(static_cast<std::size_t>(n), 0.0);
    c.l.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        double piv = J.j_diag[k];
        if (i >= 1) {
            c.l[k] = J.j_off[k - 1] / c.m[k - 1];
            piv -= c.l[k] * c.l[k];
        }
        if (!(piv > 0.0)) throw NumericalError("Cholesky pivot not positive; J is not positive definite", i);
        c.m[k] = std::sqrt(piv);
    }
    return c;
}

UL factor_ul(const HermTridiagPencil& J) {
    const int n = J.size();
    UL u;
    u.m.assign(static_cast<std::size_t>(n), 0.0);
    u.l.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        double sq = J.j_diag[k];
        if (i + 1 < n) {
            u.l[k + 1] = J.j_off[k] / u.m[k + 1];
            sq -= u.l[k + 1] * u.l[k + 1];
        }
        if (!(sq > 0.0)) throw NumericalError("UL factorization with l_n = 0 impossible at this dimension", i);
        u.m[k] = std::sqrt(sq);
    }
    u.s0 = u.m[0];
    return u;
}

LDU factor_ldu(const HermTridiagPencil& J) {
    const int n = J.size();
    LDU f;
    f.e.assign(static_cast<std::size_t>(n), 0.0);
    f.l.assign(static_cast<std::size_t>(n), 0.0);
    f.sc_diag.assign(static_cast<std::size_t>(n), 0.0);
    f.sc_sub.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        double e = J.j_diag[k];
        if (i >= 1) {
            const double off = J.j_off[k - 1];
            f.l[k] = off / f.e[k - 1];
            e -= off * off / f.e[k - 1];
        }
        if (!(e > 0.0)) throw NumericalError("LDU pivot not positive", i);
        f.e[k] = e;
        f.sc_diag[k] = std::sqrt(e);
        if (i >= 1) f.sc_sub[k] = f.l[k] * f.sc_diag[k - 1];
    }
    return f;
}

FactorSet factor_all(const HermTridiagPencil& J) { return {cholesky_lu(J), factor_ul(J), factor_ldu(J)}; }

bool is_positive_definite(const HermTridiagPencil& J) {
    try {
        cholesky_lu(J);
        return true;
    } catch (const NumericalError&) {
        return false;
    }
}

DenseReal dense_j(const HermTridiagPencil& p) {
    const auto n = static_cast<std::size_t>(p.size());
    DenseReal a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = p.j_diag[i];
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = p.j_off[i];
    }
    return a;
}

DenseComplex dense_k(const HermTridiagPencil& p) {
    const auto n = static_cast<std::size_t>(p.size());
    DenseComplex a(n, std::vector<cplx>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = p.k_diag[i];
        if (i + 1 < n) {
            a[i][i + 1] = p.k_super[i];
            a[i + 1][i] = p.k_sub[i];
        }
    }
    return a;
}

DenseReal dense_lower(const std::vector<double>& diag, const std::vector<double>& sub) {
    const std::size_t n = diag.size();
    DenseReal a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = diag[i];
        if (i >= 1) a[i][i - 1] = sub[i];
    }
    return a;
}

DenseReal matmul(const DenseReal& a, const DenseReal& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    DenseReal c(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    return c;
}

DenseReal transpose(const DenseReal& a) {
    const std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    DenseReal t(m, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

double max_abs_diff(const DenseReal& a, const DenseReal& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

FactorResiduals factor_residuals(const HermTridiagPencil& J, const FactorSet& f) {
    FactorResiduals r;
    const DenseReal j = dense_j(J);
    const DenseReal c = dense_lower(f.chol.m, f.chol.l);
    r.chol = max_abs_diff(matmul(c, transpose(c)), j);
    const DenseReal u = dense_lower(f.ul.m, f.ul.l);
    r.ul = max_abs_diff(matmul(transpose(u), u), j);
    const std::vector<double> ones(f.ldu.e.size(), 1.0);
    const DenseReal s = dense_lower(ones, f.ldu.l);
    DenseReal dmat(f.ldu.e.size(), std::vector<double>(f.ldu.e.size(), 0.0));
    for (std::size_t i = 0; i < f.ldu.e.size(); ++i) dmat[i][i] = f.ldu.e[i];
    r.ldu = max_abs_diff(matmul(matmul(s, dmat), transpose(s)), j);
    for (std::size_t i = 0; i < f.ldu.e.size(); ++i) {
        r.pivot_consistency = std::max(r.pivot_consistency, std::abs(f.ldu.e[i] - f.chol.m[i] * f.chol.m[i]));
        r.sc_consistency = std::max(r.sc_consistency, std::abs(f.ldu.sc_diag[i] - f.chol.m[i]));
        r.sc_consistency = std::max(r.sc_consistency, std::abs(f.ldu.sc_sub[i] - f.chol.l[i]));
    }
    return r;
}

}  // namespace r2kit
