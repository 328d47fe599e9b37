#include "r2kit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "r2kit/error.hpp"

namespace r2kit {

double ZeroSet::max_imag() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
    return m;
}

std::vector<double> ZeroSet::real_parts() const {
    std::vector<double> r;
    r.reserve(values.size());
    for (const auto& v : values) r.push_back(v.real());
    return r;
}

double ZeroSet::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

std::string to_string(ZeroMethod m) { return m == ZeroMethod::Pencil ? "pencil" : "aberth"; }

void sort_zeros(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

namespace {

double min_pairwise_gap(const std::vector<cplx>& v) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) g = std::min(g, std::abs(v[i] - v[j]));
    return v.size() < 2 ? 0.0 : g;
}

void horner2(const std::vector<cplx>& a, cplx z, cplx& p, cplx& dp) {
    p = 0.0;
    dp = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
}

double backward_residual(const std::vector<cplx>& a, cplx z) {
    cplx p = 0.0;
    double s = 0.0;
    const double az = std::abs(z);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        p = p * z + *it;
        s = s * az + std::abs(*it);
    }
    return s == 0.0 ? 0.0 : std::abs(p) / s;
}

}  // namespace

ZeroSet poly_roots(const ComplexPoly& poly, const AberthOptions& opt) {
    const int n = poly.degree();
    if (n < 1) throw ConfigError("poly_roots needs degree >= 1");
    const std::vector<cplx>& a = poly.coeffs();
    std::vector<cplx> b(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) b[k] = a[k] / a.back();

    const cplx center = -b[static_cast<std::size_t>(n - 1)] / static_cast<double>(n);
    double radius = 0.0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::pow(std::abs(b[static_cast<std::size_t>(k)]), 1.0 / (n - k)));
    if (radius == 0.0) radius = 1.0;

    std::vector<cplx> z(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = center + radius * std::polar(1.0, 2.0 * pi * j / n + 0.7);

    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int it = 0; it < opt.max_iter; ++it) {
        bool all = true;
        for (int j = 0; j < n; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            if (done[jj]) continue;
            cplx p, dp;
            horner2(b, z[jj], p, dp);
            if (p == cplx(0.0, 0.0)) {
                done[jj] = true;
                continue;
            }
            const cplx ratio = p / dp;
            cplx s = 0.0;
            for (int k = 0; k < n; ++k)
                if (k != j) s += 1.0 / (z[jj] - z[static_cast<std::size_t>(k)]);
            const cplx w = ratio / (1.0 - ratio * s);
            z[jj] -= w;
            if (std::abs(w) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z[jj])))
                done[jj] = true;
            else
                all = false;
        }
        if (all) break;
    }

    for (auto& zj : z) {
        double best = backward_residual(b, zj);
        for (int s = 0; s < opt.polish_steps; ++s) {
            cplx p, dp;
            horner2(b, zj, p, dp);
            if (dp == cplx(0.0, 0.0)) break;
            const cplx cand = zj - p / dp;
            const double r = backward_residual(b, cand);
            if (!(r < best)) break;
            best = r;
            zj = cand;
        }
    }

    ZeroSet out;
    out.method = ZeroMethod::Aberth;
    sort_zeros(z);
    out.values = z;
    for (int j = 0; j < n; ++j) {
        const double r = backward_residual(a, z[static_cast<std::size_t>(j)]);
        out.residuals.push_back(r);
        if (!(r < opt.accept_residual)) throw NumericalError("Aberth iteration did not converge for root", j);
    }
    out.min_gap = min_pairwise_gap(out.values);
    return out;
}

ZeroSet generalized_eigs(const HermTridiagPencil& P) {
    const int n = P.size();
    if (n < 1) throw ConfigError("empty pencil");
    if (!P.k_hermitian()) {
        ZeroSet z = poly_roots(pencil_determinant(P));
        z.note = "K is not Hermitian; zeros taken from det(xJ - K) by Aberth iteration";
        return z;
    }
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(n, n), J = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        K(i, i) = cplx(P.k_diag[k].real(), 0.0);
        J(i, i) = P.j_diag[k];
        if (i + 1 < n) {
            K(i, i + 1) = P.k_super[k];
            K(i + 1, i) = std::conj(P.k_super[k]);
            J(i, i + 1) = J(i + 1, i) = P.j_off[k];
        }
    }
    Eigen::LLT<Eigen::MatrixXcd> llt(J);
    if (llt.info() != Eigen::Success) throw NumericalError("J is not positive definite");
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(K, J, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");

    std::vector<std::pair<double, Eigen::VectorXcd>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(es.eigenvalues()(i), es.eigenvectors().col(i));
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    ZeroSet out;
    out.method = ZeroMethod::Pencil;
    for (auto& [lam, v] : pairs) {
        v /= v.cwiseAbs().maxCoeff();
        const Eigen::VectorXcd r = K * v - lam * (J * v);
        out.values.emplace_back(lam, 0.0);
        out.residuals.push_back(r.cwiseAbs().maxCoeff());
    }
    out.min_gap = min_pairwise_gap(out.values);
    return out;
}

std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> ans(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) ans[p[j] - 1] = j - 1;
    return ans;
}

double cross_check(const ZeroSet& a, const ZeroSet& b) {
    if (a.size() != b.size()) throw ConfigError("cross_check: zero sets differ in size");
    double dev = 0.0;
    if (a.all_real() && b.all_real()) {
        auto ra = a.real_parts(), rb = b.real_parts();
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        for (std::size_t i = 0; i < ra.size(); ++i) dev = std::max(dev, std::abs(ra[i] - rb[i]));
        return dev;
    }
    std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a.values[i] - b.values[j]);
    const auto match = hungarian(cost);
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, cost[i][static_cast<std::size_t>(match[i])]);
    return dev;
}

}  // namespace r2kit
