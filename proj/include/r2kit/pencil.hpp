#pragma once

#include <vector>

#include "r2kit/poly.hpp"
#include "r2kit/recurrence.hpp"

namespace r2kit {

enum class PencilKind { K, G };

// J (real symmetric, diag rho_k, off sqrt(d_k)) and the second tridiagonal matrix of the pencil x J - K.
struct HermTridiagPencil {
    std::vector<double> j_diag;
    std::vector<double> j_off;
    std::vector<cplx> k_diag;
    std::vector<cplx> k_super;
    std::vector<cplx> k_sub;
    PencilKind kind = PencilKind::G;

    int size() const { return static_cast<int>(j_diag.size()); }
    bool k_hermitian(double tol = 1e-14) const;
};

// kind K takes the perturbed centers c'_k (diag rho_k c'_k); kind G uses c_k.
HermTridiagPencil build_pencil(const RIIParams& p, int n, PencilKind kind, const std::vector<cplx>& centers = {});

// det(x J - K) by the continuant recurrence.
ComplexPoly pencil_determinant(const HermTridiagPencil& pencil);

struct Cholesky {
    std::vector<double> m;  // diagonal m_i
    std::vector<double> l;  // l[i] is the (i, i-1) entry, l[0] = 0
};

struct UL {
    std::vector<double> m;
    std::vector<double> l;  // l[i] is the (i, i-1) entry of the lower factor, l[0] = 0
    double s0 = 0.0;
};

struct LDU {
    std::vector<double> e;   // pivots
    std::vector<double> l;   // unit-lower subdiagonal, l[0] = 0
    std::vector<double> sc_diag;
    std::vector<double> sc_sub;  // S^C = S D^{1/2}
};

struct FactorSet {
    Cholesky chol;
    UL ul;
    LDU ldu;
};

Cholesky cholesky_lu(const HermTridiagPencil& J);
UL factor_ul(const HermTridiagPencil& J);
LDU factor_ldu(const HermTridiagPencil& J);
FactorSet factor_all(const HermTridiagPencil& J);
bool is_positive_definite(const HermTridiagPencil& J);

using DenseReal = std::vector<std::vector<double>>;
using DenseComplex = std::vector<std::vector<cplx>>;

DenseReal dense_j(const HermTridiagPencil& p);
DenseComplex dense_k(const HermTridiagPencil& p);
// Lower bidiagonal matrix with the given diagonal and subdiagonal (sub[i] at (i, i-1)).
DenseReal dense_lower(const std::vector<double>& diag, const std::vector<double>& sub);
DenseReal matmul(const DenseReal& a, const DenseReal& b);
DenseReal transpose(const DenseReal& a);
double max_abs_diff(const DenseReal& a, const DenseReal& b);

struct FactorResiduals {
    double chol = 0.0;  // |C C^T - J|
    double ul = 0.0;    // |C^T C - J|
    double ldu = 0.0;   // |S D S^T - J|
    double pivot_consistency = 0.0;  // |e_i - m_i^2|
    double sc_consistency = 0.0;     // |S^C - C|
};

FactorResiduals factor_residuals(const HermTridiagPencil& J, const FactorSet& f);

}  // namespace r2kit
