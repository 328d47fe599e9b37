#pragma once

#include <string>
#include <vector>

#include "r2kit/pencil.hpp"
#include "r2kit/poly.hpp"
#include "r2kit/recurrence.hpp"
#include "r2kit/spectrum.hpp"

namespace r2kit {

enum class Side { R, L };
enum class Decomposition { Cholesky, UL, LDU };

std::string to_string(Decomposition d);
Decomposition decomposition_from_string(const std::string& s);

// u_k(x) = (-1)^k L_k(x) / ((x -+ i w)^k prod_{j<=k} sqrt(d_j)), k = 0..upto; R uses (x - iw), L uses (x + iw).
std::vector<cplx> u_components(const std::vector<ComplexPoly>& L, const Seq<cplx>& d, double omega, cplx x, Side side,
                               int upto);

// d/dx of u_n^R at x, by the quotient rule on L_n / (x - iw)^n.
cplx u_right_derivative(const std::vector<ComplexPoly>& L, const Seq<cplx>& d, double omega, cplx x, int n);

// Entry (j, k) is w_{n,j,k}; its inverse is -sqrt(d_n)(x_k - iw) [u_n^R]'(x_k) u_{n-1}^L(x_j).
DenseComplex weight_table(const std::vector<ComplexPoly>& L, const RIIParams& p, const ZeroSet& zeros, int n);

// chi = C^T u (Cholesky), Y = C u (UL), Z = (S^C)^T u (LDU); u holds u_0..u_{n-1}.
std::vector<cplx> rational_values(const FactorSet& f, Decomposition which, const std::vector<cplx>& u);

struct BiorthoReport {
    int n = 0;
    Decomposition decomposition = Decomposition::Cholesky;
    DenseComplex gram;
    double max_offdiag = 0.0;
    double max_diag_dev = 0.0;
    DenseComplex weights;
    double unfactored_max_offdiag = 0.0;   // |u^L(x_j) J u^R(x_k)|, j != k
    double unfactored_max_diag_rel = 0.0;  // |u^L J u^R - w_{n,j,j}^{-1}| / |w_{n,j,j}^{-1}|
};

// Zeros must be the (real, simple) zeros of L_n; J is the n x n pencil matrix.
BiorthoReport gram_check(const std::vector<ComplexPoly>& L, const RIIParams& p, const ZeroSet& zeros,
                         const HermTridiagPencil& J, const FactorSet& f, Decomposition which);

// u^L(x) J u^R(y) by the tridiagonal bilinear form.
cplx pencil_form(const HermTridiagPencil& J, const std::vector<cplx>& uL, const std::vector<cplx>& uR);

// |u^L(x) J_n u^R(y) - sqrt(d_n)[(y - iw) u_n^R(y) u_{n-1}^L(x) - (x + iw) u_{n-1}^R(y) u_n^L(x)] / (x - y)|
double cd_kernel(const std::vector<ComplexPoly>& L, const RIIParams& p, const HermTridiagPencil& J, cplx x, cplx y);

// Right-hand side of the kernel identity alone.
cplx cd_kernel_rhs(const std::vector<ComplexPoly>& L, const RIIParams& p, int n, cplx x, cplx y);

}  // namespace r2kit
