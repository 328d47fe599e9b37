#pragma once

#include <string>
#include <vector>

#include "r2kit/pencil.hpp"
#include "r2kit/poly.hpp"

namespace r2kit {

enum class ZeroMethod { Pencil, Aberth };

struct ZeroSet {
    std::vector<cplx> values;       // ascending real part, ties by imaginary part
    std::vector<double> residuals;  // pencil: |K v - x J v|_inf with |v|_inf = 1; aberth: |p(z)| / sum |a_k||z|^k
    ZeroMethod method = ZeroMethod::Aberth;
    double min_gap = 0.0;
    std::string note;

    std::size_t size() const { return values.size(); }
    double max_imag() const;
    bool all_real(double tol = 1e-10) const { return max_imag() < tol; }
    std::vector<double> real_parts() const;
    double max_residual() const;
};

std::string to_string(ZeroMethod m);

// Generalized eigenvalues of K v = x J v. A non-Hermitian K falls back to roots of det(xJ - K).
ZeroSet generalized_eigs(const HermTridiagPencil& pencil);

struct AberthOptions {
    int max_iter = 200;
    int polish_steps = 5;
    double accept_residual = 1e-9;
};

ZeroSet poly_roots(const ComplexPoly& p, const AberthOptions& opt = {});

// Max |a_i - b_pi(i)| under sorted matching (all real) or minimum-cost assignment.
double cross_check(const ZeroSet& a, const ZeroSet& b);

// Assignment minimizing the summed cost; returns column index for each row.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost);

void sort_zeros(std::vector<cplx>& v);

}  // namespace r2kit
