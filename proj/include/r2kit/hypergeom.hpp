#pragma once

#include "r2kit/poly.hpp"
#include "r2kit/recurrence.hpp"

namespace r2kit {

cplx pochhammer(cplx a, int n);

// sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) z^k
cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z);

// Same series with a polynomial argument z(x).
ComplexPoly hyp2f1_terminating_poly(int n, cplx b, cplx c, const ComplexPoly& z);

// Unscaled GCRR polynomial from its terminating 2F1 form; omega must be 1.
ComplexPoly gcrr_closed_form(const GCRRSpec& spec, int n);

// Complementary Romanovski-Routh Q_n^{(alpha,beta)}.
ComplexPoly qn_closed_form(double alpha, double beta, double omega, int n);

// Max coefficient gap between (-1)^n/(2^n (zeta)_n) Q_n^{(2 theta, 1 - zeta)} and P_n.
double qn_relation_gap(const GCRRSpec& spec, int n);

// (x^2+w^2) P'' + (2 b x + a w) P' - n (n + 2b - 1) P with (a, b) = (2 theta, 1 - zeta - n).
ComplexPoly ode_residual(const GCRRSpec& spec, int n);

}  // namespace r2kit
