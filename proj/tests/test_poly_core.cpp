#include <doctest.h>

#include <random>

#include "r2kit/exact.hpp"
#include "r2kit/poly.hpp"

using namespace r2kit;
using GR = GaussRational;

namespace {

ComplexPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cplx> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(U(rng), U(rng));
    return ComplexPoly(c);
}

}  // namespace

TEST_CASE("exact gaussian rationals") {
    const GR half = GR::frac(1, 2);
    CHECK(half + half == GR(1));
    CHECK(GR::i() * GR::i() == GR(-1));
    CHECK((GR(1) + GR::i()) * (GR(1) + GR::i()).conj() == GR(2));
    CHECK((GR(3) / GR::frac(3, 4)) == GR(4));
    CHECK((GR(1) / GR::i()) == GR(0) - GR::i());
}

TEST_CASE("polynomial arithmetic trims and evaluates") {
    const ComplexPoly p{1.0, 0.0, 3.0};  // 3x^2 + 1
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(std::abs(p.eval(cplx(2.0)) - cplx(13.0)) < 1e-15);
    const ComplexPoly dp = p.derivative();
    CHECK(dp.degree() == 1);
    CHECK(dp[1] == cplx(6.0));
    CHECK(ComplexPoly::monomial(3).degree() == 3);
}

TEST_CASE("product rule and wronskian antisymmetry on random polynomials") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_poly(rng, 1 + trial % 6), q = random_poly(rng, 2 + trial % 5);
        const auto lhs = (p * q).derivative();
        const auto rhs = p.derivative() * q + p * q.derivative();
        CHECK(max_coeff_diff(lhs, rhs) < 1e-13);
        CHECK(max_abs_coeff(wronskian(p, q) + wronskian(q, p)) < 1e-13);
    }
}

TEST_CASE("exact polynomials stay exact") {
    const ExactPoly p{GR::frac(-1, 4), GR(0), GR::frac(3, 4)};
    const ExactPoly q{GR(0), GR(1)};
    const ExactPoly w = wronskian(p, q);
    // W(p, q) = p q' - p' q = p - x p'
    CHECK(w == p - q * p.derivative());
    CHECK(power_of_linear(GR(1), 2) == ExactPoly{GR(1), GR(-2), GR(1)});
}
