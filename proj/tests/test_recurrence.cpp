#include <doctest.h>

#include <cmath>
#include <random>

#include "r2kit/recurrence.hpp"
#include "r2kit/scenario.hpp"

using namespace r2kit;

TEST_CASE("unscaled GCRR at zeta = 1 gives P_2 = (3x^2 - 1)/4") {
    FamilySpec f;
    f.kind = "gcrr";
    const auto P = generate(f.params(), 2);
    REQUIRE(P[2].degree() == 2);
    CHECK(std::abs(P[2][0] - cplx(-0.25)) < 1e-15);
    CHECK(std::abs(P[2][1]) < 1e-15);
    CHECK(std::abs(P[2][2] - cplx(0.75)) < 1e-15);
}

TEST_CASE("generated degrees are exact") {
    for (const char* kind : {"gcrr", "gcrr-scaled", "constant"}) {
        FamilySpec f;
        f.kind = kind;
        const auto P = generate(f.params(), 20);
        for (int n = 0; n <= 20; ++n) CHECK(P[static_cast<std::size_t>(n)].degree() == n);
    }
}

TEST_CASE("pointwise evaluation agrees with the coefficient expansion") {
    FamilySpec f;
    f.zeta = 2.5;
    f.theta = 0.7;
    const auto p = f.params();
    const auto P = generate(p, 12);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const cplx x(U(rng), 0.3 * U(rng));
        for (int n : {1, 5, 12}) {
            const auto pv = evaluate_at(p, n, x);
            const auto& Pn = P[static_cast<std::size_t>(n)];
            CHECK(std::abs(pv.value - Pn.eval(x)) < 1e-12);
            CHECK(std::abs(pv.derivative - Pn.derivative().eval(x)) < 1e-11);
        }
    }
}

TEST_CASE("leading coefficients of the scaled family") {
    FamilySpec f;
    const auto rep = leading_coeffs(f.params(), 10);
    REQUIRE(rep.k.size() >= 2);
    // k_{n+1} = rho_n k_n - d_n k_{n-1}; with rho_n = (n+1)/(n+2), d_n = n/(4(n+2)) this is 2^-n
    for (std::size_t n = 0; n < rep.k.size(); ++n) CHECK(rep.k[n] == doctest::Approx(std::ldexp(1.0, -int(n))).epsilon(1e-13));
}

TEST_CASE("invalid family parameters are config errors") {
    FamilySpec f;
    f.omega = -1.0;
    CHECK_THROWS_AS(f.validate(), ConfigError);
    CHECK_THROWS_AS(generate(f.params(), -1), ConfigError);
}
