#include <doctest.h>

#include "r2kit/hypergeom.hpp"
#include "r2kit/recurrence.hpp"

using namespace r2kit;

TEST_CASE("Q_1 at alpha = beta = 0, omega = 1 is -2x") {
    const ComplexPoly q = qn_closed_form(0.0, 0.0, 1.0, 1);
    REQUIRE(q.degree() == 1);
    CHECK(std::abs(q[0]) < 1e-15);
    CHECK(std::abs(q[1] - cplx(-2.0)) < 1e-15);
}

TEST_CASE("pochhammer symbol") {
    CHECK(std::abs(pochhammer(3.5, 0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(pochhammer(1.0, 5) - cplx(120.0)) < 1e-12);
    CHECK(std::abs(pochhammer(-2.0, 3)) < 1e-15);
}

TEST_CASE("terminating 2F1 matches the Chu-Vandermonde sum at z = 1") {
    // 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
    for (int n = 0; n <= 6; ++n) {
        const cplx b(1.3, 0.2), c(2.7, -0.4);
        CHECK(std::abs(hyp2f1_terminating(n, b, c, 1.0) - pochhammer(c - b, n) / pochhammer(c, n)) < 1e-12);
    }
}

TEST_CASE("GCRR closed form equals the recurrence") {
    for (double zeta : {1.0, 1.5, 2.5})
        for (double theta : {0.0, -0.4, 0.7}) {
            const GCRRSpec s{zeta, theta, 1.0, false};
            const auto P = generate(gcrr_params(s), 16);
            for (int n = 0; n <= 16; ++n)
                CHECK(max_coeff_diff(gcrr_closed_form(s, n), P[static_cast<std::size_t>(n)]) < 1e-12);
        }
}

TEST_CASE("differential equation residual vanishes at omega = 1") {
    const GCRRSpec s{2.5, 0.7, 1.0, false};
    for (int n = 1; n <= 10; ++n) CHECK(max_abs_coeff(ode_residual(s, n)) < 1e-9);
}
