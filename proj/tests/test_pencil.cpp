#include <doctest.h>

#include <cmath>

#include "r2kit/pencil.hpp"
#include "r2kit/scenario.hpp"

using namespace r2kit;

namespace {

FamilySpec constant_spec() {
    FamilySpec f;
    f.kind = "constant";
    return f;
}

}  // namespace

TEST_CASE("Cholesky factor of J_3 for the constant example") {
    const auto J = build_pencil(constant_spec().params(), 3, PencilKind::G);
    const auto ch = cholesky_lu(J);
    REQUIRE(ch.m.size() == 3);
    CHECK(ch.m[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ch.m[1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(ch.m[2] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(ch.l[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ch.l[2] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("K_2 for the constant example with alpha = 1/2") {
    RuleSpec r;
    r.preset = "alpha-gcrr";
    const Scenario s = build_scenario(constant_spec(), r, 2);
    const auto K = scenario_pencil(s, 2);
    const auto k = dense_k(K);
    CHECK(std::abs(k[0][0] - cplx(0.5)) < 1e-15);
    CHECK(std::abs(k[0][1] - cplx(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(k[1][0] - cplx(0.0, -0.5)) < 1e-15);
    CHECK(std::abs(k[1][1]) < 1e-15);
    CHECK(K.k_hermitian());
}

TEST_CASE("pencil determinant reproduces the polynomial up to scale") {
    const auto p = FamilySpec{}.params();
    const auto P = generate(p, 10);
    for (int n = 1; n <= 10; ++n) {
        const auto det = pencil_determinant(build_pencil(p, n, PencilKind::G));
        const auto& Pn = P[static_cast<std::size_t>(n)];
        CHECK(max_coeff_diff(det * (Pn.lead() / det.lead()), Pn) < 1e-12 * max_abs_coeff(Pn) + 1e-15);
    }
}

TEST_CASE("all three factorizations reproduce J") {
    for (int n : {1, 2, 5, 12, 24}) {
        const auto J = build_pencil(FamilySpec{}.params(), n, PencilKind::G);
        REQUIRE(is_positive_definite(J));
        const auto r = factor_residuals(J, factor_all(J));
        CHECK(r.chol < 1e-12);
        CHECK(r.ul < 1e-12);
        CHECK(r.ldu < 1e-12);
    }
}
