#include <doctest.h>

#include <random>

#include "r2kit/biortho.hpp"
#include "r2kit/scenario.hpp"

using namespace r2kit;

namespace {

Scenario scaled(const char* rule, int n) {
    RuleSpec r;
    r.preset = rule;
    return build_scenario(FamilySpec{}, r, n);
}

}  // namespace

TEST_CASE("u_0 is one on both sides") {
    const Scenario s = scaled("alpha-gcrr", 4);
    for (auto side : {Side::R, Side::L}) {
        const auto u = u_components(s.L, s.params.d, 1.0, cplx(0.3), side, 3);
        REQUIRE(!u.empty());
        CHECK(std::abs(u[0] - cplx(1.0)) < 1e-15);
    }
}

TEST_CASE("gram matrices are the identity for every decomposition") {
    for (const char* rule : {"alpha-gcrr", "beta-gcrr"})
        for (int n : {2, 5, 10}) {
            const Scenario s = scaled(rule, n);
            const auto K = scenario_pencil(s, n);
            const auto zeros = generalized_eigs(K);
            const auto f = factor_all(scenario_pencil(scaled("none", n), n));
            for (auto dec : {Decomposition::Cholesky, Decomposition::UL, Decomposition::LDU}) {
                const auto rep = gram_check(s.L, s.params, zeros, K, f, dec);
                CHECK(rep.max_offdiag < 1e-8);
                CHECK(rep.max_diag_dev < 1e-8);
                CHECK(rep.unfactored_max_offdiag < 1e-9);
            }
        }
}

TEST_CASE("kernel identity at random points") {
    const Scenario s = scaled("alpha-gcrr", 8);
    const auto K = scenario_pencil(s, 8);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) CHECK(cd_kernel(s.L, s.params, K, cplx(U(rng)), cplx(U(rng))) < 1e-9);
}

TEST_CASE("decomposition names round-trip") {
    for (auto dec : {Decomposition::Cholesky, Decomposition::UL, Decomposition::LDU})
        CHECK(decomposition_from_string(to_string(dec)) == dec);
    CHECK(decomposition_from_string("lu") == Decomposition::Cholesky);
    CHECK_THROWS_AS(decomposition_from_string("qr"), ConfigError);
}

TEST_CASE("complex zeros are rejected") {
    const Scenario s = scaled("vanishing", 4);
    const auto K = scenario_pencil(s, 4);
    const auto f = factor_all(scenario_pencil(scaled("none", 4), 4));
    CHECK_THROWS(gram_check(s.L, s.params, poly_roots(s.L[4]), K, f, Decomposition::Cholesky));
}
