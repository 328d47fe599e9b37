#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "r2kit/scenario.hpp"
#include "r2kit/spectrum.hpp"

using namespace r2kit;

namespace {

FamilySpec constant_spec() {
    FamilySpec f;
    f.kind = "constant";
    return f;
}

RuleSpec preset(const char* name) {
    RuleSpec r;
    r.preset = name;
    return r;
}

}  // namespace

TEST_CASE("n = 2 hand anchors") {
    const Scenario s = build_scenario(constant_spec(), preset("alpha-gcrr"), 2);
    const auto z = generalized_eigs(scenario_pencil(s, 2));
    REQUIRE(z.size() == 2);
    CHECK(std::abs(z.values[0] - cplx(-1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(z.values[1] - cplx(1.0)) < 1e-12);

    const Scenario g = build_scenario(constant_spec(), preset("none"), 2);
    const auto zg = generalized_eigs(scenario_pencil(g, 2));
    CHECK(std::abs(zg.values[0] - cplx(-1.0 / std::sqrt(3.0))) < 1e-12);
    CHECK(std::abs(zg.values[1] - cplx(1.0 / std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("pencil eigenvalues match polynomial roots") {
    for (const char* rule : {"none", "alpha-gcrr", "beta-gcrr", "vanishing"})
        for (int n : {3, 8, 16, 32}) {
            const Scenario s = build_scenario(FamilySpec{}, preset(rule), n);
            const auto a = generalized_eigs(scenario_pencil(s, n));
            const auto b = poly_roots(s.target()[static_cast<std::size_t>(n)]);
            CHECK(cross_check(a, b) < 1e-9);
        }
}

TEST_CASE("Hermitian pencils give real zeros") {
    const Scenario s = build_scenario(FamilySpec{}, preset("alpha-gcrr"), 12);
    CHECK(generalized_eigs(scenario_pencil(s, 12)).all_real());
}

TEST_CASE("hungarian assignment is optimal on small random problems") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 5;
        std::vector<std::vector<double>> cost(m, std::vector<double>(m));
        for (auto& row : cost)
            for (auto& v : row) v = U(rng);
        const auto match = hungarian(cost);
        double got = 0.0;
        for (int i = 0; i < m; ++i) got += cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(match[static_cast<std::size_t>(i)])];
        std::vector<int> perm{0, 1, 2, 3, 4};
        double best = 1e300;
        do {
            double t = 0.0;
            for (int i = 0; i < m; ++i) t += cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            best = std::min(best, t);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(got == doctest::Approx(best).epsilon(1e-12));
    }
}
