#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "psdual/oracle.hpp"

#include "oracle_util.hpp"

using namespace psdual;

namespace {

ChargeDensity density(std::vector<PowerTerm> terms) { return ChargeDensity(RadialPolynomial(std::move(terms))); }

RadialPolynomial family_potential(double z, double w) {
    if (w == 0.0) return RadialPolynomial({{-z, -1.0}});
    return RadialPolynomial({{-z, -1.0}, {z * w, 1.0}, {0.5 * w * w, 2.0}});
}

}  // namespace

TEST_CASE("numerov_ground_state: hydrogen") {
    const auto res = numerov_ground_state(RadialPolynomial({{-1.0, -1.0}}), GridSpec(1e-6, 40.0, 40000), -2.0, -0.01);
    CHECK(std::abs(res.energy + 0.5) <= 1e-6);
    CHECK(res.node_count == 0);
}

TEST_CASE("numerov_ground_state: Coulomb + linear + harmonic, (Z,W) = (1,0.1)") {
    const auto res = numerov_ground_state(RadialPolynomial({{-1.0, -1.0}, {0.1, 1.0}, {0.005, 2.0}}),
                                          GridSpec(1e-6, 40.0, 40000), -1.35, -1e-12);
    CHECK(std::abs(res.energy + 0.35) <= 1e-5);
    CHECK(res.node_count == 0);
}

TEST_CASE("numerov_ground_state: isotropic oscillator limit") {
    // U = r^2/2 has ground energy 3/2; the eigenvalue here is positive, so the
    // bracket does not touch zero.
    const auto res = numerov_ground_state(RadialPolynomial({{0.5, 2.0}}), GridSpec(1e-6, 12.0, 12000), 0.5, 2.5);
    CHECK(std::abs(res.energy - 1.5) <= 1e-6);
    CHECK(res.node_count == 0);
}

TEST_CASE("numerov_ground_state: bracket without an eigenvalue is rejected") {
    const RadialPolynomial hydrogen({{-1.0, -1.0}});
    CHECK_THROWS_AS(numerov_ground_state(hydrogen, GridSpec(1e-6, 40.0, 40000), -2.0, -0.7), std::runtime_error);
    CHECK_THROWS_AS(numerov_ground_state(hydrogen, GridSpec(1e-6, 40.0, 40000), -0.1, -0.5), std::invalid_argument);
}

TEST_CASE("numerov eigenvalue error drops at least 8x when h halves") {
    const RadialPolynomial hydrogen({{-1.0, -1.0}});
    const double coarse = std::abs(
        numerov_ground_state(hydrogen, GridSpec(1e-6, 20.0, 2000), -2.0, -0.01).energy + 0.5);
    const double fine = std::abs(
        numerov_ground_state(hydrogen, GridSpec(1e-6, 20.0, 4000), -2.0, -0.01).energy + 0.5);
    CHECK(coarse >= 8.0 * fine);
}

TEST_CASE("shooting node count is non-decreasing in E") {
    const RadialPolynomial hydrogen({{-1.0, -1.0}});
    const GridSpec grid(1e-6, 40.0, 40000);
    int prev = -1;
    for (double e : {-2.0, -0.45, -0.2, -0.12, -0.08, -0.05, -0.02}) {
        const int nodes = count_nodes(hydrogen, grid, e);
        CHECK(nodes >= prev);
        prev = nodes;
    }
    CHECK(count_nodes(hydrogen, grid, -2.0) == 0);
    CHECK(count_nodes(hydrogen, grid, -0.45) == 1);
}

TEST_CASE("fd_residual: identity holds for solved densities") {
    const GridSpec grid(0.1, 20.0, 19900);  // h = 1e-3
    const auto hydrogen_rho = density({{2.0, -1.0}});
    const auto hydrogen = solve_dual(hydrogen_rho);
    CHECK(fd_residual(hydrogen, hydrogen_rho, grid) <= 1e-6);

    const auto zw_rho = density({{2.0, -1.0}, {0.3, 0.0}});
    const auto zw = solve_dual(zw_rho);
    CHECK(fd_residual(zw, zw_rho, grid) <= 1e-6);
}

TEST_CASE("fd_residual: corrupted exponent is detected") {
    const GridSpec grid(0.1, 20.0, 19900);
    const auto rho = density({{2.0, -1.0}});
    auto sol = solve_dual(rho);
    sol.exponent = add(sol.exponent, RadialPolynomial({{1e-3, 1.0}}));
    CHECK(fd_residual(sol, rho, grid) > 1e-4);
}

TEST_CASE("fd_residual requires a normalized solution") {
    DualSolution sol;
    CHECK_THROWS_AS(fd_residual(sol, density({{2.0, -1.0}}), GridSpec(0.1, 20.0, 19900)), std::runtime_error);
}

TEST_CASE("verify: hydrogen passes on the default grid") {
    const auto report = verify(density({{2.0, -1.0}}), GridSpec(1e-6, 40.0, 40000));
    CHECK(report.passed);
    CHECK(report.reason.empty());
    CHECK(report.analytic_E0 == -0.5);
    REQUIRE(report.numeric_E0.has_value());
    CHECK(std::abs(*report.numeric_E0 + 0.5) <= 1e-6);
    CHECK(*report.abs_err == std::abs(report.analytic_E0 - *report.numeric_E0));
    CHECK(*report.node_count == 0);
    CHECK(*report.ode_residual_max <= 1e-6);
    CHECK(std::abs(*report.norm_quadrature - 1.0) <= 1e-8);
    REQUIRE(report.norm_closed_form.has_value());
    CHECK(*report.norm_closed_form == 2.0);
}

TEST_CASE("verify: unbound density reports a reason, no exception") {
    const auto report = verify(density({{2.0, -1.0}, {3.0, 0.0}}), GridSpec(1e-6, 40.0, 40000));
    CHECK_FALSE(report.passed);
    CHECK(report.reason == "E0 >= 0");
    CHECK(report.analytic_E0 == 1.0);
    CHECK_FALSE(report.numeric_E0.has_value());
}

TEST_CASE("verify: (Z,W) = (2,0.1) passes") {
    const auto report = verify(density({{4.0, -1.0}, {0.3, 0.0}}), GridSpec(1e-6, 40.0, 40000));
    CHECK(report.passed);
    CHECK(report.analytic_E0 == doctest::Approx(-1.85).epsilon(1e-15));
    CHECK(std::abs(*report.numeric_E0 + 1.85) <= 1e-5);
}

TEST_CASE("property: Numerov matches -Z^2/2 + 3W/2 across the family") {
    auto& gen = testutil::rng();
    std::uniform_real_distribution<double> zdist(0.5, 3.0);
    std::uniform_real_distribution<double> frac(0.0, 0.9);
    for (int trial = 0; trial < 10; ++trial) {
        const double z = zdist(gen);
        const double w = frac(gen) * z * z / 3.0;
        const double analytic = -0.5 * z * z + 1.5 * w;
        const double r_max = std::max(40.0 / z, 10.0 / std::sqrt(std::max(w, 0.01)));
        const auto res = numerov_ground_state(family_potential(z, w), GridSpec(1e-6, r_max, 40000),
                                              std::min(analytic - 1.0, 2.0 * analytic), -1e-12);
        CHECK(std::abs(res.energy - analytic) <= 1e-5);
    }
}
