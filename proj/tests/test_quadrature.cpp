#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "psdual/quadrature.hpp"

using namespace psdual;

TEST_CASE("GridSpec validates its invariants") {
    CHECK_NOTHROW(GridSpec(1e-6, 40.0, 40000));
    CHECK_THROWS_AS(GridSpec(0.0, 40.0, 40000), std::invalid_argument);   // r_min must be > 0
    CHECK_THROWS_AS(GridSpec(2.0, 1.0, 40000), std::invalid_argument);    // r_max above r_min
    CHECK_THROWS_AS(GridSpec(1e-6, 40.0, 999), std::invalid_argument);    // n floor
    CHECK_THROWS_AS(GridSpec(1e-6, 40.0, 1000), std::invalid_argument);   // h = 0.04 too coarse
    const GridSpec g(0.1, 20.0, 19900);
    CHECK(g.h() == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(g.r(0) == 0.1);
    CHECK(g.r(g.n) == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("Simpson is exact on cubics") {
    const auto cubic = [](double x) { return ((2.0 * x - 3.0) * x + 0.5) * x + 1.25; };
    // Antiderivative: x^4/2 - x^3 + x^2/4 + 1.25 x.
    const auto antiderivative = [](double x) { return 0.5 * x * x * x * x - x * x * x + 0.25 * x * x + 1.25 * x; };
    const double exact = antiderivative(2.0) - antiderivative(1.0);
    const double got = simpson_quadrature(cubic, GridSpec(1.0, 2.0, 1000)).value;
    CHECK(std::abs(got - exact) <= 1e-13 * std::abs(exact));
}

TEST_CASE("Simpson reproduces the Gamma integral 2/(2Z)^3") {
    const auto f = [](double r) { return r * r * std::exp(-2.0 * r); };
    const auto res = simpson_quadrature(f, GridSpec(1e-8, 40.0, 20000));
    CHECK(std::abs(res.value - 0.25) <= 1e-11 * 0.25);
    CHECK(res.last_sample < 1e-14);  // tail magnitude is reported for asserts
    CHECK(res.max_sample == doctest::Approx(std::exp(-2.0)).epsilon(1e-3));

    const auto normalized = [](double r) { return 4.0 * r * r * std::exp(-2.0 * r); };
    CHECK(simpson_quadrature(normalized, GridSpec(1e-8, 40.0, 20000)).value ==
          doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("odd interval counts are adjusted internally") {
    const auto f = [](double r) { return r * r * std::exp(-2.0 * r); };
    const double odd = simpson_quadrature(f, GridSpec(1e-8, 40.0, 20001)).value;
    CHECK(std::abs(odd - 0.25) <= 1e-11 * 0.25);
}
