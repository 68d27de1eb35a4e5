#include <doctest.h>

#include <cmath>

#include "rootwell/quadrature.hpp"

using namespace rootwell;

TEST_CASE("polynomials and smooth integrands") {
    auto sq = [](double x) { return x * x; };
    CHECK(integrate(sq, 0.0, 1.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto g = [](double x) { return std::exp(-x * x); };
    CHECK(integrate(g, -8.0, 8.0).value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    auto osc = [](double x) { return std::sin(40.0 * x); };
    const double exact = (1.0 - std::cos(40.0)) / 40.0;
    CHECK(integrate(osc, 0.0, 1.0, 1e-12).value == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("mild endpoint singularity in derivatives") {
    auto f = [](double x) { return std::sqrt(x); };
    CHECK(integrate(f, 0.0, 1.0, 1e-10).value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("interval validation") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 1.0, 0.0), domain_error);
}
