#include <cmath>

#include "doctest.h"
#include "quatdom/quadrature.hpp"

using namespace quatdom;

TEST_CASE("polynomials and smooth kernels on finite intervals") {
    const QuadResult r1 = integrate_finite([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r1.evaluations > 0);

    const QuadResult r2 =
        integrate_finite([](double x) { return std::exp(-x * x); }, -2.0, 3.0, 1e-12);
    const double target = 0.5 * std::sqrt(M_PI) * (std::erf(3.0) + std::erf(2.0));
    CHECK(r2.value == doctest::Approx(target).epsilon(1e-11));
}

TEST_CASE("endpoint algebraic singularities") {
    // int_0^1 x^(-1/2) dx = 2
    const QuadResult r1 =
        integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-10));

    // int_0^1 sqrt(1 - x^2) dx = pi / 4
    const QuadResult r2 =
        integrate_finite([](double x) { return std::sqrt(1.0 - x * x); }, 0.0, 1.0, 1e-12);
    CHECK(r2.value == doctest::Approx(M_PI / 4.0).epsilon(1e-11));
}

TEST_CASE("real line through the tangent fold") {
    // Cauchy kernel: int (1 + x^2)^-1 = pi
    const QuadResult r1 =
        integrate_real_line([](double x) { return 1.0 / (1.0 + x * x); }, 1e-12);
    CHECK(r1.value == doctest::Approx(M_PI).epsilon(1e-11));

    // int (1 + x^2)^-2 = pi / 2
    const QuadResult r2 = integrate_real_line(
        [](double x) { return std::pow(1.0 + x * x, -2.0); }, 1e-12);
    CHECK(r2.value == doctest::Approx(M_PI / 2.0).epsilon(1e-11));

    // Gaussian
    const QuadResult r3 =
        integrate_real_line([](double x) { return std::exp(-x * x); }, 1e-12);
    CHECK(r3.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("two dimensions, iterated with variable inner bounds") {
    // quarter disk area
    const QuadResult r1 = integrate_2d(
        [](double, double) { return 1.0; }, 0.0, 1.0, [](double) { return 0.0; },
        [](double x) { return std::sqrt(1.0 - x * x); }, 1e-10);
    CHECK(r1.value == doctest::Approx(M_PI / 4.0).epsilon(1e-8));

    // int over triangle x + y < 1 of x y = 1/24
    const QuadResult r2 = integrate_2d(
        [](double x, double y) { return x * y; }, 0.0, 1.0, [](double) { return 0.0; },
        [](double x) { return 1.0 - x; }, 1e-11);
    CHECK(r2.value == doctest::Approx(1.0 / 24.0).epsilon(1e-9));
}

TEST_CASE("reported error bound is honored under tolerance halving") {
    const auto f = [](double x) { return std::pow(1.0 - x * x, 1.5) * x * x; };
    const QuadResult coarse = integrate_finite(f, 0.0, 1.0, 1e-8);
    const QuadResult fine = integrate_finite(f, 0.0, 1.0, 5e-9);
    CHECK(std::abs(fine.value - coarse.value) <= coarse.abs_error_bound + 1e-15);
    CHECK(coarse.abs_error_bound >= 0.0);
}
