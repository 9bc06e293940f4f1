#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "betapoly/quad.hpp"
#include "betapoly/specfun.hpp"

using namespace betapoly;
using quad::integrate_finite;
using quad::integrate_half_line;
using quad::integrate_real_line;
using quad::QuadOptions;
using specfun::pi;

TEST_CASE("finite interval basics") {
    auto one = integrate_finite([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.evaluations > 0);
    CHECK(one.abs_error_estimate >= 0.0);

    auto poly = integrate_finite([](double h) { return std::pow(1.0 - h * h, 3.0); }, 0.0, 1.0);
    CHECK(poly.value == doctest::Approx(16.0 / 35.0).epsilon(1e-14));
}

TEST_CASE("endpoint singularity: arcsine integral") {
    QuadOptions opts;
    opts.abs_tol = 1e-6;
    opts.rel_tol = 1e-6;
    auto r = integrate_finite([](double h) { return 1.0 / std::sqrt((1.0 - h) * (1.0 + h)); },
                              -1.0, 1.0, opts);
    CHECK(std::fabs(r.value - pi) <= 1e-6);
    CHECK(std::fabs(r.value - pi) <= r.abs_error_estimate + 1e-14);
}

TEST_CASE("non-convergence raises") {
    QuadOptions opts;
    opts.abs_tol = 1e-14;
    opts.rel_tol = 1e-14;
    opts.max_panels = 50;
    CHECK_THROWS_AS(integrate_finite([](double h) { return 1.0 / std::sqrt(std::fabs(h) + 1e-18); },
                                     -1.0, 1.0, opts),
                    quad::QuadratureError);
}

TEST_CASE("non-finite integrand raises") {
    CHECK_THROWS_AS(integrate_real_line([](double) { return 1.0; }, {}),  // not integrable
                    quad::QuadratureError);
}

TEST_CASE("real line and half line") {
    auto cauchy = integrate_real_line([](double h) { return 1.0 / (1.0 + h * h); });
    CHECK(cauchy.value == doctest::Approx(pi).epsilon(1e-13));

    auto gauss = integrate_real_line([](double h) { return std::exp(-h * h); });
    CHECK(gauss.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));

    auto half = integrate_half_line([](double h) { return std::pow(1.0 + h * h, -2.0); });
    CHECK(half.value == doctest::Approx(pi / 4.0).epsilon(1e-13));
}

TEST_CASE("breakpoints handle interior kinks") {
    QuadOptions opts;
    opts.breakpoints = {0.0};
    auto r = integrate_finite([](double h) { return std::pow(std::fabs(h), 0.3); }, -1.0, 1.0,
                              opts);
    CHECK(r.value == doctest::Approx(2.0 / 1.3).epsilon(1e-12));
}

TEST_CASE("endpoint ladder finds concentrated mass") {
    // F(h)^m with huge m: all mass within ~1/m of 1.  Without the ladder a
    // coarse first panel sees only zeros.
    const int m = 1000000;
    QuadOptions opts;
    opts.endpoint_ladder = 40;
    auto r = integrate_finite(
        [m](double h) { return std::pow(0.5 * (1.0 + h), static_cast<double>(m)); }, -1.0, 1.0,
        opts);
    CHECK(r.value == doctest::Approx(2.0 / (m + 1.0)).epsilon(1e-11));
}

TEST_CASE("deterministic results") {
    auto f = [](double h) { return std::exp(-h) * std::cos(7.0 * h); };
    auto a = integrate_finite(f, 0.0, 3.0);
    auto b = integrate_finite(f, 0.0, 3.0);
    CHECK(a.value == b.value);
    CHECK(a.abs_error_estimate == b.abs_error_estimate);
    CHECK(a.evaluations == b.evaluations);
}
