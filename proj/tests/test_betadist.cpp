#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "betapoly/betadist.hpp"
#include "betapoly/quad.hpp"
#include "betapoly/specfun.hpp"

using namespace betapoly;
using specfun::pi;

TEST_CASE("model validation") {
    CHECK_THROWS_AS(Model::beta_ball(2, -1.0), std::domain_error);
    CHECK_THROWS_AS(Model::beta_prime(4, 2.0), std::domain_error);  // needs beta > 2
    CHECK_THROWS_AS(Model::beta_ball(0, 0.0), std::domain_error);
    CHECK_NOTHROW(Model::beta_ball(2, -0.999));
    CHECK_NOTHROW(Model::sphere(1));
}

TEST_CASE("normalizing constants") {
    CHECK(norm_const(Model::beta_ball(1, 0.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(norm_const(Model::beta_ball(2, 0.0)) == doctest::Approx(1.0 / pi).epsilon(1e-14));
    CHECK(norm_const(Model::beta_prime(1, 1.0)) == doctest::Approx(1.0 / pi).epsilon(1e-14));
    CHECK_THROWS_AS(norm_const(Model::sphere(2)), std::domain_error);
}

TEST_CASE("density") {
    const Model disc = Model::beta_ball(2, 0.0);
    const double origin2[] = {0.0, 0.0};
    CHECK(density(disc, origin2) == doctest::Approx(1.0 / pi).epsilon(1e-14));
    const double outside[] = {0.8, 0.7};
    CHECK(density(disc, outside) == 0.0);
    const double boundary[] = {1.0, 0.0};
    CHECK(density(Model::beta_ball(2, 1.5), boundary) == 0.0);

    const Model cauchy = Model::beta_prime(1, 1.0);
    const double zero1[] = {0.0};
    CHECK(density(cauchy, zero1) == doctest::Approx(1.0 / pi).epsilon(1e-14));
}

TEST_CASE("cdf1 closed forms from the special cases") {
    // beta = 0: F(h) = (1+h)/2.
    for (double h : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
        CHECK(cdf1(Family::Beta, 0.0, h) == doctest::Approx(0.5 * (1.0 + h)).epsilon(1e-14));
    }
    // beta = 1: F(h) = (1/4)(2 + 3h - h^3).
    for (double h : {-0.8, -0.1, 0.25, 0.7}) {
        CHECK(cdf1(Family::Beta, 1.0, h) ==
              doctest::Approx(0.25 * (2.0 + 3.0 * h - h * h * h)).epsilon(1e-13));
    }
    // beta = -1/2: F(h) = 1/2 + arcsin(h)/pi.
    CHECK(cdf1(Family::Beta, -0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    for (double h : {-0.6, 0.3, 0.95}) {
        CHECK(cdf1(Family::Beta, -0.5, h) ==
              doctest::Approx(0.5 + std::asin(h) / pi).epsilon(1e-13));
    }
    // beta' with beta = 1: F(h) = 1/2 + arctan(h)/pi (Cauchy).
    for (double h : {-3.0, -0.2, 0.0, 1.7}) {
        CHECK(cdf1(Family::BetaPrime, 1.0, h) ==
              doctest::Approx(0.5 + std::atan(h) / pi).epsilon(1e-13));
    }
    // Clamping outside the support.
    CHECK(cdf1(Family::Beta, 0.7, -1.5) == 0.0);
    CHECK(cdf1(Family::Beta, 0.7, 2.0) == 1.0);
    CHECK_THROWS_AS(cdf1(Family::Beta, -1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(cdf1(Family::BetaPrime, 0.5, 0.0), std::domain_error);
}

TEST_CASE("cdf1 symmetry and monotonicity") {
    for (double beta : {-0.7, 0.0, 2.5, 11.0}) {
        double prev = -1.0;
        for (double h = -1.0; h <= 1.0; h += 0.01) {
            const double f = cdf1(Family::Beta, beta, h);
            CHECK(f >= prev - 1e-15);
            prev = f;
            CHECK(std::fabs(f + cdf1(Family::Beta, beta, -h) - 1.0) <= 1e-13);
        }
    }
    for (double beta : {0.75, 1.5, 6.0}) {
        for (double h = -10.0; h <= 10.0; h += 0.25) {
            CHECK(std::fabs(cdf1(Family::BetaPrime, beta, h) +
                            cdf1(Family::BetaPrime, beta, -h) - 1.0) <= 1e-13);
        }
    }
}

TEST_CASE("halfspace and slab contents (Lemma-style shifts)") {
    const Model ball3 = Model::beta_ball(3, 0.0);
    // d=3, beta=0 projects to the 1-dim parameter 1: (1/4)(2+3h-h^3).
    for (double h : {-0.5, 0.0, 0.3, 0.9}) {
        CHECK(halfspace_content(ball3, h, Side::Below) ==
              doctest::Approx(0.25 * (2.0 + 3.0 * h - h * h * h)).epsilon(1e-13));
        CHECK(halfspace_content(ball3, h, Side::Above) ==
              doctest::Approx(1.0 - 0.25 * (2.0 + 3.0 * h - h * h * h)).epsilon(1e-13));
    }
    CHECK(halfspace_content(ball3, 0.0, Side::Below) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(halfspace_content(ball3, 1.0, Side::Below) == 1.0);

    // Slab for the disc model: (2/pi)(h sqrt(1-h^2) + arcsin h).
    const Model disc = Model::beta_ball(2, 0.0);
    CHECK(slab_content(disc, 0.0) == 0.0);
    CHECK(slab_content(disc, 1.0) == 1.0);
    for (double h : {0.1, 0.45, 0.8}) {
        const double expect = 2.0 / pi * (h * std::sqrt(1.0 - h * h) + std::asin(h));
        CHECK(slab_content(disc, h) == doctest::Approx(expect).epsilon(1e-13));
    }
    // Slab equals F(h) - F(-h) for both families.
    const Model bp = Model::beta_prime(3, 4.0);
    for (double h : {0.2, 1.0, 3.5}) {
        const double direct = halfspace_content(bp, h, Side::Below) -
                              halfspace_content(bp, -h, Side::Below);
        CHECK(slab_content(bp, h) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("projected_model") {
    const Model p1 = projected_model(Model::beta_ball(3, 0.0), 2);
    CHECK(p1.family == Family::Beta);
    CHECK(p1.dim == 2);
    CHECK(p1.beta == doctest::Approx(0.5));

    const Model p2 = projected_model(Model::beta_ball(5, 1.25), 4);
    CHECK(p2.beta == doctest::Approx(1.75));  // k = d-1 shifts by 1/2

    const Model p3 = projected_model(Model::beta_prime(4, 3.0), 2);
    CHECK(p3.family == Family::BetaPrime);
    CHECK(p3.beta == doctest::Approx(2.0));

    const Model p4 = projected_model(Model::sphere(3), 1);
    CHECK(p4.family == Family::Beta);
    CHECK(p4.beta == doctest::Approx(0.0));

    CHECK_THROWS_AS(projected_model(Model::beta_prime(4, 2.2), 1), std::domain_error);
    CHECK_THROWS_AS(projected_model(Model::beta_ball(3, 0.0), 3), std::domain_error);
}

namespace {

double ks_against(std::vector<double>& v, const std::function<double(double)>& cdf) {
    std::sort(v.begin(), v.end());
    double ks = 0.0;
    const double n = static_cast<double>(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        const double F = cdf(v[i]);
        ks = std::max(ks, std::fabs(F - i / n));
        ks = std::max(ks, std::fabs(F - (i + 1) / n));
    }
    return ks;
}

}  // namespace

TEST_CASE("samplers: support and radial law") {
    const int N = 100000;
    RngStream rng(1234, 0);
    const Model disc = Model::beta_ball(2, 0.0);
    std::vector<double> r(N);
    std::vector<double> x(2);
    for (int i = 0; i < N; ++i) {
        sample_point(disc, rng, x);
        const double n2 = x[0] * x[0] + x[1] * x[1];
        REQUIRE(n2 < 1.0);
        r[static_cast<size_t>(i)] = std::sqrt(n2);
    }
    // Radial CDF of the uniform disc is r^2.
    CHECK(ks_against(r, [](double t) { return t * t; }) < 0.01);

    const Model sph = Model::sphere(4);
    std::vector<double> y(4);
    for (int i = 0; i < 1000; ++i) {
        sample_point(sph, rng, y);
        double n2 = 0.0;
        for (double c : y) n2 += c * c;
        CHECK(std::fabs(n2 - 1.0) <= 1e-12);
    }
}

TEST_CASE("samplers: beta-prime radial law against the closed-form CDF") {
    const int N = 100000;
    RngStream rng(99, 7);
    const Model m = Model::beta_prime(2, 3.0);
    std::vector<double> r(N);
    std::vector<double> x(2);
    for (int i = 0; i < N; ++i) {
        sample_point(m, rng, x);
        r[static_cast<size_t>(i)] = std::hypot(x[0], x[1]);
    }
    auto cdf = [&m](double t) {
        return specfun::reg_inc_beta(0.5 * m.dim, m.beta - 0.5 * m.dim, t * t / (1.0 + t * t));
    };
    CHECK(ks_against(r, cdf) < 0.01);
}

TEST_CASE("samplers reproduce and split") {
    const Model m = Model::beta_ball(3, 2.0);
    RngStream a(42, 11), b(42, 11), c(42, 12);
    const auto pa = sample_points(m, a, 32);
    CHECK(pa == sample_points(m, b, 32));
    CHECK(pa != sample_points(m, c, 32));
}
