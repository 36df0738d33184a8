#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edupol/quadrature.hpp"
#include "edupol/special_functions.hpp"
#include "test_support.hpp"

using namespace edupol;

TEST_CASE("incomplete beta reference values") {
    CHECK(math::regularized_incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(math::regularized_incomplete_beta(2.0, 2.0, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    // I_x(3,1) = x^3, I_x(1,b) = 1 - (1-x)^b
    CHECK(math::regularized_incomplete_beta(3.0, 1.0, 0.5) ==
          doctest::Approx(0.125).epsilon(1e-14));
    CHECK(math::regularized_incomplete_beta(1.0, 2.0, 0.25) ==
          doctest::Approx(1.0 - 0.75 * 0.75).epsilon(1e-14));
    // Published reference point for Ix(a,b)
    CHECK(math::regularized_incomplete_beta(0.5, 5.0, 0.2) == doctest::Approx(0.855072).epsilon(1e-6));
    CHECK(math::regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(math::regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("incomplete beta identities") {
    testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(1.0, 8.0);
        const double b = rng.uniform(1.0, 8.0);
        const double x = rng.uniform();
        const double direct = math::regularized_incomplete_beta(a, b, x);
        const double mirrored = math::regularized_incomplete_beta(b, a, 1.0 - x);
        CHECK(direct + mirrored == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(direct >= 0.0);
        CHECK(direct <= 1.0);
    }
}

TEST_CASE("incomplete beta matches an independent quadrature of the density") {
    testing::Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        const double a = rng.uniform(1.0, 7.0);
        const double b = rng.uniform(1.0, 7.0);
        const double x = rng.uniform(0.05, 0.95);
        const double by_quadrature = testing::simpson_graded(
            [&](double t) { return math::beta_pdf(a, b, t); }, 0.0, x);
        CHECK(math::regularized_incomplete_beta(a, b, x) ==
              doctest::Approx(by_quadrature).epsilon(1e-10));
    }
}

TEST_CASE("beta pdf endpoints and normalization") {
    CHECK(math::beta_pdf(1.0, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(math::beta_pdf(1.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(math::beta_pdf(2.0, 2.0, 0.0) == 0.0);
    CHECK(math::beta_pdf(2.0, 2.0, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(math::beta_pdf(2.0, 2.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(math::beta_pdf(0.0, 2.0, 0.5), std::invalid_argument);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
    for (int n : {2, 5, 16, 64}) {
        const auto& rule = math::gauss_legendre(n);
        double mass = 0.0;
        for (double w : rule.weights) mass += w;
        CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
        // degree 2n-1 monomial over [0,1]
        const int degree = 2 * n - 1;
        const double integral = math::integrate_panel(
            rule, 0.0, 1.0, [&](double x) { return std::pow(x, degree); });
        CHECK(integral == doctest::Approx(1.0 / (degree + 1)).epsilon(1e-12));
    }
}

TEST_CASE("gauss-legendre nodes are symmetric and ordered") {
    const auto& rule = math::gauss_legendre(64);
    for (std::size_t i = 0; i + 1 < rule.nodes.size(); ++i) CHECK(rule.nodes[i] < rule.nodes[i + 1]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[rule.nodes.size() - 1 - i]).epsilon(1e-15));
}
