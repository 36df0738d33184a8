#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "edupol/taste_density.hpp"
#include "test_support.hpp"

using namespace edupol;

TEST_CASE("pdf worked values") {
    const TasteDensity uni = TasteDensity::uniform();
    CHECK(uni.pdf(0.3, {5, 1}) == 1.0);

    const TasteDensity beta2 = TasteDensity::endogenous_beta(2.0);
    // equal wages give Beta(2,2); its density at 1/2 is 6 * 1/4
    CHECK(beta2.pdf(0.5, {1, 1}) == doctest::Approx(1.5).epsilon(1e-14));

    for (double theta : {0.0, 0.1, 0.37, 0.5, 0.92, 1.0})
        CHECK(beta2.pdf(theta, {2, 1}) ==
              doctest::Approx(beta2.pdf(1.0 - theta, {1, 2})).epsilon(1e-14));

    CHECK_THROWS_AS(uni.pdf(1.2, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(beta2.pdf(-0.2, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(beta2.pdf(0.5, {-1, 1}), std::invalid_argument);
}

TEST_CASE("pdf handles the zero-wage pair") {
    const TasteDensity beta4 = TasteDensity::endogenous_beta(4.0);
    const auto [alpha, beta] = beta4.beta_parameters({0, 0});
    CHECK(alpha == doctest::Approx(3.0));
    CHECK(beta == doctest::Approx(3.0));
    CHECK(beta4.pdf(0.5, {0, 0}) > 0.0);
}

TEST_CASE("cdf worked values") {
    const TasteDensity uni = TasteDensity::uniform();
    CHECK(uni.cdf(0.25, {3, 4}) == doctest::Approx(0.25).epsilon(1e-14));

    const TasteDensity beta2 = TasteDensity::endogenous_beta(2.0);
    CHECK(beta2.cdf(0.5, {1, 1}) == doctest::Approx(0.5).epsilon(1e-13));
    // w = (2,0) gives Beta(3,1) with cdf theta^3
    CHECK(beta2.cdf(0.5, {2, 0}) == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(beta2.cdf(0.0, {2, 1}) == 0.0);
    CHECK(beta2.cdf(1.0, {2, 1}) == 1.0);
}

TEST_CASE("pdf integrates to one: independent quadrature oracle") {
    testing::Rng rng(31);
    std::vector<TasteDensity> densities = {TasteDensity::uniform(),
                                           TasteDensity::endogenous_beta(0.5),
                                           TasteDensity::endogenous_beta(2.0),
                                           TasteDensity::endogenous_beta(5.0)};
    for (const auto& d : densities) {
        for (int i = 0; i < 6; ++i) {
            const WagePair w{rng.uniform(0, 10), rng.uniform(0, 10)};
            const double mass = testing::simpson_graded(
                [&](double t) { return d.pdf(t, w); }, 0.0, 1.0);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("cdf is nondecreasing in theta") {
    const TasteDensity beta3 = TasteDensity::endogenous_beta(3.0);
    testing::Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const WagePair w{rng.uniform(0, 10), rng.uniform(0, 10)};
        double prev = 0.0;
        for (int j = 0; j <= 100; ++j) {
            const double cur = beta3.cdf(j / 100.0, w);
            CHECK(cur >= prev - 1e-14);
            prev = cur;
        }
    }
}

TEST_CASE("assumption validation passes for the shipped families") {
    std::vector<WagePair> grid = {{0, 0}, {1, 1}, {2, 1}, {1, 2}, {5, 0.5}, {0.5, 5}, {10, 10}};

    const auto uniform_report = validate_assumption2(TasteDensity::uniform(), grid, 101);
    CHECK(uniform_report.all_passed());
    CHECK(uniform_report.worst_violation() == doctest::Approx(0.0));

    for (double kappa : {0.5, 2.0, 5.0}) {
        const auto report = validate_assumption2(TasteDensity::endogenous_beta(kappa), grid, 101);
        CHECK(report.all_passed());
        CHECK(report.worst_violation() <= 1e-12);  // identity holds by construction
    }

    // mass shifts strictly to the right of 1/2 when w_a > w_b
    const TasteDensity beta5 = TasteDensity::endogenous_beta(5.0);
    CHECK(1.0 - beta5.cdf(0.5, {2, 1}) > 0.5);
}

TEST_CASE("assumption validation flags a broken density") {
    // wage-independent tilted density f(theta) = 2 theta
    const PdfFn broken_pdf = [](double theta, const WagePair&) { return 2.0 * theta; };
    const CdfFn broken_cdf = [](double theta, const WagePair&) { return theta * theta; };
    std::vector<WagePair> grid = {{2, 1}};
    const auto report = validate_assumption2(broken_pdf, broken_cdf, grid, 51);
    CHECK_FALSE(report.all_passed());
    REQUIRE(report.items.size() == 1);
    CHECK_FALSE(report.items[0].checks[0].passed);  // relabeling identity fails
    CHECK(report.items[0].checks[0].worst_violation > 0.5);
}

TEST_CASE("fosd shift validation") {
    std::vector<std::pair<WagePair, WagePair>> pairs = {
        {{2, 1}, {1, 2}}, {{5, 0}, {0, 5}}, {{3, 3}, {3, 3}}, {{7, 2}, {6.5, 2.5}}};

    const auto uniform_report = validate_fosd_shift(TasteDensity::uniform(), pairs, 1001);
    CHECK(uniform_report.all_passed());
    CHECK(uniform_report.worst_violation() == 0.0);

    for (double kappa : {1.0, 2.0, 5.0}) {
        const auto report = validate_fosd_shift(TasteDensity::endogenous_beta(kappa), pairs, 1001);
        CHECK(report.all_passed());
    }

    std::vector<std::pair<WagePair, WagePair>> wrong_order = {{{1, 2}, {2, 1}}};
    CHECK_THROWS_AS(validate_fosd_shift(TasteDensity::endogenous_beta(2.0), wrong_order, 11),
                    std::invalid_argument);
}

TEST_CASE("stronger endogeneity pushes more mass toward the higher wage") {
    const WagePair w{3, 1};
    double prev = 0.5;
    for (double kappa : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const TasteDensity d = TasteDensity::endogenous_beta(kappa);
        const double above_half = 1.0 - d.cdf(0.5, w);
        CHECK(above_half > prev);
        prev = above_half;
    }
}
