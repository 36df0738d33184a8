#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edupol/policies.hpp"
#include "test_support.hpp"

using namespace edupol;

namespace {
const TasteDensity kUniform = TasteDensity::uniform();
}

TEST_CASE("resource one-school worked examples") {
    SUBCASE("simplex population reproduces the unit level") {
        const Population pop = simplex_population(1001);
        const Allocation alloc = solve_resource_one_school(pop, Sector::A, 0.5);
        CHECK(std::fabs(alloc.level - 1.0) <= 1e-6);
        CHECK(std::fabs(alloc.total_cost - 0.5) <= 1e-8);
        for (const auto& a : alloc.agents) {
            REQUIRE(a.school == Sector::A);
            CHECK(a.wages.a == doctest::Approx(alloc.level).epsilon(1e-9));
        }
    }
    SUBCASE("two agents") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        const Allocation alloc = solve_resource_one_school(pop, Sector::A, 1.0);
        CHECK(std::fabs(alloc.level - 1.0) <= 1e-8);
        CHECK(alloc.agents[0].expenditure == doctest::Approx(0.0));
        CHECK(alloc.agents[1].expenditure == doctest::Approx(1.0));
        CHECK(alloc.agents[0].wages.b == 0.0);  // untaught wage stays at talent
        CHECK(alloc.agents[1].wages.b == 1.0);
    }
    SUBCASE("infeasible budget carries the threshold") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        try {
            solve_resource_one_school(pop, Sector::A, 0.5);
            FAIL("expected InfeasibleBudgetError");
        } catch (const InfeasibleBudgetError& e) {
            CHECK(e.threshold == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("resource two-school worked examples") {
    SUBCASE("simplex population reproduces the 1.25 level") {
        const Population pop = simplex_population(1001);
        const Allocation alloc = solve_resource_two_school(pop, 0.5);
        CHECK(std::fabs(alloc.level - 1.25) <= 1e-6);
    }
    SUBCASE("two agents end at mirrored wage pairs") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        const Allocation alloc = solve_resource_two_school(pop, 1.0);
        CHECK(std::fabs(alloc.level - 1.5) <= 1e-8);
        CHECK(alloc.agents[0].wages.a == doctest::Approx(1.5).epsilon(1e-8));
        CHECK(alloc.agents[0].wages.b == 0.0);
        CHECK(alloc.agents[1].wages.a == 0.0);
        CHECK(alloc.agents[1].wages.b == doctest::Approx(1.5).epsilon(1e-8));
    }
    SUBCASE("talent tie goes to school a") {
        const Population pop({{0.5, 0.5, 1}});
        const Allocation alloc = solve_resource_two_school(pop, 1.0);
        REQUIRE(alloc.agents[0].school == Sector::A);
        CHECK(alloc.agents[0].wages.a == doctest::Approx(1.5).epsilon(1e-9));
        CHECK(alloc.agents[0].wages.b == 0.5);
    }
}

TEST_CASE("utility one-school worked examples") {
    SUBCASE("two agents, budget 1.5") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        const Allocation alloc = solve_utility_one_school(pop, Sector::A, 1.5, kUniform);
        CHECK(std::fabs(alloc.level - 0.75) <= 1e-6);
        CHECK(std::fabs(alloc.agents[0].expenditure - 0.5) <= 1e-6);
        CHECK(std::fabs(alloc.agents[1].expenditure - 1.0) <= 1e-6);
        CHECK(alloc.agents[0].wages.a == doctest::Approx(1.5).epsilon(1e-6));
        CHECK(alloc.agents[1].wages.a == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("vanishing budget recovers the status quo") {
        const Population pop({{1, 1, 1}});
        const Allocation alloc = solve_utility_one_school(pop, Sector::A, 1e-9, kUniform);
        CHECK(alloc.level == doctest::Approx(0.75).epsilon(1e-6));
        CHECK(alloc.agents[0].expenditure <= 1e-6);
    }
    SUBCASE("boundary agents cost nothing, so a small budget stays feasible") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        const Allocation alloc = solve_utility_one_school(pop, Sector::A, 0.1, kUniform);
        CHECK(alloc.level > 0.5);
        CHECK(std::fabs(alloc.total_cost - 0.1) <= 1e-7);
    }
}

TEST_CASE("utility two-school worked examples") {
    SUBCASE("two agents, budget 1") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        const Allocation alloc = solve_utility_two_school(pop, 1.0, kUniform);
        CHECK(std::fabs(alloc.level - 0.75) <= 1e-6);
        CHECK(std::fabs(alloc.agents[0].expenditure - 0.5) <= 1e-6);
        CHECK(std::fabs(alloc.agents[1].expenditure - 0.5) <= 1e-6);
        CHECK(alloc.agents[0].wages.a == doctest::Approx(1.5).epsilon(1e-6));
        CHECK(alloc.agents[1].wages.b == doctest::Approx(1.5).epsilon(1e-6));
    }
    SUBCASE("one school reaches the same level only with half as much again") {
        const Population pop({{1, 0, 1}, {0, 1, 1}});
        const Allocation one = solve_utility_one_school(pop, Sector::A, 1.5, kUniform);
        const Allocation two = solve_utility_two_school(pop, 1.0, kUniform);
        CHECK(std::fabs(one.level - two.level) <= 1e-6);
        CHECK(one.total_cost > two.total_cost + 0.49);
    }
    SUBCASE("single agent exhausts the budget in the best sector") {
        const Population pop({{2, 1, 1}});
        const Allocation alloc = solve_utility_two_school(pop, 0.5, kUniform);
        REQUIRE(alloc.agents[0].school == Sector::A);
        CHECK(alloc.agents[0].wages.a == doctest::Approx(2.5).epsilon(1e-7));
        CHECK(alloc.agents[0].wages.b == 1.0);
        CHECK(alloc.level ==
              doctest::Approx(freedom_value_closed_form_uniform({2.5, 1.0})).epsilon(1e-6));
    }
}

TEST_CASE("policy cost") {
    const Population pop({{1, 0, 1}, {0, 1, 1}});
    SUBCASE("zero expenditure") {
        Allocation alloc;
        alloc.agents = {{0, std::nullopt, 0.0, {1, 0}}, {1, std::nullopt, 0.0, {0, 1}}};
        CHECK(policy_cost(alloc, pop) == 0.0);
    }
    SUBCASE("weighted sum") {
        Allocation alloc;
        alloc.agents = {{0, Sector::A, 0.5, {1.5, 0}}, {1, Sector::A, 1.0, {1, 1}}};
        CHECK(policy_cost(alloc, pop) == doctest::Approx(1.5));
    }
    SUBCASE("matches the stored total within 1e-12") {
        const Population simplex = simplex_population(1001);
        const Allocation alloc = solve_resource_two_school(simplex, 0.5);
        CHECK(std::fabs(policy_cost(alloc, simplex) - alloc.total_cost) <= 1e-12);
        CHECK(std::fabs(alloc.total_cost - 0.5) <= 1e-9);
    }
    SUBCASE("mismatched population") {
        Allocation alloc;
        alloc.agents = {{0, Sector::A, 0.5, {1.5, 0}}};
        CHECK_THROWS_AS(policy_cost(alloc, pop), std::invalid_argument);
    }
}

TEST_CASE("two-school equalizes wages at least as high as either one-school policy") {
    testing::Rng rng(51);
    for (int instance = 0; instance < 100; ++instance) {
        const Population pop = testing::random_pluralistic_population(rng, 60);
        const double budget = testing::feasible_budget(pop, PolicyObjective::ResourceEq,
                                                       kUniform, rng);
        const double two = solve_resource_two_school(pop, budget).level;
        const double one_a = solve_resource_one_school(pop, Sector::A, budget).level;
        const double one_b = solve_resource_one_school(pop, Sector::B, budget).level;
        CHECK(two >= one_a - 1e-9);
        CHECK(two >= one_b - 1e-9);
    }
}

TEST_CASE("budget exhaustion across solvers and densities") {
    testing::Rng rng(52);
    const TasteDensity beta2 = TasteDensity::endogenous_beta(2.0);
    for (int instance = 0; instance < 10; ++instance) {
        const Population pop = testing::random_pluralistic_population(rng, 40);
        for (PolicyObjective objective : {PolicyObjective::ResourceEq, PolicyObjective::UtilityEq}) {
            const double budget = testing::feasible_budget(pop, objective, beta2, rng);
            Allocation alloc;
            if (objective == PolicyObjective::ResourceEq)
                alloc = solve_resource_two_school(pop, budget);
            else
                alloc = solve_utility_two_school(pop, budget, beta2);
            CHECK(std::fabs(alloc.total_cost - budget) <= 1e-7 * (1.0 + budget));
            for (const auto& a : alloc.agents) CHECK(a.expenditure >= 0.0);
        }
    }
}

TEST_CASE("utility equalization puts every educated agent on the common level curve") {
    testing::Rng rng(53);
    const double tol = 1e-8;
    for (const TasteDensity& d : {kUniform, TasteDensity::endogenous_beta(2.0)}) {
        const Population pop = testing::random_pluralistic_population(rng, 30);
        const double budget = testing::feasible_budget(pop, PolicyObjective::UtilityEq, d, rng);
        const Allocation alloc = solve_utility_two_school(pop, budget, d, {}, tol);
        for (std::size_t i = 0; i < alloc.agents.size(); ++i) {
            const auto& a = alloc.agents[i];
            const double v = freedom_value(a.wages, d);
            if (a.expenditure > 0.0)
                CHECK(std::fabs(v - alloc.level) <= 2e-8);
            else
                CHECK(v >= alloc.level - 2e-8);
        }
    }
}

TEST_CASE("outer objectives are monotone, so bisection brackets stay valid") {
    const Population pop({{0.8, 0.1, 1}, {0.2, 0.9, 2}, {0.5, 0.45, 0.5}});

    SUBCASE("resource cost grows strictly with the target level") {
        double prev = -1.0;
        for (double level = 1.0; level <= 3.0; level += 0.25) {
            double cost = 0.0;
            for (const auto& agent : pop.agents())
                cost += agent.weight * (level - agent.best_talent());
            CHECK(cost > prev);
            prev = cost;
        }
    }

    SUBCASE("utility-equalization cost is nondecreasing in the level") {
        const TasteDensity d = TasteDensity::endogenous_beta(1.0);
        double prev_cost = -1.0;
        for (double extra = 0.0; extra <= 2.0; extra += 0.1) {
            // reconstruct cost(k) through the public pieces: lift each agent
            double k_lo = 0.0;
            for (const auto& agent : pop.agents())
                k_lo = std::max(k_lo, freedom_value_closed_form({agent.t_a, agent.t_b}, d));
            const double k = k_lo + extra;
            double cost = 0.0;
            for (const auto& agent : pop.agents()) {
                const Sector school = agent.best_sector();
                const double fixed = school == Sector::A ? agent.t_b : agent.t_a;
                const double base = agent.talent(school);
                const double v0 = freedom_value_closed_form({agent.t_a, agent.t_b}, d);
                if (v0 >= k) continue;
                const double x = invert_level_curve(k, fixed, school, d, {}, 1e-10);
                cost += agent.weight * std::max(0.0, x - base);
            }
            CHECK(cost >= prev_cost - 1e-9);
            prev_cost = cost;
        }
    }
}
