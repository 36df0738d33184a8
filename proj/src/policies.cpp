#include "edupol/policies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace edupol {

const char* to_string(PolicyStructure s) {
    switch (s) {
        case PolicyStructure::OneSchoolA: return "one_school_a";
        case PolicyStructure::OneSchoolB: return "one_school_b";
        case PolicyStructure::TwoSchool: return "two_school";
    }
    return "?";
}

const char* to_string(PolicyObjective o) {
    return o == PolicyObjective::ResourceEq ? "resource_eq" : "utility_eq";
}

namespace {

constexpr int kMaxBisect = 200;

void check_budget_tol(double budget, double tol) {
    if (!(budget > 0.0)) throw std::invalid_argument("budget must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

WagePair achieved_wages(const TalentProfile& agent, Sector school, double educated_wage) {
    return school == Sector::A ? WagePair{educated_wage, agent.t_b}
                               : WagePair{agent.t_a, educated_wage};
}

// Budget-exhausting wage level for a fixed school assignment. cost(w) =
// sum_i weight_i (w - base_i) is linear and increasing on w >= max base, so
// bisection over [max base, max base + budget/mass] always brackets.
Allocation solve_resource(const Population& pop, std::function<Sector(const TalentProfile&)> school_of,
                          PolicyStructure structure, double budget, double tol) {
    check_budget_tol(budget, tol);

    double max_base = 0.0;
    for (const auto& agent : pop.agents())
        max_base = std::max(max_base, agent.talent(school_of(agent)));

    const auto cost_at = [&](double level) {
        double cost = 0.0;
        for (const auto& agent : pop.agents())
            cost += agent.weight * (level - agent.talent(school_of(agent)));
        return cost;
    };

    const double budget_tol = tol * (1.0 + budget);
    const double threshold = cost_at(max_base);
    if (budget < threshold - budget_tol)
        throw InfeasibleBudgetError("budget " + std::to_string(budget) +
                                        " cannot level wages up to talent " +
                                        std::to_string(max_base) + "; need at least " +
                                        std::to_string(threshold),
                                    threshold);

    double lo = max_base;
    double hi = max_base + budget / pop.total_mass() + 1.0;
    double level = lo;
    if (cost_at(lo) < budget - budget_tol) {
        for (int i = 0; i < kMaxBisect; ++i) {
            level = 0.5 * (lo + hi);
            const double c = cost_at(level);
            if (std::fabs(c - budget) <= budget_tol) break;
            if (c < budget)
                lo = level;
            else
                hi = level;
        }
    }

    Allocation alloc;
    alloc.structure = structure;
    alloc.objective = PolicyObjective::ResourceEq;
    alloc.level = level;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const auto& agent = pop[i];
        const Sector school = school_of(agent);
        const double e = std::max(0.0, level - agent.talent(school));
        alloc.agents.push_back({i, school, e, achieved_wages(agent, school, agent.talent(school) + e)});
        alloc.total_cost += agent.weight * e;
    }
    return alloc;
}

// Budget-exhausting freedom level for a fixed school assignment. For each
// candidate level k, an agent below it is lifted along the educated
// coordinate to the level curve; cost(k) is continuous and nondecreasing.
Allocation solve_utility(const Population& pop, std::function<Sector(const TalentProfile&)> school_of,
                         PolicyStructure structure, double budget, const TasteDensity& d,
                         double outer_tol) {
    check_budget_tol(budget, outer_tol);
    const double inner_tol = std::min(1e-10, outer_tol / 100.0);

    struct AgentPlan {
        Sector school;
        double base;       // talent in the educated sector
        double fixed;      // wage kept at the untaught talent
        double status_quo; // V at the unchanged talents
    };
    std::vector<AgentPlan> plans;
    plans.reserve(pop.size());
    double k_lo = 0.0;
    for (const auto& agent : pop.agents()) {
        const Sector school = school_of(agent);
        AgentPlan plan{school, agent.talent(school),
                       school == Sector::A ? agent.t_b : agent.t_a,
                       freedom_value_closed_form({agent.t_a, agent.t_b}, d)};
        k_lo = std::max(k_lo, plan.status_quo);
        plans.push_back(plan);
    }

    const auto educated_wage_at = [&](const AgentPlan& plan, double k) {
        if (plan.status_quo >= k) return plan.base;
        const auto value_at = [&](double x) {
            const WagePair w = plan.school == Sector::A ? WagePair{x, plan.fixed}
                                                        : WagePair{plan.fixed, x};
            return freedom_value_closed_form(w, d);
        };
        // Bracket from the agent's own talent: V there is the status quo,
        // strictly below k, so the bracket is valid for both families.
        return detail::invert_level_on(value_at, k, inner_tol, plan.base);
    };

    const auto cost_at = [&](double k) {
        double cost = 0.0;
        for (std::size_t i = 0; i < pop.size(); ++i)
            cost += pop[i].weight * (educated_wage_at(plans[i], k) - plans[i].base);
        return cost;
    };

    const double budget_tol = outer_tol * (1.0 + budget);
    if (k_lo <= 0.0) k_lo = 0.0;  // population of all-zero talents
    const double threshold = k_lo > 0.0 ? cost_at(k_lo) : 0.0;
    if (budget < threshold - budget_tol)
        throw InfeasibleBudgetError("budget " + std::to_string(budget) +
                                        " cannot lift every agent to the status-quo maximum level " +
                                        std::to_string(k_lo) + "; need at least " +
                                        std::to_string(threshold),
                                    threshold);

    double lo = k_lo;
    double hi = k_lo + std::max(1.0, k_lo);
    int growth = 0;
    while (cost_at(hi) < budget) {
        hi = k_lo + 2.0 * (hi - k_lo);
        if (++growth > 60)
            throw NoConvergenceError("freedom level bracket exceeded 2^60 growing toward budget " +
                                     std::to_string(budget));
    }

    double level = hi;
    if (threshold >= budget - budget_tol && k_lo > 0.0) {
        level = k_lo;
    } else {
        for (int i = 0; i < kMaxBisect; ++i) {
            level = 0.5 * (lo + hi);
            const double c = cost_at(level);
            if (std::fabs(c - budget) <= budget_tol) break;
            if (c < budget)
                lo = level;
            else
                hi = level;
        }
    }

    Allocation alloc;
    alloc.structure = structure;
    alloc.objective = PolicyObjective::UtilityEq;
    alloc.level = level;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const auto& agent = pop[i];
        const auto& plan = plans[i];
        const double wage = educated_wage_at(plan, level);
        const double e = wage - plan.base;
        AgentAllocation out{i, std::nullopt, e, achieved_wages(agent, plan.school, wage)};
        if (e > 0.0) out.school = plan.school;
        alloc.agents.push_back(out);
        alloc.total_cost += agent.weight * e;
    }
    return alloc;
}

}  // namespace

Allocation solve_resource_one_school(const Population& pop, Sector sector, double budget,
                                     double tol) {
    return solve_resource(
        pop, [sector](const TalentProfile&) { return sector; },
        sector == Sector::A ? PolicyStructure::OneSchoolA : PolicyStructure::OneSchoolB, budget,
        tol);
}

Allocation solve_resource_two_school(const Population& pop, double budget, double tol) {
    return solve_resource(
        pop, [](const TalentProfile& agent) { return agent.best_sector(); },
        PolicyStructure::TwoSchool, budget, tol);
}

Allocation solve_utility_one_school(const Population& pop, Sector sector, double budget,
                                    const TasteDensity& d, const QuadratureSpec& q, double tol) {
    check_quadrature_spec(q);
    return solve_utility(
        pop, [sector](const TalentProfile&) { return sector; },
        sector == Sector::A ? PolicyStructure::OneSchoolA : PolicyStructure::OneSchoolB, budget, d,
        tol);
}

Allocation solve_utility_two_school(const Population& pop, double budget, const TasteDensity& d,
                                    const QuadratureSpec& q, double tol) {
    check_quadrature_spec(q);
    return solve_utility(
        pop, [](const TalentProfile& agent) { return agent.best_sector(); },
        PolicyStructure::TwoSchool, budget, d, tol);
}

double policy_cost(const Allocation& alloc, const Population& pop) {
    if (alloc.agents.size() != pop.size())
        throw std::invalid_argument("allocation and population sizes differ");
    double cost = 0.0;
    for (std::size_t i = 0; i < alloc.agents.size(); ++i)
        cost += pop[i].weight * alloc.agents[i].expenditure;
    return cost;
}

}  // namespace edupol
