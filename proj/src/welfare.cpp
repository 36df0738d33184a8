#include "edupol/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace edupol {

WelfareReport evaluate_welfare(const Population& pop, const Allocation& alloc,
                               const TasteDensity& d, const QuadratureSpec& q,
                               std::span<const double> weights) {
    if (alloc.agents.size() != pop.size())
        throw std::invalid_argument("allocation and population sizes differ");
    if (!weights.empty()) {
        if (weights.size() != pop.size())
            throw std::invalid_argument("welfare weights must have one entry per agent");
        bool any_positive = false;
        for (double lambda : weights) {
            if (lambda < 0.0) throw std::invalid_argument("welfare weights must be nonnegative");
            if (lambda > 0.0) any_positive = true;
        }
        if (!any_positive) throw std::invalid_argument("welfare weights must not all be zero");
    }

    WelfareReport report;
    report.policy = std::string(to_string(alloc.structure)) + "/" + to_string(alloc.objective);
    report.level = alloc.level;
    report.total_cost = alloc.total_cost;
    report.values.reserve(alloc.agents.size());

    double maximin = std::numeric_limits<double>::infinity();
    double weighted = 0.0;
    for (std::size_t i = 0; i < alloc.agents.size(); ++i) {
        const double v = freedom_value(alloc.agents[i].wages, d, q);
        report.values.push_back(v);
        maximin = std::min(maximin, v);
        if (!weights.empty()) weighted += weights[i] * pop[i].weight * v;
    }
    report.maximin = maximin;
    if (!weights.empty()) report.weighted = weighted;
    return report;
}

StructureOutcome solve_and_evaluate(const Population& pop, PolicyStructure structure,
                                    PolicyObjective objective, double budget, const TasteDensity& d,
                                    const QuadratureSpec& q, std::span<const double> weights) {
    StructureOutcome outcome;
    outcome.structure = structure;
    try {
        Allocation alloc;
        if (objective == PolicyObjective::ResourceEq) {
            alloc = structure == PolicyStructure::TwoSchool
                        ? solve_resource_two_school(pop, budget)
                        : solve_resource_one_school(
                              pop, structure == PolicyStructure::OneSchoolA ? Sector::A : Sector::B,
                              budget);
        } else {
            alloc = structure == PolicyStructure::TwoSchool
                        ? solve_utility_two_school(pop, budget, d, q)
                        : solve_utility_one_school(
                              pop, structure == PolicyStructure::OneSchoolA ? Sector::A : Sector::B,
                              budget, d, q);
        }
        outcome.welfare = evaluate_welfare(pop, alloc, d, q, weights);
        outcome.allocation = std::move(alloc);
        outcome.feasible = true;
    } catch (const InfeasibleBudgetError& e) {
        outcome.failure = StructureOutcome::Failure::InfeasibleBudget;
        outcome.error = e.what();
    } catch (const NoConvergenceError& e) {
        outcome.failure = StructureOutcome::Failure::SolverFailure;
        outcome.error = e.what();
    } catch (const InfeasibleLevelError& e) {
        outcome.failure = StructureOutcome::Failure::SolverFailure;
        outcome.error = e.what();
    }
    return outcome;
}

PairVerdict compare_welfare(const WelfareReport& two_school, const WelfareReport& one_school,
                            bool with_weighted) {
    PairVerdict verdict;
    verdict.maximin_margin = two_school.maximin - one_school.maximin;
    verdict.maximin_tie = std::fabs(verdict.maximin_margin) < kDominanceTieTol;
    verdict.maximin_dominates = verdict.maximin_margin >= -kDominanceTieTol;
    if (with_weighted && two_school.weighted && one_school.weighted) {
        verdict.weighted_margin = *two_school.weighted - *one_school.weighted;
        verdict.weighted_dominates = *verdict.weighted_margin >= -kDominanceTieTol;
    }
    return verdict;
}

ComparisonVerdict compare_structures(const Population& pop, PolicyObjective objective,
                                     double budget, const TasteDensity& d,
                                     const QuadratureSpec& q, std::span<const double> weights) {
    ComparisonVerdict verdict;
    verdict.one_school_a =
        solve_and_evaluate(pop, PolicyStructure::OneSchoolA, objective, budget, d, q, weights);
    verdict.one_school_b =
        solve_and_evaluate(pop, PolicyStructure::OneSchoolB, objective, budget, d, q, weights);
    verdict.two_school =
        solve_and_evaluate(pop, PolicyStructure::TwoSchool, objective, budget, d, q, weights);

    const bool with_weighted = objective == PolicyObjective::UtilityEq && !weights.empty();
    if (verdict.two_school.feasible && verdict.one_school_a.feasible)
        verdict.two_vs_a = compare_welfare(*verdict.two_school.welfare,
                                           *verdict.one_school_a.welfare, with_weighted);
    if (verdict.two_school.feasible && verdict.one_school_b.feasible)
        verdict.two_vs_b = compare_welfare(*verdict.two_school.welfare,
                                           *verdict.one_school_b.welfare, with_weighted);
    return verdict;
}

bool EWEPReport::all_satisfied() const {
    return std::all_of(samples.begin(), samples.end(),
                       [](const EwepSample& s) { return s.satisfied; });
}

EWEPReport check_ewep(const Population& pop, const Allocation& alloc,
                      std::span<const double> theta_samples) {
    if (alloc.agents.size() != pop.size())
        throw std::invalid_argument("allocation and population sizes differ");
    if (theta_samples.empty())
        throw std::invalid_argument("check_ewep needs at least one theta sample");

    EWEPReport report;
    report.samples.reserve(theta_samples.size());
    for (double theta : theta_samples) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& agent : alloc.agents) {
            const double u = indirect_utility(agent.wages, theta);
            lo = std::min(lo, u);
            hi = std::max(hi, u);
        }
        const double gap = hi - lo;
        report.samples.push_back({theta, gap, gap <= kEwepTol});
    }
    return report;
}

}  // namespace edupol
