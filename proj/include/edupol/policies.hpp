#pragma once

#include <optional>
#include <vector>

#include "edupol/core_types.hpp"
#include "edupol/freedom.hpp"
#include "edupol/population.hpp"
#include "edupol/taste_density.hpp"

namespace edupol {

enum class PolicyStructure { OneSchoolA, OneSchoolB, TwoSchool };
enum class PolicyObjective { ResourceEq, UtilityEq };

const char* to_string(PolicyStructure s);
const char* to_string(PolicyObjective o);

struct PolicySpec {
    PolicyStructure structure = PolicyStructure::TwoSchool;
    PolicyObjective objective = PolicyObjective::ResourceEq;
    double budget = 0.0;
};

struct AgentAllocation {
    std::size_t agent = 0;
    std::optional<Sector> school;  // empty when the agent receives no education
    double expenditure = 0.0;
    WagePair wages;
};

/// Per-agent outcome of a solved policy. `level` is the equalized wage (w*
/// or w~) under resource equalization and the common freedom level k* under
/// expected-utility equalization.
struct Allocation {
    PolicyStructure structure = PolicyStructure::TwoSchool;
    PolicyObjective objective = PolicyObjective::ResourceEq;
    std::vector<AgentAllocation> agents;
    double level = 0.0;
    double total_cost = 0.0;
};

/// Educates every agent in `sector` to the common wage w* that exhausts the
/// budget. Budgets below the cost of leveling everyone up to the highest
/// talent in that sector are rejected (the error carries that threshold).
Allocation solve_resource_one_school(const Population& pop, Sector sector, double budget,
                                     double tol = 1e-9);

/// Educates every agent in their best-talent sector (ties to a) to the
/// common wage that exhausts the budget.
Allocation solve_resource_two_school(const Population& pop, double budget, double tol = 1e-9);

/// Educates every agent in `sector` just enough to reach the common freedom
/// level k* whose total cost exhausts the budget; agents already at or above
/// the level receive nothing.
Allocation solve_utility_one_school(const Population& pop, Sector sector, double budget,
                                    const TasteDensity& d, const QuadratureSpec& q = {},
                                    double tol = 1e-8);

/// Same, with each agent educated in their best-talent sector (ties to a).
Allocation solve_utility_two_school(const Population& pop, double budget, const TasteDensity& d,
                                    const QuadratureSpec& q = {}, double tol = 1e-8);

/// Mass-weighted total expenditure of an allocation over its population.
double policy_cost(const Allocation& alloc, const Population& pop);

}  // namespace edupol
