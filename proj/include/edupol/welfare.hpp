#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edupol/policies.hpp"

namespace edupol {

/// Margins below this are reported as ties rather than violations; nested
/// solver tolerances stack to roughly this scale.
inline constexpr double kDominanceTieTol = 1e-7;

/// Ex-post utility gaps above this break Equal Welfare for Equal Preference.
inline constexpr double kEwepTol = 1e-9;

struct WelfareReport {
    std::string policy;
    std::vector<double> values;  // freedom value per agent, allocation order
    double maximin = 0.0;
    std::optional<double> weighted;
    double level = 0.0;
    double total_cost = 0.0;
};

WelfareReport evaluate_welfare(const Population& pop, const Allocation& alloc,
                               const TasteDensity& d, const QuadratureSpec& q = {},
                               std::span<const double> weights = {});

struct StructureOutcome {
    enum class Failure { None, InfeasibleBudget, SolverFailure };

    PolicyStructure structure = PolicyStructure::TwoSchool;
    bool feasible = false;
    Failure failure = Failure::None;
    std::string error;
    std::optional<Allocation> allocation;
    std::optional<WelfareReport> welfare;
};

struct PairVerdict {
    double maximin_margin = 0.0;
    bool maximin_dominates = false;
    bool maximin_tie = false;
    std::optional<double> weighted_margin;
    std::optional<bool> weighted_dominates;
};

struct ComparisonVerdict {
    StructureOutcome one_school_a;
    StructureOutcome one_school_b;
    StructureOutcome two_school;
    std::optional<PairVerdict> two_vs_a;  // present when both structures solved
    std::optional<PairVerdict> two_vs_b;
};

/// Solves one structure under the given objective and evaluates its welfare;
/// budget and solver failures are captured in the outcome instead of thrown.
StructureOutcome solve_and_evaluate(const Population& pop, PolicyStructure structure,
                                    PolicyObjective objective, double budget,
                                    const TasteDensity& d, const QuadratureSpec& q = {},
                                    std::span<const double> weights = {});

/// Dominance verdict of the two-school report against a one-school report.
PairVerdict compare_welfare(const WelfareReport& two_school, const WelfareReport& one_school,
                            bool with_weighted = false);

/// Solves all three structures under one objective and budget, evaluates
/// welfare, and reports whether the two-school policy dominates each
/// one-school policy. Infeasible structures are reported, not compared.
/// Weighted comparisons are emitted for the utility-equalization objective
/// when weights are supplied.
ComparisonVerdict compare_structures(const Population& pop, PolicyObjective objective,
                                     double budget, const TasteDensity& d,
                                     const QuadratureSpec& q = {},
                                     std::span<const double> weights = {});

struct EwepSample {
    double theta = 0.0;
    double max_gap = 0.0;
    bool satisfied = true;
};

struct EWEPReport {
    std::vector<EwepSample> samples;
    bool all_satisfied() const;
};

/// For each common taste draw, the spread of realized indirect utilities
/// across agents; zero spread means agents with that taste fare equally.
EWEPReport check_ewep(const Population& pop, const Allocation& alloc,
                      std::span<const double> theta_samples);

}  // namespace edupol
