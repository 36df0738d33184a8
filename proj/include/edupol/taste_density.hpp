#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edupol/core_types.hpp"

namespace edupol {

enum class DensityFamily { Uniform, EndogenousBeta };

/// Family of taste densities f(theta; w_a, w_b) on [0,1].
///
/// Uniform ignores wages. EndogenousBeta is a Beta density whose parameters
/// shift with the wage shares,
///     alpha = 1 + kappa * w_a / (w_a + w_b),
///     beta  = 1 + kappa * w_b / (w_a + w_b),
/// and alpha = beta = 1 + kappa/2 when both wages are zero. kappa = 0
/// recovers the uniform density.
struct TasteDensity {
    DensityFamily family = DensityFamily::Uniform;
    double kappa = 0.0;

    static TasteDensity uniform() { return {DensityFamily::Uniform, 0.0}; }
    static TasteDensity endogenous_beta(double kappa);

    /// Beta parameters (alpha, beta) induced by a wage pair.
    std::pair<double, double> beta_parameters(const WagePair& w) const;

    double pdf(double theta, const WagePair& w) const;
    double cdf(double theta, const WagePair& w) const;

    /// True when the density does not actually depend on theta (flat).
    bool is_flat() const { return family == DensityFamily::Uniform || kappa == 0.0; }
};

/// Outcome of one named check inside a validation report.
struct ValidationCheck {
    std::string name;
    bool applicable = true;
    bool passed = true;
    double worst_violation = 0.0;  // max observed excess over the tolerance baseline
};

struct ValidationItem {
    WagePair w;
    WagePair w_alt{};  // second pair for pairwise validators
    std::vector<ValidationCheck> checks;
};

struct ValidationReport {
    std::vector<ValidationItem> items;

    bool all_passed() const;
    double worst_violation() const;
};

/// Checks the three structural conditions on the density over a wage grid:
/// (i) relabeling identity f(theta; wa, wb) = f(1-theta; wb, wa);
/// (ii) symmetry about 1/2 at equal wages;
/// (iii) at least as much mass on the side of 1/2 matching the higher wage.
ValidationReport validate_assumption2(const TasteDensity& d, std::span<const WagePair> grid,
                                      int theta_nodes);

/// Same checks against arbitrary pdf/cdf callables; lets tests validate
/// deliberately broken densities.
using PdfFn = std::function<double(double theta, const WagePair&)>;
using CdfFn = std::function<double(double theta, const WagePair&)>;
ValidationReport validate_assumption2(const PdfFn& pdf, const CdfFn& cdf,
                                      std::span<const WagePair> grid, int theta_nodes);

/// Checks the first-order stochastic dominance shift: for each (w, w') pair
/// with w_a >= w'_a and w_b <= w'_b, F(c; w) <= F(c; w') at c_nodes equally
/// spaced interior cut points.
ValidationReport validate_fosd_shift(const TasteDensity& d,
                                     std::span<const std::pair<WagePair, WagePair>> pairs,
                                     int c_nodes);

}  // namespace edupol
