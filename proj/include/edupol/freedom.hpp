#pragma once

#include <algorithm>
#include <cmath>

#include "edupol/core_types.hpp"
#include "edupol/taste_density.hpp"

namespace edupol {

/// Realized payoff once the taste parameter is known:
/// max{theta * w_a, (1 - theta) * w_b}.
double indirect_utility(const WagePair& w, double theta);

/// Occupation chosen at a realized taste parameter. Ties go to sector a.
Sector choose_occupation(const WagePair& w, double theta);

/// Freedom evaluation function: the expected maximized indirect utility
/// over the taste parameter,
///     V(w) = integral over [0,1] of max{theta w_a, (1-theta) w_b} f(theta; w).
///
/// The integrand has a kink where the two branches cross; with
/// split_at_kink the domain is split there and each smooth piece is
/// integrated by Gauss-Legendre panels. For the endogenous Beta family the
/// panels are graded geometrically toward the endpoints of [0,1], where the
/// Beta kernel has fractional-power behavior that a single fixed-order rule
/// cannot resolve to tolerance.
double freedom_value(const WagePair& w, const TasteDensity& d, const QuadratureSpec& q = {});

/// Exact V for the uniform taste density. With t = w_b / (w_a + w_b):
///     V = w_b (t - t^2/2) + w_a (1 - t^2) / 2,
/// and 0 at w = (0,0). Serves as the quadrature oracle for that family.
double freedom_value_closed_form_uniform(const WagePair& w);

/// Exact V for both shipped families via incomplete beta identities:
///     V = w_b * (beta/(alpha+beta)) * I_t(alpha, beta+1)
///       + w_a * (alpha/(alpha+beta)) * (1 - I_t(alpha+1, beta)).
/// Used as the fast evaluator inside the policy solvers and certificates;
/// cross-checked against the quadrature route in the test suite.
double freedom_value_closed_form(const WagePair& w, const TasteDensity& d);

/// Solves V(x, fixed_wage) = k for x along one wage coordinate (direction a:
/// x is the sector-a wage; direction b mirrored). Bisection on a bracket
/// grown geometrically from [0, max(1, 2k)].
///
/// Throws InfeasibleLevelError when k is below the zero-investment value
/// V at x = 0, NoConvergenceError when the bracket would exceed 2^60.
double invert_level_curve(double k, double fixed_wage, Sector direction, const TasteDensity& d,
                          const QuadratureSpec& q = {}, double tol = 1e-10);

namespace detail {

/// Level inversion against an arbitrary evaluator value_at(x); shared by the
/// public operation (quadrature evaluator, bracket start 0) and the policy
/// solvers (closed-form evaluator, bracket start at the agent's talent so a
/// valid lower bracket is guaranteed even where the endogenous family makes
/// the evaluator dip below its zero-investment value).
template <class F>
double invert_level_on(F&& value_at, double k, double tol, double lo = 0.0, int max_iter = 200) {
    if (!(k > 0.0)) throw std::invalid_argument("level k must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    const double at_lo = value_at(lo);
    if (k < at_lo - tol)
        throw InfeasibleLevelError("level " + std::to_string(k) +
                                   " is below the zero-investment value " + std::to_string(at_lo));
    if (k <= at_lo) return lo;

    double hi = std::max({1.0, 2.0 * k, lo + 1.0});
    int growth = 0;
    while (value_at(hi) < k) {
        hi = lo + 2.0 * (hi - lo);
        if (++growth > 60)
            throw NoConvergenceError("level bracket exceeded 2^60 while solving for " +
                                     std::to_string(k));
    }

    double mid = hi;
    for (int i = 0; i < max_iter; ++i) {
        mid = 0.5 * (lo + hi);
        const double v = value_at(mid);
        if (std::fabs(v - k) <= tol) return mid;
        if (v < k)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

}  // namespace edupol
