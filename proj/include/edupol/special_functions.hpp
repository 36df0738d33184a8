#pragma once

namespace edupol::math {

/// ln B(a,b) for a, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(a,b) for a, b > 0 and x in [0,1].
/// Continued-fraction evaluation, absolute accuracy around 1e-15 for the
/// parameter ranges used by the taste densities (a, b in [1, ~12]).
double regularized_incomplete_beta(double a, double b, double x);

/// Density of the Beta(a,b) distribution at x in [0,1].
double beta_pdf(double a, double b, double x);

}  // namespace edupol::math
