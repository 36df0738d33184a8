#pragma once

#include <vector>

namespace edupol::math {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Returns the cached n-point Gauss-Legendre rule. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

/// Integrates f over [lo, hi] with a single n-point Gauss-Legendre panel.
template <class F>
double integrate_panel(const GaussLegendreRule& rule, double lo, double hi, F&& f) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

}  // namespace edupol::math
