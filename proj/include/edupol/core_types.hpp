#pragma once

#include <stdexcept>
#include <string>

namespace edupol {

/// The two occupations / schools of the economy.
enum class Sector { A, B };

inline const char* to_string(Sector s) { return s == Sector::A ? "a" : "b"; }

/// Post-education wages (w_a, w_b). Both components must be nonnegative.
struct WagePair {
    double a = 0.0;
    double b = 0.0;
};

inline void check_wage_pair(const WagePair& w) {
    if (!(w.a >= 0.0) || !(w.b >= 0.0))
        throw std::invalid_argument("WagePair components must be nonnegative, got (" +
                                    std::to_string(w.a) + ", " + std::to_string(w.b) + ")");
}

/// Settings for the freedom-value quadrature.
///
/// nodes_per_piece is the Gauss-Legendre order applied to each quadrature
/// panel; split_at_kink controls whether the integration domain is split at
/// the point where the two branches of the indirect utility cross.
struct QuadratureSpec {
    int nodes_per_piece = 64;
    bool split_at_kink = true;
};

inline void check_quadrature_spec(const QuadratureSpec& q) {
    if (q.nodes_per_piece < 2)
        throw std::invalid_argument("QuadratureSpec.nodes_per_piece must be >= 2");
}

struct InfeasibleLevelError : std::runtime_error {
    explicit InfeasibleLevelError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleBudgetError : std::runtime_error {
    InfeasibleBudgetError(const std::string& msg, double threshold_)
        : std::runtime_error(msg), threshold(threshold_) {}
    /// Minimal budget at which the requested policy becomes feasible.
    double threshold = 0.0;
};

}  // namespace edupol
