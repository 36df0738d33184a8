#include "edupol/taste_density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edupol/special_functions.hpp"

namespace edupol {

namespace {

constexpr double kAssumption2Tol = 1e-10;
constexpr double kFosdTol = 1e-10;
constexpr double kEqualWageTol = 1e-12;

void check_theta(double theta) {
    if (theta < 0.0 || theta > 1.0)
        throw std::invalid_argument("theta must lie in [0,1], got " + std::to_string(theta));
}

}  // namespace

TasteDensity TasteDensity::endogenous_beta(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("kappa must be nonnegative");
    return {DensityFamily::EndogenousBeta, kappa};
}

std::pair<double, double> TasteDensity::beta_parameters(const WagePair& w) const {
    check_wage_pair(w);
    if (family == DensityFamily::Uniform) return {1.0, 1.0};
    const double total = w.a + w.b;
    if (total <= 0.0) return {1.0 + 0.5 * kappa, 1.0 + 0.5 * kappa};
    return {1.0 + kappa * (w.a / total), 1.0 + kappa * (w.b / total)};
}

double TasteDensity::pdf(double theta, const WagePair& w) const {
    check_theta(theta);
    check_wage_pair(w);
    if (is_flat()) return 1.0;
    const auto [alpha, beta] = beta_parameters(w);
    return math::beta_pdf(alpha, beta, theta);
}

double TasteDensity::cdf(double theta, const WagePair& w) const {
    check_theta(theta);
    check_wage_pair(w);
    if (is_flat()) return theta;
    const auto [alpha, beta] = beta_parameters(w);
    return math::regularized_incomplete_beta(alpha, beta, theta);
}

bool ValidationReport::all_passed() const {
    for (const auto& item : items)
        for (const auto& check : item.checks)
            if (check.applicable && !check.passed) return false;
    return true;
}

double ValidationReport::worst_violation() const {
    double worst = 0.0;
    for (const auto& item : items)
        for (const auto& check : item.checks)
            if (check.applicable) worst = std::max(worst, check.worst_violation);
    return worst;
}

ValidationReport validate_assumption2(const PdfFn& pdf, const CdfFn& cdf,
                                      std::span<const WagePair> grid, int theta_nodes) {
    if (grid.empty()) throw std::invalid_argument("validate_assumption2: empty wage grid");
    if (theta_nodes < 1) throw std::invalid_argument("validate_assumption2: theta_nodes must be positive");

    ValidationReport report;
    for (const WagePair& w : grid) {
        check_wage_pair(w);
        ValidationItem item{w, {}, {}};

        ValidationCheck relabel{"relabeling_identity"};
        ValidationCheck symmetric{"symmetric_at_equal_wages"};
        ValidationCheck mass{"mass_toward_higher_wage"};

        const WagePair swapped{w.b, w.a};
        const bool equal_wages = std::fabs(w.a - w.b) <= kEqualWageTol;
        symmetric.applicable = equal_wages;

        for (int i = 0; i < theta_nodes; ++i) {
            const double theta = theta_nodes == 1 ? 0.5 : static_cast<double>(i) / (theta_nodes - 1);
            const double gap = std::fabs(pdf(theta, w) - pdf(1.0 - theta, swapped));
            relabel.worst_violation = std::max(relabel.worst_violation, gap);
            if (equal_wages) {
                const double sym_gap = std::fabs(pdf(theta, w) - pdf(1.0 - theta, w));
                symmetric.worst_violation = std::max(symmetric.worst_violation, sym_gap);
            }
        }
        relabel.passed = relabel.worst_violation <= kAssumption2Tol;
        symmetric.passed = symmetric.worst_violation <= kAssumption2Tol;

        const double below_half = cdf(0.5, w);
        const double above_half = 1.0 - below_half;
        double deficit = 0.0;
        if (w.a >= w.b) deficit = std::max(deficit, below_half - above_half);
        if (w.a <= w.b) deficit = std::max(deficit, above_half - below_half);
        mass.worst_violation = std::max(0.0, deficit);
        mass.passed = deficit <= kAssumption2Tol;

        item.checks = {relabel, symmetric, mass};
        report.items.push_back(std::move(item));
    }
    return report;
}

ValidationReport validate_assumption2(const TasteDensity& d, std::span<const WagePair> grid,
                                      int theta_nodes) {
    return validate_assumption2(
        [&d](double theta, const WagePair& w) { return d.pdf(theta, w); },
        [&d](double theta, const WagePair& w) { return d.cdf(theta, w); }, grid, theta_nodes);
}

ValidationReport validate_fosd_shift(const TasteDensity& d,
                                     std::span<const std::pair<WagePair, WagePair>> pairs,
                                     int c_nodes) {
    if (pairs.empty()) throw std::invalid_argument("validate_fosd_shift: empty pair list");
    if (c_nodes < 1) throw std::invalid_argument("validate_fosd_shift: c_nodes must be positive");

    ValidationReport report;
    for (const auto& [w, w_alt] : pairs) {
        check_wage_pair(w);
        check_wage_pair(w_alt);
        if (w.a < w_alt.a || w.b > w_alt.b)
            throw std::invalid_argument(
                "validate_fosd_shift: pair must satisfy w_a >= w'_a and w_b <= w'_b");

        ValidationItem item{w, w_alt, {}};
        ValidationCheck shift{"cdf_dominance"};
        for (int i = 1; i <= c_nodes; ++i) {
            const double c = static_cast<double>(i) / (c_nodes + 1);
            const double excess = d.cdf(c, w) - d.cdf(c, w_alt);
            shift.worst_violation = std::max(shift.worst_violation, excess);
        }
        shift.worst_violation = std::max(0.0, shift.worst_violation);
        shift.passed = shift.worst_violation <= kFosdTol;
        item.checks = {shift};
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace edupol
