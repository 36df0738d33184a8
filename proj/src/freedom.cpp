#include "edupol/freedom.hpp"

#include <cmath>
#include <vector>

#include "edupol/quadrature.hpp"
#include "edupol/special_functions.hpp"

namespace edupol {

double indirect_utility(const WagePair& w, double theta) {
    check_wage_pair(w);
    if (theta < 0.0 || theta > 1.0)
        throw std::invalid_argument("theta must lie in [0,1]");
    return std::max(theta * w.a, (1.0 - theta) * w.b);
}

Sector choose_occupation(const WagePair& w, double theta) {
    check_wage_pair(w);
    if (theta < 0.0 || theta > 1.0)
        throw std::invalid_argument("theta must lie in [0,1]");
    return theta * w.a >= (1.0 - theta) * w.b ? Sector::A : Sector::B;
}

namespace {

// Geometric grading ratio and depth for panels approaching the endpoints of
// [0,1], where the Beta kernel theta^(a-1) (1-theta)^(b-1) has fractional
// powers. Ratio 1/4 keeps every panel a 4:1 scale away from the
// singularity, so a fixed-order rule is accurate on each panel; depth 20
// brings the closing panel below 1e-12 of the piece width.
constexpr double kGradeRatio = 0.25;
constexpr int kGradeDepth = 20;

template <class F>
double integrate_graded(const math::GaussLegendreRule& rule, double lo, double hi, F&& f) {
    // Panel edges refined toward both ends of the piece.
    const double mid = 0.5 * (lo + hi);
    std::vector<double> edges;
    edges.reserve(2 * kGradeDepth + 3);
    edges.push_back(lo);
    double step = (mid - lo) * std::pow(kGradeRatio, kGradeDepth);
    for (int j = kGradeDepth; j >= 1; --j) {
        edges.push_back(lo + step);
        step /= kGradeRatio;
    }
    edges.push_back(mid);
    step = (hi - mid) * kGradeRatio;
    for (int j = 1; j <= kGradeDepth; ++j) {
        edges.push_back(hi - step);
        step *= kGradeRatio;
    }
    edges.push_back(hi);

    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        acc += math::integrate_panel(rule, edges[i], edges[i + 1], f);
    return acc;
}

template <class F>
double integrate_piece(const TasteDensity& d, const math::GaussLegendreRule& rule, double lo,
                       double hi, F&& f) {
    if (hi <= lo) return 0.0;
    if (d.is_flat()) return math::integrate_panel(rule, lo, hi, f);
    return integrate_graded(rule, lo, hi, f);
}

// Unsplit mode leaves the integrand's kink inside the domain, where a single
// rule converges only quadratically. Keep panels no wider than 1/64 so the
// kink-bearing panel's error stays below the split/unsplit consistency
// tolerance, and keep the endpoint grading for the Beta kernels.
template <class F>
double integrate_unsplit(const TasteDensity& d, const math::GaussLegendreRule& rule, F&& f) {
    constexpr double kMaxWidth = 1.0 / 64.0;
    std::vector<double> base;
    base.push_back(0.0);
    if (!d.is_flat()) {
        double step = 0.5 * std::pow(kGradeRatio, kGradeDepth);
        for (int j = kGradeDepth; j >= 1; --j) {
            base.push_back(step);
            step /= kGradeRatio;
        }
        base.push_back(0.5);
        step = 0.5 * kGradeRatio;
        for (int j = 1; j <= kGradeDepth; ++j) {
            base.push_back(1.0 - step);
            step *= kGradeRatio;
        }
    }
    base.push_back(1.0);

    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        const double lo = base[i];
        const double hi = base[i + 1];
        const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / kMaxWidth)));
        for (int p = 0; p < pieces; ++p)
            acc += math::integrate_panel(rule, lo + (hi - lo) * p / pieces,
                                         lo + (hi - lo) * (p + 1) / pieces, f);
    }
    return acc;
}

}  // namespace

double freedom_value(const WagePair& w, const TasteDensity& d, const QuadratureSpec& q) {
    check_wage_pair(w);
    check_quadrature_spec(q);
    const double total = w.a + w.b;
    if (total <= 0.0) return 0.0;

    const auto& rule = math::gauss_legendre(q.nodes_per_piece);
    const auto integrand = [&](double theta) {
        return std::max(theta * w.a, (1.0 - theta) * w.b) * d.pdf(theta, w);
    };

    if (!q.split_at_kink) return integrate_unsplit(d, rule, integrand);

    const double kink = w.b / total;
    return integrate_piece(d, rule, 0.0, kink, integrand) +
           integrate_piece(d, rule, kink, 1.0, integrand);
}

double freedom_value_closed_form_uniform(const WagePair& w) {
    check_wage_pair(w);
    const double total = w.a + w.b;
    if (total <= 0.0) return 0.0;
    const double t = w.b / total;
    return w.b * (t - 0.5 * t * t) + 0.5 * w.a * (1.0 - t * t);
}

double freedom_value_closed_form(const WagePair& w, const TasteDensity& d) {
    check_wage_pair(w);
    const double total = w.a + w.b;
    if (total <= 0.0) return 0.0;
    if (d.family == DensityFamily::Uniform) return freedom_value_closed_form_uniform(w);

    const auto [alpha, beta] = d.beta_parameters(w);
    const double t = w.b / total;
    const double mean_theta = alpha / (alpha + beta);
    // E[(1-theta) 1{theta<t}] and E[theta 1{theta>t}] via the incomplete
    // beta identity int_0^x theta f_{a,b} = mean * I_x(a+1, b).
    const double below = (1.0 - mean_theta) * math::regularized_incomplete_beta(alpha, beta + 1.0, t);
    const double above = mean_theta * (1.0 - math::regularized_incomplete_beta(alpha + 1.0, beta, t));
    return w.b * below + w.a * above;
}

double invert_level_curve(double k, double fixed_wage, Sector direction, const TasteDensity& d,
                          const QuadratureSpec& q, double tol) {
    if (!(fixed_wage >= 0.0)) throw std::invalid_argument("fixed_wage must be nonnegative");
    check_quadrature_spec(q);
    const auto value_at = [&](double x) {
        const WagePair w = direction == Sector::A ? WagePair{x, fixed_wage} : WagePair{fixed_wage, x};
        return freedom_value(w, d, q);
    };
    return detail::invert_level_on(value_at, k, tol);
}

}  // namespace edupol
