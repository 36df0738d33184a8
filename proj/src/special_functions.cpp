#include "edupol/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "edupol/core_types.hpp"

namespace edupol::math {

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int max_iter = 300;
    constexpr double eps = 1e-16;
    constexpr double fpmin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) return h;
    }
    throw NoConvergenceError("incomplete beta continued fraction did not converge for a=" +
                             std::to_string(a) + " b=" + std::to_string(b) +
                             " x=" + std::to_string(x));
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("regularized_incomplete_beta requires a, b > 0");
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("regularized_incomplete_beta requires x in [0,1]");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    const double ln_front = -log_beta(a, b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double beta_pdf(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("beta_pdf requires a, b > 0");
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("beta_pdf requires x in [0,1]");
    if (x == 0.0) {
        if (a < 1.0) throw std::domain_error("beta_pdf diverges at 0 for a < 1");
        if (a == 1.0) return std::exp(-log_beta(a, b));
        return 0.0;
    }
    if (x == 1.0) {
        if (b < 1.0) throw std::domain_error("beta_pdf diverges at 1 for b < 1");
        if (b == 1.0) return std::exp(-log_beta(a, b));
        return 0.0;
    }
    return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta(a, b));
}

}  // namespace edupol::math
