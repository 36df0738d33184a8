#include "edupol/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace edupol {

namespace {

constexpr double kSymmetryTol = 1e-9;
constexpr double kMonotonicityTol = 1e-10;
constexpr double kQuasiconvexityTol = 1e-9;
constexpr double kClaimTol = 1e-9;
constexpr double kCdfTol = 1e-10;
constexpr double kWageBound = 10.0;

class TrialRng {
  public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

  private:
    std::mt19937_64 engine_;
};

double value(const TasteDensity& d, const WagePair& w) {
    return freedom_value_closed_form(w, d);
}

struct CertificateBuilder {
    PropertyCertificate cert;

    CertificateBuilder(std::string name, std::uint64_t trials, double tolerance) {
        cert.property = std::move(name);
        cert.trials = trials;
        cert.tolerance = tolerance;
    }

    void record(std::uint64_t trial, const std::array<double, 5>& inputs, double lhs, double rhs) {
        const double slack = rhs - lhs;
        cert.worst_slack = std::max(cert.worst_slack, slack);
        if (slack > cert.tolerance) cert.violations.push_back({trial, inputs, lhs, rhs, slack});
    }

    // Two-sided variant: slack is the absolute gap between the sides.
    void record_gap(std::uint64_t trial, const std::array<double, 5>& inputs, double lhs,
                    double rhs) {
        const double slack = std::fabs(lhs - rhs);
        cert.worst_slack = std::max(cert.worst_slack, slack);
        if (slack > cert.tolerance) cert.violations.push_back({trial, inputs, lhs, rhs, slack});
    }

    PropertyCertificate finish() {
        cert.passed = cert.violations.empty();
        return std::move(cert);
    }
};

// Hand-picked first trials covering degenerate and boundary inputs; the
// remaining trials are pseudo-random.
using PairSample = std::array<WagePair, 2>;

void sort_case_two(WagePair& w, WagePair& w_alt) {
    if (w.a < w_alt.a) std::swap(w.a, w_alt.a);
    if (w.b > w_alt.b) std::swap(w.b, w_alt.b);
}

}  // namespace

PropertyCertificate certify_symmetry(const TasteDensity& d, std::uint64_t trials,
                                     std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    CertificateBuilder builder("symmetry", trials, kSymmetryTol);
    TrialRng rng(seed);
    static const WagePair prelude[] = {{0.0, 0.0}, {kWageBound, 0.0}, {0.0, kWageBound}, {5.0, 5.0}};
    for (std::uint64_t t = 0; t < trials; ++t) {
        WagePair w;
        if (t < std::size(prelude))
            w = prelude[t];
        else
            w = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
        const double lhs = value(d, w);
        const double rhs = value(d, {w.b, w.a});
        builder.record_gap(t, {w.a, w.b, w.b, w.a, 0.0}, lhs, rhs);
    }
    return builder.finish();
}

PropertyCertificate certify_monotonicity(const TasteDensity& d, std::uint64_t trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    CertificateBuilder builder("monotonicity", trials, kMonotonicityTol);
    TrialRng rng(seed);
    static const PairSample prelude[] = {
        {WagePair{0.0, 0.0}, WagePair{1.0, 1.0}},
        {WagePair{5.0, 5.0}, WagePair{5.0, 5.0}},
        {WagePair{0.0, kWageBound}, WagePair{0.5, kWageBound}},
        {WagePair{kWageBound, 0.0}, WagePair{kWageBound, 0.5}},
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        WagePair w, larger;
        if (t < std::size(prelude)) {
            w = prelude[t][0];
            larger = prelude[t][1];
        } else {
            w = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            larger = {w.a + rng.uniform(0.0, kWageBound - w.a), w.b + rng.uniform(0.0, kWageBound - w.b)};
        }
        builder.record(t, {w.a, w.b, larger.a, larger.b, 0.0}, value(d, larger), value(d, w));
    }
    return builder.finish();
}

PropertyCertificate certify_quasiconvexity(const TasteDensity& d, std::uint64_t trials,
                                           std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    CertificateBuilder builder("quasiconvexity", trials, kQuasiconvexityTol);
    TrialRng rng(seed);
    struct MixedSample {
        PairSample pair;
        double lambda;
    };
    static const MixedSample prelude[] = {
        {{WagePair{2.0, 0.0}, WagePair{0.0, 2.0}}, 0.5},
        {{WagePair{1.0, 1.0}, WagePair{4.0, 4.0}}, 0.0},
        {{WagePair{0.0, 0.0}, WagePair{0.0, 0.0}}, 0.3},
        {{WagePair{3.0, 7.0}, WagePair{7.0, 3.0}}, 0.5},
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        WagePair w, w_alt;
        double lambda;
        if (t < std::size(prelude)) {
            w = prelude[t].pair[0];
            w_alt = prelude[t].pair[1];
            lambda = prelude[t].lambda;
        } else {
            w = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            w_alt = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            lambda = rng.uniform(0.0, 1.0);
        }
        const WagePair mix{lambda * w.a + (1.0 - lambda) * w_alt.a,
                           lambda * w.b + (1.0 - lambda) * w_alt.b};
        const double lhs = std::max(value(d, w), value(d, w_alt));
        builder.record(t, {w.a, w.b, w_alt.a, w_alt.b, lambda}, lhs, value(d, mix));
    }
    return builder.finish();
}

PropertyCertificate certify_componentwise_max_claim(const TasteDensity& d, std::uint64_t trials,
                                                    std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    CertificateBuilder builder("componentwise_max_claim", trials, kClaimTol);
    TrialRng rng(seed);
    static const PairSample prelude[] = {
        {WagePair{2.0, 1.0}, WagePair{1.0, 2.0}},
        {WagePair{3.0, 3.0}, WagePair{3.0, 3.0}},
        {WagePair{kWageBound, 0.0}, WagePair{0.0, kWageBound}},
        {WagePair{1.0, 0.5}, WagePair{0.5, 1.0}},
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        WagePair w, w_alt;
        if (t < std::size(prelude)) {
            w = prelude[t][0];
            w_alt = prelude[t][1];
        } else {
            w = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            w_alt = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            sort_case_two(w, w_alt);
        }
        const WagePair upper{std::max(w.a, w_alt.a), std::max(w.b, w_alt.b)};
        const double lhs = std::max(value(d, w), value(d, w_alt));
        builder.record(t, {w.a, w.b, w_alt.a, w_alt.b, 0.0}, lhs, value(d, upper));
    }
    return builder.finish();
}

PropertyCertificate certify_cdf_inequality(const TasteDensity& d, std::uint64_t trials,
                                           std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    CertificateBuilder builder("cdf_inequality", trials, kCdfTol);
    TrialRng rng(seed);
    static const PairSample prelude[] = {
        {WagePair{2.0, 1.0}, WagePair{1.0, 2.0}},
        {WagePair{5.0, 5.0}, WagePair{5.0, 5.0}},
        {WagePair{0.0, 0.0}, WagePair{0.0, 0.0}},  // degenerate cut, skipped
        {WagePair{kWageBound, 0.0}, WagePair{0.0, kWageBound}},
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        WagePair w, w_alt;
        if (t < std::size(prelude)) {
            w = prelude[t][0];
            w_alt = prelude[t][1];
        } else {
            w = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            w_alt = {rng.uniform(0.0, kWageBound), rng.uniform(0.0, kWageBound)};
            sort_case_two(w, w_alt);
        }
        const double denom = w.a + w_alt.b;
        if (denom <= 0.0) {
            ++builder.cert.skipped;
            continue;
        }
        const double c = w_alt.b / denom;
        const double lhs = 1.0 - d.cdf(c, w);
        const double rhs = 1.0 - d.cdf(c, w_alt);
        builder.record(t, {w.a, w.b, w_alt.a, w_alt.b, c}, lhs, rhs);
    }
    return builder.finish();
}

std::vector<PropertyCertificate> certify_all(const TasteDensity& d, std::uint64_t trials,
                                             std::uint64_t seed) {
    return {certify_symmetry(d, trials, seed), certify_monotonicity(d, trials, seed),
            certify_quasiconvexity(d, trials, seed),
            certify_componentwise_max_claim(d, trials, seed),
            certify_cdf_inequality(d, trials, seed)};
}

}  // namespace edupol
