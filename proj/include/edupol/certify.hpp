#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "edupol/freedom.hpp"
#include "edupol/taste_density.hpp"

namespace edupol {

/// One failed trial of a property certificate. `inputs` holds the sampled
/// arguments in certificate-specific order (wage pairs first, then any
/// auxiliary scalar such as the mixing weight or cut point).
struct PropertyViolation {
    std::uint64_t trial = 0;
    std::array<double, 5> inputs{};
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // positive excess beyond exact equality/inequality
};

/// Randomized numerical certificate for one structural property of the
/// freedom evaluation function. Reproducible: the same seed and trial count
/// give an identical violation list.
struct PropertyCertificate {
    std::string property;
    std::uint64_t trials = 0;
    std::uint64_t skipped = 0;
    std::vector<PropertyViolation> violations;
    double worst_slack = 0.0;  // largest slack observed across all trials
    double tolerance = 0.0;
    bool passed = true;
};

/// |V(w_a, w_b) - V(w_b, w_a)| <= 1e-9 over wage pairs in [0,10]^2.
PropertyCertificate certify_symmetry(const TasteDensity& d, std::uint64_t trials,
                                     std::uint64_t seed);

/// V(w') >= V(w) - 1e-10 for componentwise-larger w'. Violations for the
/// endogenous family are expected in lopsided-wage corners and are reported,
/// not suppressed.
PropertyCertificate certify_monotonicity(const TasteDensity& d, std::uint64_t trials,
                                         std::uint64_t seed);

/// max{V(w), V(w')} >= V(lambda w + (1-lambda) w') - 1e-9.
PropertyCertificate certify_quasiconvexity(const TasteDensity& d, std::uint64_t trials,
                                           std::uint64_t seed);

/// max{V(w), V(w')} >= V(max{w_a,w'_a}, max{w_b,w'_b}) - 1e-9 over pairs
/// sorted so that w_a >= w'_a and w_b <= w'_b.
PropertyCertificate certify_componentwise_max_claim(const TasteDensity& d, std::uint64_t trials,
                                                    std::uint64_t seed);

/// 1 - F(c; w) >= 1 - F(c; w') - 1e-10 at c = w'_b / (w_a + w'_b) over the
/// same sorted pairs. Degenerate cut points (both wages zero) are skipped
/// and counted.
PropertyCertificate certify_cdf_inequality(const TasteDensity& d, std::uint64_t trials,
                                           std::uint64_t seed);

/// All five certificates in the order above.
std::vector<PropertyCertificate> certify_all(const TasteDensity& d, std::uint64_t trials,
                                             std::uint64_t seed);

}  // namespace edupol
