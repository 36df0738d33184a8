"""Smoke tests for the python bindings."""

import math
import os
import sys
import tempfile

import edupol


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    uni = edupol.TasteDensity.uniform()
    beta = edupol.TasteDensity.endogenous_beta(2.0)

    # population construction and pluralism
    pop = edupol.simplex_population(3)
    assert len(pop) == 3
    approx(pop.total_mass, 1.0, 1e-12)
    assert edupol.is_pluralistic(pop)

    with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as f:
        f.write("1.0,0.0,1.0\n0.0,1.0,1.0\n")
        path = f.name
    loaded = edupol.load_population(path)
    os.unlink(path)
    assert len(loaded) == 2

    # freedom values against the closed forms
    approx(edupol.freedom_value(edupol.WagePair(1, 1), uni), 0.75, 1e-12)
    approx(edupol.freedom_value_closed_form_uniform(edupol.WagePair(2, 1)), 7 / 6, 1e-12)
    w = edupol.WagePair(3, 2)
    approx(
        edupol.freedom_value(w, beta),
        edupol.freedom_value_closed_form(w, beta),
        1e-11,
    )
    approx(beta.cdf(0.5, edupol.WagePair(2, 0)), 0.125, 1e-12)

    # level curve inversion round trip
    x = edupol.invert_level_curve(0.75, 1.0, edupol.Sector.A, uni)
    approx(x, 1.0, 1e-7)

    # solvers on the two-agent economy
    two = edupol.Population([edupol.TalentProfile(1, 0), edupol.TalentProfile(0, 1)])
    alloc = edupol.solve_utility_two_school(two, 1.0, uni)
    approx(alloc.level, 0.75, 1e-6)
    approx(alloc.agents[0].expenditure, 0.5, 1e-6)
    approx(edupol.policy_cost(alloc, two), 1.0, 1e-7)

    resource = edupol.solve_resource_two_school(two, 1.0)
    approx(resource.level, 1.5, 1e-8)

    report = edupol.evaluate_welfare(two, alloc, uni)
    approx(report.maximin, 0.75, 1e-6)

    verdict = edupol.compare_structures(two, edupol.PolicyObjective.UtilityEq, 1.0, uni)
    assert verdict.two_vs_a.maximin_dominates

    ewep = edupol.check_ewep(two, resource, [0.5, 0.9])
    approx(ewep.samples[0].max_gap, 0.0, 1e-9)
    approx(ewep.samples[1].max_gap, 1.2, 1e-9)

    # certificates
    cert = edupol.certify_symmetry(uni, 500, 1)
    assert cert.passed
    assert cert.trials == 500

    qc = edupol.certify_quasiconvexity(beta, 500, 1)
    assert qc.passed

    print("python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
