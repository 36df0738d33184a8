#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "edupol/certify.hpp"
#include "edupol/experiment.hpp"

namespace py = pybind11;
using namespace edupol;

PYBIND11_MODULE(edupol, m) {
    m.doc() = "two-sector education policy model with uncertain endogenous preferences";

    py::enum_<Sector>(m, "Sector").value("A", Sector::A).value("B", Sector::B);

    py::class_<WagePair>(m, "WagePair")
        .def(py::init<double, double>(), py::arg("a") = 0.0, py::arg("b") = 0.0)
        .def_readwrite("a", &WagePair::a)
        .def_readwrite("b", &WagePair::b)
        .def("__repr__", [](const WagePair& w) {
            return "WagePair(" + std::to_string(w.a) + ", " + std::to_string(w.b) + ")";
        });

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<int, bool>(), py::arg("nodes_per_piece") = 64,
             py::arg("split_at_kink") = true)
        .def_readwrite("nodes_per_piece", &QuadratureSpec::nodes_per_piece)
        .def_readwrite("split_at_kink", &QuadratureSpec::split_at_kink);

    py::enum_<DensityFamily>(m, "DensityFamily")
        .value("Uniform", DensityFamily::Uniform)
        .value("EndogenousBeta", DensityFamily::EndogenousBeta);

    py::class_<TasteDensity>(m, "TasteDensity")
        .def_static("uniform", &TasteDensity::uniform)
        .def_static("endogenous_beta", &TasteDensity::endogenous_beta, py::arg("kappa"))
        .def_readonly("family", &TasteDensity::family)
        .def_readonly("kappa", &TasteDensity::kappa)
        .def("pdf", &TasteDensity::pdf, py::arg("theta"), py::arg("wages"))
        .def("cdf", &TasteDensity::cdf, py::arg("theta"), py::arg("wages"));

    py::class_<TalentProfile>(m, "TalentProfile")
        .def(py::init<double, double, double>(), py::arg("t_a"), py::arg("t_b"),
             py::arg("weight") = 1.0)
        .def_readwrite("t_a", &TalentProfile::t_a)
        .def_readwrite("t_b", &TalentProfile::t_b)
        .def_readwrite("weight", &TalentProfile::weight);

    py::class_<Population>(m, "Population")
        .def(py::init<std::vector<TalentProfile>>(), py::arg("agents"))
        .def_property_readonly("agents", &Population::agents)
        .def("__len__", &Population::size)
        .def_property_readonly("total_mass", &Population::total_mass);

    m.def("is_pluralistic", &is_pluralistic, py::arg("population"));
    m.def("simplex_population", &simplex_population, py::arg("n"));
    m.def("load_population", &load_population, py::arg("path"));

    m.def("indirect_utility", &indirect_utility, py::arg("wages"), py::arg("theta"));
    m.def("choose_occupation", &choose_occupation, py::arg("wages"), py::arg("theta"));
    m.def("freedom_value", &freedom_value, py::arg("wages"), py::arg("density"),
          py::arg("quadrature") = QuadratureSpec{});
    m.def("freedom_value_closed_form_uniform", &freedom_value_closed_form_uniform,
          py::arg("wages"));
    m.def("freedom_value_closed_form", &freedom_value_closed_form, py::arg("wages"),
          py::arg("density"));
    m.def("invert_level_curve", &invert_level_curve, py::arg("k"), py::arg("fixed_wage"),
          py::arg("direction"), py::arg("density"), py::arg("quadrature") = QuadratureSpec{},
          py::arg("tol") = 1e-10);

    py::enum_<PolicyStructure>(m, "PolicyStructure")
        .value("OneSchoolA", PolicyStructure::OneSchoolA)
        .value("OneSchoolB", PolicyStructure::OneSchoolB)
        .value("TwoSchool", PolicyStructure::TwoSchool);

    py::enum_<PolicyObjective>(m, "PolicyObjective")
        .value("ResourceEq", PolicyObjective::ResourceEq)
        .value("UtilityEq", PolicyObjective::UtilityEq);

    py::class_<AgentAllocation>(m, "AgentAllocation")
        .def_readonly("agent", &AgentAllocation::agent)
        .def_readonly("school", &AgentAllocation::school)
        .def_readonly("expenditure", &AgentAllocation::expenditure)
        .def_readonly("wages", &AgentAllocation::wages);

    py::class_<Allocation>(m, "Allocation")
        .def_readonly("structure", &Allocation::structure)
        .def_readonly("objective", &Allocation::objective)
        .def_readonly("agents", &Allocation::agents)
        .def_readonly("level", &Allocation::level)
        .def_readonly("total_cost", &Allocation::total_cost);

    m.def("solve_resource_one_school", &solve_resource_one_school, py::arg("population"),
          py::arg("sector"), py::arg("budget"), py::arg("tol") = 1e-9);
    m.def("solve_resource_two_school", &solve_resource_two_school, py::arg("population"),
          py::arg("budget"), py::arg("tol") = 1e-9);
    m.def("solve_utility_one_school", &solve_utility_one_school, py::arg("population"),
          py::arg("sector"), py::arg("budget"), py::arg("density"),
          py::arg("quadrature") = QuadratureSpec{}, py::arg("tol") = 1e-8);
    m.def("solve_utility_two_school", &solve_utility_two_school, py::arg("population"),
          py::arg("budget"), py::arg("density"), py::arg("quadrature") = QuadratureSpec{},
          py::arg("tol") = 1e-8);
    m.def("policy_cost", &policy_cost, py::arg("allocation"), py::arg("population"));

    py::class_<WelfareReport>(m, "WelfareReport")
        .def_readonly("policy", &WelfareReport::policy)
        .def_readonly("values", &WelfareReport::values)
        .def_readonly("maximin", &WelfareReport::maximin)
        .def_readonly("weighted", &WelfareReport::weighted)
        .def_readonly("level", &WelfareReport::level)
        .def_readonly("total_cost", &WelfareReport::total_cost);

    m.def(
        "evaluate_welfare",
        [](const Population& pop, const Allocation& alloc, const TasteDensity& d,
           const QuadratureSpec& q, const std::vector<double>& weights) {
            return evaluate_welfare(pop, alloc, d, q, weights);
        },
        py::arg("population"), py::arg("allocation"), py::arg("density"),
        py::arg("quadrature") = QuadratureSpec{}, py::arg("weights") = std::vector<double>{});

    py::class_<PairVerdict>(m, "PairVerdict")
        .def_readonly("maximin_margin", &PairVerdict::maximin_margin)
        .def_readonly("maximin_dominates", &PairVerdict::maximin_dominates)
        .def_readonly("maximin_tie", &PairVerdict::maximin_tie)
        .def_readonly("weighted_margin", &PairVerdict::weighted_margin)
        .def_readonly("weighted_dominates", &PairVerdict::weighted_dominates);

    py::class_<StructureOutcome>(m, "StructureOutcome")
        .def_readonly("structure", &StructureOutcome::structure)
        .def_readonly("feasible", &StructureOutcome::feasible)
        .def_readonly("error", &StructureOutcome::error)
        .def_readonly("allocation", &StructureOutcome::allocation)
        .def_readonly("welfare", &StructureOutcome::welfare);

    py::class_<ComparisonVerdict>(m, "ComparisonVerdict")
        .def_readonly("one_school_a", &ComparisonVerdict::one_school_a)
        .def_readonly("one_school_b", &ComparisonVerdict::one_school_b)
        .def_readonly("two_school", &ComparisonVerdict::two_school)
        .def_readonly("two_vs_a", &ComparisonVerdict::two_vs_a)
        .def_readonly("two_vs_b", &ComparisonVerdict::two_vs_b);

    m.def(
        "compare_structures",
        [](const Population& pop, PolicyObjective objective, double budget, const TasteDensity& d,
           const QuadratureSpec& q, const std::vector<double>& weights) {
            return compare_structures(pop, objective, budget, d, q, weights);
        },
        py::arg("population"), py::arg("objective"), py::arg("budget"), py::arg("density"),
        py::arg("quadrature") = QuadratureSpec{}, py::arg("weights") = std::vector<double>{});

    py::class_<EwepSample>(m, "EwepSample")
        .def_readonly("theta", &EwepSample::theta)
        .def_readonly("max_gap", &EwepSample::max_gap)
        .def_readonly("satisfied", &EwepSample::satisfied);

    py::class_<EWEPReport>(m, "EWEPReport")
        .def_readonly("samples", &EWEPReport::samples)
        .def("all_satisfied", &EWEPReport::all_satisfied);

    m.def(
        "check_ewep",
        [](const Population& pop, const Allocation& alloc, const std::vector<double>& thetas) {
            return check_ewep(pop, alloc, thetas);
        },
        py::arg("population"), py::arg("allocation"), py::arg("theta_samples"));

    py::class_<PropertyViolation>(m, "PropertyViolation")
        .def_readonly("trial", &PropertyViolation::trial)
        .def_readonly("inputs", &PropertyViolation::inputs)
        .def_readonly("lhs", &PropertyViolation::lhs)
        .def_readonly("rhs", &PropertyViolation::rhs)
        .def_readonly("slack", &PropertyViolation::slack);

    py::class_<PropertyCertificate>(m, "PropertyCertificate")
        .def_readonly("property", &PropertyCertificate::property)
        .def_readonly("trials", &PropertyCertificate::trials)
        .def_readonly("skipped", &PropertyCertificate::skipped)
        .def_readonly("violations", &PropertyCertificate::violations)
        .def_readonly("worst_slack", &PropertyCertificate::worst_slack)
        .def_readonly("tolerance", &PropertyCertificate::tolerance)
        .def_readonly("passed", &PropertyCertificate::passed);

    m.def("certify_symmetry", &certify_symmetry, py::arg("density"), py::arg("trials"),
          py::arg("seed"));
    m.def("certify_monotonicity", &certify_monotonicity, py::arg("density"), py::arg("trials"),
          py::arg("seed"));
    m.def("certify_quasiconvexity", &certify_quasiconvexity, py::arg("density"), py::arg("trials"),
          py::arg("seed"));
    m.def("certify_componentwise_max_claim", &certify_componentwise_max_claim, py::arg("density"),
          py::arg("trials"), py::arg("seed"));
    m.def("certify_cdf_inequality", &certify_cdf_inequality, py::arg("density"), py::arg("trials"),
          py::arg("seed"));

    m.def(
        "run_experiment_file",
        [](const std::filesystem::path& config_path) {
            const auto result = run_experiment(load_config(config_path));
            return py::make_tuple(result.exit_code, result.report_path,
                                  result.report.dump(2));
        },
        py::arg("config_path"),
        "Run an experiment config file; returns (exit_code, report_path, report_json).");
}
