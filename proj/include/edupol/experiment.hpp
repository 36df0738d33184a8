#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edupol/welfare.hpp"

namespace edupol {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct WeightsSpec {
    enum class Kind { None, Equal, Explicit, Random };
    Kind kind = Kind::None;
    std::vector<double> explicit_weights;
    int random_count = 0;
    std::uint64_t seed = 0;
};

/// One experiment: a population, a taste density, a policy set and an output
/// location. Mirrors the JSON config schema one to one.
struct ExperimentConfig {
    std::optional<int> simplex_n;
    std::optional<std::string> population_file;
    TasteDensity density;
    QuadratureSpec quadrature;
    std::vector<PolicyStructure> structures = {PolicyStructure::OneSchoolA,
                                               PolicyStructure::OneSchoolB,
                                               PolicyStructure::TwoSchool};
    PolicyObjective objective = PolicyObjective::ResourceEq;
    double budget = 0.0;
    WeightsSpec weights;
    std::string output_dir = "out";
    std::string report_name = "report.json";
    WagePair figure1_wages{4.0, 4.0};
    int level_grid = 41;
};

ExperimentConfig parse_config(const nlohmann::ordered_json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Normalized JSON echo of a config (defaults filled in), as written into
/// run reports.
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

/// Weight vectors a weights setting expands to for a population of n
/// agents: empty for None, a single vector for Equal/Explicit,
/// `random_count` uniform vectors for Random.
std::vector<std::vector<double>> materialize_weights(const WeightsSpec& spec, std::size_t n);

struct RunResult {
    int exit_code = 0;
    nlohmann::ordered_json report;
    std::filesystem::path report_path;
};

/// Solves the configured structures, evaluates welfare and dominance, and
/// writes the JSON report. Exit code 0 on success, 2 when a budget is
/// infeasible for some structure, 1 on solver failure.
RunResult run_experiment(const ExperimentConfig& config);

/// Emits figure data as CSV files into the output directory: the
/// opportunity-set frontier for a configured wage pair, the talent simplex
/// with the wage frontiers of the three policies (resource equalization), or
/// the sampled freedom level curve with the policy target sets (utility
/// equalization). Returns the written paths.
std::vector<std::filesystem::path> emit_figure_data(const ExperimentConfig& config);

/// Output directory after applying the EDUPOL_OUTPUT_DIR override.
std::filesystem::path resolve_output_dir(const ExperimentConfig& config);

}  // namespace edupol
