#include "edupol/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace edupol {

namespace {

using json = nlohmann::ordered_json;

PolicyStructure structure_from_string(const std::string& s) {
    if (s == "one_school_a") return PolicyStructure::OneSchoolA;
    if (s == "one_school_b") return PolicyStructure::OneSchoolB;
    if (s == "two_school") return PolicyStructure::TwoSchool;
    throw ConfigError("policy.structures: unknown structure '" + s + "'");
}

PolicyObjective objective_from_string(const std::string& s) {
    if (s == "resource_eq") return PolicyObjective::ResourceEq;
    if (s == "utility_eq") return PolicyObjective::UtilityEq;
    throw ConfigError("policy.objective: unknown objective '" + s + "'");
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + " must be a number");
    return j.get<double>();
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

Population build_population(const ExperimentConfig& config) {
    if (config.simplex_n) return simplex_population(*config.simplex_n);
    return load_population(*config.population_file);
}

json weights_to_json(const WeightsSpec& spec) {
    switch (spec.kind) {
        case WeightsSpec::Kind::None: return "none";
        case WeightsSpec::Kind::Equal: return "equal";
        case WeightsSpec::Kind::Explicit: return spec.explicit_weights;
        case WeightsSpec::Kind::Random:
            return json{{"random_count", spec.random_count}, {"seed", spec.seed}};
    }
    return "none";
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig config;

    if (!j.contains("population")) throw ConfigError("missing key: population");
    const auto& pop = j.at("population");
    const bool has_simplex = pop.contains("simplex_n");
    const bool has_file = pop.contains("file");
    if (has_simplex == has_file)
        throw ConfigError("population: exactly one of simplex_n or file is required");
    if (has_simplex) {
        if (!pop.at("simplex_n").is_number_integer())
            throw ConfigError("population.simplex_n must be an integer");
        config.simplex_n = pop.at("simplex_n").get<int>();
        if (*config.simplex_n < 2) throw ConfigError("population.simplex_n must be >= 2");
    } else {
        config.population_file = pop.at("file").get<std::string>();
    }

    if (j.contains("density")) {
        const auto& den = j.at("density");
        const std::string family = den.value("family", "uniform");
        const double kappa = den.value("kappa", 0.0);
        if (family == "uniform") {
            config.density = TasteDensity::uniform();
        } else if (family == "endogenous_beta") {
            if (kappa < 0.0) throw ConfigError("density.kappa must be nonnegative");
            config.density = TasteDensity::endogenous_beta(kappa);
        } else {
            throw ConfigError("density.family: unknown family '" + family + "'");
        }
    }

    if (j.contains("quadrature")) {
        const auto& quad = j.at("quadrature");
        config.quadrature.nodes_per_piece = quad.value("nodes_per_piece", 64);
        config.quadrature.split_at_kink = quad.value("split_at_kink", true);
        if (config.quadrature.nodes_per_piece < 2)
            throw ConfigError("quadrature.nodes_per_piece must be >= 2");
    }

    if (!j.contains("policy")) throw ConfigError("missing key: policy");
    const auto& policy = j.at("policy");
    if (policy.contains("structures")) {
        config.structures.clear();
        for (const auto& s : policy.at("structures"))
            config.structures.push_back(structure_from_string(s.get<std::string>()));
        if (config.structures.empty()) throw ConfigError("policy.structures must not be empty");
    }
    config.objective = objective_from_string(policy.value("objective", "resource_eq"));
    config.budget = require_number(policy.at("budget"), "policy.budget");
    if (!(config.budget > 0.0)) throw ConfigError("policy.budget must be positive");

    if (j.contains("weights")) {
        const auto& w = j.at("weights");
        if (w.is_string()) {
            const std::string kind = w.get<std::string>();
            if (kind == "none")
                config.weights.kind = WeightsSpec::Kind::None;
            else if (kind == "equal")
                config.weights.kind = WeightsSpec::Kind::Equal;
            else
                throw ConfigError("weights: unknown kind '" + kind + "'");
        } else if (w.is_array()) {
            config.weights.kind = WeightsSpec::Kind::Explicit;
            for (const auto& x : w)
                config.weights.explicit_weights.push_back(require_number(x, "weights[]"));
        } else if (w.is_object()) {
            config.weights.kind = WeightsSpec::Kind::Random;
            config.weights.random_count = w.value("random_count", 0);
            config.weights.seed = w.value("seed", std::uint64_t{0});
            if (config.weights.random_count < 1)
                throw ConfigError("weights.random_count must be positive");
        } else {
            throw ConfigError("weights must be a string, array, or object");
        }
    }

    if (j.contains("output")) {
        const auto& out = j.at("output");
        config.output_dir = out.value("dir", config.output_dir);
        config.report_name = out.value("report", config.report_name);
    }

    if (j.contains("figures")) {
        const auto& fig = j.at("figures");
        if (fig.contains("figure1_wages")) {
            const auto& w = fig.at("figure1_wages");
            if (!w.is_array() || w.size() != 2)
                throw ConfigError("figures.figure1_wages must be a [w_a, w_b] pair");
            config.figure1_wages = {require_number(w[0], "figures.figure1_wages[0]"),
                                    require_number(w[1], "figures.figure1_wages[1]")};
        }
        config.level_grid = fig.value("level_grid", config.level_grid);
        if (config.level_grid < 2) throw ConfigError("figures.level_grid must be >= 2");
    }

    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }
    return parse_config(j);
}

json config_to_json(const ExperimentConfig& config) {
    json j;
    if (config.simplex_n)
        j["population"] = {{"simplex_n", *config.simplex_n}};
    else
        j["population"] = {{"file", *config.population_file}};
    j["density"] = {{"family", config.density.family == DensityFamily::Uniform
                                   ? "uniform"
                                   : "endogenous_beta"},
                    {"kappa", config.density.kappa}};
    j["quadrature"] = {{"nodes_per_piece", config.quadrature.nodes_per_piece},
                       {"split_at_kink", config.quadrature.split_at_kink}};
    json structures = json::array();
    for (PolicyStructure s : config.structures) structures.push_back(to_string(s));
    j["policy"] = {{"structures", structures},
                   {"objective", to_string(config.objective)},
                   {"budget", config.budget}};
    j["weights"] = weights_to_json(config.weights);
    j["output"] = {{"dir", config.output_dir}, {"report", config.report_name}};
    j["figures"] = {{"figure1_wages", {config.figure1_wages.a, config.figure1_wages.b}},
                    {"level_grid", config.level_grid}};
    return j;
}

std::vector<std::vector<double>> materialize_weights(const WeightsSpec& spec, std::size_t n) {
    switch (spec.kind) {
        case WeightsSpec::Kind::None: return {};
        case WeightsSpec::Kind::Equal: return {std::vector<double>(n, 1.0)};
        case WeightsSpec::Kind::Explicit:
            if (spec.explicit_weights.size() != n)
                throw ConfigError("weights: explicit list must have one entry per agent");
            return {spec.explicit_weights};
        case WeightsSpec::Kind::Random: {
            std::mt19937_64 engine(spec.seed);
            const auto uniform01 = [&]() {
                return static_cast<double>(engine() >> 11) * 0x1.0p-53;
            };
            std::vector<std::vector<double>> vectors;
            vectors.reserve(spec.random_count);
            for (int v = 0; v < spec.random_count; ++v) {
                std::vector<double> lambda(n);
                bool any_positive = false;
                do {
                    for (double& x : lambda) {
                        x = uniform01();
                        if (x > 0.0) any_positive = true;
                    }
                } while (!any_positive);
                vectors.push_back(std::move(lambda));
            }
            return vectors;
        }
    }
    return {};
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& config) {
    if (const char* env = std::getenv("EDUPOL_OUTPUT_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(config.output_dir);
}

namespace {

json allocation_summary(const StructureOutcome& outcome, const Population& pop,
                        const std::vector<std::vector<double>>& weight_vectors) {
    json j;
    j["structure"] = to_string(outcome.structure);
    j["feasible"] = outcome.feasible;
    j["error"] = outcome.error;
    j["level"] = outcome.feasible ? json(outcome.allocation->level) : json();
    j["total_cost"] = outcome.feasible ? json(outcome.allocation->total_cost) : json();
    j["agents"] = pop.size();

    double min_e = 0.0, max_e = 0.0, educated = 0.0;
    if (outcome.feasible) {
        min_e = std::numeric_limits<double>::infinity();
        for (const auto& a : outcome.allocation->agents) {
            min_e = std::min(min_e, a.expenditure);
            max_e = std::max(max_e, a.expenditure);
            if (a.school) educated += pop[a.agent].weight;
        }
    }
    j["min_expenditure"] = outcome.feasible ? json(min_e) : json();
    j["max_expenditure"] = outcome.feasible ? json(max_e) : json();
    j["educated_mass"] = outcome.feasible ? json(educated) : json();
    j["maximin"] = outcome.feasible ? json(outcome.welfare->maximin) : json();

    json weighted = json::array();
    if (outcome.feasible && !weight_vectors.empty()) {
        for (const auto& lambda : weight_vectors) {
            double sum = 0.0;
            for (std::size_t i = 0; i < pop.size(); ++i)
                sum += lambda[i] * pop[i].weight * outcome.welfare->values[i];
            weighted.push_back(sum);
        }
    }
    j["weighted"] = weighted;
    return j;
}

json pair_verdict_json(const StructureOutcome& two, const StructureOutcome& one,
                       const Population& pop,
                       const std::vector<std::vector<double>>& weight_vectors) {
    json j;
    const bool comparable = two.feasible && one.feasible;
    j["comparable"] = comparable;
    if (!comparable) {
        j["maximin_margin"] = json();
        j["maximin_dominates"] = json();
        j["maximin_tie"] = json();
        j["weighted_margins"] = json::array();
        j["weighted_dominates"] = json::array();
        return j;
    }
    const PairVerdict verdict = compare_welfare(*two.welfare, *one.welfare, false);
    j["maximin_margin"] = verdict.maximin_margin;
    j["maximin_dominates"] = verdict.maximin_dominates;
    j["maximin_tie"] = verdict.maximin_tie;

    json margins = json::array();
    json dominates = json::array();
    for (const auto& lambda : weight_vectors) {
        double two_sum = 0.0, one_sum = 0.0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            two_sum += lambda[i] * pop[i].weight * two.welfare->values[i];
            one_sum += lambda[i] * pop[i].weight * one.welfare->values[i];
        }
        const double margin = two_sum - one_sum;
        margins.push_back(margin);
        dominates.push_back(margin >= -kDominanceTieTol);
    }
    j["weighted_margins"] = margins;
    j["weighted_dominates"] = dominates;
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << text;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
    const Population pop = build_population(config);
    const auto weight_vectors = materialize_weights(config.weights, pop.size());

    std::vector<StructureOutcome> outcomes;
    outcomes.reserve(config.structures.size());
    for (PolicyStructure structure : config.structures)
        outcomes.push_back(solve_and_evaluate(pop, structure, config.objective, config.budget,
                                              config.density, config.quadrature));

    const StructureOutcome* two = nullptr;
    const StructureOutcome* one_a = nullptr;
    const StructureOutcome* one_b = nullptr;
    for (const auto& outcome : outcomes) {
        if (outcome.structure == PolicyStructure::TwoSchool) two = &outcome;
        if (outcome.structure == PolicyStructure::OneSchoolA) one_a = &outcome;
        if (outcome.structure == PolicyStructure::OneSchoolB) one_b = &outcome;
    }

    RunResult result;
    result.report["meta"] = {{"tool", "edupol"}, {"version", "0.1.0"}, {"timestamp", timestamp_utc()}};
    result.report["config"] = config_to_json(config);

    json policies = json::array();
    for (const auto& outcome : outcomes)
        policies.push_back(allocation_summary(outcome, pop, weight_vectors));
    result.report["policies"] = policies;

    json comparison;
    comparison["two_vs_one_a"] =
        two && one_a ? pair_verdict_json(*two, *one_a, pop, weight_vectors) : json();
    comparison["two_vs_one_b"] =
        two && one_b ? pair_verdict_json(*two, *one_b, pop, weight_vectors) : json();
    result.report["comparison"] = comparison;

    bool any_infeasible = false;
    bool any_failure = false;
    for (const auto& outcome : outcomes) {
        if (outcome.failure == StructureOutcome::Failure::InfeasibleBudget) any_infeasible = true;
        if (outcome.failure == StructureOutcome::Failure::SolverFailure) any_failure = true;
    }
    result.exit_code = any_failure ? 1 : any_infeasible ? 2 : 0;

    const auto out_dir = resolve_output_dir(config);
    std::filesystem::create_directories(out_dir);
    result.report_path = out_dir / config.report_name;
    write_text_file(result.report_path, result.report.dump(2) + "\n");
    return result;
}

std::vector<std::filesystem::path> emit_figure_data(const ExperimentConfig& config) {
    const Population pop = build_population(config);
    const auto out_dir = resolve_output_dir(config);
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    {
        // Opportunity-set frontier l_a / w_a + l_b / w_b = 1.
        const WagePair w = config.figure1_wages;
        std::ostringstream csv;
        csv.precision(17);
        csv << "l_a,l_b\n";
        const int n = 101;
        for (int i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / (n - 1);
            csv << t * w.a << "," << (1.0 - t) * w.b << "\n";
        }
        const auto path = out_dir / "figure1.csv";
        write_text_file(path, csv.str());
        written.push_back(path);
    }

    std::vector<StructureOutcome> outcomes;
    for (PolicyStructure structure : config.structures)
        outcomes.push_back(solve_and_evaluate(pop, structure, config.objective, config.budget,
                                              config.density, config.quadrature));

    const auto emit_points = [&](std::ostringstream& csv) {
        for (const auto& agent : pop.agents())
            csv << "talents," << agent.t_a << "," << agent.t_b << "\n";
        for (const auto& outcome : outcomes) {
            if (!outcome.feasible) continue;
            for (const auto& a : outcome.allocation->agents)
                csv << to_string(outcome.structure) << "," << a.wages.a << "," << a.wages.b << "\n";
        }
    };

    if (config.objective == PolicyObjective::ResourceEq) {
        std::ostringstream csv;
        csv.precision(17);
        csv << "series,w_a,w_b\n";
        emit_points(csv);
        const auto path = out_dir / "figure2.csv";
        write_text_file(path, csv.str());
        written.push_back(path);
    } else {
        std::ostringstream csv;
        csv.precision(17);
        csv << "series,w_a,w_b\n";
        const StructureOutcome* two = nullptr;
        for (const auto& outcome : outcomes)
            if (outcome.structure == PolicyStructure::TwoSchool && outcome.feasible) two = &outcome;
        if (two) {
            // Sample the common level curve V^{-1}(k*) reached by the
            // two-school policy: for each fixed sector-b wage, invert along
            // the sector-a coordinate.
            const double level = two->allocation->level;
            const double b_intercept = invert_level_curve(level, 0.0, Sector::B, config.density,
                                                          config.quadrature);
            for (int i = 0; i < config.level_grid; ++i) {
                const double fixed = b_intercept * static_cast<double>(i) / (config.level_grid - 1);
                double x = 0.0;
                try {
                    x = invert_level_curve(level, fixed, Sector::A, config.density,
                                           config.quadrature);
                } catch (const InfeasibleLevelError&) {
                    continue;  // fixed wage already above the curve
                }
                csv << "level_curve," << x << "," << fixed << "\n";
            }
        }
        emit_points(csv);
        const auto path = out_dir / "figure3.csv";
        write_text_file(path, csv.str());
        written.push_back(path);
    }
    return written;
}

}  // namespace edupol
