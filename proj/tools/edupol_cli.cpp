#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edupol/certify.hpp"
#include "edupol/experiment.hpp"

namespace {

int run_command(const std::string& config_path) {
    const auto config = edupol::load_config(config_path);
    const auto result = edupol::run_experiment(config);
    std::printf("report written to %s\n", result.report_path.string().c_str());
    for (const auto& policy : result.report.at("policies")) {
        const std::string structure = policy.at("structure");
        if (policy.at("feasible").get<bool>())
            std::printf("  %-13s level=%.9g cost=%.9g maximin=%.9g\n", structure.c_str(),
                        policy.at("level").get<double>(), policy.at("total_cost").get<double>(),
                        policy.at("maximin").get<double>());
        else
            std::printf("  %-13s infeasible: %s\n", structure.c_str(),
                        policy.at("error").get<std::string>().c_str());
    }
    return result.exit_code;
}

int figures_command(const std::string& config_path) {
    const auto config = edupol::load_config(config_path);
    const auto written = edupol::emit_figure_data(config);
    for (const auto& path : written) std::printf("wrote %s\n", path.string().c_str());
    return 0;
}

int verify_command(std::uint64_t trials, std::vector<std::uint64_t> seeds) {
    struct NamedDensity {
        const char* label;
        edupol::TasteDensity density;
    };
    const NamedDensity densities[] = {
        {"uniform", edupol::TasteDensity::uniform()},
        {"endogenous_beta(kappa=1)", edupol::TasteDensity::endogenous_beta(1.0)},
        {"endogenous_beta(kappa=5)", edupol::TasteDensity::endogenous_beta(5.0)},
    };

    bool all_passed = true;
    for (const auto& [label, density] : densities) {
        for (std::uint64_t seed : seeds) {
            std::printf("%s seed=%llu:\n", label, static_cast<unsigned long long>(seed));
            for (const auto& cert : edupol::certify_all(density, trials, seed)) {
                std::printf("  %-24s %s  trials=%llu violations=%zu worst_slack=%.3e\n",
                            cert.property.c_str(), cert.passed ? "PASS" : "FAIL",
                            static_cast<unsigned long long>(cert.trials), cert.violations.size(),
                            cert.worst_slack);
                if (!cert.passed) {
                    all_passed = false;
                    const auto& v = cert.violations.front();
                    std::printf("    first violation: trial %llu inputs=(%g, %g | %g, %g | %g) "
                                "lhs=%.12g rhs=%.12g\n",
                                static_cast<unsigned long long>(v.trial), v.inputs[0], v.inputs[1],
                                v.inputs[2], v.inputs[3], v.inputs[4], v.lhs, v.rhs);
                }
            }
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sector education policy model: solvers, welfare comparisons, and "
                 "numerical certificates"};
    app.require_subcommand(1);

    std::string run_config;
    auto* run = app.add_subcommand("run", "solve the configured policies and write a JSON report");
    run->add_option("config", run_config, "experiment config file (JSON)")->required();

    std::string figures_config;
    auto* figures = app.add_subcommand("figures", "emit figure data as CSV files");
    figures->add_option("config", figures_config, "experiment config file (JSON)")->required();

    std::string verify_config;
    std::uint64_t trials = 5000;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run the property certificates for the shipped "
                                                "taste densities");
    verify->add_option("config", verify_config, "optional JSON with {trials, seeds}");
    auto* trials_opt =
        verify->add_option("--trials", trials, "trials per certificate")->check(CLI::PositiveNumber);
    auto* seed_opt = verify->add_option("--seed", seed, "rng seed (overrides config seeds)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(run_config);
        if (figures->parsed()) return figures_command(figures_config);

        std::vector<std::uint64_t> seeds = {1};
        if (!verify_config.empty()) {
            std::ifstream in(verify_config);
            if (!in) throw edupol::ConfigError("cannot open config file: " + verify_config);
            nlohmann::json j;
            in >> j;
            if (j.contains("trials") && trials_opt->count() == 0)
                trials = j.at("trials").get<std::uint64_t>();
            if (j.contains("seeds")) seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        }
        if (seed_opt->count() > 0) seeds = {seed};
        return verify_command(trials, seeds);
    } catch (const edupol::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
