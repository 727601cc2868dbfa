#include "nscc/config.hpp"
#include "nscc/errors.hpp"
#include "nscc/reporting.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct CliOverrides {
    uint64_t seed = 0;
    int draws = 0;
    double prtp = 0.0;
    double rra = 0.0;
    double epsilon = 0.0;
    std::string damage_fn;
    int threads = 0;
    std::string output_dir;
};

void add_common_options(CLI::App* cmd, std::string& config_path, CliOverrides& overrides) {
    cmd->add_option("--config", config_path, "JSON run configuration")->required();
    cmd->add_option("--seed", overrides.seed, "override the Monte Carlo master seed");
    cmd->add_option("--draws", overrides.draws, "override the Monte Carlo draw count");
    cmd->add_option("--prtp", overrides.prtp, "override the pure rate of time preference");
    cmd->add_option("--rra", overrides.rra, "override relative risk aversion");
    cmd->add_option("--epsilon", overrides.epsilon, "override the income-elasticity exponent");
    cmd->add_option("--damage-fn", overrides.damage_fn,
                    "damage model: sectoral, mixture, or a named form");
    cmd->add_option("--threads", overrides.threads, "worker threads (0 = hardware)");
    cmd->add_option("--output-dir", overrides.output_dir, "override the output directory");
}

nscc::RunConfig load_with_overrides(const CLI::App* cmd, const std::string& config_path,
                                    const CliOverrides& overrides) {
    nscc::RunConfig config = nscc::load_run_config(config_path);
    if (cmd->count("--seed") > 0) config.uncertainty.master_seed = overrides.seed;
    if (cmd->count("--draws") > 0) {
        if (overrides.draws < 0) throw nscc::ConfigError("--draws must be >= 0");
        config.uncertainty.draw_count = overrides.draws;
    }
    // An explicit preference pair collapses the reporting grid to that pair.
    if (cmd->count("--prtp") > 0) {
        config.preferences.prtp = overrides.prtp;
        config.preference_grid = {config.preferences};
    }
    if (cmd->count("--rra") > 0) {
        config.preferences.rra = overrides.rra;
        config.preference_grid = {config.preferences};
    }
    if (cmd->count("--epsilon") > 0) config.income_elasticity = overrides.epsilon;
    if (cmd->count("--damage-fn") > 0) {
        if (overrides.damage_fn == "sectoral") {
            config.damage_model.kind = nscc::DamageModelKind::Sectoral;
        } else if (overrides.damage_fn == "mixture" || overrides.damage_fn == "bma") {
            config.damage_model.kind = nscc::DamageModelKind::Mixture;
        } else {
            config.damage_model.kind = nscc::DamageModelKind::Aggregate;
            config.damage_model.form = nscc::parse_damage_form(overrides.damage_fn);
        }
    }
    if (cmd->count("--threads") > 0) config.threads = overrides.threads;
    if (cmd->count("--output-dir") > 0) config.output_dir = overrides.output_dir;
    config.validate();
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"national social cost of carbon toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    CliOverrides overrides;
    std::vector<std::string> compare_forms;

    CLI::App* calibrate = app.add_subcommand("calibrate", "fit national impact parameters");
    CLI::App* run = app.add_subcommand("run", "simulate the baseline world");
    CLI::App* scc = app.add_subcommand("scc", "national SCCs over the preference grid");
    CLI::App* montecarlo = app.add_subcommand("montecarlo", "uncertainty run at one preference");
    CLI::App* compare =
        app.add_subcommand("compare-damage-functions", "global sums per damage function");
    CLI::App* diagnostics =
        app.add_subcommand("diagnostics", "covariate, correlation, and elasticity tables");

    for (CLI::App* cmd : {calibrate, run, scc, montecarlo, compare, diagnostics}) {
        add_common_options(cmd, config_path, overrides);
    }
    compare->add_option("--form", compare_forms,
                        "form to include (repeatable); default compares all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(nscc::kExitConfigError);
    }

    try {
        const CLI::App* active = app.get_subcommands().front();
        const nscc::RunConfig config = load_with_overrides(active, config_path, overrides);
        if (active == calibrate) {
            nscc::cmd_calibrate(config);
        } else if (active == run) {
            nscc::cmd_run(config);
        } else if (active == scc) {
            nscc::cmd_scc(config);
        } else if (active == montecarlo) {
            nscc::cmd_montecarlo(config);
        } else if (active == compare) {
            nscc::cmd_compare_damage_functions(config, compare_forms);
        } else if (active == diagnostics) {
            nscc::cmd_diagnostics(config);
        }
        return static_cast<int>(nscc::kExitOk);
    } catch (const nscc::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return static_cast<int>(nscc::kExitConfigError);
    } catch (const nscc::CalibrationError& e) {
        std::fprintf(stderr, "calibration error: %s\n", e.what());
        return static_cast<int>(nscc::kExitCalibrationError);
    } catch (const nscc::EngineError& e) {
        std::fprintf(stderr, "engine error: %s\n", e.what());
        return static_cast<int>(nscc::kExitEngineError);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(nscc::kExitEngineError);
    }
}
