#include "nscc/reporting.hpp"

#include "nscc/csv.hpp"
#include "nscc/engine.hpp"
#include "nscc/errors.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

using nlohmann::json;

namespace nscc {
namespace {

std::string output_path(const RunConfig& config, const std::string& name) {
    std::filesystem::create_directories(config.output_dir);
    return (std::filesystem::path(config.output_dir) / name).string();
}

std::string pref_suffix(const PreferenceParams& prefs) {
    return "prtp" + csv::format_number(prefs.prtp) + "_rra" + csv::format_number(prefs.rra);
}

class Stopwatch {
  public:
    double seconds() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_manifest(const RunConfig& config, const std::string& command, double seconds,
                    const std::vector<std::string>& warnings, const json& extra) {
    json manifest;
    manifest["run_name"] = config.run_name;
    manifest["command"] = command;
    manifest["config_hash"] = config_hash(config);
    manifest["seed"] = config.uncertainty.master_seed;
    manifest["timing_seconds"] = seconds;
    manifest["warnings"] = warnings;
    for (const auto& item : extra.items()) manifest[item.key()] = item.value();

    std::ofstream out(output_path(config, "run_manifest.json"));
    if (!out) throw EngineError("cannot write run manifest");
    out << manifest.dump(2) << "\n";
}

// Echoes loader warnings so truncated inputs are visible on the console.
void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& warning : warnings) {
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }
}

} // namespace

void cmd_calibrate(const RunConfig& config) {
    Stopwatch timer;
    if (config.benchmarks_path.empty()) {
        throw ConfigError("calibrate requires inputs.benchmarks");
    }
    ModelInputs inputs = load_model_inputs(config);
    print_warnings(inputs.warnings);

    csv::Table params;
    params.header = {"iso", "sector", "alpha", "income_elasticity", "co2_fertilization"};
    for (const auto& record : inputs.countries.records()) {
        const CountrySectorParams& country = inputs.impacts.for_country(record.iso_code);
        for (size_t s = 0; s < kSectorCount; ++s) {
            params.rows.push_back({record.iso_code, sector_name(static_cast<Sector>(s)),
                                   csv::format_number(country[s].alpha),
                                   csv::format_number(country[s].income_elasticity),
                                   csv::format_number(country[s].co2_fertilization)});
        }
    }
    csv::write_file(output_path(config, "calibration.csv"), params);

    csv::Table scales;
    scales.header = {"region", "sector", "scale", "provisional_sum_usd", "benchmark_usd",
                     "residual_rel"};
    for (const auto& scale : inputs.impacts.scales) {
        // Residual check: re-evaluate the calibrated national impacts at the
        // reference warming and compare against the benchmark.
        double calibrated_sum = 0.0;
        for (const auto& record : inputs.countries.records()) {
            if (record.region_id != scale.region) continue;
            const ImpactInputs ref = reference_inputs(kCalibrationWarming, record, config.climate);
            calibrated_sum += sector_impact(
                scale.sector, ref, record,
                inputs.impacts.for_country(record.iso_code)[static_cast<int>(scale.sector)]);
        }
        const double residual =
            std::abs(calibrated_sum - scale.benchmark) / std::max(1.0, std::abs(scale.benchmark));
        scales.rows.push_back({scale.region, sector_name(scale.sector),
                               csv::format_number(scale.scale),
                               csv::format_number(scale.provisional_sum),
                               csv::format_number(scale.benchmark),
                               csv::format_number(residual)});
    }
    csv::write_file(output_path(config, "calibration_scales.csv"), scales);

    write_manifest(config, "calibrate", timer.seconds(), inputs.warnings,
                   {{"countries", inputs.countries.size()},
                    {"regions_by_sector_rows", inputs.impacts.scales.size()}});
}

void cmd_run(const RunConfig& config) {
    Stopwatch timer;
    ModelInputs inputs = load_model_inputs(config);
    print_warnings(inputs.warnings);
    const WorldParams world = world_params_from(config, inputs);

    csv::Table floor_events;
    floor_events.header = {"iso", "year", "event"};
    const FloorLogger log = [&floor_events](const std::string& iso, int year,
                                            const std::string& what) {
        floor_events.rows.push_back({iso, std::to_string(year), what});
    };

    const Trajectory traj = run_world(inputs.countries, inputs.scenario, config, world, nullptr,
                                      log);

    csv::Table states;
    states.header = {"iso",         "year",        "population",       "tfp",
                     "capital",     "gross_output", "net_output",      "consumption",
                     "investment",  "per_capita_income", "market_damage_usd",
                     "nonmarket_damage_usd", "national_temp_c"};
    for (size_t c = 0; c < traj.isos.size(); ++c) {
        const CountryRecord& record = inputs.countries.records()[c];
        for (size_t yi = 0; yi < traj.years.size(); ++yi) {
            const CountryState& s = traj.states[c][yi];
            const ImpactBreakdown& b = traj.impacts[c][yi];
            states.rows.push_back(
                {traj.isos[c], std::to_string(traj.years[yi]),
                 csv::format_number(s.population), csv::format_number(s.tfp),
                 csv::format_number(s.capital), csv::format_number(s.gross_output),
                 csv::format_number(s.net_output), csv::format_number(s.consumption),
                 csv::format_number(s.investment), csv::format_number(s.per_capita_income),
                 csv::format_number(b.market_usd), csv::format_number(b.nonmarket_usd),
                 csv::format_number(
                     national_temperature(traj.climate[yi].t_global, record))});
        }
    }
    csv::write_file(output_path(config, "trajectory.csv"), states);

    csv::Table climate;
    climate.header = {"year",      "co2_ppm",   "ch4_ppb",       "n2o_ppb",
                      "sf6_ppt",   "cfc11_ppt", "cfc12_ppt",     "forcing_wm2",
                      "t_global_c", "sea_level_m", "co2_emissions_gtc", "ch4_emissions_mt",
                      "n2o_emissions_mt", "sf6_emissions_kt", "so2_emissions_mts"};
    for (size_t yi = 0; yi < traj.years.size(); ++yi) {
        const ClimateState& cs = traj.climate[yi];
        const EmissionsVector& e = traj.world_emissions[yi];
        climate.rows.push_back(
            {std::to_string(traj.years[yi]), csv::format_number(cs.co2_ppm),
             csv::format_number(cs.ch4_ppb), csv::format_number(cs.n2o_ppb),
             csv::format_number(cs.sf6_ppt), csv::format_number(cs.cfc11_ppt),
             csv::format_number(cs.cfc12_ppt), csv::format_number(cs.forcing),
             csv::format_number(cs.t_global), csv::format_number(cs.sea_level),
             csv::format_number(e.co2), csv::format_number(e.ch4), csv::format_number(e.n2o),
             csv::format_number(e.sf6), csv::format_number(e.so2)});
    }
    csv::write_file(output_path(config, "climate.csv"), climate);
    csv::write_file(output_path(config, "floor_events.csv"), floor_events);

    write_manifest(config, "run", timer.seconds(), inputs.warnings,
                   {{"countries", inputs.countries.size()},
                    {"years", traj.years.size()},
                    {"floor_events", floor_events.rows.size()}});
}

void cmd_scc(const RunConfig& config) {
    Stopwatch timer;
    ModelInputs inputs = load_model_inputs(config);
    print_warnings(inputs.warnings);
    const WorldParams world = world_params_from(config, inputs);
    const bool with_uncertainty = config.uncertainty.draw_count > 0;

    const Trajectory baseline = run_world(inputs.countries, inputs.scenario, config, world);

    csv::Table sums;
    sums.header = {"eval_year", "prtp", "rra", "sum_nscc_det", "single_region_scc_det",
                   "sum_nscc_mc"};
    int total_clamps = 0;
    int total_failed = 0;

    for (int eval_year : config.eval_years) {
        const PulseSpec pulse{eval_year, config.pulse_gas, config.pulse_size_gtc};
        const Trajectory pulsed =
            run_world(inputs.countries, inputs.scenario, config, world, &pulse);

        csv::Table table;
        table.header = {"iso", "name"};
        std::vector<std::vector<std::string>> columns;
        for (const PreferenceParams& prefs : config.preference_grid) {
            const NsccVector det = nscc_all_countries(baseline, pulsed, inputs.countries, config,
                                                      prefs, pulse, eval_year);
            total_clamps += det.clamp_count();
            table.header.push_back("det_" + pref_suffix(prefs));
            std::vector<std::string> det_col;
            for (double v : det.values) det_col.push_back(csv::format_number(v));
            columns.push_back(std::move(det_col));

            std::string mc_sum_cell;
            if (with_uncertainty) {
                const MonteCarloResult mc = monte_carlo_scc(inputs, config, prefs, eval_year);
                total_clamps += mc.total_clamps;
                total_failed += mc.failed_draws;
                table.header.push_back("mc_" + pref_suffix(prefs));
                std::vector<std::string> mc_col;
                for (double v : mc.mean) mc_col.push_back(csv::format_number(v));
                columns.push_back(std::move(mc_col));
                mc_sum_cell = csv::format_number(mc.global_sum_mean);
            }

            const double single_region =
                global_scc_single_region(inputs, config, prefs, eval_year);
            sums.rows.push_back({std::to_string(eval_year), csv::format_number(prefs.prtp),
                                 csv::format_number(prefs.rra), csv::format_number(det.sum()),
                                 csv::format_number(single_region), mc_sum_cell});
        }

        for (size_t c = 0; c < inputs.countries.size(); ++c) {
            const CountryRecord& record = inputs.countries.records()[c];
            std::vector<std::string> row = {record.iso_code, record.name};
            for (const auto& column : columns) row.push_back(column[c]);
            table.rows.push_back(std::move(row));
        }
        csv::write_file(output_path(config, "nscc_" + std::to_string(eval_year) + ".csv"), table);
    }
    csv::write_file(output_path(config, "global_sums.csv"), sums);

    write_manifest(config, "scc", timer.seconds(), inputs.warnings,
                   {{"draws_per_cell", config.uncertainty.draw_count},
                    {"clamp_count", total_clamps},
                    {"failed_draws", total_failed},
                    {"eval_years", config.eval_years},
                    {"preference_grid_size", config.preference_grid.size()}});
}

void cmd_montecarlo(const RunConfig& config) {
    Stopwatch timer;
    if (config.uncertainty.draw_count < 1) {
        throw ConfigError("montecarlo requires uncertainty.draws >= 1");
    }
    ModelInputs inputs = load_model_inputs(config);
    print_warnings(inputs.warnings);

    int total_clamps = 0;
    int total_failed = 0;
    for (int eval_year : config.eval_years) {
        const MonteCarloResult mc =
            monte_carlo_scc(inputs, config, config.preferences, eval_year);
        total_clamps += mc.total_clamps;
        total_failed += mc.failed_draws;

        csv::Table table;
        table.header = {"iso",  "deterministic", "mean", "sd",
                        "p5",   "p95",           "clamp_count", "draws_used"};
        for (size_t c = 0; c < mc.isos.size(); ++c) {
            table.rows.push_back({mc.isos[c], csv::format_number(mc.deterministic[c]),
                                  csv::format_number(mc.mean[c]), csv::format_number(mc.sd[c]),
                                  csv::format_number(mc.p5[c]), csv::format_number(mc.p95[c]),
                                  std::to_string(mc.clamp_count[c]),
                                  std::to_string(mc.draws[c].size())});
        }
        csv::write_file(
            output_path(config, "montecarlo_" + std::to_string(eval_year) + ".csv"), table);
    }

    write_manifest(config, "montecarlo", timer.seconds(), inputs.warnings,
                   {{"draws", config.uncertainty.draw_count},
                    {"failed_draws", total_failed},
                    {"clamp_count", total_clamps},
                    {"prtp", config.preferences.prtp},
                    {"rra", config.preferences.rra}});
}

void cmd_compare_damage_functions(const RunConfig& config,
                                  const std::vector<std::string>& requested) {
    Stopwatch timer;

    std::vector<std::string> forms = requested;
    if (forms.empty()) {
        for (size_t i = 0; i < kDamageFormCount; ++i) {
            forms.push_back(damage_form_name(static_cast<DamageForm>(i)));
        }
        forms.push_back("mixture");
        if (!config.benchmarks_path.empty()) forms.push_back("sectoral");
    }

    // Validate names before any heavy work.
    for (const std::string& name : forms) {
        if (name != "mixture" && name != "bma" && name != "sectoral") parse_damage_form(name);
        if (name == "sectoral" && config.benchmarks_path.empty()) {
            throw ConfigError("sectoral comparison requires inputs.benchmarks");
        }
    }

    ModelInputs inputs = load_model_inputs(config);
    print_warnings(inputs.warnings);
    const int eval_year = config.eval_years.front();
    const PreferenceParams& prefs = config.preferences;

    csv::Table table;
    table.header = {"form", "expression", "sum_nscc_usd_per_tco2"};
    for (const std::string& name : forms) {
        RunConfig variant = config;
        std::string expression;
        if (name == "sectoral") {
            variant.damage_model.kind = DamageModelKind::Sectoral;
            expression = "calibrated sector impacts";
        } else if (name == "mixture" || name == "bma") {
            variant.damage_model.kind = DamageModelKind::Mixture;
            expression = "weighted mean of the first 8 forms";
        } else {
            variant.damage_model.kind = DamageModelKind::Aggregate;
            variant.damage_model.form = parse_damage_form(name);
            expression = damage_form_expression(variant.damage_model.form);
        }
        const WorldParams world = world_params_from(variant, inputs);
        const PulseSpec pulse{eval_year, variant.pulse_gas, variant.pulse_size_gtc};
        const Trajectory baseline = run_world(inputs.countries, inputs.scenario, variant, world);
        const Trajectory pulsed =
            run_world(inputs.countries, inputs.scenario, variant, world, &pulse);
        const NsccVector det = nscc_all_countries(baseline, pulsed, inputs.countries, variant,
                                                  prefs, pulse, eval_year);
        table.rows.push_back({name, expression, csv::format_number(det.sum())});
    }
    csv::write_file(output_path(config, "damage_function_comparison.csv"), table);

    write_manifest(config, "compare-damage-functions", timer.seconds(), inputs.warnings,
                   {{"forms", forms}, {"eval_year", eval_year}});
}

void cmd_diagnostics(const RunConfig& config) {
    ModelInputs inputs = load_model_inputs(config);
    print_warnings(inputs.warnings);

    const auto nscc_file = [&config](int year) {
        return output_path(config, "nscc_" + std::to_string(year) + ".csv");
    };
    const int first_year = config.eval_years.front();
    if (!std::filesystem::exists(nscc_file(first_year))) {
        throw ConfigError("missing " + nscc_file(first_year) + "; run the scc command first");
    }
    const csv::Table results = csv::read_file(nscc_file(first_year));
    const std::string column = "det_" + pref_suffix(config.preferences);
    const int value_col = results.column(column);
    const int iso_col = results.column("iso");
    if (value_col < 0 || iso_col < 0) {
        throw ConfigError(nscc_file(first_year) + ": missing column '" + column + "'");
    }

    std::map<std::string, double> nscc_by_iso;
    for (const auto& row : results.rows) {
        nscc_by_iso[row[iso_col]] =
            csv::parse_number(row[value_col], nscc_file(first_year) + " " + column);
    }

    std::vector<double> nscc_values, population, gdp, income, temperature;
    csv::Table covariates;
    covariates.header = {"iso", "nscc_usd_per_tco2", "population", "gdp", "gdp_per_capita",
                         "base_temperature"};
    for (const auto& record : inputs.countries.records()) {
        const auto it = nscc_by_iso.find(record.iso_code);
        if (it == nscc_by_iso.end()) {
            throw ConfigError("results are missing country '" + record.iso_code + "'");
        }
        nscc_values.push_back(it->second);
        population.push_back(record.base_population);
        gdp.push_back(record.base_gdp);
        income.push_back(record.base_income_per_capita());
        temperature.push_back(record.base_temperature);
        covariates.rows.push_back({record.iso_code, csv::format_number(it->second),
                                   csv::format_number(record.base_population),
                                   csv::format_number(record.base_gdp),
                                   csv::format_number(record.base_income_per_capita()),
                                   csv::format_number(record.base_temperature)});
    }
    csv::write_file(output_path(config, "diagnostics_covariates.csv"), covariates);

    csv::Table correlations;
    correlations.header = {"covariate", "pearson_r"};
    correlations.rows.push_back(
        {"population", csv::format_number(pearson_correlation(nscc_values, population))});
    correlations.rows.push_back({"gdp", csv::format_number(pearson_correlation(nscc_values, gdp))});
    correlations.rows.push_back(
        {"gdp_per_capita", csv::format_number(pearson_correlation(nscc_values, income))});
    correlations.rows.push_back(
        {"base_temperature", csv::format_number(pearson_correlation(nscc_values, temperature))});
    csv::write_file(output_path(config, "diagnostics_correlations.csv"), correlations);

    // The elasticity factor is multiplicative, so the sweep rescales the
    // stored values from the configured exponent to each sweep point.
    const double world_income = inputs.countries.world_income_per_capita();
    csv::Table sweep;
    sweep.header = {"epsilon", "sum_nscc", "below_avg_income_share", "above_avg_income_share"};
    const double sweep_points[] = {-1.0, -0.36, 0.0, 0.36, 1.0};
    for (double epsilon : sweep_points) {
        double total = 0.0;
        double below = 0.0;
        for (size_t c = 0; c < nscc_values.size(); ++c) {
            const double factor =
                std::pow(income[c] / world_income, epsilon - config.income_elasticity);
            const double adjusted = nscc_values[c] * factor;
            total += adjusted;
            if (income[c] < world_income) below += adjusted;
        }
        const double below_share = total != 0.0 ? below / total : 0.0;
        sweep.rows.push_back({csv::format_number(epsilon), csv::format_number(total),
                              csv::format_number(below_share),
                              csv::format_number(total != 0.0 ? 1.0 - below_share : 0.0)});
    }
    csv::write_file(output_path(config, "epsilon_sweep.csv"), sweep);

    if (config.emit_change_table && config.eval_years.size() >= 2) {
        const int second_year = config.eval_years[1];
        if (!std::filesystem::exists(nscc_file(second_year))) {
            throw ConfigError("missing " + nscc_file(second_year) + "; run the scc command first");
        }
        const csv::Table later = csv::read_file(nscc_file(second_year));
        const int later_col = later.column(column);
        const int later_iso = later.column("iso");
        if (later_col < 0 || later_iso < 0) {
            throw ConfigError(nscc_file(second_year) + ": missing column '" + column + "'");
        }
        std::map<std::string, double> later_by_iso;
        for (const auto& row : later.rows) {
            later_by_iso[row[later_iso]] =
                csv::parse_number(row[later_col], nscc_file(second_year) + " " + column);
        }
        csv::Table change;
        change.header = {"iso", "nscc_" + std::to_string(first_year),
                         "nscc_" + std::to_string(second_year), "relative_change"};
        for (const auto& record : inputs.countries.records()) {
            const double early = nscc_by_iso.at(record.iso_code);
            const auto it = later_by_iso.find(record.iso_code);
            if (it == later_by_iso.end()) {
                throw ConfigError("results are missing country '" + record.iso_code + "'");
            }
            // Relative change keeps the sign of the move and normalizes by
            // magnitude; undefined when the early value is zero.
            const std::string rel =
                early != 0.0 ? csv::format_number((it->second - early) / std::abs(early)) : "";
            change.rows.push_back({record.iso_code, csv::format_number(early),
                                   csv::format_number(it->second), rel});
        }
        csv::write_file(output_path(config, "nscc_change.csv"), change);
    }
}

} // namespace nscc
