#pragma once

#include "nscc/climate.hpp"
#include "nscc/economy.hpp"
#include "nscc/emissions.hpp"
#include "nscc/impacts.hpp"
#include "nscc/scenario.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nscc {

struct PreferenceParams {
    double prtp = 0.03; // pure rate of time preference, 1/yr
    double rra = 1.0;   // relative risk aversion / elasticity of marginal utility

    void validate() const;
};

// Which consumption path feeds the Ramsey discount factor.
enum class DiscountingMode { NationalConsumption, GlobalConsumption };

enum class DamageModelKind { Sectoral, Aggregate, Mixture };

struct DamageModelConfig {
    DamageModelKind kind = DamageModelKind::Sectoral;
    DamageForm form = DamageForm::Nordhaus; // used when kind == Aggregate
    std::array<DamageFunctionSpec, kDamageFormCount> specs; // coefficient table
    std::array<double, kBmaFormCount> mixture_weights;      // default uniform
    // Aggregate-form damages normally reduce output like market impacts; off,
    // they are valued as welfare losses with no growth feedback.
    bool aggregate_is_market = true;

    DamageModelConfig();
    void validate() const;
};

struct UncertaintyConfig {
    int draw_count = 1000;
    uint64_t master_seed = 42;
    double ecs_median = 3.0;    // deg C
    double ecs_sigma_log = 0.25;
    // Calibrated sector alphas are scaled by a truncated-normal multiplier.
    double alpha_relative_sd = 0.3;
    double alpha_min_multiplier = 0.0;
    double alpha_max_multiplier = 3.0;
    // AR(1) perturbation on annual population log-growth.
    double population_growth_persistence = 0.9;
    double population_growth_sd = 0.0;
    double max_failed_draw_fraction = 0.01;

    void validate() const;
};

// Base-year world emissions used to back out uniform emission intensities.
struct WorldBaseEmissions {
    double co2_gtc = 10.0;
    double ch4_mt = 380.0;
    double n2o_mt = 10.0;
    double sf6_kt = 9.0;
    double so2_mts = 40.0;

    double get(Gas gas) const;
};

struct InitialClimate {
    double co2_ppm = 410.0;
    double ch4_ppb = 1866.0;
    double n2o_ppb = 332.0;
    double sf6_ppt = 10.0;
    double t_global = 1.1; // deg C above preindustrial at the base year
};

struct RunConfig {
    std::string run_name = "run";
    std::string output_dir = "out";

    std::string countries_path;
    std::string benchmarks_path;
    ScenarioPaths scenario_paths;
    ScenarioOptions scenario_options;

    int base_year = 2019;
    int horizon = 2200;
    std::vector<int> eval_years = {2025, 2100};

    InitialClimate initial_climate;
    WorldBaseEmissions world_base_emissions;
    // Optional published world totals; empty disables the coverage check.
    std::map<std::string, double> world_reference_totals;

    EconomyParams economy;
    ClimateParams climate;
    SectorDefaultsTable sector_defaults = default_sector_table();

    PreferenceParams preferences;
    std::vector<PreferenceParams> preference_grid = {{0.01, 1.0}, {0.03, 1.0}, {0.03, 2.0}};
    DiscountingMode discounting = DiscountingMode::NationalConsumption;
    double income_elasticity = 0.0; // global damage reweighting exponent

    DamageModelConfig damage_model;

    double pulse_size_gtc = 0.001; // 1 MtC
    Gas pulse_gas = Gas::Co2;

    UncertaintyConfig uncertainty;

    int threads = 0; // 0 = hardware concurrency
    bool emit_change_table = false;

    void validate() const;
};

// Parses the JSON run config; relative input paths are resolved against the
// config file's directory. Unknown keys are rejected so typos surface early.
RunConfig load_run_config(const std::string& path);

// Canonical JSON rendering of the effective configuration (after CLI
// overrides); feeds the manifest and the hash.
std::string effective_config_json(const RunConfig& config);

// FNV-1a over the canonical config JSON plus the bytes of every referenced
// input file; changes iff a config field or input file changes.
std::string config_hash(const RunConfig& config);

uint64_t fnv1a(const std::string& data, uint64_t hash = 14695981039346656037ULL);

} // namespace nscc
