#pragma once

#include "nscc/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nscc {

// National SCC boundary, US$/tCO2; values beyond it are clamped.
constexpr double kNsccClampUsd = 200.0;
constexpr double kTco2PerTc = 44.0 / 12.0;

// Tonnes of the pulsed gas represented by one PulseSpec (t CO2 for carbon).
double pulse_tonnes(const PulseSpec& pulse);

// Country table, drivers, and calibration bundled after load-time checks.
struct ModelInputs {
    CountryTable countries;
    ScenarioSet scenario; // annualized and extended one year past the horizon
    bool has_calibration = false;
    CalibratedImpacts impacts;
    std::vector<std::string> warnings; // coverage and extrapolation notes
};

ModelInputs load_model_inputs(const RunConfig& config);

// Per-run model parameters; the Monte Carlo layer perturbs a copy per draw.
struct WorldParams {
    EconomyParams economy;
    ClimateParams climate;
    DamageModelConfig damage_model;
    bool has_impacts = false;
    CalibratedImpacts impacts;
    double income_elasticity = 0.0;
    // Additive offset on log population per year index (0 = base year);
    // empty means no perturbation.
    std::vector<double> population_log_offset;
};

WorldParams world_params_from(const RunConfig& config, const ModelInputs& inputs);

// One full world run: every country-year state (after floors), impact
// breakdowns, climate states, and world aggregates.
struct Trajectory {
    int base_year = 0;
    std::vector<int> years;
    std::vector<std::string> isos; // country order matches the table
    std::vector<std::vector<CountryState>> states;     // [country][year]
    std::vector<std::vector<ImpactBreakdown>> impacts; // [country][year]
    std::vector<ClimateState> climate;                 // [year]
    std::vector<EmissionsVector> world_emissions;      // [year]
    std::vector<double> world_consumption_pc;          // US$/person/yr

    size_t year_index(int year) const;
    size_t country_index(const std::string& iso) const;
    // Market plus non-market damages, US$/yr, for one country.
    std::vector<double> damage_path(size_t country) const;
    // Per-capita consumption path for one country.
    std::vector<double> consumption_pc_path(size_t country) const;
};

// Year loop: economy -> floors -> emissions -> climate -> impacts, with
// market damages fed back into next year's production. The optional pulse
// adds emissions in its year.
Trajectory run_world(const CountryTable& countries, const ScenarioSet& scenario,
                     const RunConfig& config, const WorldParams& world,
                     const PulseSpec* pulse = nullptr, const FloorLogger& floor_log = nullptr);

// DF(t) = (1+prtp)^-(t - base) * (c(base)/c(t))^rra, indexed like the input.
std::vector<double> discount_factors(const std::vector<double>& consumption_per_capita,
                                     const PreferenceParams& prefs, size_t base_index);

struct NsccOptions {
    DiscountingMode discounting = DiscountingMode::NationalConsumption;
    double epsilon = 0.0;              // income-elasticity reweighting exponent
    double country_base_income = 1.0;  // US$/person/yr
    double world_base_income = 1.0;    // US$/person/yr
};

// Present value at eval_year of the pulse-minus-baseline damage stream,
// discounted with baseline-run consumption, per tonne pulsed. Unclamped.
double nscc(const Trajectory& baseline, const Trajectory& pulsed, size_t country,
            const PreferenceParams& prefs, const PulseSpec& pulse, int eval_year,
            const NsccOptions& options);

double clamp_nscc(double value);
double sum_nscc(const std::vector<double>& values);

struct NsccVector {
    std::vector<double> values;   // per country, table order, clamped
    std::vector<uint8_t> clamped; // 1 where the clamp bound was hit
    double sum() const;
    int clamp_count() const;
};

NsccVector nscc_all_countries(const Trajectory& baseline, const Trajectory& pulsed,
                              const CountryTable& table, const RunConfig& config,
                              const PreferenceParams& prefs, const PulseSpec& pulse,
                              int eval_year);

// Collapses the world into one country (summed population, GDP, and exposure;
// GDP-weighted temperature pattern and drivers; benchmarks summed across
// regions), reruns the pipeline, and returns that run's SCC.
double global_scc_single_region(const ModelInputs& inputs, const RunConfig& config,
                                const PreferenceParams& prefs, int eval_year);

struct MonteCarloResult {
    PreferenceParams preferences;
    PulseSpec pulse{};
    uint64_t seed = 0;
    int eval_year = 0;
    int requested_draws = 0;
    int failed_draws = 0;

    std::vector<std::string> isos;
    std::vector<double> deterministic; // clamped companion run at medians
    std::vector<std::vector<double>> draws; // [country][successful draw], clamped
    std::vector<double> mean;
    std::vector<double> sd;
    std::vector<double> p5;
    std::vector<double> p95;
    std::vector<int> clamp_count; // per country, across draws

    double global_sum_mean = 0.0;
    double global_sum_deterministic = 0.0;
    int total_clamps = 0;
};

// Independent substream per draw; draws run in parallel but are reduced in
// index order, so results are identical for any worker count.
MonteCarloResult monte_carlo_scc(const ModelInputs& inputs, const RunConfig& config,
                                 const PreferenceParams& prefs, int eval_year);

// Sample quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

} // namespace nscc
