#include "nscc/engine.hpp"

#include "nscc/csv.hpp"
#include "nscc/errors.hpp"
#include "nscc/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace nscc {

double pulse_tonnes(const PulseSpec& pulse) {
    switch (pulse.gas) {
    case Gas::Co2: return pulse.size_gtc * 1e9 * kTco2PerTc; // GtC -> t CO2
    case Gas::Ch4:
    case Gas::N2o:
    case Gas::So2: return pulse.size_gtc * 1e6; // Mt -> t
    case Gas::Sf6: return pulse.size_gtc * 1e3; // kt -> t
    }
    throw EngineError("unknown pulse gas");
}

ModelInputs load_model_inputs(const RunConfig& config) {
    ModelInputs inputs;
    inputs.countries = load_country_table(config.countries_path);
    if (inputs.countries.size() == 0) {
        throw ConfigError(config.countries_path + ": country table is empty");
    }

    if (!config.world_reference_totals.empty()) {
        const ValidationReport report =
            validate_world_totals(inputs.countries, config.world_reference_totals);
        for (const auto& warning : report.warnings) {
            inputs.warnings.push_back("coverage: country " + warning.variable + " sums to " +
                                      csv::format_number(warning.coverage) +
                                      " of the referenced world total");
        }
    }

    if (config.damage_model.kind == DamageModelKind::Sectoral && config.benchmarks_path.empty()) {
        throw ConfigError("sectoral damage model requires inputs.benchmarks");
    }
    if (!config.benchmarks_path.empty()) {
        std::vector<std::string> regions;
        std::set<std::string> seen;
        for (const auto& record : inputs.countries.records()) {
            if (seen.insert(record.region_id).second) regions.push_back(record.region_id);
        }
        const RegionalBenchmarks benchmarks = load_benchmarks(config.benchmarks_path, regions);
        inputs.impacts = calibrate_national_params(benchmarks, inputs.countries,
                                                   config.sector_defaults, config.climate);
        inputs.has_calibration = true;
    }

    ScenarioSet scenario = load_scenario(config.scenario_paths, inputs.countries,
                                         config.scenario_options);
    if (scenario.first_year() > config.base_year) {
        throw ConfigError("scenario coverage starts in " + std::to_string(scenario.first_year()) +
                          ", after the base year " + std::to_string(config.base_year));
    }
    // One year past the horizon: the final economy step reads next-year
    // population.
    inputs.scenario = extend_scenario(scenario, config.horizon + 1, config.scenario_options,
                                      &inputs.warnings);
    return inputs;
}

WorldParams world_params_from(const RunConfig& config, const ModelInputs& inputs) {
    WorldParams world;
    world.economy = config.economy;
    world.climate = config.climate;
    world.damage_model = config.damage_model;
    world.has_impacts = inputs.has_calibration;
    if (inputs.has_calibration) world.impacts = inputs.impacts;
    world.income_elasticity = config.income_elasticity;
    return world;
}

size_t Trajectory::year_index(int year) const {
    if (year < base_year || year >= base_year + static_cast<int>(years.size())) {
        throw EngineError("year " + std::to_string(year) + " outside the simulated horizon");
    }
    return static_cast<size_t>(year - base_year);
}

size_t Trajectory::country_index(const std::string& iso) const {
    for (size_t i = 0; i < isos.size(); ++i) {
        if (isos[i] == iso) return i;
    }
    throw EngineError("country '" + iso + "' not present in the trajectory");
}

std::vector<double> Trajectory::damage_path(size_t country) const {
    std::vector<double> out(years.size());
    for (size_t yi = 0; yi < years.size(); ++yi) {
        out[yi] = impacts[country][yi].total_usd();
    }
    return out;
}

std::vector<double> Trajectory::consumption_pc_path(size_t country) const {
    std::vector<double> out(years.size());
    for (size_t yi = 0; yi < years.size(); ++yi) {
        const CountryState& s = states[country][yi];
        out[yi] = s.consumption / s.population;
    }
    return out;
}

namespace {

std::array<DamageFunctionSpec, kBmaFormCount> mixture_specs(const DamageModelConfig& model) {
    std::array<DamageFunctionSpec, kBmaFormCount> specs;
    for (size_t i = 0; i < kBmaFormCount; ++i) specs[i] = model.specs[i];
    return specs;
}

ImpactBreakdown evaluate_damages(const WorldParams& world, const CountryRecord& record,
                                 const CountryState& floored, const ClimateState& now,
                                 double prev_sea_level) {
    switch (world.damage_model.kind) {
    case DamageModelKind::Sectoral: {
        if (!world.has_impacts) {
            throw EngineError("sectoral damages requested without calibrated parameters");
        }
        ImpactInputs in;
        in.national_anomaly = national_temperature(now.t_global, record);
        in.log_co2_ratio = std::log(now.co2_ppm / world.climate.carbon.preindustrial_ppm);
        in.sea_level = now.sea_level;
        in.sea_level_rise = now.sea_level - prev_sea_level;
        in.gross_output = floored.gross_output;
        in.population = floored.population;
        in.per_capita_income = floored.per_capita_income;
        in.base_income = record.base_income_per_capita();
        return evaluate_impacts(in, record, world.impacts.for_country(record.iso_code));
    }
    case DamageModelKind::Aggregate:
    case DamageModelKind::Mixture: {
        const double fraction =
            world.damage_model.kind == DamageModelKind::Aggregate
                ? aggregate_damage_function(
                      world.damage_model.specs[static_cast<int>(world.damage_model.form)],
                      now.t_global)
                : bma_damage(mixture_specs(world.damage_model),
                             world.damage_model.mixture_weights, now.t_global);
        ImpactBreakdown out;
        const double usd = fraction * floored.gross_output;
        if (world.damage_model.aggregate_is_market) {
            out.market_usd = usd;
            out.market_fraction_of_gdp = fraction;
        } else {
            out.nonmarket_usd = usd;
        }
        return out;
    }
    }
    throw EngineError("unknown damage model kind");
}

} // namespace

Trajectory run_world(const CountryTable& countries, const ScenarioSet& scenario,
                     const RunConfig& config, const WorldParams& world, const PulseSpec* pulse,
                     const FloorLogger& floor_log) {
    const size_t n = countries.size();
    const int base = config.base_year;
    const int horizon = config.horizon;
    const size_t n_years = static_cast<size_t>(horizon - base + 1);

    Trajectory traj;
    traj.base_year = base;
    traj.years.resize(n_years);
    for (size_t yi = 0; yi < n_years; ++yi) traj.years[yi] = base + static_cast<int>(yi);
    traj.isos.reserve(n);
    for (const auto& record : countries.records()) traj.isos.push_back(record.iso_code);
    traj.states.assign(n, std::vector<CountryState>(n_years));
    traj.impacts.assign(n, std::vector<ImpactBreakdown>(n_years));
    traj.climate.resize(n_years);
    traj.world_emissions.resize(n_years);
    traj.world_consumption_pc.resize(n_years);

    // Uniform base intensities back out world emissions at base-year GDP.
    const double world_gdp = countries.total_gdp();
    IntensityVector base_intensity{};
    for (size_t g = 0; g < kGasCount; ++g) {
        base_intensity[g] = config.world_base_emissions.get(kAllGases[g]) / world_gdp;
    }
    std::vector<IntensityVector> intensity(n, base_intensity);

    const auto pop_offset = [&world](size_t yi) -> double {
        if (world.population_log_offset.empty()) return 0.0;
        if (yi < world.population_log_offset.size()) return world.population_log_offset[yi];
        return world.population_log_offset.back();
    };

    std::vector<CountryState> cur(n);
    std::vector<const CountrySeries*> series(n);
    std::vector<const CountryRecord*> records(n);
    for (size_t i = 0; i < n; ++i) {
        const CountryRecord& record = countries.records()[i];
        records[i] = &record;
        series[i] = &scenario.for_country(record.iso_code);
        cur[i] = initial_country_state(base, record.base_population, record.base_gdp,
                                       world.economy);
    }

    ClimateState prev = initial_climate_state(world.climate, config.initial_climate.co2_ppm,
                                              config.initial_climate.ch4_ppb,
                                              config.initial_climate.n2o_ppb,
                                              config.initial_climate.sf6_ppt,
                                              config.initial_climate.t_global);

    std::vector<double> damage_lag(n, 0.0);
    std::vector<CountryState> next(n);

    for (size_t yi = 0; yi < n_years; ++yi) {
        const int t = base + static_cast<int>(yi);

        for (size_t i = 0; i < n; ++i) {
            EconomyDrivers drivers;
            drivers.next_population =
                series[i]->population.at(t + 1) * std::exp(pop_offset(yi + 1));
            drivers.tfp_growth = series[i]->tfp_growth.at(t);
            drivers.savings_rate = series[i]->savings_rate.at(t);
            next[i] = step_economy(cur[i], world.economy, drivers, damage_lag[i],
                                   records[i]->iso_code);
            const CountryState floored = apply_floors(cur[i], records[i]->iso_code, floor_log);
            // Floors rescale investment, so next year's capital follows the
            // floored flow.
            next[i].capital =
                (1.0 - world.economy.depreciation) * floored.capital + floored.investment;
            traj.states[i][yi] = floored;
        }

        EmissionsVector world_emissions;
        for (size_t i = 0; i < n; ++i) {
            world_emissions += compute_emissions(traj.states[i][yi].gross_output, intensity[i]);
            std::array<double, kGasCount> rates{};
            for (size_t g = 0; g < kGasCount; ++g) {
                rates[g] = series[i]->intensity_rate[g].at(t);
            }
            intensity[i] = step_intensity(intensity[i], rates);
        }
        if (pulse != nullptr && pulse->year == t) {
            world_emissions.add(pulse->gas, pulse->size_gtc);
        }
        traj.world_emissions[yi] = world_emissions;

        const double prev_sea_level = prev.sea_level;
        ClimateState now = step_carbon_cycle(prev, world.climate, world_emissions.co2);
        now = step_ghg_concentrations(now, world.climate, world_emissions, scenario.cfc11_ppt,
                                      scenario.cfc12_ppt, t);
        now.forcing = radiative_forcing(now, world.climate);
        now.t_global = step_temperature(prev, world.climate, now.forcing);
        now.sea_level = step_sea_level(prev, world.climate);
        traj.climate[yi] = now;

        double total_consumption = 0.0;
        double total_population = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const CountryState& floored = traj.states[i][yi];
            const ImpactBreakdown breakdown =
                evaluate_damages(world, *records[i], floored, now, prev_sea_level);
            traj.impacts[i][yi] = breakdown;
            if (breakdown.market_fraction_of_gdp >= 1.0) {
                throw EngineError("market damages reach " +
                                  csv::format_number(100.0 * breakdown.market_fraction_of_gdp) +
                                  "% of output for " + records[i]->iso_code + " in " +
                                  std::to_string(t) + "; economy annihilated");
            }
            damage_lag[i] = breakdown.market_fraction_of_gdp;
            total_consumption += floored.consumption;
            total_population += floored.population;
        }
        traj.world_consumption_pc[yi] = total_consumption / total_population;

        prev = now;
        cur = next;
    }
    return traj;
}

std::vector<double> discount_factors(const std::vector<double>& consumption_per_capita,
                                     const PreferenceParams& prefs, size_t base_index) {
    if (base_index >= consumption_per_capita.size()) {
        throw EngineError("discounting base index outside the consumption series");
    }
    const double c0 = consumption_per_capita[base_index];
    std::vector<double> out(consumption_per_capita.size());
    for (size_t i = 0; i < consumption_per_capita.size(); ++i) {
        const double c = consumption_per_capita[i];
        if (!(c > 0.0)) {
            throw EngineError("non-positive per-capita consumption (" + csv::format_number(c) +
                              ") in the discounting path");
        }
        const double dt = static_cast<double>(i) - static_cast<double>(base_index);
        out[i] = std::pow(1.0 + prefs.prtp, -dt) * std::pow(c0 / c, prefs.rra);
    }
    return out;
}

double nscc(const Trajectory& baseline, const Trajectory& pulsed, size_t country,
            const PreferenceParams& prefs, const PulseSpec& pulse, int eval_year,
            const NsccOptions& options) {
    if (baseline.years != pulsed.years || baseline.isos != pulsed.isos) {
        throw EngineError("baseline and pulsed trajectories do not share a configuration");
    }
    const double tonnes = pulse_tonnes(pulse);
    if (!(tonnes > 0.0)) {
        throw EngineError("pulse size must be positive to compute an SCC");
    }
    const size_t eval_index = baseline.year_index(eval_year);

    const std::vector<double> consumption =
        options.discounting == DiscountingMode::NationalConsumption
            ? baseline.consumption_pc_path(country)
            : baseline.world_consumption_pc;
    const std::vector<double> df = discount_factors(consumption, prefs, eval_index);

    double present_value = 0.0;
    for (size_t yi = eval_index; yi < baseline.years.size(); ++yi) {
        const double delta =
            pulsed.impacts[country][yi].total_usd() - baseline.impacts[country][yi].total_usd();
        present_value += df[yi] * delta;
    }
    double value = present_value / tonnes;
    if (options.epsilon != 0.0) {
        value = apply_income_elasticity(value, options.country_base_income,
                                        options.world_base_income, options.epsilon);
    }
    return value;
}

double clamp_nscc(double value) {
    return std::min(std::max(value, -kNsccClampUsd), kNsccClampUsd);
}

double sum_nscc(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

double NsccVector::sum() const { return sum_nscc(values); }

int NsccVector::clamp_count() const {
    int count = 0;
    for (uint8_t c : clamped) count += c;
    return count;
}

NsccVector nscc_all_countries(const Trajectory& baseline, const Trajectory& pulsed,
                              const CountryTable& table, const RunConfig& config,
                              const PreferenceParams& prefs, const PulseSpec& pulse,
                              int eval_year) {
    NsccVector out;
    const double world_income = table.world_income_per_capita();
    out.values.reserve(table.size());
    out.clamped.reserve(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        NsccOptions options;
        options.discounting = config.discounting;
        options.epsilon = config.income_elasticity;
        options.country_base_income = table.records()[i].base_income_per_capita();
        options.world_base_income = world_income;
        const double raw = nscc(baseline, pulsed, i, prefs, pulse, eval_year, options);
        const double clamped = clamp_nscc(raw);
        out.values.push_back(clamped);
        out.clamped.push_back(clamped != raw ? 1 : 0);
    }
    return out;
}

namespace {

TimeSeries weighted_mean_series(const std::vector<const TimeSeries*>& series,
                                const std::vector<double>& weights, double total_weight) {
    TimeSeries out;
    out.start_year = series.front()->start_year;
    out.values.assign(series.front()->values.size(), 0.0);
    for (size_t s = 0; s < series.size(); ++s) {
        for (size_t i = 0; i < out.values.size(); ++i) {
            out.values[i] += weights[s] * series[s]->at(out.start_year + static_cast<int>(i));
        }
    }
    for (double& v : out.values) v /= total_weight;
    return out;
}

} // namespace

double global_scc_single_region(const ModelInputs& inputs, const RunConfig& config,
                                const PreferenceParams& prefs, int eval_year) {
    const CountryTable& src = inputs.countries;
    const double total_gdp = src.total_gdp();

    CountryRecord world_record;
    world_record.iso_code = "WLD";
    world_record.name = "world aggregate";
    world_record.region_id = "WLD";
    world_record.base_population = src.total_population();
    world_record.base_gdp = total_gdp;
    for (const auto& record : src.records()) {
        const double gw = record.base_gdp / total_gdp;
        const double pw = record.base_population / world_record.base_population;
        world_record.base_temperature += gw * record.base_temperature;
        world_record.temperature_pattern += gw * record.temperature_pattern;
        world_record.urban_share += pw * record.urban_share;
        world_record.coast_length += record.coast_length;
        world_record.wetland_area += record.wetland_area;
        world_record.dryland_area += record.dryland_area;
    }
    CountryTable aggregate;
    aggregate.add(world_record);

    // Drivers: population sums; rates and shares use base-GDP weights.
    ScenarioSet scenario;
    scenario.cfc11_ppt = inputs.scenario.cfc11_ppt;
    scenario.cfc12_ppt = inputs.scenario.cfc12_ppt;
    CountrySeries world_series;
    {
        std::vector<const TimeSeries*> pop, tfp, savings;
        std::array<std::vector<const TimeSeries*>, kGasCount> intensity;
        std::vector<double> weights;
        for (const auto& record : src.records()) {
            const CountrySeries& s = inputs.scenario.for_country(record.iso_code);
            pop.push_back(&s.population);
            tfp.push_back(&s.tfp_growth);
            savings.push_back(&s.savings_rate);
            for (size_t g = 0; g < kGasCount; ++g) intensity[g].push_back(&s.intensity_rate[g]);
            weights.push_back(record.base_gdp);
        }
        std::vector<double> ones(weights.size(), 1.0);
        world_series.population = weighted_mean_series(pop, ones, 1.0);
        world_series.tfp_growth = weighted_mean_series(tfp, weights, total_gdp);
        world_series.savings_rate = weighted_mean_series(savings, weights, total_gdp);
        for (size_t g = 0; g < kGasCount; ++g) {
            world_series.intensity_rate[g] =
                weighted_mean_series(intensity[g], weights, total_gdp);
        }
    }
    scenario.countries.emplace("WLD", std::move(world_series));

    WorldParams world = world_params_from(config, inputs);
    if (config.damage_model.kind == DamageModelKind::Sectoral) {
        RegionalBenchmarks summed;
        auto& bench = summed.by_region["WLD"];
        bench.fill(0.0);
        for (const auto& scale : inputs.impacts.scales) {
            bench[static_cast<int>(scale.sector)] += scale.benchmark;
        }
        world.impacts = calibrate_national_params(summed, aggregate, config.sector_defaults,
                                                  config.climate);
        world.has_impacts = true;
    }

    const PulseSpec pulse{eval_year, config.pulse_gas, config.pulse_size_gtc};
    const Trajectory baseline = run_world(aggregate, scenario, config, world);
    const Trajectory pulsed = run_world(aggregate, scenario, config, world, &pulse);

    NsccOptions options;
    options.discounting = config.discounting;
    options.epsilon = config.income_elasticity;
    options.country_base_income = world_record.base_income_per_capita();
    options.world_base_income = options.country_base_income;
    return nscc(baseline, pulsed, 0, prefs, pulse, eval_year, options);
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw EngineError("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const size_t lo = static_cast<size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty()) {
        throw EngineError("correlation needs two equally sized non-empty samples");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

MonteCarloResult monte_carlo_scc(const ModelInputs& inputs, const RunConfig& config,
                                 const PreferenceParams& prefs, int eval_year) {
    const UncertaintyConfig& unc = config.uncertainty;
    const CountryTable& countries = inputs.countries;
    const size_t n = countries.size();
    const int n_draws = unc.draw_count;
    if (n_draws < 1) throw ConfigError("monte carlo needs uncertainty.draws >= 1");
    const PulseSpec pulse{eval_year, config.pulse_gas, config.pulse_size_gtc};

    MonteCarloResult result;
    result.preferences = prefs;
    result.pulse = pulse;
    result.seed = unc.master_seed;
    result.eval_year = eval_year;
    result.requested_draws = n_draws;
    for (const auto& record : countries.records()) result.isos.push_back(record.iso_code);

    // Companion run at the distribution medians.
    WorldParams median = world_params_from(config, inputs);
    median.climate.ecs = unc.ecs_median;
    {
        const Trajectory baseline = run_world(countries, inputs.scenario, config, median);
        const Trajectory pulsed = run_world(countries, inputs.scenario, config, median, &pulse);
        const NsccVector det =
            nscc_all_countries(baseline, pulsed, countries, config, prefs, pulse, eval_year);
        result.deterministic = det.values;
        result.global_sum_deterministic = det.sum();
    }

    struct DrawSlot {
        bool failed = false;
        std::vector<double> values;
    };
    std::vector<DrawSlot> slots(static_cast<size_t>(n_draws));

    const auto run_draw = [&](int d) {
        Rng rng(unc.master_seed, static_cast<uint64_t>(d));
        WorldParams world = median;
        world.climate.ecs = rng.lognormal_from_median(unc.ecs_median, unc.ecs_sigma_log);

        if (config.damage_model.kind == DamageModelKind::Sectoral) {
            for (const auto& record : countries.records()) {
                auto& params = world.impacts.by_country.at(record.iso_code);
                for (size_t s = 0; s < kSectorCount; ++s) {
                    params[s].alpha *=
                        rng.truncated_normal(1.0, unc.alpha_relative_sd, unc.alpha_min_multiplier,
                                             unc.alpha_max_multiplier);
                }
            }
        } else {
            const double m = rng.truncated_normal(1.0, unc.alpha_relative_sd,
                                                  unc.alpha_min_multiplier,
                                                  unc.alpha_max_multiplier);
            const auto scale_spec = [m](DamageFunctionSpec& spec) {
                spec.alpha1 *= m;
                spec.alpha2 *= m;
                spec.alpha3 *= m;
            };
            if (config.damage_model.kind == DamageModelKind::Aggregate) {
                scale_spec(world.damage_model.specs[static_cast<int>(world.damage_model.form)]);
            } else {
                for (size_t i = 0; i < kBmaFormCount; ++i) {
                    scale_spec(world.damage_model.specs[i]);
                }
            }
        }

        if (unc.population_growth_sd > 0.0) {
            const size_t n_offsets = static_cast<size_t>(config.horizon + 1 - config.base_year) + 1;
            world.population_log_offset.assign(n_offsets, 0.0);
            double growth = 0.0;
            double cumulative = 0.0;
            for (size_t yi = 1; yi < n_offsets; ++yi) {
                growth = unc.population_growth_persistence * growth +
                         unc.population_growth_sd * rng.normal();
                cumulative += growth;
                world.population_log_offset[yi] = cumulative;
            }
        }

        try {
            const Trajectory baseline = run_world(countries, inputs.scenario, config, world);
            const Trajectory pulsed =
                run_world(countries, inputs.scenario, config, world, &pulse);
            NsccVector v =
                nscc_all_countries(baseline, pulsed, countries, config, prefs, pulse, eval_year);
            for (double x : v.values) {
                if (!std::isfinite(x)) throw EngineError("non-finite NSCC in draw");
            }
            slots[static_cast<size_t>(d)].values = std::move(v.values);
        } catch (const EngineError&) {
            slots[static_cast<size_t>(d)].failed = true;
        } catch (const CalibrationError&) {
            slots[static_cast<size_t>(d)].failed = true;
        }
    };

    int workers = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n_draws));
    if (workers == 1) {
        for (int d = 0; d < n_draws; ++d) run_draw(d);
    } else {
        std::atomic<int> next_draw{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    const int d = next_draw.fetch_add(1);
                    if (d >= n_draws) return;
                    run_draw(d);
                }
            });
        }
        for (auto& thread : pool) thread.join();
    }

    // Reduction in draw-index order keeps results independent of scheduling.
    result.draws.assign(n, {});
    for (int d = 0; d < n_draws; ++d) {
        const DrawSlot& slot = slots[static_cast<size_t>(d)];
        if (slot.failed) {
            ++result.failed_draws;
            continue;
        }
        for (size_t c = 0; c < n; ++c) result.draws[c].push_back(slot.values[c]);
    }
    if (static_cast<double>(result.failed_draws) >
        unc.max_failed_draw_fraction * static_cast<double>(n_draws)) {
        throw EngineError(std::to_string(result.failed_draws) + " of " +
                          std::to_string(n_draws) + " draws failed, above the " +
                          csv::format_number(100.0 * unc.max_failed_draw_fraction) +
                          "% tolerance");
    }
    if (result.draws.empty() || result.draws[0].empty()) {
        throw EngineError("no successful draws");
    }

    result.mean.resize(n);
    result.sd.resize(n);
    result.p5.resize(n);
    result.p95.resize(n);
    result.clamp_count.assign(n, 0);
    for (size_t c = 0; c < n; ++c) {
        const std::vector<double>& draws = result.draws[c];
        const double count = static_cast<double>(draws.size());
        double mean = 0.0;
        for (double v : draws) mean += v;
        mean /= count;
        double ss = 0.0;
        int clamps = 0;
        for (double v : draws) {
            ss += (v - mean) * (v - mean);
            if (std::abs(v) >= kNsccClampUsd) ++clamps;
        }
        result.mean[c] = mean;
        result.sd[c] = draws.size() > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
        result.p5[c] = quantile(draws, 0.05);
        result.p95[c] = quantile(draws, 0.95);
        result.clamp_count[c] = clamps;
        result.total_clamps += clamps;
        result.global_sum_mean += mean;
    }
    return result;
}

} // namespace nscc
