#include "nscc/config.hpp"

#include "nscc/errors.hpp"

#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace nscc {
namespace {

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError(where + ": unknown key '" + item.key() + "'");
        }
    }
}

double get_number(const json& obj, const char* key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
    return v.get<double>();
}

int get_int(const json& obj, const char* key, int fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
    return v.get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) throw ConfigError(where + "." + key + " must be a boolean");
    return v.get<bool>();
}

std::string get_string(const json& obj, const char* key, const std::string& fallback,
                       const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ConfigError(where + ": missing required key '" + key + "'");
    return get_string(obj, key, "", where);
}

std::string resolve_path(const std::filesystem::path& base, const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return p.lexically_normal().string();
    return (base / p).lexically_normal().string();
}

const char* extrapolation_name(ExtrapolationMode mode) {
    return mode == ExtrapolationMode::ConstantRate ? "constant_rate" : "constant_level";
}

} // namespace

void PreferenceParams::validate() const {
    if (!(prtp >= 0.0) || !std::isfinite(prtp)) {
        throw ConfigError("prtp must be finite and non-negative");
    }
    if (!(rra >= 0.0) || !std::isfinite(rra)) {
        throw ConfigError("rra must be finite and non-negative");
    }
}

DamageModelConfig::DamageModelConfig() {
    for (size_t i = 0; i < kDamageFormCount; ++i) {
        specs[i] = default_damage_spec(static_cast<DamageForm>(i));
    }
    mixture_weights.fill(1.0 / kBmaFormCount);
}

void DamageModelConfig::validate() const {
    for (const auto& spec : specs) spec.validate();
    double sum = 0.0;
    for (double w : mixture_weights) {
        if (w < 0.0) throw ConfigError("mixture weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("mixture weights must sum to 1");
    }
}

void UncertaintyConfig::validate() const {
    // draws == 0 selects deterministic-only reporting.
    if (draw_count < 0) throw ConfigError("uncertainty.draws must be >= 0");
    if (ecs_median <= 0.0) throw ConfigError("uncertainty.ecs_median must be positive");
    if (ecs_sigma_log < 0.0) throw ConfigError("uncertainty.ecs_sigma_log must be >= 0");
    if (alpha_relative_sd < 0.0) throw ConfigError("uncertainty.alpha_relative_sd must be >= 0");
    if (alpha_min_multiplier > alpha_max_multiplier) {
        throw ConfigError("uncertainty alpha multiplier bounds are inverted");
    }
    if (population_growth_persistence < 0.0 || population_growth_persistence >= 1.0) {
        throw ConfigError("uncertainty.population_growth_persistence must be in [0,1)");
    }
    if (population_growth_sd < 0.0) throw ConfigError("uncertainty.population_growth_sd must be >= 0");
    if (max_failed_draw_fraction < 0.0 || max_failed_draw_fraction > 1.0) {
        throw ConfigError("uncertainty.max_failed_draw_fraction must be in [0,1]");
    }
}

double WorldBaseEmissions::get(Gas gas) const {
    switch (gas) {
    case Gas::Co2: return co2_gtc;
    case Gas::Ch4: return ch4_mt;
    case Gas::N2o: return n2o_mt;
    case Gas::Sf6: return sf6_kt;
    case Gas::So2: return so2_mts;
    }
    throw ConfigError("unknown gas id");
}

void RunConfig::validate() const {
    if (countries_path.empty()) throw ConfigError("config: inputs.countries is required");
    if (horizon <= base_year) throw ConfigError("config: horizon must exceed the base year");
    for (int year : eval_years) {
        if (year < base_year || year > horizon) {
            throw ConfigError("config: eval year " + std::to_string(year) +
                              " outside [base_year, horizon]");
        }
    }
    if (preference_grid.empty()) throw ConfigError("config: preference_grid must be non-empty");
    preferences.validate();
    for (const auto& prefs : preference_grid) prefs.validate();
    if (pulse_size_gtc < 0.0) throw ConfigError("config: pulse.size_gtc must be >= 0");
    climate.validate();
    damage_model.validate();
    uncertainty.validate();
    if (threads < 0) throw ConfigError("config: threads must be >= 0");
    if (economy.capital_share <= 0.0 || economy.capital_share >= 1.0) {
        throw ConfigError("config: economy.capital_share must be in (0,1)");
    }
    if (economy.depreciation <= 0.0 || economy.depreciation > 1.0) {
        throw ConfigError("config: economy.depreciation must be in (0,1]");
    }
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!root.is_object()) throw ConfigError(path + ": config must be a JSON object");

    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    RunConfig cfg;

    require_keys(root, path,
                 {"run_name", "output_dir", "inputs", "base_year", "horizon", "eval_years",
                  "initial_climate", "world_base_emissions", "world_reference_totals", "economy",
                  "climate", "sector_defaults", "preferences", "preference_grid", "discounting",
                  "epsilon", "damage_model", "pulse", "uncertainty", "scenario_options",
                  "threads", "emit_change_table"});

    cfg.run_name = get_string(root, "run_name", cfg.run_name, path);
    cfg.output_dir = resolve_path(base, get_string(root, "output_dir", cfg.output_dir, path));
    cfg.base_year = get_int(root, "base_year", cfg.base_year, path);
    cfg.horizon = get_int(root, "horizon", cfg.horizon, path);
    cfg.threads = get_int(root, "threads", cfg.threads, path);
    cfg.emit_change_table = get_bool(root, "emit_change_table", cfg.emit_change_table, path);
    cfg.income_elasticity = get_number(root, "epsilon", cfg.income_elasticity, path);

    if (root.contains("eval_years")) {
        const json& years = root.at("eval_years");
        if (!years.is_array() || years.empty()) {
            throw ConfigError(path + ": eval_years must be a non-empty array");
        }
        cfg.eval_years.clear();
        for (const json& y : years) cfg.eval_years.push_back(y.get<int>());
    }

    if (!root.contains("inputs")) throw ConfigError(path + ": missing 'inputs' block");
    {
        const json& inputs = root.at("inputs");
        require_keys(inputs, path + ".inputs", {"countries", "benchmarks", "scenario"});
        cfg.countries_path = resolve_path(base, require_string(inputs, "countries", path + ".inputs"));
        cfg.benchmarks_path =
            resolve_path(base, get_string(inputs, "benchmarks", "", path + ".inputs"));
        if (!inputs.contains("scenario")) {
            throw ConfigError(path + ": missing 'inputs.scenario' block");
        }
        const json& scen = inputs.at("scenario");
        const std::string where = path + ".inputs.scenario";
        require_keys(scen, where,
                     {"population", "tfp_growth", "savings_rate", "intensity_co2",
                      "intensity_ch4", "intensity_n2o", "intensity_sf6", "intensity_so2", "cfc11",
                      "cfc12"});
        cfg.scenario_paths.population = resolve_path(base, require_string(scen, "population", where));
        cfg.scenario_paths.tfp_growth = resolve_path(base, require_string(scen, "tfp_growth", where));
        cfg.scenario_paths.savings_rate =
            resolve_path(base, require_string(scen, "savings_rate", where));
        const char* intensity_keys[kGasCount] = {"intensity_co2", "intensity_ch4", "intensity_n2o",
                                                 "intensity_sf6", "intensity_so2"};
        for (size_t g = 0; g < kGasCount; ++g) {
            cfg.scenario_paths.intensity_rate[g] =
                resolve_path(base, require_string(scen, intensity_keys[g], where));
        }
        cfg.scenario_paths.cfc11 = resolve_path(base, require_string(scen, "cfc11", where));
        cfg.scenario_paths.cfc12 = resolve_path(base, require_string(scen, "cfc12", where));
    }

    if (root.contains("initial_climate")) {
        const json& ic = root.at("initial_climate");
        const std::string where = path + ".initial_climate";
        require_keys(ic, where, {"co2_ppm", "ch4_ppb", "n2o_ppb", "sf6_ppt", "t_global"});
        cfg.initial_climate.co2_ppm = get_number(ic, "co2_ppm", cfg.initial_climate.co2_ppm, where);
        cfg.initial_climate.ch4_ppb = get_number(ic, "ch4_ppb", cfg.initial_climate.ch4_ppb, where);
        cfg.initial_climate.n2o_ppb = get_number(ic, "n2o_ppb", cfg.initial_climate.n2o_ppb, where);
        cfg.initial_climate.sf6_ppt = get_number(ic, "sf6_ppt", cfg.initial_climate.sf6_ppt, where);
        cfg.initial_climate.t_global =
            get_number(ic, "t_global", cfg.initial_climate.t_global, where);
    }

    if (root.contains("world_base_emissions")) {
        const json& we = root.at("world_base_emissions");
        const std::string where = path + ".world_base_emissions";
        require_keys(we, where, {"co2_gtc", "ch4_mt", "n2o_mt", "sf6_kt", "so2_mts"});
        cfg.world_base_emissions.co2_gtc =
            get_number(we, "co2_gtc", cfg.world_base_emissions.co2_gtc, where);
        cfg.world_base_emissions.ch4_mt =
            get_number(we, "ch4_mt", cfg.world_base_emissions.ch4_mt, where);
        cfg.world_base_emissions.n2o_mt =
            get_number(we, "n2o_mt", cfg.world_base_emissions.n2o_mt, where);
        cfg.world_base_emissions.sf6_kt =
            get_number(we, "sf6_kt", cfg.world_base_emissions.sf6_kt, where);
        cfg.world_base_emissions.so2_mts =
            get_number(we, "so2_mts", cfg.world_base_emissions.so2_mts, where);
    }

    if (root.contains("world_reference_totals")) {
        for (const auto& item : root.at("world_reference_totals").items()) {
            cfg.world_reference_totals[item.key()] = item.value().get<double>();
        }
    }

    if (root.contains("economy")) {
        const json& eco = root.at("economy");
        const std::string where = path + ".economy";
        require_keys(eco, where, {"capital_share", "depreciation", "initial_capital_to_output"});
        cfg.economy.capital_share = get_number(eco, "capital_share", cfg.economy.capital_share, where);
        cfg.economy.depreciation = get_number(eco, "depreciation", cfg.economy.depreciation, where);
        cfg.economy.initial_capital_to_output =
            get_number(eco, "initial_capital_to_output", cfg.economy.initial_capital_to_output, where);
    }

    if (root.contains("climate")) {
        const json& cl = root.at("climate");
        const std::string where = path + ".climate";
        require_keys(cl, where,
                     {"ecs", "response_time", "f2x", "preindustrial_ppm", "ppm_per_gtc",
                      "ch4_lifetime", "n2o_lifetime", "sf6_lifetime", "so2_forcing_per_mts",
                      "slr_equilibrium_per_degree", "slr_response_time"});
        cfg.climate.ecs = get_number(cl, "ecs", cfg.climate.ecs, where);
        cfg.climate.response_time = get_number(cl, "response_time", cfg.climate.response_time, where);
        cfg.climate.f2x = get_number(cl, "f2x", cfg.climate.f2x, where);
        cfg.climate.carbon.preindustrial_ppm =
            get_number(cl, "preindustrial_ppm", cfg.climate.carbon.preindustrial_ppm, where);
        cfg.climate.carbon.ppm_per_gtc =
            get_number(cl, "ppm_per_gtc", cfg.climate.carbon.ppm_per_gtc, where);
        cfg.climate.ch4_lifetime = get_number(cl, "ch4_lifetime", cfg.climate.ch4_lifetime, where);
        cfg.climate.n2o_lifetime = get_number(cl, "n2o_lifetime", cfg.climate.n2o_lifetime, where);
        cfg.climate.sf6_lifetime = get_number(cl, "sf6_lifetime", cfg.climate.sf6_lifetime, where);
        cfg.climate.so2_forcing_per_mts =
            get_number(cl, "so2_forcing_per_mts", cfg.climate.so2_forcing_per_mts, where);
        cfg.climate.slr_equilibrium_per_degree = get_number(
            cl, "slr_equilibrium_per_degree", cfg.climate.slr_equilibrium_per_degree, where);
        cfg.climate.slr_response_time =
            get_number(cl, "slr_response_time", cfg.climate.slr_response_time, where);
    }

    if (root.contains("sector_defaults")) {
        const json& sd = root.at("sector_defaults");
        const std::string where = path + ".sector_defaults";
        for (const auto& item : sd.items()) {
            const Sector sector = parse_sector(item.key());
            const json& entry = item.value();
            require_keys(entry, where + "." + item.key(),
                         {"base_alpha", "income_elasticity", "co2_fertilization"});
            SectorDefaults& d = cfg.sector_defaults[static_cast<int>(sector)];
            d.base_alpha = get_number(entry, "base_alpha", d.base_alpha, where);
            d.income_elasticity = get_number(entry, "income_elasticity", d.income_elasticity, where);
            d.co2_fertilization = get_number(entry, "co2_fertilization", d.co2_fertilization, where);
        }
    }

    if (root.contains("preferences")) {
        const json& p = root.at("preferences");
        require_keys(p, path + ".preferences", {"prtp", "rra"});
        cfg.preferences.prtp = get_number(p, "prtp", cfg.preferences.prtp, path + ".preferences");
        cfg.preferences.rra = get_number(p, "rra", cfg.preferences.rra, path + ".preferences");
    }

    if (root.contains("preference_grid")) {
        const json& grid = root.at("preference_grid");
        if (!grid.is_array()) throw ConfigError(path + ": preference_grid must be an array");
        cfg.preference_grid.clear();
        for (const json& pair : grid) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ConfigError(path + ": preference_grid entries must be [prtp, rra] pairs");
            }
            cfg.preference_grid.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
    }

    const std::string discounting = get_string(root, "discounting", "national", path);
    if (discounting == "national") {
        cfg.discounting = DiscountingMode::NationalConsumption;
    } else if (discounting == "global") {
        cfg.discounting = DiscountingMode::GlobalConsumption;
    } else {
        throw ConfigError(path + ": discounting must be 'national' or 'global'");
    }

    if (root.contains("damage_model")) {
        const json& dm = root.at("damage_model");
        const std::string where = path + ".damage_model";
        require_keys(dm, where, {"kind", "aggregate_is_market", "mixture_weights", "forms"});
        const std::string kind = get_string(dm, "kind", "sectoral", where);
        if (kind == "sectoral") {
            cfg.damage_model.kind = DamageModelKind::Sectoral;
        } else if (kind == "mixture" || kind == "bma") {
            cfg.damage_model.kind = DamageModelKind::Mixture;
        } else {
            cfg.damage_model.kind = DamageModelKind::Aggregate;
            cfg.damage_model.form = parse_damage_form(kind);
        }
        cfg.damage_model.aggregate_is_market =
            get_bool(dm, "aggregate_is_market", cfg.damage_model.aggregate_is_market, where);
        if (dm.contains("mixture_weights")) {
            const json& weights = dm.at("mixture_weights");
            if (!weights.is_array() || weights.size() != kBmaFormCount) {
                throw ConfigError(where + ": mixture_weights must list " +
                                  std::to_string(kBmaFormCount) + " values");
            }
            for (size_t i = 0; i < kBmaFormCount; ++i) {
                cfg.damage_model.mixture_weights[i] = weights[i].get<double>();
            }
        }
        if (dm.contains("forms")) {
            for (const auto& item : dm.at("forms").items()) {
                const DamageForm form = parse_damage_form(item.key());
                const json& entry = item.value();
                const std::string fw = where + ".forms." + item.key();
                require_keys(entry, fw, {"alpha1", "alpha2", "alpha3", "beta"});
                DamageFunctionSpec& spec = cfg.damage_model.specs[static_cast<int>(form)];
                spec.alpha1 = get_number(entry, "alpha1", spec.alpha1, fw);
                spec.alpha2 = get_number(entry, "alpha2", spec.alpha2, fw);
                spec.alpha3 = get_number(entry, "alpha3", spec.alpha3, fw);
                spec.beta = get_number(entry, "beta", spec.beta, fw);
            }
        }
    }

    if (root.contains("pulse")) {
        const json& pulse = root.at("pulse");
        const std::string where = path + ".pulse";
        require_keys(pulse, where, {"size_gtc", "gas"});
        cfg.pulse_size_gtc = get_number(pulse, "size_gtc", cfg.pulse_size_gtc, where);
        cfg.pulse_gas = parse_gas(get_string(pulse, "gas", gas_name(cfg.pulse_gas), where));
    }

    if (root.contains("uncertainty")) {
        const json& unc = root.at("uncertainty");
        const std::string where = path + ".uncertainty";
        require_keys(unc, where,
                     {"draws", "seed", "ecs_median", "ecs_sigma_log", "alpha_relative_sd",
                      "alpha_min_multiplier", "alpha_max_multiplier",
                      "population_growth_persistence", "population_growth_sd",
                      "max_failed_draw_fraction"});
        UncertaintyConfig& u = cfg.uncertainty;
        u.draw_count = get_int(unc, "draws", u.draw_count, where);
        if (unc.contains("seed")) u.master_seed = unc.at("seed").get<uint64_t>();
        u.ecs_median = get_number(unc, "ecs_median", u.ecs_median, where);
        u.ecs_sigma_log = get_number(unc, "ecs_sigma_log", u.ecs_sigma_log, where);
        u.alpha_relative_sd = get_number(unc, "alpha_relative_sd", u.alpha_relative_sd, where);
        u.alpha_min_multiplier = get_number(unc, "alpha_min_multiplier", u.alpha_min_multiplier, where);
        u.alpha_max_multiplier = get_number(unc, "alpha_max_multiplier", u.alpha_max_multiplier, where);
        u.population_growth_persistence =
            get_number(unc, "population_growth_persistence", u.population_growth_persistence, where);
        u.population_growth_sd = get_number(unc, "population_growth_sd", u.population_growth_sd, where);
        u.max_failed_draw_fraction =
            get_number(unc, "max_failed_draw_fraction", u.max_failed_draw_fraction, where);
    }

    if (root.contains("scenario_options")) {
        const json& so = root.at("scenario_options");
        const std::string where = path + ".scenario_options";
        require_keys(so, where, {"interpolate_gaps", "extrapolation"});
        cfg.scenario_options.interpolate_gaps =
            get_bool(so, "interpolate_gaps", cfg.scenario_options.interpolate_gaps, where);
        if (so.contains("extrapolation")) {
            for (const auto& item : so.at("extrapolation").items()) {
                cfg.scenario_options.extrapolation[item.key()] =
                    parse_extrapolation_mode(item.value().get<std::string>());
            }
        }
    }

    cfg.validate();
    return cfg;
}

std::string effective_config_json(const RunConfig& cfg) {
    json root;
    root["run_name"] = cfg.run_name;
    root["output_dir"] = cfg.output_dir;
    root["inputs"]["countries"] = cfg.countries_path;
    root["inputs"]["benchmarks"] = cfg.benchmarks_path;
    json& scen = root["inputs"]["scenario"];
    scen["population"] = cfg.scenario_paths.population;
    scen["tfp_growth"] = cfg.scenario_paths.tfp_growth;
    scen["savings_rate"] = cfg.scenario_paths.savings_rate;
    const char* intensity_keys[kGasCount] = {"intensity_co2", "intensity_ch4", "intensity_n2o",
                                             "intensity_sf6", "intensity_so2"};
    for (size_t g = 0; g < kGasCount; ++g) {
        scen[intensity_keys[g]] = cfg.scenario_paths.intensity_rate[g];
    }
    scen["cfc11"] = cfg.scenario_paths.cfc11;
    scen["cfc12"] = cfg.scenario_paths.cfc12;

    root["base_year"] = cfg.base_year;
    root["horizon"] = cfg.horizon;
    root["eval_years"] = cfg.eval_years;

    root["initial_climate"] = {{"co2_ppm", cfg.initial_climate.co2_ppm},
                               {"ch4_ppb", cfg.initial_climate.ch4_ppb},
                               {"n2o_ppb", cfg.initial_climate.n2o_ppb},
                               {"sf6_ppt", cfg.initial_climate.sf6_ppt},
                               {"t_global", cfg.initial_climate.t_global}};
    root["world_base_emissions"] = {{"co2_gtc", cfg.world_base_emissions.co2_gtc},
                                    {"ch4_mt", cfg.world_base_emissions.ch4_mt},
                                    {"n2o_mt", cfg.world_base_emissions.n2o_mt},
                                    {"sf6_kt", cfg.world_base_emissions.sf6_kt},
                                    {"so2_mts", cfg.world_base_emissions.so2_mts}};
    root["world_reference_totals"] = cfg.world_reference_totals;

    root["economy"] = {{"capital_share", cfg.economy.capital_share},
                       {"depreciation", cfg.economy.depreciation},
                       {"initial_capital_to_output", cfg.economy.initial_capital_to_output}};
    root["climate"] = {{"ecs", cfg.climate.ecs},
                       {"response_time", cfg.climate.response_time},
                       {"f2x", cfg.climate.f2x},
                       {"preindustrial_ppm", cfg.climate.carbon.preindustrial_ppm},
                       {"ppm_per_gtc", cfg.climate.carbon.ppm_per_gtc},
                       {"ch4_lifetime", cfg.climate.ch4_lifetime},
                       {"n2o_lifetime", cfg.climate.n2o_lifetime},
                       {"sf6_lifetime", cfg.climate.sf6_lifetime},
                       {"so2_forcing_per_mts", cfg.climate.so2_forcing_per_mts},
                       {"slr_equilibrium_per_degree", cfg.climate.slr_equilibrium_per_degree},
                       {"slr_response_time", cfg.climate.slr_response_time}};

    json sectors;
    for (size_t i = 0; i < kSectorCount; ++i) {
        const SectorDefaults& d = cfg.sector_defaults[i];
        sectors[sector_name(static_cast<Sector>(i))] = {{"base_alpha", d.base_alpha},
                                                        {"income_elasticity", d.income_elasticity},
                                                        {"co2_fertilization", d.co2_fertilization}};
    }
    root["sector_defaults"] = sectors;

    root["preferences"] = {{"prtp", cfg.preferences.prtp}, {"rra", cfg.preferences.rra}};
    json grid = json::array();
    for (const auto& prefs : cfg.preference_grid) {
        grid.push_back({prefs.prtp, prefs.rra});
    }
    root["preference_grid"] = grid;
    root["discounting"] =
        cfg.discounting == DiscountingMode::NationalConsumption ? "national" : "global";
    root["epsilon"] = cfg.income_elasticity;

    json dm;
    switch (cfg.damage_model.kind) {
    case DamageModelKind::Sectoral: dm["kind"] = "sectoral"; break;
    case DamageModelKind::Mixture: dm["kind"] = "mixture"; break;
    case DamageModelKind::Aggregate: dm["kind"] = damage_form_name(cfg.damage_model.form); break;
    }
    dm["aggregate_is_market"] = cfg.damage_model.aggregate_is_market;
    dm["mixture_weights"] = cfg.damage_model.mixture_weights;
    json forms;
    for (size_t i = 0; i < kDamageFormCount; ++i) {
        const DamageFunctionSpec& spec = cfg.damage_model.specs[i];
        forms[damage_form_name(static_cast<DamageForm>(i))] = {{"alpha1", spec.alpha1},
                                                               {"alpha2", spec.alpha2},
                                                               {"alpha3", spec.alpha3},
                                                               {"beta", spec.beta}};
    }
    dm["forms"] = forms;
    root["damage_model"] = dm;

    root["pulse"] = {{"size_gtc", cfg.pulse_size_gtc}, {"gas", gas_name(cfg.pulse_gas)}};

    const UncertaintyConfig& u = cfg.uncertainty;
    root["uncertainty"] = {{"draws", u.draw_count},
                           {"seed", u.master_seed},
                           {"ecs_median", u.ecs_median},
                           {"ecs_sigma_log", u.ecs_sigma_log},
                           {"alpha_relative_sd", u.alpha_relative_sd},
                           {"alpha_min_multiplier", u.alpha_min_multiplier},
                           {"alpha_max_multiplier", u.alpha_max_multiplier},
                           {"population_growth_persistence", u.population_growth_persistence},
                           {"population_growth_sd", u.population_growth_sd},
                           {"max_failed_draw_fraction", u.max_failed_draw_fraction}};

    json extrap;
    for (const auto& [key, mode] : cfg.scenario_options.extrapolation) {
        extrap[key] = extrapolation_name(mode);
    }
    root["scenario_options"] = {{"interpolate_gaps", cfg.scenario_options.interpolate_gaps},
                                {"extrapolation", extrap}};
    root["emit_change_table"] = cfg.emit_change_table;
    // Thread count is excluded: it must not change results, so it must not
    // change the hash either.
    return root.dump(2);
}

uint64_t fnv1a(const std::string& data, uint64_t hash) {
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string config_hash(const RunConfig& cfg) {
    uint64_t hash = fnv1a(effective_config_json(cfg));

    std::vector<std::string> files = {cfg.countries_path, cfg.benchmarks_path,
                                      cfg.scenario_paths.population, cfg.scenario_paths.tfp_growth,
                                      cfg.scenario_paths.savings_rate};
    for (const auto& p : cfg.scenario_paths.intensity_rate) files.push_back(p);
    files.push_back(cfg.scenario_paths.cfc11);
    files.push_back(cfg.scenario_paths.cfc12);

    for (const std::string& file : files) {
        if (file.empty()) continue;
        std::ifstream in(file, std::ios::binary);
        if (!in) continue; // validated elsewhere; hashing skips absent optional files
        std::ostringstream buf;
        buf << in.rdbuf();
        hash = fnv1a(buf.str(), hash);
    }

    char out[17];
    snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(out);
}

} // namespace nscc
