#include "nscc/impacts.hpp"

#include "nscc/csv.hpp"
#include "nscc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nscc {
namespace {

struct SectorInfo {
    const char* name;
    bool market;
};

// Order must match the Sector enum.
constexpr SectorInfo kSectors[kSectorCount] = {
    {"agriculture", true},
    {"cooling", true},
    {"heating", true},
    {"hurricanes", true},
    {"extratropical_storms", true},
    {"forests", true},
    {"water", true},
    {"cardiovascular", false},
    {"respiratory", false},
    {"diarrhoea", false},
    {"vector_borne", false},
    {"biodiversity", false},
    {"slr_dryland", true},
    {"slr_wetland", false},
    {"slr_protection", true},
    {"slr_migration", false},
};

// Odd-symmetric power so cooler years read as demand reductions.
double signed_pow(double x, double p) {
    return x >= 0.0 ? std::pow(x, p) : -std::pow(-x, p);
}

} // namespace

const char* sector_name(Sector sector) { return kSectors[static_cast<int>(sector)].name; }

Sector parse_sector(const std::string& name) {
    for (size_t i = 0; i < kSectorCount; ++i) {
        if (name == kSectors[i].name) return static_cast<Sector>(i);
    }
    throw ConfigError("unknown impact sector '" + name + "'");
}

bool sector_is_market(Sector sector) { return kSectors[static_cast<int>(sector)].market; }

SectorDefaultsTable default_sector_table() {
    SectorDefaultsTable table{};
    auto set = [&table](Sector s, double alpha, double eps, double fert = 0.0) {
        table[static_cast<int>(s)] = {alpha, eps, fert};
    };
    // base_alpha is a prior scale only; the regional rescale fixes levels.
    set(Sector::Agriculture, 0.002, -0.3, 0.008);
    set(Sector::Cooling, 0.0015, 0.8);
    set(Sector::Heating, 0.001, 0.8);
    set(Sector::Hurricanes, 0.0003, -0.5);
    set(Sector::ExtratropicalStorms, 0.0002, -0.5);
    set(Sector::Forests, 0.0002, 0.3);
    set(Sector::Water, 0.0008, -0.8);
    set(Sector::Cardiovascular, 5.0e-6, 0.5);
    set(Sector::Respiratory, 4.0e-6, 0.5);
    set(Sector::Diarrhoea, 8.0e-6, -1.6);
    set(Sector::VectorBorne, 6.0e-6, -1.2);
    set(Sector::Biodiversity, 0.0004, 1.0);
    set(Sector::SlrDryland, 0.003, 0.2);
    set(Sector::SlrWetland, 0.002, 0.5);
    set(Sector::SlrProtection, 0.004, 0.2);
    set(Sector::SlrMigration, 0.001, -0.5);
    return table;
}

double sector_impact(Sector sector, const ImpactInputs& inputs, const CountryRecord& record,
                     const SectorParams& params) {
    const double t = inputs.national_anomaly;
    const double vuln = std::pow(inputs.per_capita_income / inputs.base_income,
                                 params.income_elasticity);
    const double gdp = inputs.gross_output;
    const double coast = record.coast_length / kCoastNormKm;
    const double wetland = record.wetland_area / kWetlandNormKm2;
    // Death-equivalents per person scale with income through the VSL.
    const double health_base =
        kVslIncomeMultiple * inputs.per_capita_income * inputs.population;

    switch (sector) {
    case Sector::Agriculture: {
        const double x = t / kAgricultureOptimum;
        const double quad = x * x - 2.0 * x; // benefit up to the optimum, damage past 2x
        return (gdp * params.alpha * quad - gdp * params.co2_fertilization * inputs.log_co2_ratio) *
               vuln;
    }
    case Sector::Cooling:
        return gdp * params.alpha * signed_pow(t, 1.5) * vuln;
    case Sector::Heating:
        return gdp * params.alpha * (-t) * vuln;
    case Sector::Hurricanes:
    case Sector::ExtratropicalStorms:
    case Sector::Forests:
    case Sector::Water:
    case Sector::Biodiversity:
        return gdp * params.alpha * t * vuln;
    case Sector::Cardiovascular:
    case Sector::Respiratory:
        return health_base * params.alpha * t * record.urban_share * vuln;
    case Sector::Diarrhoea:
    case Sector::VectorBorne:
        return health_base * params.alpha * t * vuln;
    case Sector::SlrDryland:
        return gdp * params.alpha * std::max(inputs.sea_level_rise, 0.0) * coast * vuln;
    case Sector::SlrWetland:
        return gdp * params.alpha * std::max(inputs.sea_level_rise, 0.0) * wetland * vuln;
    case Sector::SlrProtection:
        // Protection and migration are outlays, never benefits.
        return std::max(gdp * params.alpha * std::max(inputs.sea_level, 0.0) * coast * vuln, 0.0);
    case Sector::SlrMigration:
        return std::max(
            gdp * params.alpha * std::max(inputs.sea_level_rise, 0.0) * coast * vuln, 0.0);
    }
    throw EngineError("unknown impact sector id " +
                      std::to_string(static_cast<int>(sector)));
}

ImpactBreakdown evaluate_impacts(const ImpactInputs& inputs, const CountryRecord& record,
                                 const CountrySectorParams& params) {
    ImpactBreakdown out;
    for (size_t i = 0; i < kSectorCount; ++i) {
        const auto sector = static_cast<Sector>(i);
        const double usd = sector_impact(sector, inputs, record, params[i]);
        out.sector_usd[i] = usd;
        if (sector_is_market(sector)) {
            out.market_usd += usd;
        } else {
            out.nonmarket_usd += usd;
        }
    }
    if (inputs.gross_output > 0.0) {
        out.market_fraction_of_gdp = out.market_usd / inputs.gross_output;
    }
    return out;
}

ImpactInputs reference_inputs(double t_global, const CountryRecord& record,
                              const ClimateParams& climate) {
    ImpactInputs in;
    in.national_anomaly = t_global * record.temperature_pattern;
    in.log_co2_ratio = 0.0; // CO2 held at preindustrial in the reference state
    const double committed = climate.slr_equilibrium_per_degree * t_global;
    in.sea_level = 0.5 * committed;
    in.sea_level_rise = (committed - in.sea_level) / climate.slr_response_time;
    in.gross_output = record.base_gdp;
    in.population = record.base_population;
    in.per_capita_income = record.base_income_per_capita();
    in.base_income = in.per_capita_income;
    return in;
}

RegionalBenchmarks load_benchmarks(const std::string& path,
                                   const std::vector<std::string>& regions) {
    const csv::Table table = csv::read_file(path);
    const int region_col = table.column("region");
    const int sector_col = table.column("sector");
    const int value_col = table.column("impact_usd_at_2p5C");
    if (region_col < 0 || sector_col < 0 || value_col < 0) {
        throw ConfigError(path + ": expected columns region,sector,impact_usd_at_2p5C");
    }

    const std::set<std::string> known(regions.begin(), regions.end());
    RegionalBenchmarks out;
    std::map<std::string, std::array<bool, kSectorCount>> seen;
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string& region = row[region_col];
        if (!known.count(region)) {
            throw CalibrationError(path + " row " + std::to_string(r + 2) +
                                   ": benchmark region '" + region +
                                   "' does not appear in the country table");
        }
        const Sector sector = parse_sector(row[sector_col]);
        const double value = csv::parse_number(
            row[value_col], path + " row " + std::to_string(r + 2) + " impact_usd_at_2p5C");
        auto& flags = seen[region];
        if (flags[static_cast<int>(sector)]) {
            throw CalibrationError(path + ": duplicate benchmark for region '" + region +
                                   "' sector '" + row[sector_col] + "'");
        }
        flags[static_cast<int>(sector)] = true;
        out.by_region[region][static_cast<int>(sector)] = value;
    }

    for (const auto& region : known) {
        auto it = seen.find(region);
        for (size_t i = 0; i < kSectorCount; ++i) {
            if (it == seen.end() || !it->second[i]) {
                throw CalibrationError(path + ": missing benchmark for region '" + region +
                                       "' sector '" + kSectors[i].name + "'");
            }
        }
    }
    return out;
}

const CountrySectorParams& CalibratedImpacts::for_country(const std::string& iso) const {
    auto it = by_country.find(iso);
    if (it == by_country.end()) {
        throw EngineError("no calibrated impact parameters for country '" + iso + "'");
    }
    return it->second;
}

CalibratedImpacts calibrate_national_params(const RegionalBenchmarks& benchmarks,
                                            const CountryTable& table,
                                            const SectorDefaultsTable& defaults,
                                            const ClimateParams& climate) {
    const double world_income = table.world_income_per_capita();

    // Provisional parameters: priors bent by relative income.
    CalibratedImpacts out;
    for (const auto& record : table.records()) {
        CountrySectorParams params{};
        const double rel = record.base_income_per_capita() / world_income;
        for (size_t i = 0; i < kSectorCount; ++i) {
            const SectorDefaults& d = defaults[i];
            params[i].income_elasticity = d.income_elasticity;
            params[i].co2_fertilization = d.co2_fertilization;
            params[i].alpha = d.base_alpha * std::pow(rel, d.income_elasticity);
        }
        out.by_country.emplace(record.iso_code, params);
    }

    // One scale per region-sector pins the national sum to the benchmark.
    for (const auto& [region, bench] : benchmarks.by_region) {
        for (size_t i = 0; i < kSectorCount; ++i) {
            const auto sector = static_cast<Sector>(i);
            double provisional_sum = 0.0;
            for (const auto& record : table.records()) {
                if (record.region_id != region) continue;
                const ImpactInputs inputs =
                    reference_inputs(kCalibrationWarming, record, climate);
                provisional_sum +=
                    sector_impact(sector, inputs, record, out.by_country[record.iso_code][i]);
            }
            const double target = bench[i];
            double scale = 1.0;
            if (provisional_sum == 0.0) {
                if (target != 0.0) {
                    throw CalibrationError(
                        "region '" + region + "' sector '" + kSectors[i].name +
                        "' has zero provisional impact but a nonzero benchmark of " +
                        csv::format_number(target) + " US$; no rescale can match it");
                }
            } else {
                scale = target / provisional_sum;
            }
            if ((sector == Sector::SlrProtection || sector == Sector::SlrMigration) &&
                target < 0.0) {
                throw CalibrationError("region '" + region + "' sector '" + kSectors[i].name +
                                       "' benchmark is negative; protection and migration "
                                       "outlays cannot be benefits");
            }
            for (const auto& record : table.records()) {
                if (record.region_id != region) continue;
                out.by_country[record.iso_code][i].alpha *= scale;
            }
            out.scales.push_back({region, sector, scale, provisional_sum, target});
        }
    }
    return out;
}

namespace {

struct FormInfo {
    const char* name;
    const char* expression;
};

// Order must match the DamageForm enum.
constexpr FormInfo kForms[kDamageFormCount] = {
    {"tol_parabolic", "a1*T + a2*T^2"},
    {"weitzman6", "a1*T^2 + a2*T^6"},
    {"weitzman7", "a1*T^2 + a2*T^7"},
    {"newbold_marten", "0 (T<B); a1*(T-B) (T>=B)"},
    {"nordhaus", "a1*T^2"},
    {"hope", "a1*T"},
    {"vdp_withagen", "a1*(exp(T) - 1)"},
    {"tol_linear", "a1*T (T<=B); a2 + a3*T (T>B)"},
    {"barrage_nordhaus", "a1*T^2"},
    {"howard_sterner", "a1*T^2"},
    {"weitzman2012", "a1*T^2 + a2*T^6.754"},
    {"nordhaus_yang", "a1*T^2"},
};

void require_nonnegative_warming(const DamageFunctionSpec& spec, double warming) {
    if (warming < 0.0) {
        throw EngineError(std::string("damage form '") + damage_form_name(spec.form) +
                          "' is undefined for negative warming (T = " +
                          csv::format_number(warming) + ")");
    }
}

} // namespace

const char* damage_form_name(DamageForm form) { return kForms[static_cast<int>(form)].name; }

const char* damage_form_expression(DamageForm form) {
    return kForms[static_cast<int>(form)].expression;
}

DamageForm parse_damage_form(const std::string& name) {
    for (size_t i = 0; i < kDamageFormCount; ++i) {
        if (name == kForms[i].name) return static_cast<DamageForm>(i);
    }
    throw ConfigError("unknown damage function '" + name + "'");
}

void DamageFunctionSpec::validate() const {
    if (form == DamageForm::TolLinear) {
        const double left = alpha1 * beta;
        const double right = alpha2 + alpha3 * beta;
        if (std::abs(left - right) > 1e-9 * std::max({1.0, std::abs(left), std::abs(right)})) {
            throw ConfigError(
                "tol_linear branches disagree at the threshold: a1*B = " +
                csv::format_number(left) + " but a2 + a3*B = " + csv::format_number(right));
        }
    }
    if ((form == DamageForm::NewboldMarten || form == DamageForm::TolLinear) && beta <= 0.0) {
        throw ConfigError(std::string("damage form '") + damage_form_name(form) +
                          "' needs a positive threshold, got " + csv::format_number(beta));
    }
}

DamageFunctionSpec default_damage_spec(DamageForm form) {
    DamageFunctionSpec spec;
    spec.form = form;
    switch (form) {
    case DamageForm::TolParabolic:
        spec.alpha1 = -0.0024;
        spec.alpha2 = 0.0018;
        break;
    case DamageForm::Weitzman6:
        spec.alpha1 = 0.0022;
        spec.alpha2 = 1.1e-7;
        break;
    case DamageForm::Weitzman7:
        spec.alpha1 = 0.0022;
        spec.alpha2 = 1.7e-8;
        break;
    case DamageForm::NewboldMarten:
        spec.alpha1 = 0.01;
        spec.beta = 1.5;
        break;
    case DamageForm::Nordhaus:
        spec.alpha1 = 0.00236;
        break;
    case DamageForm::Hope:
        spec.alpha1 = 0.005;
        break;
    case DamageForm::VdpWithagen:
        spec.alpha1 = 0.00057;
        break;
    case DamageForm::TolLinear:
        spec.alpha1 = 0.002;
        spec.alpha2 = -0.015;
        spec.alpha3 = 0.012;
        spec.beta = 1.5;
        break;
    case DamageForm::BarrageNordhaus:
        spec.alpha1 = 0.003467;
        break;
    case DamageForm::HowardSterner:
        spec.alpha1 = 0.007438;
        break;
    case DamageForm::Weitzman2012:
        spec.alpha1 = 0.00245;
        spec.alpha2 = 5.021e-6;
        break;
    case DamageForm::NordhausYang:
        spec.alpha1 = 0.0035;
        break;
    }
    return spec;
}

double aggregate_damage_function(const DamageFunctionSpec& spec, double warming) {
    const double t = warming;
    switch (spec.form) {
    case DamageForm::TolParabolic:
        return spec.alpha1 * t + spec.alpha2 * t * t;
    case DamageForm::Weitzman6:
        return spec.alpha1 * t * t + spec.alpha2 * std::pow(t, 6.0);
    case DamageForm::Weitzman7:
        return spec.alpha1 * t * t + spec.alpha2 * std::pow(t, 7.0);
    case DamageForm::NewboldMarten:
        if (t < spec.beta) return 0.0;
        return spec.alpha1 * (t - spec.beta);
    case DamageForm::Nordhaus:
    case DamageForm::BarrageNordhaus:
    case DamageForm::HowardSterner:
    case DamageForm::NordhausYang:
        return spec.alpha1 * t * t;
    case DamageForm::Hope:
        return spec.alpha1 * t;
    case DamageForm::VdpWithagen:
        return spec.alpha1 * (std::exp(t) - 1.0);
    case DamageForm::TolLinear:
        if (t <= spec.beta) return spec.alpha1 * t;
        return spec.alpha2 + spec.alpha3 * t;
    case DamageForm::Weitzman2012:
        require_nonnegative_warming(spec, t);
        return spec.alpha1 * t * t + spec.alpha2 * std::pow(t, kWeitzman2012Exponent);
    }
    throw EngineError("unknown damage form id " + std::to_string(static_cast<int>(spec.form)));
}

double bma_damage(const std::array<DamageFunctionSpec, kBmaFormCount>& specs,
                  const std::array<double, kBmaFormCount>& weights, double warming) {
    double total_weight = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw ConfigError("mixture weights must be non-negative, got " +
                              csv::format_number(w));
        }
        total_weight += w;
    }
    if (std::abs(total_weight - 1.0) > 1e-9) {
        throw ConfigError("mixture weights sum to " + csv::format_number(total_weight) +
                          ", expected 1");
    }
    double damage = 0.0;
    for (size_t i = 0; i < kBmaFormCount; ++i) {
        damage += weights[i] * aggregate_damage_function(specs[i], warming);
    }
    return damage;
}

double apply_income_elasticity(double damage_usd, double income_per_capita,
                               double world_income_per_capita, double epsilon) {
    if (income_per_capita <= 0.0 || world_income_per_capita <= 0.0) {
        throw EngineError("income elasticity reweighting needs positive incomes, got " +
                          csv::format_number(income_per_capita) + " and " +
                          csv::format_number(world_income_per_capita));
    }
    return damage_usd * std::pow(income_per_capita / world_income_per_capita, epsilon);
}

} // namespace nscc
