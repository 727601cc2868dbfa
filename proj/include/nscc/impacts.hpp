#pragma once

#include "nscc/climate.hpp"
#include "nscc/country.hpp"

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace nscc {

// Impact sectors. Market sectors feed back on output; non-market sectors are
// welfare losses valued in money outside the production loop.
enum class Sector : int {
    Agriculture = 0,
    Cooling,
    Heating,
    Hurricanes,
    ExtratropicalStorms,
    Forests,
    Water,
    Cardiovascular,
    Respiratory,
    Diarrhoea,
    VectorBorne,
    Biodiversity,
    SlrDryland,
    SlrWetland,
    SlrProtection,
    SlrMigration,
};
constexpr size_t kSectorCount = 16;

const char* sector_name(Sector sector);
Sector parse_sector(const std::string& name);
bool sector_is_market(Sector sector);

// Global warming level at which national impacts are rescaled to match the
// regional benchmarks.
constexpr double kCalibrationWarming = 2.5; // deg C

// Death-equivalents from the health sectors are valued at this multiple of
// per-capita income.
constexpr double kVslIncomeMultiple = 200.0;

// Agriculture response peaks (as a benefit) at this national anomaly.
constexpr double kAgricultureOptimum = 1.0; // deg C

// Exposure normalizers for the sea-level sectors.
constexpr double kCoastNormKm = 1000.0;
constexpr double kWetlandNormKm2 = 10000.0;

// Per country-sector response parameters.
struct SectorParams {
    double alpha = 0.0;             // fraction of GDP per unit of the sector driver
    double income_elasticity = 0.0; // vulnerability elasticity vs own base income
    double co2_fertilization = 0.0; // agriculture: fraction of GDP per ln(C/C0)
};

using CountrySectorParams = std::array<SectorParams, kSectorCount>;

// Global priors used to impute provisional national parameters before the
// regional rescale.
struct SectorDefaults {
    double base_alpha = 0.0;
    double income_elasticity = 0.0;
    double co2_fertilization = 0.0;
};
using SectorDefaultsTable = std::array<SectorDefaults, kSectorCount>;
SectorDefaultsTable default_sector_table();

// Everything a sector evaluation needs for one country-year.
struct ImpactInputs {
    double national_anomaly = 0.0;  // deg C above the country baseline climate
    double log_co2_ratio = 0.0;     // ln(C / C0)
    double sea_level = 0.0;         // m above base year
    double sea_level_rise = 0.0;    // m/yr, this year's increment
    double gross_output = 0.0;      // US$/yr
    double population = 0.0;        // persons
    double per_capita_income = 0.0; // US$/person/yr
    double base_income = 0.0;       // US$/person/yr, vulnerability reference
};

// Monetary impact in US$ (positive = damage, negative = benefit).
double sector_impact(Sector sector, const ImpactInputs& inputs, const CountryRecord& record,
                     const SectorParams& params);

struct ImpactBreakdown {
    std::array<double, kSectorCount> sector_usd{}; // US$, positive = damage
    double market_usd = 0.0;
    double nonmarket_usd = 0.0;
    double market_fraction_of_gdp = 0.0;
    double total_usd() const { return market_usd + nonmarket_usd; }
};

ImpactBreakdown evaluate_impacts(const ImpactInputs& inputs, const CountryRecord& record,
                                 const CountrySectorParams& params);

// Reference country-year inputs at a prescribed global warming level: base
// economy, CO2 at preindustrial, sea level halfway to its committed rise
// (so both level and rate drivers are active).
ImpactInputs reference_inputs(double t_global, const CountryRecord& record,
                              const ClimateParams& climate);

// region -> per-sector benchmark impact in US$ at kCalibrationWarming.
struct RegionalBenchmarks {
    std::map<std::string, std::array<double, kSectorCount>> by_region;
};

// CSV schema: region,sector,impact_usd_at_2p5C; every (region, sector) pair
// must be present exactly once.
RegionalBenchmarks load_benchmarks(const std::string& path,
                                   const std::vector<std::string>& regions);

struct CalibrationScale {
    std::string region;
    Sector sector = Sector::Agriculture;
    double scale = 1.0;
    double provisional_sum = 0.0; // US$ at the calibration warming
    double benchmark = 0.0;       // US$
};

struct CalibratedImpacts {
    std::unordered_map<std::string, CountrySectorParams> by_country;
    std::vector<CalibrationScale> scales; // regions sorted, sectors in enum order

    const CountrySectorParams& for_country(const std::string& iso) const;
};

// Provisional national impacts are imputed from income and exposure, then all
// alphas within a region-sector are scaled by one factor so national impacts
// sum exactly to the regional benchmark at kCalibrationWarming.
CalibratedImpacts calibrate_national_params(const RegionalBenchmarks& benchmarks,
                                            const CountryTable& table,
                                            const SectorDefaultsTable& defaults,
                                            const ClimateParams& climate);

// Aggregate (single-sector) damage function library.
enum class DamageForm : int {
    TolParabolic = 0,
    Weitzman6,
    Weitzman7,
    NewboldMarten,
    Nordhaus,
    Hope,
    VdpWithagen,
    TolLinear,
    BarrageNordhaus,
    HowardSterner,
    Weitzman2012,
    NordhausYang,
};
constexpr size_t kDamageFormCount = 12;
// The mixture pool spans the first eight forms above.
constexpr size_t kBmaFormCount = 8;
constexpr double kWeitzman2012Exponent = 6.754;

const char* damage_form_name(DamageForm form);
DamageForm parse_damage_form(const std::string& name);
const char* damage_form_expression(DamageForm form);

struct DamageFunctionSpec {
    DamageForm form = DamageForm::Nordhaus;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double beta = 0.0; // threshold deg C for the piecewise forms

    // Enforces piecewise continuity for the two-branch linear form.
    void validate() const;
};

// Placeholder coefficients for each form; all are config inputs.
DamageFunctionSpec default_damage_spec(DamageForm form);

// Evaluates the chosen closed form; returns a fraction of GDP.
double aggregate_damage_function(const DamageFunctionSpec& spec, double warming);

// Weighted mean of the eight mixture forms; weights must be non-negative and
// sum to 1 within 1e-9.
double bma_damage(const std::array<DamageFunctionSpec, kBmaFormCount>& specs,
                  const std::array<double, kBmaFormCount>& weights, double warming);

// damage * (y_n / y_world)^epsilon; the global reweighting knob.
double apply_income_elasticity(double damage_usd, double income_per_capita,
                               double world_income_per_capita, double epsilon);

} // namespace nscc
