#pragma once

#include "nscc/country.hpp"
#include "nscc/emissions.hpp"
#include "nscc/time_series.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace nscc {

// Exogenous drivers for one country, annual resolution.
struct CountrySeries {
    TimeSeries population;   // persons
    TimeSeries tfp_growth;   // 1/yr log rate
    TimeSeries savings_rate; // fraction of net output, in (0,1)
    std::array<TimeSeries, kGasCount> intensity_rate; // 1/yr log rate per gas
};

struct ScenarioSet {
    std::unordered_map<std::string, CountrySeries> countries;
    TimeSeries cfc11_ppt; // prescribed global concentration
    TimeSeries cfc12_ppt;

    const CountrySeries& for_country(const std::string& iso) const;
    // First projection year with full coverage across all series.
    int first_year() const;
    // Last year covered by every series; extrapolation tops this up.
    int last_common_year() const;
    bool needs_extrapolation(int horizon) const { return last_common_year() < horizon; }
};

// File paths for every scenario variable, long CSV format iso,year,value.
// Global series (CFC concentrations) carry iso "WLD".
struct ScenarioPaths {
    std::string population;
    std::string tfp_growth;
    std::string savings_rate;
    std::array<std::string, kGasCount> intensity_rate;
    std::string cfc11;
    std::string cfc12;
};

struct ScenarioOptions {
    // Interior gap years are filled linearly when true; rejected otherwise.
    bool interpolate_gaps = true;
    // Per-variable extrapolation mode; defaults below follow the variable
    // kind: levels and rates continue their trend, shares hold their level.
    std::map<std::string, ExtrapolationMode> extrapolation = {
        {"population", ExtrapolationMode::ConstantRate},
        {"tfp_growth", ExtrapolationMode::ConstantRate},
        {"savings_rate", ExtrapolationMode::ConstantLevel},
        {"intensity_rate", ExtrapolationMode::ConstantRate},
        {"cfc", ExtrapolationMode::ConstantLevel},
    };
};

// Loads every series, checks coverage of all countries in the table, and
// normalizes to contiguous annual spacing. Errors name the variable and
// country.
ScenarioSet load_scenario(const ScenarioPaths& paths, const CountryTable& table,
                          const ScenarioOptions& options = {});

// Extends every series to `horizon`. Savings rates are clipped back to [0,1]
// afterwards; clip and rate-fallback events are appended to `warnings` when
// provided.
ScenarioSet extend_scenario(const ScenarioSet& scenario, int horizon,
                            const ScenarioOptions& options,
                            std::vector<std::string>* warnings = nullptr);

struct CoverageWarning {
    std::string variable;
    double coverage = 0.0; // country sum / referenced global total
};

struct ValidationReport {
    std::vector<CoverageWarning> warnings;
    bool ok() const { return warnings.empty(); }
};

// Warns (never fails) when the table's country sums cover less than 99% of a
// referenced global total. Supported keys: "pop", "gdp".
ValidationReport validate_world_totals(const CountryTable& table,
                                       const std::map<std::string, double>& global_reference);

} // namespace nscc
