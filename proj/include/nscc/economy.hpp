#pragma once

#include <functional>
#include <string>

namespace nscc {

struct EconomyParams {
    double capital_share = 0.3;        // Cobb-Douglas capital exponent, in (0,1)
    double depreciation = 0.1;         // 1/yr, in (0,1)
    double initial_capital_to_output = 3.0; // capital stock as multiple of base GDP
};

// Hard boundary conditions applied every simulated year.
constexpr double kPopulationFloor = 1000.0;   // persons
constexpr double kIncomeFloorPerCapita = 100.0; // US$/person/yr

// Per-country annual economic state. Monetary flows are US$/yr.
struct CountryState {
    int year = 0;
    double population = 0.0;        // persons
    double tfp = 0.0;               // total factor productivity level, > 0
    double capital = 0.0;           // US$
    double gross_output = 0.0;      // US$/yr, before climate damages
    double net_output = 0.0;        // US$/yr, after market damages
    double consumption = 0.0;       // US$/yr
    double investment = 0.0;        // US$/yr; consumption + investment = net_output
    double per_capita_income = 0.0; // net_output / population, US$/person/yr
};

// One year's exogenous drivers for the step.
struct EconomyDrivers {
    double next_population = 0.0; // persons, level for year+1
    double tfp_growth = 0.0;      // 1/yr log rate applied to reach year+1
    double savings_rate = 0.0;    // fraction of net output invested
};

// Advances one country by one year:
//   gross = tfp * K^gamma * L^(1-gamma)
//   net   = gross * (1 - market_damage_fraction)
//   inv   = s * net,  consumption = net - inv
//   K'    = (1 - delta) * K + inv
// Fills the current year's flows in place and returns the state for year+1.
// market_damage_fraction >= 1 is run-fatal; the error names country and year.
CountryState step_economy(CountryState& state, const EconomyParams& params,
                          const EconomyDrivers& drivers, double market_damage_fraction,
                          const std::string& iso);

using FloorLogger = std::function<void(const std::string& iso, int year, const std::string& what)>;

// Raises population and per-capita income to their floors, rescaling
// net output and its consumption/investment split consistently. States
// already above both floors are returned untouched.
CountryState apply_floors(const CountryState& state, const std::string& iso,
                          const FloorLogger& log = nullptr);

// Initial state from base-year quantities; tfp is backed out of the
// production function so that gross output matches base GDP.
CountryState initial_country_state(int year, double base_population, double base_gdp,
                                   const EconomyParams& params);

} // namespace nscc
