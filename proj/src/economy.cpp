#include "nscc/economy.hpp"

#include "nscc/errors.hpp"

#include <cmath>
#include <sstream>

namespace nscc {

CountryState step_economy(CountryState& state, const EconomyParams& params,
                          const EconomyDrivers& drivers, double market_damage_fraction,
                          const std::string& iso) {
    if (market_damage_fraction >= 1.0) {
        std::ostringstream msg;
        msg << "market damages reach " << market_damage_fraction * 100.0 << "% of output for "
            << iso << " in " << state.year << "; economy annihilated";
        throw EngineError(msg.str());
    }
    const double gamma = params.capital_share;
    state.gross_output =
        state.tfp * std::pow(state.capital, gamma) * std::pow(state.population, 1.0 - gamma);
    state.net_output = state.gross_output * (1.0 - market_damage_fraction);
    state.investment = drivers.savings_rate * state.net_output;
    state.consumption = state.net_output - state.investment;
    state.per_capita_income = state.net_output / state.population;

    CountryState next;
    next.year = state.year + 1;
    next.population = drivers.next_population;
    next.tfp = state.tfp * std::exp(drivers.tfp_growth);
    next.capital = (1.0 - params.depreciation) * state.capital + state.investment;
    return next;
}

CountryState apply_floors(const CountryState& state, const std::string& iso,
                          const FloorLogger& log) {
    const bool pop_low = state.population < kPopulationFloor;
    const bool income_low = state.per_capita_income < kIncomeFloorPerCapita;
    if (!pop_low && !income_low) return state;

    CountryState out = state;
    if (pop_low) {
        out.population = kPopulationFloor;
        if (log) log(iso, state.year, "population floor");
        out.per_capita_income = out.net_output / out.population;
    }
    if (out.per_capita_income < kIncomeFloorPerCapita) {
        const double floored_net = kIncomeFloorPerCapita * out.population;
        const double scale = out.net_output > 0.0 ? floored_net / out.net_output : 0.0;
        if (scale > 0.0) {
            out.consumption *= scale;
            out.investment *= scale;
        } else {
            // Output collapsed entirely; rebuild the split from consumption share 1.
            out.consumption = floored_net;
            out.investment = 0.0;
        }
        out.net_output = floored_net;
        out.per_capita_income = kIncomeFloorPerCapita;
        if (log) log(iso, state.year, "income floor");
    }
    return out;
}

CountryState initial_country_state(int year, double base_population, double base_gdp,
                                   const EconomyParams& params) {
    CountryState state;
    state.year = year;
    state.population = base_population;
    state.capital = params.initial_capital_to_output * base_gdp;
    const double gamma = params.capital_share;
    state.tfp = base_gdp / (std::pow(state.capital, gamma) *
                            std::pow(base_population, 1.0 - gamma));
    return state;
}

} // namespace nscc
