#include "nscc/climate.hpp"

#include "nscc/errors.hpp"

#include <cmath>

namespace nscc {

namespace {

double decay_factor(double lifetime) {
    return std::isinf(lifetime) ? 1.0 : std::exp(-1.0 / lifetime);
}

// CH4/N2O absorption band overlap (concentrations in ppb).
double band_overlap(double ch4_ppb, double n2o_ppb) {
    const double mn = ch4_ppb * n2o_ppb;
    return 0.47 * std::log(1.0 + 2.01e-5 * std::pow(mn, 0.75) +
                           5.31e-15 * ch4_ppb * std::pow(mn, 1.52));
}

} // namespace

void CarbonCycleParams::validate() const {
    double sum = 0.0;
    for (double a : shares) {
        if (a < 0) throw ConfigError("carbon box share must be non-negative");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw ConfigError("carbon box shares must sum to 1");
    for (double tau : lifetimes) {
        if (!(tau > 0)) throw ConfigError("carbon box lifetime must be positive or infinite");
    }
    if (!(preindustrial_ppm > 0)) throw ConfigError("preindustrial CO2 must be positive");
    if (!(ppm_per_gtc > 0)) throw ConfigError("ppm per GtC must be positive");
}

void ClimateParams::validate() const {
    carbon.validate();
    if (!(ecs > 0)) throw ConfigError("equilibrium climate sensitivity must be positive");
    if (!(response_time > 0)) throw ConfigError("temperature response time must be positive");
    if (!(f2x > 0)) throw ConfigError("CO2 doubling forcing must be positive");
    if (!(ch4_lifetime > 0) || !(n2o_lifetime > 0) || !(sf6_lifetime > 0)) {
        throw ConfigError("gas lifetimes must be positive");
    }
    if (!(slr_equilibrium_per_degree > 0) || !(slr_response_time > 0)) {
        throw ConfigError("sea-level parameters must be positive");
    }
}

ClimateState step_carbon_cycle(const ClimateState& state, const ClimateParams& params,
                               double co2_emissions_gtc) {
    const auto& carbon = params.carbon;
    ClimateState out = state;
    double airborne = 0.0;
    for (size_t i = 0; i < kCarbonBoxes; ++i) {
        out.box_masses[i] =
            (state.box_masses[i] + carbon.shares[i] * co2_emissions_gtc) *
            decay_factor(carbon.lifetimes[i]);
        airborne += out.box_masses[i];
    }
    out.co2_ppm = carbon.preindustrial_ppm + carbon.ppm_per_gtc * airborne;
    return out;
}

ClimateState step_ghg_concentrations(const ClimateState& state, const ClimateParams& params,
                                     const EmissionsVector& emissions, const TimeSeries& cfc11,
                                     const TimeSeries& cfc12, int year) {
    ClimateState out = state;
    auto one_box = [](double level, double preindustrial, double lifetime, double inflow) {
        return preindustrial + (level - preindustrial) * decay_factor(lifetime) + inflow;
    };
    out.ch4_ppb = one_box(state.ch4_ppb, params.ch4_preindustrial_ppb, params.ch4_lifetime,
                          params.ch4_ppb_per_mt * emissions.ch4);
    out.n2o_ppb = one_box(state.n2o_ppb, params.n2o_preindustrial_ppb, params.n2o_lifetime,
                          params.n2o_ppb_per_mt * emissions.n2o);
    out.sf6_ppt = one_box(state.sf6_ppt, params.sf6_preindustrial_ppt, params.sf6_lifetime,
                          params.sf6_ppt_per_kt * emissions.sf6);
    if (!cfc11.covers(year) || !cfc12.covers(year)) {
        throw EngineError("CFC concentration scenario does not cover year " +
                          std::to_string(year));
    }
    out.cfc11_ppt = cfc11.at(year);
    out.cfc12_ppt = cfc12.at(year);
    out.so2_mts = emissions.so2;
    return out;
}

double radiative_forcing(const ClimateState& state, const ClimateParams& params) {
    if (!(state.co2_ppm > 0)) throw EngineError("CO2 concentration must be positive");
    const double c0 = params.carbon.preindustrial_ppm;
    const double m0 = params.ch4_preindustrial_ppb;
    const double n0 = params.n2o_preindustrial_ppb;

    const double co2 = params.f2x / std::log(2.0) * std::log(state.co2_ppm / c0);
    const double ch4 = params.ch4_forcing_coeff * (std::sqrt(state.ch4_ppb) - std::sqrt(m0)) -
                       (band_overlap(state.ch4_ppb, n0) - band_overlap(m0, n0));
    const double n2o = params.n2o_forcing_coeff * (std::sqrt(state.n2o_ppb) - std::sqrt(n0)) -
                       (band_overlap(m0, state.n2o_ppb) - band_overlap(m0, n0));
    const double halo = params.sf6_forcing_per_ppt * (state.sf6_ppt - params.sf6_preindustrial_ppt) +
                        params.cfc11_forcing_per_ppt * state.cfc11_ppt +
                        params.cfc12_forcing_per_ppt * state.cfc12_ppt;
    const double so2 = params.so2_forcing_per_mts * state.so2_mts;
    return co2 + ch4 + n2o + halo + so2;
}

double step_temperature(const ClimateState& state, const ClimateParams& params, double forcing) {
    const double equilibrium = params.ecs * forcing / params.f2x;
    return state.t_global + (equilibrium - state.t_global) / params.response_time;
}

double step_sea_level(const ClimateState& state, const ClimateParams& params) {
    const double equilibrium = params.slr_equilibrium_per_degree * state.t_global;
    return state.sea_level + (equilibrium - state.sea_level) / params.slr_response_time;
}

double national_temperature(double t_global, const CountryRecord& record) {
    return record.temperature_pattern * t_global;
}

ClimateState initial_climate_state(const ClimateParams& params, double co2_ppm, double ch4_ppb,
                                   double n2o_ppb, double sf6_ppt, double t_global) {
    ClimateState state;
    const double excess_gtc =
        (co2_ppm - params.carbon.preindustrial_ppm) / params.carbon.ppm_per_gtc;
    for (size_t i = 0; i < kCarbonBoxes; ++i) {
        state.box_masses[i] = params.carbon.shares[i] * excess_gtc;
    }
    state.co2_ppm = co2_ppm;
    state.ch4_ppb = ch4_ppb;
    state.n2o_ppb = n2o_ppb;
    state.sf6_ppt = sf6_ppt;
    state.t_global = t_global;
    state.sea_level = 0.0;
    return state;
}

} // namespace nscc
