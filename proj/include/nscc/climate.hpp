#pragma once

#include "nscc/country.hpp"
#include "nscc/emissions.hpp"
#include "nscc/time_series.hpp"

#include <array>
#include <limits>

namespace nscc {

constexpr size_t kCarbonBoxes = 5;
constexpr double kInfiniteLifetime = std::numeric_limits<double>::infinity();

// Linear impulse-response carbon cycle: each box takes a fixed share of every
// year's emissions and decays on its own timescale; the first box never decays.
struct CarbonCycleParams {
    std::array<double, kCarbonBoxes> shares = {0.13, 0.20, 0.32, 0.25, 0.10}; // sum to 1
    std::array<double, kCarbonBoxes> lifetimes = {kInfiniteLifetime, 363.0, 74.0, 17.0,
                                                  2.0};       // years
    double preindustrial_ppm = 278.0;                          // ppm
    double ppm_per_gtc = 0.47;                                 // ppm per GtC airborne

    void validate() const; // shares sum to 1, lifetimes positive
};

struct ClimateParams {
    CarbonCycleParams carbon;

    double ecs = 3.0;           // deg C at CO2 doubling, equilibrium
    double response_time = 40.0; // years, temperature adjustment timescale
    double f2x = 3.71;          // W/m2 at CO2 doubling

    // One-box gas cycles.
    double ch4_preindustrial_ppb = 722.0;
    double n2o_preindustrial_ppb = 270.0;
    double sf6_preindustrial_ppt = 0.0;
    double ch4_lifetime = 12.0;   // years
    double n2o_lifetime = 114.0;  // years
    double sf6_lifetime = 3200.0; // years
    double ch4_ppb_per_mt = 0.3597;
    double n2o_ppb_per_mt = 0.2079;
    double sf6_ppt_per_kt = 0.0398;

    // Radiative efficiencies.
    double ch4_forcing_coeff = 0.036;   // W/m2 per sqrt(ppb)
    double n2o_forcing_coeff = 0.12;    // W/m2 per sqrt(ppb)
    double sf6_forcing_per_ppt = 0.00052;
    double cfc11_forcing_per_ppt = 0.00025;
    double cfc12_forcing_per_ppt = 0.00032;
    double so2_forcing_per_mts = -0.006; // W/m2 per MtS/yr, aerosol cooling

    double slr_equilibrium_per_degree = 0.5; // m per deg C, committed rise
    double slr_response_time = 500.0;        // years

    void validate() const;
};

struct ClimateState {
    std::array<double, kCarbonBoxes> box_masses = {0, 0, 0, 0, 0}; // GtC above preindustrial
    double co2_ppm = 0.0;
    double ch4_ppb = 0.0;
    double n2o_ppb = 0.0;
    double sf6_ppt = 0.0;
    double cfc11_ppt = 0.0;
    double cfc12_ppt = 0.0;
    double so2_mts = 0.0;  // current-year global emissions, enters forcing directly
    double forcing = 0.0;  // W/m2 vs preindustrial
    double t_global = 0.0; // deg C above preindustrial
    double sea_level = 0.0; // m above the projection base year
};

// Boxes receive their share of the year's emissions, then decay by
// exp(-1/lifetime); co2_ppm = C0 + ppm_per_gtc * sum of boxes.
ClimateState step_carbon_cycle(const ClimateState& state, const ClimateParams& params,
                               double co2_emissions_gtc);

// One-box update per emitted gas; CFC11/CFC12 concentrations come from the
// prescribed scenario series for the given year.
ClimateState step_ghg_concentrations(const ClimateState& state, const ClimateParams& params,
                                     const EmissionsVector& emissions, const TimeSeries& cfc11,
                                     const TimeSeries& cfc12, int year);

// Sum of: CO2 log term, CH4/N2O square-root terms with the band-overlap
// correction, linear halocarbon terms, and the linear SO2 term. Zero when
// every gas is at its preindustrial level and SO2 emissions are zero.
double radiative_forcing(const ClimateState& state, const ClimateParams& params);

// T(t+1) = T(t) + (1/tau) * (ecs * F / f2x - T(t))
double step_temperature(const ClimateState& state, const ClimateParams& params, double forcing);

// S(t+1) = S(t) + (1/tau_slr) * (equilibrium_per_degree * T(t) - S(t))
double step_sea_level(const ClimateState& state, const ClimateParams& params);

// Pattern scaling: national anomaly = pattern * global anomaly.
double national_temperature(double t_global, const CountryRecord& record);

// Initial state consistent with observed starting concentrations: the excess
// CO2 burden is split across boxes in proportion to their shares.
ClimateState initial_climate_state(const ClimateParams& params, double co2_ppm, double ch4_ppb,
                                   double n2o_ppb, double sf6_ppt, double t_global);

} // namespace nscc
