#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace nscc {

// Emitted gases. CFC11/CFC12 are concentration-prescribed, not emitted.
enum class Gas : int { Co2 = 0, Ch4, N2o, Sf6, So2 };
constexpr size_t kGasCount = 5;
constexpr std::array<Gas, kGasCount> kAllGases = {Gas::Co2, Gas::Ch4, Gas::N2o, Gas::Sf6,
                                                  Gas::So2};

const char* gas_name(Gas gas);
Gas parse_gas(const std::string& name);

// Annual emission flows. Units differ per gas and are fixed here once.
struct EmissionsVector {
    double co2 = 0.0; // GtC/yr
    double ch4 = 0.0; // Mt/yr
    double n2o = 0.0; // Mt/yr
    double sf6 = 0.0; // kt/yr
    double so2 = 0.0; // MtS/yr

    double get(Gas gas) const;
    void set(Gas gas, double value);
    void add(Gas gas, double value);
    EmissionsVector& operator+=(const EmissionsVector& other);
};

// Per-gas emission per unit gross output, same gas units per US$/yr.
using IntensityVector = std::array<double, kGasCount>;

// One extra emission of `size` in a single year, on top of the endogenous
// path; the marginal experiment differences a pulsed run against a baseline.
struct PulseSpec {
    int year = 0;
    Gas gas = Gas::Co2; // only CO2 supported in v1
    double size_gtc = 0.0;
};

// emission_g = intensity_g * gross_output. Throws EngineError on negative
// intensity.
EmissionsVector compute_emissions(double gross_output, const IntensityVector& intensity);

// intensity(t+1) = intensity(t) * exp(rate(t)); rates are typically negative.
IntensityVector step_intensity(const IntensityVector& intensity,
                               const std::array<double, kGasCount>& rates);

// Returns a copy of the path with pulse.size_gtc added to the pulse gas in the
// pulse year; every other entry is bit-identical. path[i] is year start_year+i.
std::vector<EmissionsVector> inject_pulse(const std::vector<EmissionsVector>& path, int start_year,
                                          const PulseSpec& pulse);

} // namespace nscc
