#include "nscc/emissions.hpp"

#include "nscc/errors.hpp"

#include <cmath>
#include <sstream>

namespace nscc {

const char* gas_name(Gas gas) {
    switch (gas) {
    case Gas::Co2: return "co2";
    case Gas::Ch4: return "ch4";
    case Gas::N2o: return "n2o";
    case Gas::Sf6: return "sf6";
    case Gas::So2: return "so2";
    }
    return "?";
}

Gas parse_gas(const std::string& name) {
    for (Gas gas : kAllGases) {
        if (name == gas_name(gas)) return gas;
    }
    throw ConfigError("unknown gas '" + name + "'");
}

double EmissionsVector::get(Gas gas) const {
    switch (gas) {
    case Gas::Co2: return co2;
    case Gas::Ch4: return ch4;
    case Gas::N2o: return n2o;
    case Gas::Sf6: return sf6;
    case Gas::So2: return so2;
    }
    return 0.0;
}

void EmissionsVector::set(Gas gas, double value) {
    switch (gas) {
    case Gas::Co2: co2 = value; break;
    case Gas::Ch4: ch4 = value; break;
    case Gas::N2o: n2o = value; break;
    case Gas::Sf6: sf6 = value; break;
    case Gas::So2: so2 = value; break;
    }
}

void EmissionsVector::add(Gas gas, double value) { set(gas, get(gas) + value); }

EmissionsVector& EmissionsVector::operator+=(const EmissionsVector& other) {
    co2 += other.co2;
    ch4 += other.ch4;
    n2o += other.n2o;
    sf6 += other.sf6;
    so2 += other.so2;
    return *this;
}

EmissionsVector compute_emissions(double gross_output, const IntensityVector& intensity) {
    EmissionsVector out;
    for (Gas gas : kAllGases) {
        const double level = intensity[static_cast<size_t>(gas)];
        if (level < 0) {
            throw EngineError(std::string("negative emission intensity for ") + gas_name(gas));
        }
        out.set(gas, level * gross_output);
    }
    return out;
}

IntensityVector step_intensity(const IntensityVector& intensity,
                               const std::array<double, kGasCount>& rates) {
    IntensityVector out;
    for (size_t i = 0; i < kGasCount; ++i) out[i] = intensity[i] * std::exp(rates[i]);
    return out;
}

std::vector<EmissionsVector> inject_pulse(const std::vector<EmissionsVector>& path, int start_year,
                                          const PulseSpec& pulse) {
    const int index = pulse.year - start_year;
    if (index < 0 || index >= static_cast<int>(path.size())) {
        std::ostringstream msg;
        msg << "pulse year " << pulse.year << " outside emission path [" << start_year << ", "
            << start_year + static_cast<int>(path.size()) - 1 << "]";
        throw EngineError(msg.str());
    }
    auto out = path;
    out[static_cast<size_t>(index)].add(pulse.gas, pulse.size_gtc);
    return out;
}

} // namespace nscc
