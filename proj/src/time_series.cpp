#include "nscc/time_series.hpp"

#include "nscc/errors.hpp"

#include <cmath>
#include <sstream>

namespace nscc {

double TimeSeries::at(int year) const {
    if (!covers(year)) {
        std::ostringstream msg;
        msg << "year " << year << " outside series [" << start_year << ", " << last_year() << "]";
        throw EngineError(msg.str());
    }
    return values[static_cast<size_t>(year - start_year)];
}

ExtrapolationMode parse_extrapolation_mode(const std::string& name) {
    if (name == "constant-level") return ExtrapolationMode::ConstantLevel;
    if (name == "constant-rate") return ExtrapolationMode::ConstantRate;
    throw ConfigError("unknown extrapolation mode '" + name + "'");
}

TimeSeries extrapolate_series(const TimeSeries& series, int target_year, ExtrapolationMode mode,
                              bool* fell_back) {
    if (fell_back) *fell_back = false;
    if (series.empty()) throw ConfigError("cannot extrapolate an empty series");
    if (target_year < series.start_year) {
        std::ostringstream msg;
        msg << "extrapolation target " << target_year << " precedes series start "
            << series.start_year;
        throw ConfigError(msg.str());
    }
    if (target_year <= series.last_year()) return series;

    const size_t n = series.values.size();
    double growth = 0.0; // mean log ratio over the trailing window
    bool rate_ok = false;
    if (mode == ExtrapolationMode::ConstantRate && n >= 2) {
        const size_t window = std::min<size_t>(n, 10);
        const size_t first = n - window;
        rate_ok = true;
        double sum_log_ratio = 0.0;
        for (size_t i = first; i + 1 < n; ++i) {
            const double a = series.values[i];
            const double b = series.values[i + 1];
            if (a == 0.0 || b == 0.0 || (a > 0.0) != (b > 0.0)) {
                rate_ok = false;
                break;
            }
            sum_log_ratio += std::log(b / a);
        }
        if (rate_ok) growth = sum_log_ratio / static_cast<double>(window - 1);
    }
    if (mode == ExtrapolationMode::ConstantRate && !rate_ok && fell_back) *fell_back = true;

    TimeSeries out = series;
    const double ratio = rate_ok ? std::exp(growth) : 1.0;
    double last = out.values.back();
    for (int year = series.last_year() + 1; year <= target_year; ++year) {
        last *= ratio;
        out.values.push_back(last);
    }
    return out;
}

TimeSeries interpolate_annual(const std::vector<std::pair<int, double>>& samples,
                              const std::string& context) {
    if (samples.empty()) throw ConfigError("empty series for " + context);
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        if (samples[i + 1].first <= samples[i].first) {
            throw ConfigError("years not strictly increasing in " + context);
        }
    }
    TimeSeries out;
    out.start_year = samples.front().first;
    out.values.reserve(static_cast<size_t>(samples.back().first - samples.front().first) + 1);
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        const auto [y0, v0] = samples[i];
        const auto [y1, v1] = samples[i + 1];
        for (int y = y0; y < y1; ++y) {
            const double t = static_cast<double>(y - y0) / static_cast<double>(y1 - y0);
            out.values.push_back(v0 + t * (v1 - v0));
        }
    }
    out.values.push_back(samples.back().second);
    return out;
}

} // namespace nscc
