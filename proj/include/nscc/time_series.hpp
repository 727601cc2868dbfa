#pragma once

#include <string>
#include <vector>

namespace nscc {

// Annual series: values[i] belongs to calendar year start_year + i.
struct TimeSeries {
    int start_year = 0;
    std::vector<double> values;

    bool empty() const { return values.empty(); }
    int last_year() const { return start_year + static_cast<int>(values.size()) - 1; }
    bool covers(int year) const { return year >= start_year && year <= last_year(); }

    // Throws EngineError when the year is outside the series.
    double at(int year) const;
};

enum class ExtrapolationMode {
    ConstantLevel, // repeat the final value
    ConstantRate,  // continue the mean growth rate of the final 10 observations
};

ExtrapolationMode parse_extrapolation_mode(const std::string& name);

// Extends a series to target_year. A series already reaching target_year is
// returned unchanged. Constant-rate continuation needs the trailing window to
// be nonzero and single-signed; otherwise it falls back to constant-level and
// reports the fallback through *fell_back when provided.
TimeSeries extrapolate_series(const TimeSeries& series, int target_year, ExtrapolationMode mode,
                              bool* fell_back = nullptr);

// Fills interior gaps of (year, value) samples linearly onto an annual grid.
// Input years must be strictly increasing.
TimeSeries interpolate_annual(const std::vector<std::pair<int, double>>& samples,
                              const std::string& context);

} // namespace nscc
