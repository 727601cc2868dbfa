#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nscc/errors.hpp"
#include "nscc/time_series.hpp"

#include <cmath>

using namespace nscc;

namespace {

TimeSeries make_series(int start, std::vector<double> values) {
    TimeSeries s;
    s.start_year = start;
    s.values = std::move(values);
    return s;
}

} // namespace

TEST_CASE("at and covers respect the year range") {
    const auto s = make_series(2019, {1.0, 2.0, 3.0});
    CHECK(s.last_year() == 2021);
    CHECK(s.covers(2019));
    CHECK(s.covers(2021));
    CHECK_FALSE(s.covers(2022));
    CHECK(s.at(2020) == 2.0);
    CHECK_THROWS_AS(s.at(2018), EngineError);
    CHECK_THROWS_AS(s.at(2022), EngineError);
}

TEST_CASE("constant-level extrapolation repeats the last value") {
    const auto s = make_series(2019, {1.0, 4.0});
    const auto out = extrapolate_series(s, 2023, ExtrapolationMode::ConstantLevel);
    CHECK(out.last_year() == 2023);
    for (int y = 2021; y <= 2023; ++y) CHECK(out.at(y) == 4.0);
}

TEST_CASE("constant-rate extrapolation continues the mean growth rate") {
    // Geometric series with ratio 1.05: the continuation keeps that ratio.
    std::vector<double> values;
    double v = 100.0;
    for (int i = 0; i < 5; ++i) {
        values.push_back(v);
        v *= 1.05;
    }
    const auto s = make_series(2019, values);
    bool fell_back = true;
    const auto out = extrapolate_series(s, 2030, ExtrapolationMode::ConstantRate, &fell_back);
    CHECK_FALSE(fell_back);
    // Mean log ratio of a geometric series is exactly log(1.05).
    const double expected_2030 = values.back() * std::pow(1.05, 2030 - 2023);
    CHECK(out.at(2030) == doctest::Approx(expected_2030).epsilon(1e-12));
}

TEST_CASE("constant-rate uses at most the trailing ten observations") {
    // Early fast growth followed by exactly ten flat years: the window sees
    // only the flat stretch, so the continuation stays flat.
    std::vector<double> values = {1.0, 10.0};
    for (int i = 0; i < 10; ++i) values.push_back(100.0);
    const auto s = make_series(2000, values);
    const auto out = extrapolate_series(s, 2020, ExtrapolationMode::ConstantRate);
    CHECK(out.at(2020) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("extrapolation is a no-op when the series already covers the target") {
    const auto s = make_series(2019, {1.0, 2.0, 3.0});
    const auto out = extrapolate_series(s, 2020, ExtrapolationMode::ConstantRate);
    CHECK(out.values == s.values);
}

TEST_CASE("constant-rate falls back on sign changes and zeros") {
    bool fell_back = false;
    const auto flip = make_series(2019, {1.0, -1.0, 1.0});
    const auto out = extrapolate_series(flip, 2025, ExtrapolationMode::ConstantRate, &fell_back);
    CHECK(fell_back);
    CHECK(out.at(2025) == 1.0); // constant-level continuation

    fell_back = false;
    const auto zero = make_series(2019, {0.0, 0.0});
    extrapolate_series(zero, 2025, ExtrapolationMode::ConstantRate, &fell_back);
    CHECK(fell_back);

    fell_back = false;
    const auto single = make_series(2019, {5.0});
    const auto out2 = extrapolate_series(single, 2021, ExtrapolationMode::ConstantRate, &fell_back);
    CHECK(fell_back);
    CHECK(out2.at(2021) == 5.0);
}

TEST_CASE("negative series extrapolate by magnitude ratio") {
    const auto s = make_series(2019, {-100.0, -110.0});
    bool fell_back = false;
    const auto out = extrapolate_series(s, 2021, ExtrapolationMode::ConstantRate, &fell_back);
    CHECK_FALSE(fell_back);
    CHECK(out.at(2021) == doctest::Approx(-121.0).epsilon(1e-12));
}

TEST_CASE("extrapolation rejects empty series and targets before the start") {
    CHECK_THROWS_AS(extrapolate_series(TimeSeries{}, 2020, ExtrapolationMode::ConstantLevel),
                    ConfigError);
    const auto s = make_series(2019, {1.0});
    CHECK_THROWS_AS(extrapolate_series(s, 2018, ExtrapolationMode::ConstantLevel), ConfigError);
}

TEST_CASE("parse_extrapolation_mode") {
    CHECK(parse_extrapolation_mode("constant-level") == ExtrapolationMode::ConstantLevel);
    CHECK(parse_extrapolation_mode("constant-rate") == ExtrapolationMode::ConstantRate);
    CHECK_THROWS_AS(parse_extrapolation_mode("bogus"), ConfigError);
}

TEST_CASE("interpolate_annual fills gaps linearly") {
    const auto out = interpolate_annual({{2019, 1.0}, {2023, 9.0}}, "test");
    CHECK(out.start_year == 2019);
    CHECK(out.at(2019) == 1.0);
    CHECK(out.at(2020) == doctest::Approx(3.0));
    CHECK(out.at(2021) == doctest::Approx(5.0));
    CHECK(out.at(2022) == doctest::Approx(7.0));
    CHECK(out.at(2023) == 9.0);
}

TEST_CASE("interpolate_annual keeps annual samples verbatim") {
    const auto out = interpolate_annual({{2019, 1.5}, {2020, 2.5}}, "test");
    CHECK(out.values == std::vector<double>{1.5, 2.5});
}

TEST_CASE("interpolate_annual rejects unsorted or duplicate years") {
    CHECK_THROWS_WITH_AS(interpolate_annual({{2020, 1.0}, {2019, 2.0}}, "pop series"),
                         doctest::Contains("pop series"), ConfigError);
    CHECK_THROWS_AS(interpolate_annual({{2019, 1.0}, {2019, 2.0}}, "x"), ConfigError);
    CHECK_THROWS_AS(interpolate_annual({}, "x"), ConfigError);
}
