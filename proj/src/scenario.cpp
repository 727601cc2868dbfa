#include "nscc/scenario.hpp"

#include "nscc/csv.hpp"
#include "nscc/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace nscc {

namespace {

constexpr const char* kGlobalIso = "WLD";

// Reads a long-format iso,year,value file into per-iso annual series.
std::unordered_map<std::string, TimeSeries> load_series_file(const std::string& path,
                                                             const std::string& variable,
                                                             bool interpolate_gaps) {
    const auto table = csv::read_file(path);
    const int iso_col = table.column("iso");
    const int year_col = table.column("year");
    const int value_col = table.column("value");
    if (iso_col < 0 || year_col < 0 || value_col < 0) {
        throw ConfigError(path + ": expected header iso,year,value");
    }

    std::unordered_map<std::string, std::vector<std::pair<int, double>>> samples;
    for (size_t row = 0; row < table.rows.size(); ++row) {
        const auto& cells = table.rows[row];
        std::ostringstream ctx;
        ctx << path << " row " << (row + 2);
        const double year = csv::parse_number(cells[year_col], ctx.str() + " column 'year'");
        const double value = csv::parse_number(cells[value_col], ctx.str() + " column 'value'");
        samples[cells[iso_col]].emplace_back(static_cast<int>(year), value);
    }

    std::unordered_map<std::string, TimeSeries> out;
    for (auto& [iso, points] : samples) {
        std::sort(points.begin(), points.end());
        for (size_t i = 0; i + 1 < points.size(); ++i) {
            if (points[i + 1].first == points[i].first) {
                std::ostringstream msg;
                msg << path << ": duplicate year " << points[i].first << " for " << iso;
                throw ConfigError(msg.str());
            }
            if (!interpolate_gaps && points[i + 1].first != points[i].first + 1) {
                std::ostringstream msg;
                msg << variable << " series for " << iso << " has a gap between "
                    << points[i].first << " and " << points[i + 1].first;
                throw ConfigError(msg.str());
            }
        }
        out.emplace(iso, interpolate_annual(points, variable + " series for " + iso));
    }
    return out;
}

TimeSeries take_country_series(std::unordered_map<std::string, TimeSeries>& series,
                               const std::string& iso, const std::string& variable) {
    auto it = series.find(iso);
    if (it == series.end()) {
        throw ConfigError("country '" + iso + "' missing from " + variable + " scenario");
    }
    if (it->second.empty()) {
        throw ConfigError("empty " + variable + " series for country '" + iso + "'");
    }
    return std::move(it->second);
}

void check_savings(const TimeSeries& savings, const std::string& iso) {
    for (double v : savings.values) {
        if (!(v > 0.0 && v < 1.0)) {
            std::ostringstream msg;
            msg << "savings rate " << v << " outside (0, 1) for " << iso;
            throw ConfigError(msg.str());
        }
    }
}

void visit_series(ScenarioSet& scenario,
                  const std::function<void(TimeSeries&, const std::string&)>& fn) {
    for (auto& [iso, series] : scenario.countries) {
        fn(series.population, "population:" + iso);
        fn(series.tfp_growth, "tfp_growth:" + iso);
        fn(series.savings_rate, "savings_rate:" + iso);
        for (Gas gas : kAllGases) {
            fn(series.intensity_rate[static_cast<size_t>(gas)],
               std::string("intensity_rate_") + gas_name(gas) + ":" + iso);
        }
    }
    fn(scenario.cfc11_ppt, "cfc11");
    fn(scenario.cfc12_ppt, "cfc12");
}

} // namespace

const CountrySeries& ScenarioSet::for_country(const std::string& iso) const {
    auto it = countries.find(iso);
    if (it == countries.end()) throw EngineError("no scenario series for country '" + iso + "'");
    return it->second;
}

int ScenarioSet::first_year() const {
    int year = std::numeric_limits<int>::min();
    auto visit = [&year](const TimeSeries& s) { year = std::max(year, s.start_year); };
    for (const auto& [iso, series] : countries) {
        visit(series.population);
        visit(series.tfp_growth);
        visit(series.savings_rate);
        for (const auto& s : series.intensity_rate) visit(s);
    }
    visit(cfc11_ppt);
    visit(cfc12_ppt);
    return year;
}

int ScenarioSet::last_common_year() const {
    int year = std::numeric_limits<int>::max();
    auto visit = [&year](const TimeSeries& s) { year = std::min(year, s.last_year()); };
    for (const auto& [iso, series] : countries) {
        visit(series.population);
        visit(series.tfp_growth);
        visit(series.savings_rate);
        for (const auto& s : series.intensity_rate) visit(s);
    }
    visit(cfc11_ppt);
    visit(cfc12_ppt);
    return year;
}

ScenarioSet load_scenario(const ScenarioPaths& paths, const CountryTable& table,
                          const ScenarioOptions& options) {
    auto population = load_series_file(paths.population, "population", options.interpolate_gaps);
    auto tfp = load_series_file(paths.tfp_growth, "tfp_growth", options.interpolate_gaps);
    auto savings = load_series_file(paths.savings_rate, "savings_rate", options.interpolate_gaps);
    std::array<std::unordered_map<std::string, TimeSeries>, kGasCount> intensity;
    for (Gas gas : kAllGases) {
        const auto idx = static_cast<size_t>(gas);
        intensity[idx] = load_series_file(paths.intensity_rate[idx],
                                          std::string("intensity_rate_") + gas_name(gas),
                                          options.interpolate_gaps);
    }
    auto cfc11 = load_series_file(paths.cfc11, "cfc11", options.interpolate_gaps);
    auto cfc12 = load_series_file(paths.cfc12, "cfc12", options.interpolate_gaps);

    ScenarioSet out;
    for (const auto& record : table.records()) {
        const auto& iso = record.iso_code;
        CountrySeries series;
        series.population = take_country_series(population, iso, "population");
        series.tfp_growth = take_country_series(tfp, iso, "tfp_growth");
        series.savings_rate = take_country_series(savings, iso, "savings_rate");
        check_savings(series.savings_rate, iso);
        for (Gas gas : kAllGases) {
            const auto idx = static_cast<size_t>(gas);
            series.intensity_rate[idx] = take_country_series(
                intensity[idx], iso, std::string("intensity_rate_") + gas_name(gas));
        }
        out.countries.emplace(iso, std::move(series));
    }
    out.cfc11_ppt = take_country_series(cfc11, kGlobalIso, "cfc11");
    out.cfc12_ppt = take_country_series(cfc12, kGlobalIso, "cfc12");
    return out;
}

ScenarioSet extend_scenario(const ScenarioSet& scenario, int horizon,
                            const ScenarioOptions& options,
                            std::vector<std::string>* warnings) {
    auto mode_for = [&options](const std::string& tag) {
        const auto variable = tag.substr(0, tag.find(':'));
        auto it = options.extrapolation.find(variable);
        if (it == options.extrapolation.end() && variable.rfind("intensity_rate", 0) == 0) {
            it = options.extrapolation.find("intensity_rate");
        }
        if (it == options.extrapolation.end() && variable.rfind("cfc", 0) == 0) {
            it = options.extrapolation.find("cfc");
        }
        return it == options.extrapolation.end() ? ExtrapolationMode::ConstantLevel : it->second;
    };

    ScenarioSet out = scenario;
    visit_series(out, [&](TimeSeries& series, const std::string& tag) {
        bool fell_back = false;
        series = extrapolate_series(series, horizon, mode_for(tag), &fell_back);
        if (fell_back && warnings) {
            warnings->push_back("constant-rate extrapolation fell back to constant-level for " +
                                tag);
        }
        if (tag.rfind("savings_rate", 0) == 0) {
            bool clipped = false;
            for (double& v : series.values) {
                const double orig = v;
                v = std::clamp(v, 0.0, 1.0);
                clipped |= v != orig;
            }
            if (clipped && warnings) warnings->push_back("clipped " + tag + " to [0, 1]");
        }
    });
    return out;
}

ValidationReport validate_world_totals(const CountryTable& table,
                                       const std::map<std::string, double>& global_reference) {
    ValidationReport report;
    for (const auto& [variable, reference] : global_reference) {
        if (!(reference > 0)) continue;
        double sum = 0.0;
        if (variable == "pop") {
            sum = table.total_population();
        } else if (variable == "gdp") {
            sum = table.total_gdp();
        } else {
            report.warnings.push_back({variable + " (unknown reference variable)", 0.0});
            continue;
        }
        const double coverage = sum / reference;
        if (coverage < 0.99) report.warnings.push_back({variable, coverage});
    }
    return report;
}

} // namespace nscc
