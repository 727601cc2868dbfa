#include "nscc/country.hpp"

#include "nscc/csv.hpp"
#include "nscc/errors.hpp"

#include <array>
#include <sstream>

namespace nscc {

namespace {

constexpr std::array<const char*, 11> kCountryColumns = {
    "iso",       "name",        "region",      "pop",         "gdp",         "temp",
    "coast_km",  "wetland_km2", "dryland_km2", "urban_share", "temp_pattern"};

} // namespace

void CountryTable::add(CountryRecord record) {
    if (index_.count(record.iso_code)) {
        throw ConfigError("duplicate iso code '" + record.iso_code + "' in country table");
    }
    index_.emplace(record.iso_code, records_.size());
    records_.push_back(std::move(record));
}

const CountryRecord& CountryTable::by_iso(const std::string& iso) const {
    auto it = index_.find(iso);
    if (it == index_.end()) throw ConfigError("unknown country '" + iso + "'");
    return records_[it->second];
}

double CountryTable::total_population() const {
    double total = 0.0;
    for (const auto& r : records_) total += r.base_population;
    return total;
}

double CountryTable::total_gdp() const {
    double total = 0.0;
    for (const auto& r : records_) total += r.base_gdp;
    return total;
}

double CountryTable::world_income_per_capita() const {
    return total_gdp() / total_population();
}

CountryTable load_country_table(const std::string& path) {
    const auto table = csv::read_file(path);
    std::array<int, kCountryColumns.size()> cols{};
    for (size_t i = 0; i < kCountryColumns.size(); ++i) {
        cols[i] = table.column(kCountryColumns[i]);
        if (cols[i] < 0) {
            throw ConfigError(path + ": missing required column '" +
                              std::string(kCountryColumns[i]) + "'");
        }
    }

    CountryTable out;
    for (size_t row = 0; row < table.rows.size(); ++row) {
        const auto& cells = table.rows[row];
        auto cell = [&](size_t col_idx) -> const std::string& {
            return cells[static_cast<size_t>(cols[col_idx])];
        };
        auto where = [&](size_t col_idx) {
            std::ostringstream ctx;
            ctx << path << " row " << (row + 2) << " column '" << kCountryColumns[col_idx] << "'";
            return ctx.str();
        };
        auto num = [&](size_t col_idx) { return csv::parse_number(cell(col_idx), where(col_idx)); };
        auto optional_num = [&](size_t col_idx) {
            return cell(col_idx).empty() ? 0.0 : num(col_idx);
        };

        CountryRecord rec;
        rec.iso_code = cell(0);
        rec.name = cell(1);
        rec.region_id = cell(2);
        rec.base_population = num(3);
        rec.base_gdp = num(4);
        rec.base_temperature = num(5);
        rec.coast_length = optional_num(6);
        rec.wetland_area = optional_num(7);
        rec.dryland_area = num(8);
        rec.urban_share = num(9);
        rec.temperature_pattern = num(10);

        if (rec.iso_code.empty()) throw ConfigError(where(0) + ": empty iso code");
        if (!(rec.base_population > 0)) throw ConfigError(where(3) + ": population must be > 0");
        if (rec.base_population < 1.0) throw ConfigError(where(3) + ": population below 1 person");
        if (!(rec.base_gdp > 0)) throw ConfigError(where(4) + ": gdp must be > 0");
        if (rec.coast_length < 0) throw ConfigError(where(6) + ": negative coast length");
        if (rec.wetland_area < 0) throw ConfigError(where(7) + ": negative wetland area");
        if (rec.dryland_area < 0) throw ConfigError(where(8) + ": negative dryland area");
        if (rec.urban_share < 0 || rec.urban_share > 1) {
            throw ConfigError(where(9) + ": urban share outside [0, 1]");
        }
        if (!(rec.temperature_pattern > 0)) {
            throw ConfigError(where(10) + ": temperature pattern must be > 0");
        }
        out.add(std::move(rec));
    }
    return out;
}

void write_country_table(const std::string& path, const CountryTable& table) {
    csv::Table out;
    out.header.assign(kCountryColumns.begin(), kCountryColumns.end());
    for (const auto& r : table.records()) {
        out.rows.push_back({r.iso_code, r.name, r.region_id, csv::format_number(r.base_population),
                            csv::format_number(r.base_gdp), csv::format_number(r.base_temperature),
                            csv::format_number(r.coast_length), csv::format_number(r.wetland_area),
                            csv::format_number(r.dryland_area), csv::format_number(r.urban_share),
                            csv::format_number(r.temperature_pattern)});
    }
    csv::write_file(path, out);
}

} // namespace nscc
