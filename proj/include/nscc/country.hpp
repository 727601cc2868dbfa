#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace nscc {

// One row of the country master table. Base quantities refer to the model
// base year (the last historical year before the projection starts).
struct CountryRecord {
    std::string iso_code;       // 3-letter identifier, unique per table
    std::string name;
    std::string region_id;      // aggregation region used for benchmark rescaling
    double base_population = 0; // persons, > 0
    double base_gdp = 0;        // US$/yr, > 0
    double base_temperature = 0;   // deg C, national annual mean
    double coast_length = 0;       // km, >= 0; 0 disables coastal impact terms
    double wetland_area = 0;       // km2, >= 0; 0 disables the wetland term
    double dryland_area = 0;       // km2, >= 0
    double urban_share = 0;        // fraction in [0, 1]
    double temperature_pattern = 0; // national / global warming ratio, > 0

    double base_income_per_capita() const { return base_gdp / base_population; }
};

// Country master table; row order is preserved for deterministic iteration.
class CountryTable {
  public:
    void add(CountryRecord record); // throws ConfigError on duplicate iso

    const std::vector<CountryRecord>& records() const { return records_; }
    size_t size() const { return records_.size(); }
    bool contains(const std::string& iso) const { return index_.count(iso) > 0; }
    const CountryRecord& by_iso(const std::string& iso) const;

    double total_population() const;
    double total_gdp() const;
    // World mean income in the base year, US$/person/yr.
    double world_income_per_capita() const;

  private:
    std::vector<CountryRecord> records_;
    std::unordered_map<std::string, size_t> index_;
};

// CSV schema: iso,name,region,pop,gdp,temp,coast_km,wetland_km2,dryland_km2,
// urban_share,temp_pattern. Empty coast_km / wetland_km2 cells default to 0.
// Errors name the offending row and column.
CountryTable load_country_table(const std::string& path);

void write_country_table(const std::string& path, const CountryTable& table);

} // namespace nscc
