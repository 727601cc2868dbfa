#pragma once

#include <string>
#include <vector>

namespace nscc::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 if absent.
    int column(const std::string& name) const;
};

// Parses a comma-separated file with a single header row. Fields may be
// double-quoted; embedded quotes are doubled. Throws ConfigError on I/O
// failure or ragged rows (message names the row).
Table read_file(const std::string& path);

std::vector<std::string> split_line(const std::string& line);

// Quotes a field only when it contains a comma, quote, or newline.
std::string escape_field(const std::string& field);

void write_file(const std::string& path, const Table& table);

// Fixed-format numeric cell used by every emitted CSV: shortest round-trip
// representation, locale-independent, so reruns are byte-identical.
std::string format_number(double value);

double parse_number(const std::string& cell, const std::string& context);

} // namespace nscc::csv
