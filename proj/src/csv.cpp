#include "nscc/csv.hpp"

#include "nscc/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace nscc::csv {

int Table::column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open CSV file: " + path);
    Table table;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        auto fields = split_line(line);
        if (table.header.empty()) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size()) {
                std::ostringstream msg;
                msg << path << ": row " << lineno << " has " << fields.size()
                    << " fields, header has " << table.header.size();
                throw ConfigError(msg.str());
            }
            table.rows.push_back(std::move(fields));
        }
    }
    if (table.header.empty()) throw ConfigError("empty CSV file: " + path);
    return table;
}

std::string escape_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_file(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write CSV file: " + path);
    auto write_row = [&out](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << escape_field(row[i]);
        }
        out << '\n';
    };
    write_row(table.header);
    for (const auto& row : table.rows) write_row(row);
}

std::string format_number(double value) {
    if (value == 0.0) return "0"; // normalize -0
    char buf[40];
    // Shortest representation that round-trips a double.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == value) break;
    }
    return buf;
}

double parse_number(const std::string& cell, const std::string& context) {
    const char* begin = cell.c_str();
    const char* end = begin + cell.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("unparseable numeric cell '" + cell + "' in " + context);
    }
    return value;
}

} // namespace nscc::csv
