#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace jordan::cli {

enum class Format { Csv, Json };

struct OutputSpec {
    Format format = Format::Csv;
    int precision = 17;  // significant digits, 6..17
    std::string destination;  // empty: standard output
};

using Cell = std::variant<double, long, bool, std::string>;

// Column-ordered rows; serialized with a header (CSV) or as an array of objects (JSON).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_number(double v, int precision);

void write_csv(const Table& table, int precision, std::ostream& os);
void write_json(const Table& table, int precision, std::ostream& os);

// Writes to spec.destination or to out. Throws std::runtime_error when the file cannot be opened.
void emit(const Table& table, const OutputSpec& spec, std::ostream& out);

}  // namespace jordan::cli
