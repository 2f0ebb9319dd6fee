#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jordan::cli {

std::string format_number(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

struct CsvCell {
    int precision;
    std::string operator()(double v) const { return format_number(v, precision); }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
    int precision;
    nlohmann::ordered_json operator()(double v) const {
        if (!std::isfinite(v)) return nullptr;
        // Round to the requested digits; the serializer then prints the shortest form.
        return std::strtod(format_number(v, precision).c_str(), nullptr);
    }
    nlohmann::ordered_json operator()(long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

}  // namespace

void write_csv(const Table& table, int precision, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(table.columns[i]);
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << std::visit(CsvCell{precision}, row[i]);
        os << '\n';
    }
}

void write_json(const Table& table, int precision, std::ostream& os) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[table.columns[i]] = std::visit(JsonCell{precision}, row[i]);
        array.push_back(std::move(obj));
    }
    os << array.dump(2) << '\n';
}

void emit(const Table& table, const OutputSpec& spec, std::ostream& out) {
    std::ostringstream buffer;
    if (spec.format == Format::Csv)
        write_csv(table, spec.precision, buffer);
    else
        write_json(table, spec.precision, buffer);
    if (spec.destination.empty()) {
        out << buffer.str();
        return;
    }
    std::ofstream file(spec.destination, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + spec.destination);
    file << buffer.str();
    if (!file) throw std::runtime_error("cannot write output file " + spec.destination);
}

}  // namespace jordan::cli
