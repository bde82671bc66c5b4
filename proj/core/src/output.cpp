#include "nmzeno/output.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nmzeno {

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) +
                                "' (expected csv or json)");
}

void write_csv(std::ostream& out, const SweepResult& result) {
    for (const auto& [key, value] : result.metadata) {
        out << "# " << key << ": " << value << '\n';
    }
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        out << (i ? "," : "") << result.columns[i];
    }
    out << '\n';
    for (const auto& row : result.rows) {
        if (row.size() != result.columns.size()) {
            throw std::logic_error("write_csv: row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const SweepResult& result) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : result.metadata) {
        meta[key] = value;
    }
    doc["metadata"] = std::move(meta);
    doc["columns"] = result.columns;
    doc["rows"] = result.rows;
    out << doc.dump(1) << '\n';
}

void write(std::ostream& out, const SweepResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        write_csv(out, result);
    } else {
        write_json(out, result);
    }
}

std::string to_csv(const SweepResult& result) {
    std::ostringstream s;
    write_csv(s, result);
    return s.str();
}

}  // namespace nmzeno
