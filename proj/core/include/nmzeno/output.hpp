// output.hpp: CSV and JSON emission of sweep results.
//
// CSV layout: one "# key: value" line per metadata entry, then the header row
// "tau,<series>[,<series>...]", then one row per tau. Numbers use 17
// significant digits in scientific notation so identical runs are
// byte-identical.

#pragma once

#include "nmzeno/scenario.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace nmzeno {

enum class OutputFormat { Csv, Json };

// Accepts "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

void write_csv(std::ostream& out, const SweepResult& result);
void write_json(std::ostream& out, const SweepResult& result);
void write(std::ostream& out, const SweepResult& result, OutputFormat format);

std::string to_csv(const SweepResult& result);

}  // namespace nmzeno
