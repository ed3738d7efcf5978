#pragma once

#include "infodens/measures.hpp"
#include "infodens/scaling.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace infodens {

/// Column order of the scan CSV (and of the `measures` subcommand row).
extern const char* const kScanHeader;

std::string measure_row(const std::string& system, std::size_t N,
                        const MeasureSet& m);

/// '#'-prefixed header: tool version first, then one line per
/// "key = value" entry.  No timestamps — identical runs must produce
/// identical bytes.
std::vector<std::string>
metadata_header(const std::vector<std::string>& config_lines);

/// Full scan CSV: metadata header, column header, one row per N.
std::vector<std::string> scan_csv(const ScanResult& res);

/// Two-column (N, S_E) or (N, S_I) export for plotting.
std::vector<std::string> figure_csv(const ScanResult& res, bool uffink);

/// Write with LF endings regardless of platform.
void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);
void print_lines(std::ostream& out, const std::vector<std::string>& lines);

/// Comma-separated table with '#' comment lines skipped; first
/// non-comment line is the column header.  Cells stay strings; fit
/// converts the ones it needs.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const; // input_error if absent
};

Table read_csv(std::istream& in, const std::string& origin);
Table read_csv_file(const std::string& path);

double cell_number(const Table& t, std::size_t row, std::size_t col);

} // namespace infodens
