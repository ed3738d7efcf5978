#include "infodens/csv.hpp"
#include "infodens/errors.hpp"
#include "infodens/format.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace infodens {

const char* const kScanHeader =
    "system,N,E_r,E_k,S_E,I_r,I_k,S_I,S_r,S_k,S,R_U_r,R_U_k";

std::string measure_row(const std::string& system, std::size_t N,
                        const MeasureSet& m) {
    std::ostringstream os;
    os << system << ',' << N;
    for (double v : {m.E_r, m.E_k, m.S_E, m.I_r, m.I_k, m.S_I, m.S_r, m.S_k,
                     m.S, m.R_U_r, m.R_U_k})
        os << ',' << fmt9(v);
    return os.str();
}

std::vector<std::string>
metadata_header(const std::vector<std::string>& config_lines) {
    std::vector<std::string> out;
    out.reserve(config_lines.size() + 1);
    out.push_back(std::string("# ") + kToolName + " " + kToolVersion);
    for (const auto& line : config_lines) out.push_back("# " + line);
    return out;
}

std::vector<std::string> scan_csv(const ScanResult& res) {
    std::vector<std::string> cfg;
    cfg.reserve(res.metadata.size());
    for (const auto& [k, v] : res.metadata) cfg.push_back(k + " = " + v);
    auto lines = metadata_header(cfg);
    lines.push_back(kScanHeader);
    const std::string sys = to_string(res.system);
    for (const auto& row : res.rows)
        lines.push_back(measure_row(sys, row.N, row.m));
    return lines;
}

std::vector<std::string> figure_csv(const ScanResult& res, bool uffink) {
    std::vector<std::string> cfg;
    cfg.reserve(res.metadata.size());
    for (const auto& [k, v] : res.metadata) cfg.push_back(k + " = " + v);
    auto lines = metadata_header(cfg);
    lines.push_back(uffink ? "N,S_I" : "N,S_E");
    for (const auto& row : res.rows)
        lines.push_back(std::to_string(row.N) + "," +
                        fmt9(uffink ? row.m.S_I : row.m.S_E));
    return lines;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cli", "write", "cannot open '" + path + "'");
    for (const auto& line : lines) out << line << '\n';
    out.flush();
    if (!out)
        throw input_error("cli", "write", "short write to '" + path + "'");
}

void print_lines(std::ostream& out, const std::vector<std::string>& lines) {
    for (const auto& line : lines) out << line << '\n';
}

Table read_csv(std::istream& in, const std::string& origin) {
    Table t;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        if (t.columns.empty()) {
            t.columns = std::move(cells);
        } else {
            if (cells.size() != t.columns.size())
                throw input_error("cli", "read",
                                  origin + ": row with " +
                                      std::to_string(cells.size()) +
                                      " cells, header has " +
                                      std::to_string(t.columns.size()));
            t.rows.push_back(std::move(cells));
        }
    }
    if (t.columns.empty())
        throw input_error("cli", "read", origin + ": no header row");
    return t;
}

Table read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cli", "read", "cannot open '" + path + "'");
    return read_csv(in, path);
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw input_error("cli", "read", "no column '" + name + "' in input");
}

double cell_number(const Table& t, std::size_t row, std::size_t col) {
    const std::string& v = t.rows[row][col];
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || !std::isfinite(x))
        throw input_error("cli", "read",
                          "cell '" + v + "' is not a finite number");
    return x;
}

} // namespace infodens
