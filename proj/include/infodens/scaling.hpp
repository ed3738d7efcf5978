#pragma once

#include "infodens/bosons.hpp"
#include "infodens/grid.hpp"
#include "infodens/mean_field.hpp"
#include "infodens/measures.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace infodens {

enum class System { cluster, nucleus, bosons };

const char* to_string(System s);
System system_from_string(const std::string& s);

/// N values used when the caller does not supply a list: closed or
/// near-closed shells for the fermionic systems, a weak-to-strong
/// interaction span for the trapped bosons.
const std::vector<std::size_t>& default_n_values(System s);

struct ScanRow {
    std::size_t N = 0;
    MeasureSet m;
};

struct ScanResult {
    System system = System::cluster;
    std::vector<ScanRow> rows; // N ascending
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// Everything a scan needs besides the N list.
struct ScanConfig {
    PotentialSpec potential; // cluster / nucleus rows
    TrapSpec trap;           // boson rows (N overridden per row)
    RadialGrid r_grid;
    RadialGrid k_grid;
    int l_max = 12;
    int max_states_per_l = 8;
    unsigned jobs = 1;
};

/// One full pipeline run per N (spectrum → occupation → densities → measures
/// for fermions; condensate relaxation → measures for bosons).  Rows are
/// computed independently (optionally in parallel) and returned N-ascending.
/// Duplicate N values are rejected up front.
ScanResult scan(System sys, const std::vector<std::size_t>& n_values,
                const ScanConfig& cfg);

enum class FitModel { linear, power, log };

const char* to_string(FitModel m);
FitModel fit_model_from_string(const std::string& s);

/// linear: y = c·N          (c stored in c)
/// power:  y = a·N^b        (OLS on ln y vs ln N)
/// log:    y = a + b·ln N
/// r_squared and residuals live in the model's natural space (log-log for
/// power, semi-log for log).
struct FitResult {
    FitModel model = FitModel::linear;
    double a = 0.0, b = 0.0, c = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;
};

FitResult fit(FitModel model, const std::vector<std::pair<double, double>>& points);

} // namespace infodens
