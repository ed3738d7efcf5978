#pragma once

#include "infodens/scaling.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace infodens {

/// Flat `key = value` settings.  '#' starts a comment, blank lines are
/// skipped, whitespace around key and value is trimmed, later assignments
/// win.  Keys are checked against the known set at assignment time so a
/// typo fails loudly instead of silently keeping a default.
using Settings = std::map<std::string, std::string>;

bool known_key(const std::string& key);

/// Parse settings text; `origin` names the source (file path, "--set", ...)
/// for error messages.  Merges into `out`, later keys winning.
void parse_settings(std::istream& in, const std::string& origin,
                    Settings& out);
void load_settings_file(const std::string& path, Settings& out);

/// Apply one "key=value" override (the --set flag form).
void apply_override(const std::string& assignment, Settings& out);

/// Everything a run needs, resolved from defaults + settings.  Grid
/// defaults are per system: the box has to hold the largest default-N
/// density (plus evanescent tail) and the momentum grid has to reach far
/// enough that the Bessel transform conserves the norm.
struct RunConfig {
    System system = System::cluster;
    PotentialSpec potential; // cluster / nucleus
    TrapSpec trap;           // bosons (N filled per run)
    RadialGrid r_grid;
    RadialGrid k_grid;
    int l_max = 12;
    int max_states_per_l = 8;
    std::vector<std::size_t> n_values; // scan list
    unsigned jobs = 1;

    ScanConfig scan_config() const;

    /// Full effective configuration, one "key = value" string per entry,
    /// fixed order — echoed into every output header so any run can be
    /// reproduced from its own artifact.  `jobs` is deliberately absent:
    /// results must not depend on it, so it must not differentiate files.
    std::vector<std::string> echo() const;
};

/// Resolve a RunConfig: system defaults first, then `s` on top.  Unknown
/// keys, malformed numbers, and out-of-range values all throw input_error
/// naming the key.
RunConfig make_run_config(const Settings& s);

} // namespace infodens
