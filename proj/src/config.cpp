#include "infodens/config.hpp"
#include "infodens/errors.hpp"
#include "infodens/format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace infodens {

namespace {

constexpr std::array<const char*, 15> kKeys = {
    "system.kind",          "system.V0",
    "system.r0",            "system.a",
    "system.hbar2_over_2m", "bosons.omega",
    "bosons.a_s_over_b",    "grid.r_max",
    "grid.r_points",        "grid.k_max",
    "grid.k_points",        "spectrum.l_max",
    "spectrum.max_states_per_l", "scan.n_values",
    "jobs"};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void assign_checked(const std::string& key, const std::string& value,
                    const std::string& origin, Settings& out) {
    if (!known_key(key))
        throw input_error("config", "parse",
                          origin + ": unknown key '" + key + "'");
    if (value.empty())
        throw input_error("config", "parse",
                          origin + ": empty value for '" + key + "'");
    out[key] = value;
}

double to_double(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || !std::isfinite(x))
        throw input_error("config", key, "'" + v + "' is not a finite number");
    return x;
}

std::size_t to_count(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    long long x = -1;
    try {
        x = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || x < 0)
        throw input_error("config", key,
                          "'" + v + "' is not a non-negative integer");
    return static_cast<std::size_t>(x);
}

} // namespace

bool known_key(const std::string& key) {
    return std::find_if(kKeys.begin(), kKeys.end(), [&](const char* k) {
               return key == k;
           }) != kKeys.end();
}

void parse_settings(std::istream& in, const std::string& origin,
                    Settings& out) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
            line.erase(0, 3); // UTF-8 BOM
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            throw input_error("config", "parse",
                              where + ": expected 'key = value'");
        assign_checked(trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                       where, out);
    }
}

void load_settings_file(const std::string& path, Settings& out) {
    std::ifstream in(path);
    if (!in)
        throw input_error("config", "load", "cannot open '" + path + "'");
    parse_settings(in, path, out);
}

void apply_override(const std::string& assignment, Settings& out) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw input_error("config", "parse",
                          "--set expects key=value, got '" + assignment + "'");
    assign_checked(trim(assignment.substr(0, eq)),
                   trim(assignment.substr(eq + 1)), "--set", out);
}

ScanConfig RunConfig::scan_config() const {
    ScanConfig sc;
    sc.potential = potential;
    sc.trap = trap;
    sc.r_grid = r_grid;
    sc.k_grid = k_grid;
    sc.l_max = l_max;
    sc.max_states_per_l = max_states_per_l;
    sc.jobs = jobs;
    return sc;
}

std::vector<std::string> RunConfig::echo() const {
    std::vector<std::string> lines;
    auto put = [&](const char* key, const std::string& v) {
        lines.push_back(std::string(key) + " = " + v);
    };
    put("system.kind", to_string(system));
    if (system == System::bosons) {
        put("bosons.omega", fmt9(trap.omega));
        put("bosons.a_s_over_b",
            fmt9(trap.scattering_length / trap.oscillator_length()));
    } else {
        put("system.V0", fmt9(potential.V0));
        put("system.r0", fmt9(potential.r0));
        put("system.a", fmt9(potential.a));
        put("system.hbar2_over_2m", fmt9(potential.hbar2_over_2m));
        put("spectrum.l_max", std::to_string(l_max));
        put("spectrum.max_states_per_l", std::to_string(max_states_per_l));
    }
    put("grid.r_max", fmt9(r_grid.r_max));
    put("grid.r_points", std::to_string(r_grid.n_points));
    put("grid.k_max", fmt9(k_grid.r_max));
    put("grid.k_points", std::to_string(k_grid.n_points));
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < n_values.size(); ++i)
            os << (i ? "," : "") << n_values[i];
        put("scan.n_values", os.str());
    }
    return lines;
}

RunConfig make_run_config(const Settings& in) {
    for (const auto& [k, v] : in)
        if (!known_key(k))
            throw input_error("config", "resolve", "unknown key '" + k + "'");

    Settings s = in;
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = s.find(key);
        if (it == s.end()) return std::nullopt;
        std::string v = it->second;
        s.erase(it);
        return v;
    };

    RunConfig rc;
    if (auto v = take("system.kind")) rc.system = system_from_string(*v);
    const bool fermionic = rc.system != System::bosons;

    if (fermionic) {
        rc.potential = rc.system == System::cluster
                           ? PotentialSpec::cluster_defaults()
                           : PotentialSpec::nucleus_defaults();
        if (auto v = take("system.V0"))
            rc.potential.V0 = to_double(*v, "system.V0");
        if (auto v = take("system.r0"))
            rc.potential.r0 = to_double(*v, "system.r0");
        if (auto v = take("system.a"))
            rc.potential.a = to_double(*v, "system.a");
        if (auto v = take("system.hbar2_over_2m"))
            rc.potential.hbar2_over_2m =
                to_double(*v, "system.hbar2_over_2m");
        rc.potential.validate();
        if (auto v = take("spectrum.l_max")) {
            const auto n = to_count(*v, "spectrum.l_max");
            if (n > 50)
                throw input_error("config", "spectrum.l_max",
                                  "l_max above 50 is not supported");
            rc.l_max = static_cast<int>(n);
        }
        if (auto v = take("spectrum.max_states_per_l")) {
            const auto n = to_count(*v, "spectrum.max_states_per_l");
            if (n < 1 || n > 50)
                throw input_error("config", "spectrum.max_states_per_l",
                                  "must be in [1, 50]");
            rc.max_states_per_l = static_cast<int>(n);
        }
    } else {
        rc.potential = PotentialSpec::harmonic_defaults();
        if (auto v = take("bosons.omega")) {
            rc.trap.omega = to_double(*v, "bosons.omega");
            if (!(rc.trap.omega > 0.0))
                throw input_error("config", "bosons.omega",
                                  "trap frequency must be positive");
        }
        double ratio = 0.0043; // a_s/b, Rb-like default
        if (auto v = take("bosons.a_s_over_b")) {
            ratio = to_double(*v, "bosons.a_s_over_b");
            if (ratio < 0.0)
                throw input_error("config", "bosons.a_s_over_b",
                                  "scattering length must be >= 0");
        }
        rc.trap.scattering_length = ratio * rc.trap.oscillator_length();
        rc.trap.validate();
    }

    // Grid defaults per system: the box holds the largest default-N density
    // plus its evanescent tail; k_max sits safely past the surface-diffuseness
    // momentum cutoff e^{-pi a k} (fermions) / the healing-length scale
    // (bosons), where the transforms are already at round-off.
    double r_max, k_max;
    switch (rc.system) {
        case System::cluster:
            r_max = 40.0; // a0; R(198) ~ 23.3 a0
            k_max = 2.5;  // 1/a0
            break;
        case System::nucleus:
            r_max = 20.0; // fm; R(126) ~ 6.4 fm
            k_max = 5.0;  // 1/fm
            break;
        case System::bosons:
        default: {
            const double b = rc.trap.oscillator_length();
            r_max = 12.0 * b; // relaxation precondition
            k_max = 10.0 / b;
            break;
        }
    }
    std::size_t r_points = 2000, k_points = 2000;
    if (auto v = take("grid.r_max")) r_max = to_double(*v, "grid.r_max");
    if (auto v = take("grid.r_points"))
        r_points = to_count(*v, "grid.r_points");
    if (auto v = take("grid.k_max")) k_max = to_double(*v, "grid.k_max");
    if (auto v = take("grid.k_points"))
        k_points = to_count(*v, "grid.k_points");
    rc.r_grid = RadialGrid::make(r_max, r_points);
    rc.k_grid = RadialGrid::make(k_max, k_points);

    rc.n_values = default_n_values(rc.system);
    if (auto v = take("scan.n_values")) {
        rc.n_values.clear();
        std::stringstream ss(*v);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            const auto n = to_count(tok, "scan.n_values");
            if (n == 0)
                throw input_error("config", "scan.n_values",
                                  "particle counts must be >= 1");
            rc.n_values.push_back(n);
        }
        if (rc.n_values.empty())
            throw input_error("config", "scan.n_values", "empty N list");
    }

    if (auto v = take("jobs")) {
        const auto n = to_count(*v, "jobs");
        if (n < 1)
            throw input_error("config", "jobs", "need at least one job");
        rc.jobs = static_cast<unsigned>(n);
    }

    // anything left over is a known key that does not apply to this system
    if (!s.empty())
        throw input_error("config", "resolve",
                          "key '" + s.begin()->first +
                              "' does not apply to system '" +
                              to_string(rc.system) + "'");
    return rc;
}

} // namespace infodens
