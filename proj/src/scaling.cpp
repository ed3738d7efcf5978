#include "infodens/scaling.hpp"
#include "infodens/errors.hpp"
#include "infodens/format.hpp"
#include "infodens/parallel.hpp"
#include "infodens/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

namespace infodens {

const char* to_string(System s) {
    switch (s) {
        case System::cluster: return "cluster";
        case System::nucleus: return "nucleus";
        case System::bosons: return "bosons";
    }
    throw input_error("scaling", "system", "unreachable system value");
}

System system_from_string(const std::string& s) {
    if (s == "cluster") return System::cluster;
    if (s == "nucleus") return System::nucleus;
    if (s == "bosons") return System::bosons;
    throw input_error("scaling", "system", "unknown system '" + s + "'");
}

const std::vector<std::size_t>& default_n_values(System s) {
    static const std::vector<std::size_t> clusters{2, 8, 18, 20, 34,
                                                   40, 58, 92, 138, 198};
    static const std::vector<std::size_t> nuclei{2, 8, 16, 20, 28,
                                                 40, 50, 82, 126};
    static const std::vector<std::size_t> bosons{10, 50, 100, 500,
                                                 1000, 5000, 10000};
    switch (s) {
        case System::cluster: return clusters;
        case System::nucleus: return nuclei;
        case System::bosons: return bosons;
    }
    throw input_error("scaling", "system", "unreachable system value");
}

namespace {

MeasureSet fermion_row(const ScanConfig& cfg, std::size_t N) {
    const auto orbitals = solve_bound_states(
        cfg.potential, N, cfg.l_max, cfg.max_states_per_l, cfg.r_grid);
    const auto occ = fill_shells(orbitals, N);
    const auto pair = make_density_pair(occ, cfg.k_grid);
    return measure_set(pair);
}

MeasureSet boson_row(const ScanConfig& cfg, std::size_t N) {
    TrapSpec trap = cfg.trap;
    trap.N = N;
    const auto res = boson_ground_state(trap, cfg.r_grid, cfg.k_grid);
    return measure_set(res.pair);
}

} // namespace

ScanResult scan(System sys, const std::vector<std::size_t>& n_values,
                const ScanConfig& cfg) {
    if (n_values.empty())
        throw input_error("scaling", "scan", "empty N list");
    std::vector<std::size_t> ns = n_values;
    std::sort(ns.begin(), ns.end());
    if (std::adjacent_find(ns.begin(), ns.end()) != ns.end())
        throw input_error("scaling", "scan", "duplicate N in scan list");

    const bool fermionic = sys != System::bosons;
    if (fermionic) {
        const PotentialKind want = sys == System::cluster
                                       ? PotentialKind::ws_cluster
                                       : PotentialKind::ws_nucleus;
        if (cfg.potential.kind != want)
            throw input_error("scaling", "scan",
                              "potential kind does not match system");
    }

    ScanResult result;
    result.system = sys;
    result.rows.resize(ns.size());
    parallel_for(ns.size(), cfg.jobs, [&](std::size_t i) {
        result.rows[i].N = ns[i];
        result.rows[i].m =
            fermionic ? fermion_row(cfg, ns[i]) : boson_row(cfg, ns[i]);
    });

    auto& md = result.metadata;
    md.emplace_back("system", to_string(sys));
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < ns.size(); ++i)
            os << (i ? "," : "") << ns[i];
        md.emplace_back("n_values", os.str());
    }
    if (fermionic) {
        md.emplace_back("potential", to_string(cfg.potential.kind));
        md.emplace_back("V0", fmt9(cfg.potential.V0));
        md.emplace_back("r0", fmt9(cfg.potential.r0));
        md.emplace_back("a", fmt9(cfg.potential.a));
        md.emplace_back("hbar2_over_2m", fmt9(cfg.potential.hbar2_over_2m));
        md.emplace_back("l_max", std::to_string(cfg.l_max));
        md.emplace_back("max_states_per_l",
                        std::to_string(cfg.max_states_per_l));
        if (sys == System::nucleus)
            md.emplace_back("field_note",
                            "static Woods-Saxon stand-in for a self-consistent "
                            "nuclear field; no Coulomb, no spin-orbit");
    } else {
        md.emplace_back("omega", fmt9(cfg.trap.omega));
        md.emplace_back("a_s", fmt9(cfg.trap.scattering_length));
        md.emplace_back("model_note",
                        "mean-field condensate (contact coupling), not a "
                        "correlated many-body calculation");
    }
    md.emplace_back("r_max", fmt9(cfg.r_grid.r_max));
    md.emplace_back("r_points", std::to_string(cfg.r_grid.n_points));
    md.emplace_back("k_max", fmt9(cfg.k_grid.r_max));
    md.emplace_back("k_points", std::to_string(cfg.k_grid.n_points));
    md.emplace_back("normalization", "densities normalized to unity, not N");
    return result;
}

const char* to_string(FitModel m) {
    switch (m) {
        case FitModel::linear: return "linear";
        case FitModel::power: return "power";
        case FitModel::log: return "log";
    }
    throw input_error("scaling", "fit", "unreachable model value");
}

FitModel fit_model_from_string(const std::string& s) {
    if (s == "linear") return FitModel::linear;
    if (s == "power") return FitModel::power;
    if (s == "log") return FitModel::log;
    throw input_error("scaling", "fit", "unknown fit model '" + s + "'");
}

FitResult fit(FitModel model,
              const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw input_error("scaling", "fit", "need at least 3 points");
    const std::size_t n = points.size();
    {
        const double x0 = points.front().first;
        bool all_equal = true;
        for (const auto& p : points)
            if (p.first != x0) all_equal = false;
        if (all_equal)
            throw input_error("scaling", "fit",
                              "degenerate design: all N values equal");
    }

    FitResult res;
    res.model = model;
    res.residuals.resize(n);

    // transform to the model's natural space (x', y')
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = points[i].first, y = points[i].second;
        if (model != FitModel::linear) {
            if (!(x > 0.0))
                throw input_error("scaling", "fit",
                                  "N must be positive for this model");
            if (!(y > 0.0))
                throw input_error("scaling", "fit",
                                  "y must be positive for this model");
            x = std::log(x);
            if (model == FitModel::power) y = std::log(y);
        }
        xs[i] = x;
        ys[i] = y;
    }

    double ybar = 0.0;
    for (double y : ys) ybar += y;
    ybar /= static_cast<double>(n);

    if (model == FitModel::linear) {
        // least squares through the origin
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sxy += xs[i] * ys[i];
            sxx += xs[i] * xs[i];
        }
        res.c = sxy / sxx;
        for (std::size_t i = 0; i < n; ++i)
            res.residuals[i] = ys[i] - res.c * xs[i];
    } else {
        double xbar = 0.0;
        for (double x : xs) xbar += x;
        xbar /= static_cast<double>(n);
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sxy += (xs[i] - xbar) * (ys[i] - ybar);
            sxx += (xs[i] - xbar) * (xs[i] - xbar);
        }
        const double slope = sxy / sxx;
        const double intercept = ybar - slope * xbar;
        res.b = slope;
        res.a = model == FitModel::power ? std::exp(intercept) : intercept;
        for (std::size_t i = 0; i < n; ++i)
            res.residuals[i] = ys[i] - (intercept + slope * xs[i]);
    }

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ss_res += res.residuals[i] * res.residuals[i];
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    res.r_squared =
        ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return res;
}

} // namespace infodens
