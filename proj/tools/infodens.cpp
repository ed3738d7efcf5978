// infodens — information measures of mean-field many-body densities.
//
//   gaussian   closed-form 1-D Onicescu sanity value
//   spectrum   bound single-particle levels of the chosen mean field
//   density    position/momentum densities for one particle number
//   measures   the full measure set for one particle number
//   scan       measures across an N list, CSV + plot exports
//   fit        scaling-law fit of a scan CSV column
//
// Exit codes: 0 ok, 1 bad input or config, 2 solver failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "infodens/bosons.hpp"
#include "infodens/config.hpp"
#include "infodens/csv.hpp"
#include "infodens/density.hpp"
#include "infodens/errors.hpp"
#include "infodens/format.hpp"
#include "infodens/measures.hpp"
#include "infodens/scaling.hpp"
#include "infodens/spectrum.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace infodens;

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> sets;
    std::string system;
    unsigned jobs = 0; // 0 = not given
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_system = true) {
    cmd->add_option("--config", o.config_path,
                    "flat key = value settings file");
    cmd->add_option("--set", o.sets, "override one key, e.g. system.V0=5.5")
        ->take_all();
    if (with_system)
        cmd->add_option("--system", o.system, "cluster | nucleus | bosons");
}

// Precedence, weakest first: built-in defaults, $INFODENS_CONFIG file,
// --config file, --set overrides, dedicated flags.
RunConfig resolve(const CommonOpts& o) {
    Settings s;
    if (const char* env = std::getenv("INFODENS_CONFIG"); env && *env)
        load_settings_file(env, s);
    if (!o.config_path.empty()) load_settings_file(o.config_path, s);
    for (const auto& kv : o.sets) apply_override(kv, s);
    if (!o.system.empty()) s["system.kind"] = o.system;
    if (o.jobs) s["jobs"] = std::to_string(o.jobs);
    return make_run_config(s);
}

void emit(const std::string& out_path, const std::vector<std::string>& lines) {
    if (out_path.empty())
        print_lines(std::cout, lines);
    else
        write_lines(out_path, lines);
}

DensityPair compute_pair(const RunConfig& rc, std::size_t n) {
    if (rc.system == System::bosons) {
        TrapSpec trap = rc.trap;
        trap.N = n;
        return boson_ground_state(trap, rc.r_grid, rc.k_grid).pair;
    }
    const auto orbitals = solve_bound_states(rc.potential, n, rc.l_max,
                                             rc.max_states_per_l, rc.r_grid);
    return make_density_pair(fill_shells(orbitals, n), rc.k_grid);
}

int run_gaussian(double sigma) {
    if (!(sigma > 0.0))
        throw input_error("cli", "gaussian", "sigma must be positive");
    const double E = onicescu_1d(sample_gaussian({0.0, sigma}));
    std::cout << "E = " << fmt9(E) << '\n';
    return 0;
}

int run_spectrum(const CommonOpts& o, std::size_t n,
                 const std::string& out_path) {
    const RunConfig rc = resolve(o);
    if (rc.system == System::bosons)
        throw input_error("cli", "spectrum",
                          "level tables exist for cluster and nucleus only");
    const auto orbitals = solve_bound_states(rc.potential, n, rc.l_max,
                                             rc.max_states_per_l, rc.r_grid);
    auto cfg = rc.echo();
    cfg.push_back("N = " + std::to_string(n));
    auto lines = metadata_header(cfg);
    lines.emplace_back("l,n_r,energy,degeneracy");
    for (const auto& orb : orbitals)
        lines.push_back(std::to_string(orb.l) + "," +
                        std::to_string(orb.n_r) + "," + fmt9(orb.energy) +
                        "," + std::to_string(orb.degeneracy()));
    emit(out_path, lines);
    return 0;
}

int run_density(const CommonOpts& o, std::size_t n, const std::string& out_r,
                const std::string& out_k) {
    const RunConfig rc = resolve(o);
    const DensityPair pair = compute_pair(rc, n);
    auto cfg = rc.echo();
    cfg.push_back("N = " + std::to_string(n));
    const auto header = metadata_header(cfg);

    auto lines = header;
    lines.emplace_back("r,rho");
    for (std::size_t i = 0; i < pair.rho.grid.n_points; ++i)
        lines.push_back(fmt9(pair.rho.grid.node(i)) + "," +
                        fmt9(pair.rho.values[i]));
    write_lines(out_r, lines);

    lines = header;
    lines.emplace_back("k,n");
    for (std::size_t i = 0; i < pair.nk.grid.n_points; ++i)
        lines.push_back(fmt9(pair.nk.grid.node(i)) + "," +
                        fmt9(pair.nk.values[i]));
    write_lines(out_k, lines);
    return 0;
}

int run_measures(const CommonOpts& o, std::size_t n,
                 const std::string& format, const std::string& out_path) {
    const RunConfig rc = resolve(o);
    const MeasureSet m = measure_set(compute_pair(rc, n));
    if (format == "csv") {
        auto cfg = rc.echo();
        cfg.push_back("N = " + std::to_string(n));
        auto lines = metadata_header(cfg);
        lines.emplace_back(kScanHeader);
        lines.push_back(measure_row(to_string(rc.system), n, m));
        emit(out_path, lines);
        return 0;
    }
    if (format != "json")
        throw input_error("cli", "measures", "format must be csv or json");
    // round through fmt9 so JSON carries the same 9 significant digits as
    // the CSV path
    auto num = [](double v) { return std::stod(fmt9(v)); };
    nlohmann::json j;
    j["tool"] = std::string(kToolName) + " " + kToolVersion;
    for (const auto& line : rc.echo()) {
        const auto eq = line.find(" = ");
        j["config"][line.substr(0, eq)] = line.substr(eq + 3);
    }
    j["N"] = n;
    j["measures"] = {
        {"E_r", num(m.E_r)},     {"E_k", num(m.E_k)},
        {"S_E", num(m.S_E)},     {"I_r", num(m.I_r)},
        {"I_k", num(m.I_k)},     {"S_I", num(m.S_I)},
        {"S_r", num(m.S_r)},     {"S_k", num(m.S_k)},
        {"S", num(m.S)},         {"R_U_r", num(m.R_U_r)},
        {"R_U_k", num(m.R_U_k)},
    };
    emit(out_path, {j.dump(2)});
    return 0;
}

int run_scan(const CommonOpts& o, const std::string& n_list,
             const std::string& out_path, const std::string& fig_dir) {
    CommonOpts opts = o;
    if (!n_list.empty())
        opts.sets.push_back("scan.n_values=" + n_list);
    const RunConfig rc = resolve(opts);
    const ScanResult res = scan(rc.system, rc.n_values, rc.scan_config());
    write_lines(out_path, scan_csv(res));
    if (!fig_dir.empty()) {
        // figure numbering mirrors the study layout: 1/2 fermionic S_E/S_I,
        // 3/4 the boson counterparts
        const bool bosonic = rc.system == System::bosons;
        write_lines(fig_dir + (bosonic ? "/fig3.csv" : "/fig1.csv"),
                    figure_csv(res, false));
        write_lines(fig_dir + (bosonic ? "/fig4.csv" : "/fig2.csv"),
                    figure_csv(res, true));
    }
    return 0;
}

int run_fit(const std::string& in_path, const std::string& model_name,
            const std::string& column, const std::string& out_path) {
    const Table t = read_csv_file(in_path);
    const FitModel model = fit_model_from_string(model_name);
    const std::size_t xc = t.column("N");
    const std::size_t yc = t.column(column);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        pts.emplace_back(cell_number(t, i, xc), cell_number(t, i, yc));
    const FitResult f = fit(model, pts);

    auto lines = metadata_header({"command = fit", "input = " + in_path,
                                  "model = " + std::string(to_string(model)),
                                  "column = " + column,
                                  "points = " + std::to_string(pts.size())});
    if (model == FitModel::linear) {
        lines.push_back("c = " + fmt9(f.c));
    } else {
        lines.push_back("a = " + fmt9(f.a));
        lines.push_back("b = " + fmt9(f.b));
    }
    lines.push_back("r_squared = " + fmt9(f.r_squared));
    emit(out_path, lines);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"information measures of mean-field many-body densities"};
    app.require_subcommand(1);
    app.set_version_flag("--version",
                         std::string(kToolName) + " " + kToolVersion);

    double sigma = 1.0;
    auto* c_gauss = app.add_subcommand(
        "gaussian", "Onicescu information energy of a 1-D Gaussian");
    c_gauss->add_option("--sigma", sigma, "standard deviation");

    CommonOpts spec_o;
    std::size_t spec_n = 0;
    std::string spec_out;
    auto* c_spec =
        app.add_subcommand("spectrum", "bound single-particle level table");
    add_common(c_spec, spec_o);
    c_spec->add_option("--n", spec_n, "particle number (sets the well size)")
        ->required();
    c_spec->add_option("--out", spec_out, "output file (default: stdout)");

    CommonOpts dens_o;
    std::size_t dens_n = 0;
    std::string dens_out_r = "rho.csv", dens_out_k = "nk.csv";
    auto* c_dens = app.add_subcommand(
        "density", "position and momentum densities for one N");
    add_common(c_dens, dens_o);
    c_dens->add_option("--n", dens_n, "particle number")->required();
    c_dens->add_option("--out-r", dens_out_r, "position-density CSV path");
    c_dens->add_option("--out-k", dens_out_k, "momentum-density CSV path");

    CommonOpts meas_o;
    std::size_t meas_n = 0;
    std::string meas_fmt = "csv", meas_out;
    auto* c_meas =
        app.add_subcommand("measures", "all information measures for one N");
    add_common(c_meas, meas_o);
    c_meas->add_option("--n", meas_n, "particle number")->required();
    c_meas->add_option("--format", meas_fmt, "csv | json");
    c_meas->add_option("--out", meas_out, "output file (default: stdout)");

    CommonOpts scan_o;
    std::string scan_n, scan_out = "scan.csv", scan_figs;
    auto* c_scan =
        app.add_subcommand("scan", "measures across an N list (figure data)");
    add_common(c_scan, scan_o);
    c_scan->add_option("--n", scan_n,
                       "comma-separated N list (default: per system)");
    c_scan->add_option("--out", scan_out, "scan CSV path");
    c_scan->add_option("--figures", scan_figs,
                       "directory for two-column plot CSVs");
    c_scan->add_option("--jobs", scan_o.jobs, "parallel rows (default 1)");

    std::string fit_in, fit_model = "linear", fit_col = "S_E", fit_out;
    auto* c_fit =
        app.add_subcommand("fit", "fit a scaling law to a scan CSV column");
    c_fit->add_option("input", fit_in, "scan CSV")->required();
    c_fit->add_option("--model", fit_model, "linear | power | log");
    c_fit->add_option("--column", fit_col, "y column (default S_E)");
    c_fit->add_option("--out", fit_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e); // --help / --version
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (c_gauss->parsed()) return run_gaussian(sigma);
        if (c_spec->parsed()) return run_spectrum(spec_o, spec_n, spec_out);
        if (c_dens->parsed())
            return run_density(dens_o, dens_n, dens_out_r, dens_out_k);
        if (c_meas->parsed())
            return run_measures(meas_o, meas_n, meas_fmt, meas_out);
        if (c_scan->parsed())
            return run_scan(scan_o, scan_n, scan_out, scan_figs);
        if (c_fit->parsed()) return run_fit(fit_in, fit_model, fit_col, fit_out);
    } catch (const input_error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const solver_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "infodens: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
