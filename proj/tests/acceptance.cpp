// Acceptance gate for the information-measure pipeline: ten checks, one
// PASS/FAIL line each, nonzero exit if any fails.  argv[1] names the CLI
// binary (used by the byte-determinism check).

#include "infodens/bosons.hpp"
#include "infodens/config.hpp"
#include "infodens/csv.hpp"
#include "infodens/format.hpp"
#include "infodens/density.hpp"
#include "infodens/measures.hpp"
#include "infodens/scaling.hpp"
#include "infodens/spectrum.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace infodens;

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void fail(const std::string& why) {
    throw std::runtime_error(why);
}

void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
}

double rel(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

std::string num(double v) { return fmt9(v); }

// ---- shared fermionic pipeline -------------------------------------------

MeasureSet pipeline(const PotentialSpec& spec, std::size_t N,
                    const RadialGrid& g, const RadialGrid& kg) {
    const auto orbs = solve_bound_states(spec, N, 12, 8, g);
    const auto occ = fill_shells(orbs, N);
    return measure_set(make_density_pair(occ, kg));
}

// scans shared by checks 6-9 (run once, inside check 6 / check 9)
std::optional<ScanResult> g_cluster, g_nucleus, g_bosons;

std::vector<std::pair<double, double>> scan_points(const ScanResult& res,
                                                   double MeasureSet::*field) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : res.rows)
        pts.emplace_back(static_cast<double>(row.N), row.m.*field);
    return pts;
}

// ---- the ten checks --------------------------------------------------------

std::string check_gaussian_closed_form() {
    double worst = 0.0;
    for (double sigma : {0.5, 1.0, 2.0}) {
        const double got = onicescu_1d(sample_gaussian({0.0, sigma}));
        const double want = 1.0 / (2.0 * sigma * std::sqrt(kPi));
        worst = std::max(worst, rel(got, want));
    }
    require(worst <= 1e-8, "worst relative deviation " + num(worst));
    return "worst rel dev " + num(worst);
}

std::string check_zero_surrogate_reduction() {
    std::mt19937 rng(20260819);
    std::uniform_real_distribution<double> mix(0.3, 0.7);
    std::uniform_real_distribution<double> narrow(0.5, 1.2);
    std::uniform_real_distribution<double> wide(1.4, 2.4);

    const auto g = RadialGrid::make(20.0, 1500);
    const auto kg = RadialGrid::make(16.0, 1200);
    auto random_density = [&](const RadialGrid& grid) {
        const double w = mix(rng), s1 = narrow(rng), s2 = wide(rng);
        RadialFunction f{grid, std::vector<double>(grid.n_points)};
        for (std::size_t i = 0; i < grid.n_points; ++i) {
            const double r = grid.node(i);
            f.values[i] = w * std::exp(-0.5 * r * r / (s1 * s1)) +
                          (1.0 - w) * std::exp(-0.5 * r * r / (s2 * s2));
        }
        const double norm = radial_norm(f);
        for (auto& v : f.values) v /= norm;
        return f;
    };

    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto pair =
            make_density_pair(random_density(g), random_density(kg));
        const RadialFunction zr{g, std::vector<double>(g.n_points, 0.0)};
        const RadialFunction zk{kg, std::vector<double>(kg.n_points, 0.0)};
        worst = std::max(worst, rel(uffink_radial(pair.rho, zr),
                                    onicescu_radial(pair.rho)));
        worst = std::max(worst, rel(uffink_radial(pair.nk, zk),
                                    onicescu_radial(pair.nk)));
    }
    require(worst <= 1e-12,
            "zero-surrogate reduction off by " + num(worst));
    return "20 random pairs, worst rel dev " + num(worst);
}

std::string check_harmonic_oracle() {
    const double se_want = 8.0 * kPi * kPi * kPi;
    const double s_want = 3.0 * (1.0 + std::log(kPi));

    // brute-force quadrature on the analytic Gaussians, independent of the
    // library quadrature: E_r E_k for the b = 1 pair
    auto rho2 = [](double r) {
        const double rho = std::exp(-r * r) / std::pow(kPi, 1.5);
        return 4.0 * kPi * rho * rho * r * r;
    };
    const double e_brute = oracle::trapz(rho2, 0.0, 14.0, 200000);
    const double se_brute = 1.0 / (e_brute * e_brute); // E_k = E_r at b = 1
    require(rel(se_brute, se_want) <= 1e-3,
            "brute-force S_E " + num(se_brute) + " vs " + num(se_want));

    // full solver pipeline at three trap widths
    std::vector<double> se, s;
    for (double b : {0.5, 1.0, 2.0}) {
        auto spec = PotentialSpec::harmonic_defaults();
        spec.omega = 1.0 / (b * b);
        const auto g = RadialGrid::make(12.0 * b, 1200);
        const auto kg = RadialGrid::make(10.0 / b, 1000);
        const auto m = pipeline(spec, 1, g, kg);
        require(rel(m.S_E, se_want) <= 1e-3,
                "S_E(b=" + num(b) + ") = " + num(m.S_E));
        require(rel(m.S, s_want) <= 1e-3,
                "S(b=" + num(b) + ") = " + num(m.S));
        se.push_back(m.S_E);
        s.push_back(m.S);
    }
    const auto spread = [](const std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return (*hi - *lo) / *lo;
    };
    require(spread(se) <= 5e-4, "S_E spread over b " + num(spread(se)));
    require(spread(s) <= 5e-4, "S spread over b " + num(spread(s)));
    return "S_E = " + num(se[1]) + " (want " + num(se_want) +
           "), spread " + num(spread(se));
}

std::string check_scale_invariance() {
    // covariant grid rescale: r -> lambda r, u -> u/sqrt(lambda), k grid
    // shrunk by 1/lambda.  S_E and S_I are dimensionless, so the rescaled
    // density pair must reproduce them.
    struct Case {
        PotentialSpec spec;
        std::size_t N;
        double r_max, k_max;
    };
    const std::array<Case, 2> cases{
        Case{PotentialSpec::cluster_defaults(), 20, 40.0, 2.5},
        Case{PotentialSpec::nucleus_defaults(), 40, 20.0, 5.0}};
    double worst = 0.0;
    for (const auto& c : cases) {
        const auto g = RadialGrid::make(c.r_max, 2000);
        const auto orbs = solve_bound_states(c.spec, c.N, 12, 8, g);
        const auto occ = fill_shells(orbs, c.N);
        const auto base =
            measure_set(make_density_pair(occ, RadialGrid::make(c.k_max, 2000)));
        for (double lam : {0.5, 2.0}) {
            OccupiedSet scaled = occ;
            const auto gs = RadialGrid::make(lam * c.r_max, 2000);
            const double root = std::sqrt(lam);
            for (auto& lev : scaled.entries) {
                lev.orbital.u.grid = gs;
                for (double& v : lev.orbital.u.values) v /= root;
            }
            const auto m = measure_set(make_density_pair(
                scaled, RadialGrid::make(c.k_max / lam, 2000)));
            worst = std::max(worst, rel(m.S_E, base.S_E));
            worst = std::max(worst, rel(m.S_I, base.S_I));
        }
    }
    require(worst <= 5e-3, "worst covariant-rescale drift " + num(worst));
    return "worst S_E/S_I drift over lambda in {0.5,2}: " + num(worst);
}

std::string check_eigensolver() {
    // oscillator ladder
    const auto ho = solve_bound_states(PotentialSpec::harmonic_defaults(), 1,
                                       4, 3, RadialGrid::make(12.0, 1200));
    const std::array<double, 10> want{1.5, 2.5, 3.5, 3.5, 4.5,
                                      4.5, 5.5, 5.5, 5.5, 6.5};
    require(ho.size() >= want.size(), "missing oscillator states");
    double worst_ho = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i)
        worst_ho = std::max(worst_ho, std::abs(ho[i].energy - want[i]));
    require(worst_ho <= 1e-6, "oscillator ladder off by " + num(worst_ho));

    // Woods-Saxon levels against the finite-difference oracle
    double worst_ws = 0.0;
    {
        const auto spec = PotentialSpec::nucleus_defaults();
        const auto g = RadialGrid::make(20.0, 2000);
        const auto orbs = solve_bound_states(spec, 16, 3, 3, g);
        require(orbs.size() >= 4, "missing nucleon levels");
        for (std::size_t i = 0; i < 4; ++i) {
            const double ref =
                oracle::fd_level(spec, 16, orbs[i].l, g,
                                 static_cast<std::size_t>(orbs[i].n_r));
            worst_ws = std::max(worst_ws, rel(orbs[i].energy, ref));
        }
        // barely-bound high-l level in the heavy well
        const auto deep = solve_bound_states(spec, 126, 6, 1, g);
        for (const auto& o : deep)
            if (o.l == 6)
                worst_ws = std::max(
                    worst_ws,
                    rel(o.energy, oracle::fd_level(spec, 126, 6, g, 0)));
    }
    {
        const auto spec = PotentialSpec::cluster_defaults();
        const auto g = RadialGrid::make(40.0, 2000);
        const auto orbs = solve_bound_states(spec, 20, 2, 2, g);
        require(orbs.size() >= 3, "missing cluster levels");
        for (std::size_t i = 0; i < 3; ++i) {
            const double ref =
                oracle::fd_level(spec, 20, orbs[i].l, g,
                                 static_cast<std::size_t>(orbs[i].n_r));
            worst_ws = std::max(worst_ws, rel(orbs[i].energy, ref));
        }
    }
    require(worst_ws <= 1e-5, "Woods-Saxon vs oracle rel dev " + num(worst_ws));
    return "oscillator max abs dev " + num(worst_ho) +
           ", Woods-Saxon vs oracle max rel dev " + num(worst_ws);
}

// reference slopes the fitted S_E(N) slopes are reported against
constexpr double kClusterSlopeRef = 143.420;
constexpr double kNucleusSlopeRef = 73.883;

std::string check_se_linearity() {
    {
        const auto rc = make_run_config({{"system.kind", "cluster"}});
        g_cluster = scan(System::cluster, rc.n_values, rc.scan_config());
        const auto rcn = make_run_config({{"system.kind", "nucleus"}});
        g_nucleus = scan(System::nucleus, rcn.n_values, rcn.scan_config());
    }
    const auto fc = fit(FitModel::linear,
                        scan_points(*g_cluster, &MeasureSet::S_E));
    const auto fn = fit(FitModel::linear,
                        scan_points(*g_nucleus, &MeasureSet::S_E));
    require(fc.r_squared >= 0.98,
            "cluster linear r^2 " + num(fc.r_squared));
    require(fn.r_squared >= 0.98,
            "nucleus linear r^2 " + num(fn.r_squared));
    const double ratio_c = fc.c / kClusterSlopeRef;
    const double ratio_n = fn.c / kNucleusSlopeRef;
    require(ratio_c >= 0.3 && ratio_c <= 3.0,
            "cluster slope ratio " + num(ratio_c));
    require(ratio_n >= 0.3 && ratio_n <= 3.0,
            "nucleus slope ratio " + num(ratio_n));
    return "r^2 " + num(fc.r_squared) + "/" + num(fn.r_squared) +
           ", slope ratio vs " + num(kClusterSlopeRef) + ": " + num(ratio_c) +
           ", vs " + num(kNucleusSlopeRef) + ": " + num(ratio_n);
}

std::string check_si_power_law() {
    require(g_cluster && g_nucleus, "fermionic scans unavailable");
    const auto fc =
        fit(FitModel::power, scan_points(*g_cluster, &MeasureSet::S_I));
    const auto fn =
        fit(FitModel::power, scan_points(*g_nucleus, &MeasureSet::S_I));
    for (const auto* f : {&fc, &fn}) {
        require(f->r_squared >= 0.97, "power r^2 " + num(f->r_squared));
        require(f->b >= 1.2 && f->b <= 2.1, "exponent " + num(f->b));
    }
    return "exponents " + num(fc.b) + "/" + num(fn.b) + ", r^2 " +
           num(fc.r_squared) + "/" + num(fn.r_squared);
}

std::string check_shannon_log() {
    require(g_cluster && g_nucleus, "fermionic scans unavailable");
    const auto fc = fit(FitModel::log, scan_points(*g_cluster, &MeasureSet::S));
    const auto fn = fit(FitModel::log, scan_points(*g_nucleus, &MeasureSet::S));
    require(fc.r_squared >= 0.95, "cluster log r^2 " + num(fc.r_squared));
    require(fn.r_squared >= 0.95, "nucleus log r^2 " + num(fn.r_squared));
    return "S = a + b ln N with r^2 " + num(fc.r_squared) + "/" +
           num(fn.r_squared);
}

std::string check_boson_discrimination() {
    require(g_cluster.has_value(), "cluster scan unavailable");
    const auto rc = make_run_config({{"system.kind", "bosons"}});
    g_bosons = scan(System::bosons, rc.n_values, rc.scan_config());

    const auto lin_b =
        fit(FitModel::linear, scan_points(*g_bosons, &MeasureSet::S_E));
    const auto lin_c =
        fit(FitModel::linear, scan_points(*g_cluster, &MeasureSet::S_E));
    const auto pow_b =
        fit(FitModel::power, scan_points(*g_bosons, &MeasureSet::S_E));
    const auto pow_c =
        fit(FitModel::power, scan_points(*g_cluster, &MeasureSet::S_E));

    const double gap = lin_c.r_squared - lin_b.r_squared;
    const bool by_gap = gap >= 0.05;
    const bool by_exponent =
        std::abs(pow_b.b - 1.0) > 2.0 * std::abs(pow_c.b - 1.0);
    require(by_gap || by_exponent,
            "gap " + num(gap) + ", exponents " + num(pow_b.b) + " vs " +
                num(pow_c.b));
    return "linear r^2 gap " + num(gap) + " (boson " + num(lin_b.r_squared) +
           "), S_E exponent " + num(pow_b.b) + " vs cluster " + num(pow_c.b);
}

std::string g_cli_path;

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string check_determinism() {
    require(!g_cli_path.empty(), "CLI path not supplied on the command line");
    const std::string dir = "/tmp/infodens_acceptance";
    require(std::system(("mkdir -p " + dir).c_str()) == 0,
            "cannot create " + dir);
    const std::array<std::string, 4> outs{
        dir + "/scan1.csv", dir + "/scan2.csv", dir + "/scan3.csv",
        dir + "/scan4.csv"};
    const std::array<std::string, 4> flags{"", "", " --jobs 4", " --jobs 4"};
    for (std::size_t i = 0; i < outs.size(); ++i) {
        const std::string cmd = "'" + g_cli_path + "' scan --system cluster" +
                                flags[i] + " --out " + outs[i];
        require(std::system(cmd.c_str()) == 0, "scan run failed: " + cmd);
    }
    const std::string first = slurp(outs[0]);
    require(!first.empty(), "empty scan output");
    for (std::size_t i = 1; i < outs.size(); ++i)
        require(slurp(outs[i]) == first,
                "byte mismatch between runs 1 and " + std::to_string(i + 1));
    for (const auto& p : outs) std::remove(p.c_str());
    return "4 runs (jobs 1,1,4,4), " + std::to_string(first.size()) +
           " bytes each, byte-identical";
}

struct Check {
    int id;
    const char* name;
    double budget_s; // 0 = unenforced
    std::function<std::string()> body;
};

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<Check> checks{
        {1, "Gaussian information-energy closed form", 1.0,
         check_gaussian_closed_form},
        {2, "zero-surrogate Uffink reduces to Onicescu", 5.0,
         check_zero_surrogate_reduction},
        {3, "single particle in a trap: S_E = 8 pi^3, S = 3(1+ln pi)", 5.0,
         check_harmonic_oracle},
        {4, "S_E and S_I invariant under covariant grid rescale", 30.0,
         check_scale_invariance},
        {5, "eigensolver vs ladder and finite-difference oracle", 30.0,
         check_eigensolver},
        {6, "S_E grows linearly with N (clusters and nuclei)", 300.0,
         check_se_linearity},
        {7, "S_I follows a power of N", 0.0, check_si_power_law},
        {8, "Shannon sum follows a + b ln N", 0.0, check_shannon_log},
        {9, "trapped bosons break the fermionic S_E trend", 0.0,
         check_boson_discrimination},
        {10, "scan CSVs byte-identical across runs and job counts", 0.0,
         check_determinism},
    };

    int failures = 0;
    for (const auto& c : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        if (ok && c.budget_s > 0.0 && dt > c.budget_s) {
            ok = false;
            detail = "over budget: " + num(dt) + " s > " + num(c.budget_s) +
                     " s (" + detail + ")";
        }
        std::printf("%s %2d  %-55s %7.2f s  %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name, dt, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu checks passed\n", checks.size());
        return 0;
    }
    std::printf("%d of %zu checks FAILED\n", failures, checks.size());
    return 1;
}
