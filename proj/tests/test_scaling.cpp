#include "doctest.h"

#include "infodens/errors.hpp"
#include "infodens/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace infodens;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool has_key(const ScanResult& res, const std::string& key) {
    return std::any_of(res.metadata.begin(), res.metadata.end(),
                       [&](const auto& kv) { return kv.first == key; });
}

ScanConfig cluster_config() {
    ScanConfig cfg;
    cfg.potential = PotentialSpec::cluster_defaults();
    cfg.r_grid = RadialGrid::make(40.0, 2000);
    cfg.k_grid = RadialGrid::make(2.5, 2000);
    return cfg;
}

} // namespace

TEST_CASE("default N lists") {
    const std::vector<std::size_t> cl{2, 8, 18, 20, 34, 40, 58, 92, 138, 198};
    const std::vector<std::size_t> nu{2, 8, 16, 20, 28, 40, 50, 82, 126};
    const std::vector<std::size_t> bo{10, 50, 100, 500, 1000, 5000, 10000};
    CHECK(default_n_values(System::cluster) == cl);
    CHECK(default_n_values(System::nucleus) == nu);
    CHECK(default_n_values(System::bosons) == bo);
}

TEST_CASE("system names round-trip") {
    for (auto s : {System::cluster, System::nucleus, System::bosons})
        CHECK(system_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(system_from_string("atom"), input_error);
    for (auto m : {FitModel::linear, FitModel::power, FitModel::log})
        CHECK(fit_model_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(fit_model_from_string("cubic"), input_error);
}

TEST_CASE("linear fit recovers an exact slope") {
    std::vector<std::pair<double, double>> pts;
    for (double n = 1.0; n <= 6.0; n += 1.0) pts.emplace_back(n, 2.0 * n);
    const auto res = fit(FitModel::linear, pts);
    CHECK(res.c == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(res.r_squared == doctest::Approx(1.0).epsilon(1e-14));
    REQUIRE(res.residuals.size() == pts.size());
    for (double r : res.residuals) CHECK(std::abs(r) < 1e-12);
}

TEST_CASE("power fit recovers exact exponent and amplitude") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {2.0, 8.0, 20.0, 40.0, 90.0})
        pts.emplace_back(n, 3.0 * n * n);
    const auto res = fit(FitModel::power, pts);
    CHECK(res.a == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(res.b == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(res.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log fit recovers exact coefficients") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {2.0, 8.0, 20.0, 40.0})
        pts.emplace_back(n, 1.0 + 2.0 * std::log(n));
    const auto res = fit(FitModel::log, pts);
    CHECK(res.a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.b == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(res.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("refitting a fit's own predictions is a fixed point") {
    std::mt19937 rng(20260819);
    std::normal_distribution<double> noise(0.0, 0.05);

    std::vector<std::pair<double, double>> pts;
    for (double n : {2.0, 8.0, 20.0, 40.0, 90.0, 140.0})
        pts.emplace_back(n, 2.0 * n * (1.0 + noise(rng)));
    const auto first = fit(FitModel::linear, pts);
    std::vector<std::pair<double, double>> predicted;
    for (const auto& p : pts)
        predicted.emplace_back(p.first, first.c * p.first);
    const auto second = fit(FitModel::linear, predicted);
    CHECK(second.c == doctest::Approx(first.c).epsilon(1e-12));
    CHECK(second.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<std::pair<double, double>> ppow;
    for (double n : {2.0, 8.0, 20.0, 40.0, 90.0})
        ppow.emplace_back(n, 3.0 * std::pow(n, 1.7) * (1.0 + noise(rng)));
    const auto f1 = fit(FitModel::power, ppow);
    std::vector<std::pair<double, double>> pred2;
    for (const auto& p : ppow)
        pred2.emplace_back(p.first, f1.a * std::pow(p.first, f1.b));
    const auto f2 = fit(FitModel::power, pred2);
    CHECK(f2.a == doctest::Approx(f1.a).epsilon(1e-12));
    CHECK(f2.b == doctest::Approx(f1.b).epsilon(1e-12));
}

TEST_CASE("r_squared stays inside the unit interval") {
    // anti-correlated data drive a through-origin fit's raw score negative
    std::vector<std::pair<double, double>> pts{
        {1.0, 4.0}, {2.0, 3.0}, {3.0, 2.0}, {4.0, 1.0}};
    const auto res = fit(FitModel::linear, pts);
    CHECK(res.r_squared >= 0.0);
    CHECK(res.r_squared <= 1.0);
}

TEST_CASE("fit input validation") {
    using P = std::vector<std::pair<double, double>>;
    CHECK_THROWS_AS(fit(FitModel::linear, P{{1, 1}, {2, 2}}), input_error);
    CHECK_THROWS_AS(fit(FitModel::linear, P{{3, 1}, {3, 2}, {3, 5}}),
                    input_error);
    CHECK_THROWS_AS(fit(FitModel::power, P{{1, 1}, {2, -4}, {3, 9}}),
                    input_error);
    CHECK_THROWS_AS(fit(FitModel::power, P{{-1, 1}, {2, 4}, {3, 9}}),
                    input_error);
    CHECK_THROWS_AS(fit(FitModel::log, P{{1, 0.0}, {2, 4}, {3, 9}}),
                    input_error);
}

TEST_CASE("an ideal condensate scan row carries the Gaussian benchmark") {
    ScanConfig cfg;
    cfg.trap.omega = 1.0;
    cfg.trap.scattering_length = 0.0;
    cfg.r_grid = RadialGrid::make(12.0, 1200);
    cfg.k_grid = RadialGrid::make(10.0, 1000);
    const auto res = scan(System::bosons, {2}, cfg);
    REQUIRE(res.rows.size() == 1);
    CHECK(res.rows[0].N == 2);
    CHECK(res.rows[0].m.S_E ==
          doctest::Approx(8.0 * kPi * kPi * kPi).epsilon(1e-3));
    CHECK(res.system == System::bosons);
    CHECK(has_key(res, "omega"));
    CHECK(has_key(res, "a_s"));
    CHECK(!has_key(res, "jobs"));
}

TEST_CASE("a cluster scan returns ascending rows whatever the input order") {
    const auto res = scan(System::cluster, {40, 8, 20}, cluster_config());
    REQUIRE(res.rows.size() == 3);
    CHECK(res.rows[0].N == 8);
    CHECK(res.rows[1].N == 20);
    CHECK(res.rows[2].N == 40);
    CHECK(res.rows[0].m.S_E < res.rows[1].m.S_E);
    CHECK(res.rows[1].m.S_E < res.rows[2].m.S_E);
    for (const auto& key :
         {"system", "n_values", "potential", "V0", "r0", "a", "hbar2_over_2m",
          "l_max", "max_states_per_l", "r_max", "r_points", "k_max", "k_points",
          "normalization"})
        CHECK(has_key(res, key));
}

TEST_CASE("scan rejects bad N lists and mismatched potentials") {
    const auto cfg = cluster_config();
    CHECK_THROWS_AS(scan(System::cluster, {}, cfg), input_error);
    CHECK_THROWS_AS(scan(System::cluster, {8, 8, 20}, cfg), input_error);
    CHECK_THROWS_AS(scan(System::nucleus, {8, 16}, cfg), input_error);
}

TEST_CASE("scan rows do not depend on the job count") {
    auto cfg = cluster_config();
    cfg.jobs = 1;
    const auto serial = scan(System::cluster, {8, 20, 40}, cfg);
    cfg.jobs = 3;
    const auto parallel = scan(System::cluster, {8, 20, 40}, cfg);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        const auto& a = serial.rows[i].m;
        const auto& b = parallel.rows[i].m;
        CHECK(serial.rows[i].N == parallel.rows[i].N);
        CHECK(a.E_r == b.E_r);
        CHECK(a.E_k == b.E_k);
        CHECK(a.S_E == b.S_E);
        CHECK(a.I_r == b.I_r);
        CHECK(a.I_k == b.I_k);
        CHECK(a.S_I == b.S_I);
        CHECK(a.S_r == b.S_r);
        CHECK(a.S_k == b.S_k);
        CHECK(a.S == b.S);
        CHECK(a.R_U_r == b.R_U_r);
        CHECK(a.R_U_k == b.R_U_k);
    }
}
