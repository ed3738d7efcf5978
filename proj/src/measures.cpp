#include "infodens/measures.hpp"
#include "infodens/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace infodens {

Sampled1D sample_gaussian(const GaussianSpec& g, std::size_t n_points,
                          double half_width) {
    if (!(g.sigma > 0.0))
        throw input_error("measures", "gaussian", "sigma must be positive");
    if (n_points < 3)
        throw input_error("measures", "gaussian", "need at least 3 samples");
    Sampled1D s;
    s.x0 = g.mu - half_width * g.sigma;
    s.dx = 2.0 * half_width * g.sigma / static_cast<double>(n_points - 1);
    s.values.resize(n_points);
    const double pref = 1.0 / (g.sigma * std::sqrt(2.0 * std::numbers::pi));
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = s.x0 + s.dx * static_cast<double>(i);
        const double t = (x - g.mu) / g.sigma;
        s.values[i] = pref * std::exp(-0.5 * t * t);
    }
    return s;
}

double onicescu_1d(const Sampled1D& rho) {
    for (double v : rho.values)
        if (v < 0.0)
            throw input_error("measures", "onicescu_1d",
                              "density has negative samples");
    const double norm = integrate_1d(rho);
    if (std::abs(norm - 1.0) > 1e-6)
        throw input_error("measures", "onicescu_1d",
                          "density norm " + std::to_string(norm) +
                              " deviates from 1 beyond 1e-6");
    Sampled1D sq{rho.x0, rho.dx, rho.values};
    for (auto& v : sq.values) v *= v;
    return integrate_1d(sq);
}

EquivalentUniform equivalent_uniform(const RadialFunction& rho) {
    require_density(rho, "measures", "equivalent_uniform");
    const double r2 = radial_moment2(rho);
    if (!(r2 > 0.0) || !std::isfinite(r2))
        throw input_error("measures", "equivalent_uniform",
                          "density has no finite second moment");
    EquivalentUniform eu;
    eu.R_U = std::sqrt(5.0 / 3.0 * r2);
    eu.rho_0 = 3.0 / (4.0 * std::numbers::pi * eu.R_U * eu.R_U * eu.R_U);
    return eu;
}

RadialFunction sample_uniform(const EquivalentUniform& eu, const RadialGrid& g) {
    if (!(eu.R_U > 0.0))
        throw input_error("measures", "sample_uniform", "R_U must be positive");
    RadialFunction f{g, std::vector<double>(g.n_points)};
    const double snap = 1e-6 * eu.R_U;
    for (std::size_t i = 0; i < g.n_points; ++i) {
        const double r = g.node(i);
        if (std::abs(r - eu.R_U) <= snap)
            f.values[i] = 0.5 * eu.rho_0; // midpoint rule for the jump
        else
            f.values[i] = (r < eu.R_U) ? eu.rho_0 : 0.0;
    }
    return f;
}

double onicescu_radial(const RadialFunction& rho) {
    RadialFunction sq{rho.grid, rho.values};
    for (auto& v : sq.values) v *= v;
    return 4.0 * std::numbers::pi * integrate_radial(sq, Weight::r_squared);
}

double uffink_radial(const RadialFunction& rho,
                     const RadialFunction& surrogate) {
    if (surrogate.grid != rho.grid)
        throw input_error("measures", "uffink_radial",
                          "density and surrogate on different grids");
    RadialFunction diff{rho.grid, std::vector<double>(rho.grid.n_points)};
    for (std::size_t i = 0; i < rho.grid.n_points; ++i) {
        const double d = rho.values[i] - surrogate.values[i];
        diff.values[i] = d * d;
    }
    return 4.0 * std::numbers::pi * integrate_radial(diff, Weight::r_squared);
}

double shannon_radial(const RadialFunction& rho) {
    RadialFunction f{rho.grid, std::vector<double>(rho.grid.n_points)};
    for (std::size_t i = 0; i < rho.grid.n_points; ++i) {
        const double v = rho.values[i];
        f.values[i] = (v < 1e-30) ? 0.0 : v * std::log(v);
    }
    return -4.0 * std::numbers::pi * integrate_radial(f, Weight::r_squared);
}

double uffink_discrete(const DiscreteDistribution& d) {
    if (d.p.empty())
        throw input_error("measures", "uffink_discrete", "empty distribution");
    double sum = 0.0;
    for (double v : d.p) {
        if (v < 0.0)
            throw input_error("measures", "uffink_discrete",
                              "negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw input_error("measures", "uffink_discrete",
                          "probabilities sum to " + std::to_string(sum));
    const double uniform = 1.0 / static_cast<double>(d.p.size());
    double acc = 0.0;
    for (double v : d.p) {
        const double dv = v - uniform;
        acc += dv * dv;
    }
    return d.norm_const * acc;
}

MeasureSet measure_set(const DensityPair& d) {
    MeasureSet m;
    m.E_r = onicescu_radial(d.rho);
    m.E_k = onicescu_radial(d.nk);
    m.S_E = 1.0 / (m.E_r * m.E_k);

    const EquivalentUniform eu_r = equivalent_uniform(d.rho);
    const EquivalentUniform eu_k = equivalent_uniform(d.nk);
    m.R_U_r = eu_r.R_U;
    m.R_U_k = eu_k.R_U;
    m.I_r = uffink_radial(d.rho, sample_uniform(eu_r, d.rho.grid));
    m.I_k = uffink_radial(d.nk, sample_uniform(eu_k, d.nk.grid));
    if (m.I_r < 1e-14 || m.I_k < 1e-14)
        throw input_error("measures", "measure_set",
                          "density indistinguishable from its equivalent "
                          "uniform (I below 1e-14); S_I undefined");
    m.S_I = 1.0 / (m.I_r * m.I_k);

    m.S_r = shannon_radial(d.rho);
    m.S_k = shannon_radial(d.nk);
    m.S = m.S_r + m.S_k;
    return m;
}

} // namespace infodens
