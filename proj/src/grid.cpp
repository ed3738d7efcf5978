#include "infodens/grid.hpp"
#include "infodens/errors.hpp"

#include <cmath>
#include <numbers>

namespace infodens {

RadialGrid RadialGrid::make(double r_max, std::size_t n_points,
                            std::size_t min_points) {
    if (!(r_max > 0.0))
        throw input_error("numerics", "grid", "r_max must be positive");
    if (n_points < min_points)
        throw input_error("numerics", "grid",
                          "n_points " + std::to_string(n_points) +
                              " below floor " + std::to_string(min_points));
    RadialGrid g;
    g.r_max = r_max;
    g.n_points = n_points;
    g.h = r_max / static_cast<double>(n_points);
    return g;
}

std::vector<double> RadialGrid::nodes() const {
    std::vector<double> r(n_points);
    for (std::size_t i = 0; i < n_points; ++i) r[i] = node(i);
    return r;
}

std::vector<double> simpson_weights(std::size_t n_samples, double h) {
    if (n_samples < 2)
        throw input_error("numerics", "integrate", "need at least 2 samples");
    const std::size_t m = n_samples - 1; // interval count
    std::vector<double> w(n_samples, 0.0);
    if (m == 1) { // degenerate: trapezoid
        w[0] = w[1] = 0.5 * h;
        return w;
    }
    std::size_t m_simpson = m;
    if (m % 2 != 0) {
        // odd interval count: 3/8 rule on the last three intervals
        m_simpson = m - 3;
        const std::size_t j = m - 3;
        const double c = 3.0 * h / 8.0;
        w[j] += c;
        w[j + 1] += 3.0 * c;
        w[j + 2] += 3.0 * c;
        w[j + 3] += c;
    }
    if (m_simpson > 0) {
        const double c = h / 3.0;
        w[0] += c;
        w[m_simpson] += c;
        for (std::size_t i = 1; i < m_simpson; i += 2) w[i] += 4.0 * c;
        for (std::size_t i = 2; i < m_simpson; i += 2) w[i] += 2.0 * c;
    }
    return w;
}

namespace {

double simpson_uniform(const std::vector<double>& y, double h) {
    const std::vector<double> w = simpson_weights(y.size(), h);
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += w[i] * y[i];
    return s;
}

} // namespace

double integrate_radial(const RadialFunction& f, Weight w) {
    const auto& g = f.grid;
    if (g.n_points == 0 || f.values.size() != g.n_points)
        throw input_error("numerics", "integrate",
                          "sample size does not match grid");
    if (g.n_points < 3)
        throw input_error("numerics", "integrate",
                          "need at least 3 radial samples");

    // Build the integrand on 0, h, 2h, ..., r_max.  At r = 0 the r² weight
    // kills the value exactly; for weight one we extrapolate f cubically:
    // f(0) = 4f1 - 6f2 + 4f3 - f4 (quadratic 3f1 - 3f2 + f3 on 3 points).
    std::vector<double> y(g.n_points + 1);
    if (w == Weight::r_squared) {
        y[0] = 0.0;
        for (std::size_t i = 0; i < g.n_points; ++i) {
            const double r = g.node(i);
            y[i + 1] = f.values[i] * r * r;
        }
    } else {
        const auto& v = f.values;
        y[0] = (g.n_points >= 4)
                   ? 4.0 * v[0] - 6.0 * v[1] + 4.0 * v[2] - v[3]
                   : 3.0 * v[0] - 3.0 * v[1] + v[2];
        for (std::size_t i = 0; i < g.n_points; ++i) y[i + 1] = v[i];
    }
    return simpson_uniform(y, g.h);
}

double radial_norm(const RadialFunction& f) {
    return 4.0 * std::numbers::pi * integrate_radial(f, Weight::r_squared);
}

double radial_moment2(const RadialFunction& f) {
    RadialFunction fr2{f.grid, f.values};
    for (std::size_t i = 0; i < f.grid.n_points; ++i) {
        const double r = f.grid.node(i);
        fr2.values[i] *= r * r;
    }
    return 4.0 * std::numbers::pi * integrate_radial(fr2, Weight::r_squared);
}

void require_density(const RadialFunction& f, const char* module,
                     const char* op, double tol) {
    for (double v : f.values)
        if (v < 0.0)
            throw input_error(module, op, "density has negative samples");
    const double norm = radial_norm(f);
    if (std::abs(norm - 1.0) > tol)
        throw input_error(module, op,
                          "density norm " + std::to_string(norm) +
                              " deviates from 1 beyond tolerance");
}

double integrate_1d(const Sampled1D& f) {
    if (f.values.size() < 3)
        throw input_error("numerics", "integrate", "need at least 3 samples");
    if (!(f.dx > 0.0))
        throw input_error("numerics", "integrate", "dx must be positive");
    return simpson_uniform(f.values, f.dx);
}

} // namespace infodens
