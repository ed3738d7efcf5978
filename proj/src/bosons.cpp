#include "infodens/bosons.hpp"
#include "infodens/errors.hpp"
#include "infodens/mean_field.hpp"
#include "infodens/sbt.hpp"
#include "infodens/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace infodens {

double TrapSpec::oscillator_length() const { return 1.0 / std::sqrt(omega); }

void TrapSpec::validate() const {
    if (!(omega > 0.0))
        throw input_error("bosons", "trap", "omega must be positive");
    if (scattering_length < 0.0)
        throw input_error("bosons", "trap", "a_s must be non-negative");
    if (N < 1)
        throw input_error("bosons", "trap", "N must be at least 1");
}

namespace {

constexpr double D = 0.5; // ħ²/2m with ħ = m = 1

// Reduced wave w(r) = √(4π) r φ(r), ∫w²dr = 1; the GP equation becomes
//   -D w'' + [V(r) + gN w²/(4πr²)] w = μ w.
// One backward-Euler step of the normalized gradient flow:
//   (I + Δτ(-D·A + diag(q))) w' = w,  then renormalize,
// with q the potential frozen at the current density.  The tridiagonal is
// strictly diagonally dominant (q ≥ 0), so the Thomas solve is stable.
void euler_step(std::vector<double>& w, const std::vector<double>& q,
                double dtau, double h, std::vector<double>& diag,
                std::vector<double>& rhs) {
    const std::size_t n = w.size(); // unknowns at r_1..r_{n-1}; w[n-1] = 0
    const double off = -dtau * D / (h * h);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        diag[i] = 1.0 + dtau * (2.0 * D / (h * h) + q[i]);
        rhs[i] = w[i];
    }
    // forward elimination
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double m = off / diag[i - 1];
        diag[i] -= m * off;
        rhs[i] -= m * rhs[i - 1];
    }
    // back substitution
    w[n - 2] = rhs[n - 2] / diag[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
        w[i] = (rhs[i] - off * w[i + 1]) / diag[i];
    w[n - 1] = 0.0;
}

struct Functional {
    double kinetic = 0.0, external = 0.0, interaction4 = 0.0; // ∫w⁴/(4πr²)dr
};

// Discrete energy pieces with the same operator A as the flow (rectangle
// sums — consistent with the O(h²) scheme).
Functional functional_terms(const std::vector<double>& w,
                            const std::vector<double>& V,
                            const RadialGrid& g) {
    Functional f;
    const std::size_t n = w.size();
    const double h = g.h;
    for (std::size_t i = 0; i < n; ++i) {
        const double wm = (i == 0) ? 0.0 : w[i - 1];
        const double wp = (i + 1 == n) ? 0.0 : w[i + 1];
        const double Aw = (wp - 2.0 * w[i] + wm) / (h * h);
        f.kinetic += -D * w[i] * Aw * h;
        f.external += V[i] * w[i] * w[i] * h;
        const double r = g.node(i);
        f.interaction4 +=
            std::pow(w[i], 4) / (4.0 * std::numbers::pi * r * r) * h;
    }
    return f;
}

void normalize(std::vector<double>& w, double h) {
    double s = 0.0;
    for (double v : w) s += v * v * h;
    const double inv = 1.0 / std::sqrt(s);
    for (double& v : w) v *= inv;
}

} // namespace

BosonResult boson_ground_state(const TrapSpec& trap, const RadialGrid& grid,
                               const RadialGrid& k_grid) {
    trap.validate();
    const double b = trap.oscillator_length();
    if (grid.r_max < 12.0 * b)
        throw input_error("bosons", "ground_state",
                          "grid must span at least 12 oscillator lengths");

    if (trap.scattering_length == 0.0) {
        // Noninteracting: the condensate orbital is the harmonic ground
        // state; reuse the fermionic pipeline so both modules share one
        // code path for this limit.
        PotentialSpec spec = PotentialSpec::harmonic_defaults();
        spec.omega = trap.omega;
        const auto orbitals = solve_bound_states(spec, 1, 0, 1, grid);
        if (orbitals.empty())
            throw solver_error("bosons", "ground_state",
                               "no harmonic ground state found");
        OccupiedSet occ;
        occ.N = 1;
        occ.entries.push_back({orbitals.front(), 1.0});
        BosonResult res;
        res.pair = make_density_pair(occ, k_grid);
        res.chemical_potential = orbitals.front().energy;
        res.energy = orbitals.front().energy;
        res.iterations = 0;
        return res;
    }

    const std::size_t n = grid.n_points;
    const double h = grid.h;
    const double g = 4.0 * std::numbers::pi * trap.scattering_length;
    const double gN = g * static_cast<double>(trap.N);

    std::vector<double> V(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.node(i);
        V[i] = 0.5 * trap.omega * trap.omega * r * r;
    }

    // Gaussian trap ground state as the start
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.node(i);
        w[i] = r * std::exp(-r * r / (2.0 * b * b));
    }
    w[n - 1] = 0.0;
    normalize(w, h);

    const double dtau = 1e-3 / trap.omega;
    const double tol = 1e-10 * trap.omega;
    const std::size_t max_iter = 400000;

    std::vector<double> q(n), diag(n), rhs(n);
    Functional f = functional_terms(w, V, grid);
    double energy = f.kinetic + f.external + 0.5 * gN * f.interaction4;
    double max_rise = 0.0;
    std::size_t it = 0;
    double delta = 0.0;
    for (; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            const double r = grid.node(i);
            q[i] = V[i] +
                   gN * w[i] * w[i] / (4.0 * std::numbers::pi * r * r);
        }
        euler_step(w, q, dtau, h, diag, rhs);
        normalize(w, h);
        f = functional_terms(w, V, grid);
        const double e_new = f.kinetic + f.external + 0.5 * gN * f.interaction4;
        delta = e_new - energy;
        if (delta > max_rise) max_rise = delta;
        energy = e_new;
        if (std::abs(delta) < tol) break;
    }
    if (it == max_iter)
        throw solver_error("bosons", "ground_state",
                           "imaginary-time relaxation not converged: energy "
                           "residual " + std::to_string(delta) + " after " +
                               std::to_string(max_iter) + " steps");

    // densities from the converged condensate orbital
    RadialFunction rho{grid, std::vector<double>(n)};
    RadialFunction R{grid, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.node(i);
        R.values[i] = w[i] / r;
        rho.values[i] =
            w[i] * w[i] / (4.0 * std::numbers::pi * r * r);
    }
    // unit-normalize with the library quadrature (the flow used rectangle
    // sums; the difference is O(h²) in the norm)
    const double norm = radial_norm(rho);
    for (auto& v : rho.values) v /= norm;
    RadialFunction Rk = sbt(R, 0, k_grid);
    RadialFunction nk{k_grid, std::vector<double>(k_grid.n_points)};
    for (std::size_t i = 0; i < k_grid.n_points; ++i)
        nk.values[i] = Rk.values[i] * Rk.values[i] /
                       (4.0 * std::numbers::pi);
    const double knorm = radial_norm(nk);
    if (!(knorm > 0.0))
        throw solver_error("bosons", "ground_state",
                           "momentum density norm is not positive");
    for (auto& v : nk.values) v /= knorm;

    BosonResult res;
    res.pair = make_density_pair(std::move(rho), std::move(nk));
    res.chemical_potential =
        f.kinetic + f.external + gN * f.interaction4;
    res.energy = energy;
    res.iterations = it + 1;
    res.max_energy_rise = max_rise;
    return res;
}

} // namespace infodens
