#include "infodens/density.hpp"
#include "infodens/errors.hpp"
#include "infodens/sbt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace infodens {

OccupiedSet fill_shells(const std::vector<Orbital>& orbitals, std::size_t N) {
    if (N < 1)
        throw input_error("density", "fill_shells", "N must be at least 1");
    double capacity = 0.0;
    for (const auto& o : orbitals) capacity += o.degeneracy();
    if (capacity < static_cast<double>(N))
        throw input_error("density", "fill_shells",
                          "bound spectrum capacity " +
                              std::to_string(static_cast<long long>(capacity)) +
                              " cannot hold N=" + std::to_string(N));

    OccupiedSet occ;
    occ.N = N;
    double remaining = static_cast<double>(N);
    for (const auto& o : orbitals) {
        if (remaining <= 0.0) break;
        const double fill = std::min(remaining, static_cast<double>(o.degeneracy()));
        occ.entries.push_back({o, fill});
        remaining -= fill;
    }
    return occ;
}

RadialFunction position_density(const OccupiedSet& occ) {
    if (occ.entries.empty())
        throw input_error("density", "position_density", "empty occupation");
    const RadialGrid& g = occ.entries.front().orbital.u.grid;
    for (const auto& e : occ.entries)
        if (e.orbital.u.grid != g)
            throw input_error("density", "position_density",
                              "orbitals sampled on mixed grids");
    const double pref =
        1.0 / (4.0 * std::numbers::pi * static_cast<double>(occ.N));
    RadialFunction rho{g, std::vector<double>(g.n_points, 0.0)};
    for (const auto& e : occ.entries) {
        const auto& u = e.orbital.u.values;
        for (std::size_t i = 0; i < g.n_points; ++i)
            rho.values[i] += e.occupancy * u[i] * u[i];
    }
    for (std::size_t i = 0; i < g.n_points; ++i) {
        const double r = g.node(i);
        rho.values[i] *= pref / (r * r);
    }
    return rho;
}

RadialFunction momentum_density(const OccupiedSet& occ,
                                const RadialGrid& k_grid) {
    if (occ.entries.empty())
        throw input_error("density", "momentum_density", "empty occupation");
    const RadialGrid& g = occ.entries.front().orbital.u.grid;

    // Group by l so each j_l(kr) is evaluated once per (k, r) pair.
    std::map<int, std::vector<std::size_t>> by_l;
    for (std::size_t i = 0; i < occ.entries.size(); ++i)
        by_l[occ.entries[i].orbital.l].push_back(i);

    // R(r) = u(r)/r per occupied orbital
    std::vector<RadialFunction> R(occ.entries.size());
    for (std::size_t i = 0; i < occ.entries.size(); ++i) {
        const auto& e = occ.entries[i];
        if (e.orbital.u.grid != g)
            throw input_error("density", "momentum_density",
                              "orbitals sampled on mixed grids");
        R[i] = RadialFunction{g, e.orbital.u.values};
        for (std::size_t j = 0; j < g.n_points; ++j) R[i].values[j] /= g.node(j);
    }

    const double pref =
        1.0 / (4.0 * std::numbers::pi * static_cast<double>(occ.N));
    RadialFunction nk{k_grid, std::vector<double>(k_grid.n_points, 0.0)};
    for (const auto& [l, idx] : by_l) {
        std::vector<const RadialFunction*> batch;
        for (std::size_t i : idx) batch.push_back(&R[i]);
        const auto transformed = sbt_batch(batch, l, k_grid);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const double defect = parseval_defect(R[idx[b]], transformed[b]);
            if (defect > 1e-3) {
                const auto& orb = occ.entries[idx[b]].orbital;
                throw solver_error(
                    "density", "momentum_density",
                    "transform of orbital (l=" + std::to_string(orb.l) +
                        ", n_r=" + std::to_string(orb.n_r) +
                        ") violates Parseval closure by " +
                        std::to_string(defect) + "; refine the k grid");
            }
            const double w = occ.entries[idx[b]].occupancy * pref;
            for (std::size_t ik = 0; ik < k_grid.n_points; ++ik) {
                const double t = transformed[b].values[ik];
                nk.values[ik] += w * t * t;
            }
        }
    }

    const double norm = radial_norm(nk);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw solver_error("density", "momentum_density",
                           "momentum density norm is not positive");
    for (auto& v : nk.values) v /= norm;
    return nk;
}

DensityPair make_density_pair(RadialFunction rho, RadialFunction nk) {
    require_density(rho, "density", "pair", 1e-6);
    require_density(nk, "density", "pair", 1e-4);
    DensityPair d;
    d.r2_moment = radial_moment2(rho);
    d.k2_moment = radial_moment2(nk);
    d.rho = std::move(rho);
    d.nk = std::move(nk);
    return d;
}

DensityPair make_density_pair(const OccupiedSet& occ, const RadialGrid& k_grid) {
    return make_density_pair(position_density(occ),
                             momentum_density(occ, k_grid));
}

} // namespace infodens
