#pragma once

#include "infodens/grid.hpp"
#include "infodens/spectrum.hpp"

#include <cstddef>
#include <vector>

namespace infodens {

struct OccupiedLevel {
    Orbital orbital;
    double occupancy = 0.0; // ≤ 2(2l+1); fractional only on the last level
};

struct OccupiedSet {
    std::vector<OccupiedLevel> entries; // energy-ascending, Σ occupancy = N
    std::size_t N = 0;
};

/// Fills levels in ascending energy with degeneracy 2(2l+1); the last level
/// may be fractionally occupied.  Throws input_error naming N and the total
/// capacity when the bound spectrum cannot hold N particles.
OccupiedSet fill_shells(const std::vector<Orbital>& orbitals, std::size_t N);

/// ρ(r) = (1/4πN) Σ occ_i u_i(r)²/r², unit-normalized by construction.
RadialFunction position_density(const OccupiedSet& occ);

/// n(k) = (1/4πN) Σ occ_i R̃_i(k)² with R̃_i = sbt(u_i/r, l_i), renormalized
/// to unity.  Throws solver_error if any orbital's transform violates
/// Parseval closure beyond 1e-3.
RadialFunction momentum_density(const OccupiedSet& occ,
                                const RadialGrid& k_grid);

/// Matched position/momentum densities of one system plus their second
/// moments ⟨r²⟩ and ⟨k²⟩.
struct DensityPair {
    RadialFunction rho;
    RadialFunction nk;
    double r2_moment = 0.0;
    double k2_moment = 0.0;
};

/// Validates both densities (non-negative, unit norm) and fills the moments.
DensityPair make_density_pair(RadialFunction rho, RadialFunction nk);

/// Full fermionic pipeline: position + momentum density of an occupied set.
DensityPair make_density_pair(const OccupiedSet& occ, const RadialGrid& k_grid);

} // namespace infodens
