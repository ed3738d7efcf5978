#pragma once

#include "infodens/density.hpp"
#include "infodens/grid.hpp"

#include <cstddef>

namespace infodens {

/// Isotropic harmonic trap holding N bosons, ħ = m = 1.  The oscillator
/// length is b = 1/√omega; a_s is the s-wave scattering length (contact
/// coupling g = 4π a_s).
struct TrapSpec {
    double omega = 1.0;
    double scattering_length = 0.0; // a_s ≥ 0
    std::size_t N = 1;

    double oscillator_length() const;
    void validate() const;
};

struct BosonResult {
    DensityPair pair;
    double chemical_potential = 0.0; // μ = ⟨T⟩+⟨V⟩+gN∫|φ|⁴
    double energy = 0.0;             // per-particle mean-field energy
    std::size_t iterations = 0;
    double max_energy_rise = 0.0;    // largest per-step energy increase seen
};

/// Mean-field condensate ground state by imaginary-time relaxation
/// (backward-Euler steps Δτ = 1e-3/ω, converged when the energy change per
/// step drops below 1e-10·ω).  a_s = 0 short-circuits to the harmonic
/// single-orbital pipeline shared with the fermionic modules.  Throws
/// solver_error with the residual if the iteration cap is reached.
BosonResult boson_ground_state(const TrapSpec& trap, const RadialGrid& grid,
                               const RadialGrid& k_grid);

} // namespace infodens
