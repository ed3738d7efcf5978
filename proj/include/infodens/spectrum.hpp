#pragma once

#include "infodens/grid.hpp"
#include "infodens/mean_field.hpp"

#include <cstddef>
#include <vector>

namespace infodens {

/// One bound single-particle level.  u is the reduced radial wave
/// u(r) = r·R(r), normalized ∫u²dr = 1, with u(r_max) = 0 (box boundary)
/// and exactly n_r interior sign changes.
struct Orbital {
    int n_r = 0;
    int l = 0;
    double energy = 0.0;
    RadialFunction u;

    int degeneracy() const { return 2 * (2 * l + 1); }
};

/// All bound states with l ≤ l_max (at most max_states_per_l per l), sorted
/// by energy ascending, exact ties by (l, n_r).  Numerov shooting: outward
/// from u(0)=0, inward from u(r_max)=0, node-count bisection to locate each
/// level, then secant refinement of the matching-point derivative mismatch.
/// Bound means E < 0 for Woods-Saxon kinds; the harmonic kind returns the
/// max_states_per_l lowest levels per l.  An l with no bound level simply
/// contributes nothing.  Throws solver_error (naming l and the node target)
/// if a bisection fails to converge within 200 steps.
std::vector<Orbital> solve_bound_states(const PotentialSpec& spec,
                                        std::size_t N, int l_max,
                                        int max_states_per_l,
                                        const RadialGrid& grid);

} // namespace infodens
