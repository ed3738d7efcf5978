#pragma once

#include "infodens/grid.hpp"

#include <vector>

namespace infodens {

/// Spherical Bessel transform of order l,
///   R̃(k) = √(2/π) ∫ j_l(kr) R(r) r² dr,
/// evaluated on each node of k_grid by radial Simpson quadrature.
/// Requires |R(r_max)| ≤ 1e-8 (bound-state tail); larger → truncation error.
RadialFunction sbt(const RadialFunction& R, int l, const RadialGrid& k_grid);

/// Batched form: transforms several same-order functions sharing one grid,
/// evaluating each j_l(kr) once.  Identical quadrature to sbt().
std::vector<RadialFunction> sbt_batch(const std::vector<const RadialFunction*>& Rs,
                                      int l, const RadialGrid& k_grid);

/// |∫R²r²dr - ∫R̃²k²dk| / ∫R²r²dr — the Parseval defect of a transform pair.
double parseval_defect(const RadialFunction& R, const RadialFunction& Rk);

} // namespace infodens
