#pragma once

namespace infodens {

/// Spherical Bessel function j_l(x) for l ≥ 0, x ≥ 0.  Upward recurrence
/// where it is stable (x > l), Miller-style downward recurrence with
/// normalization to j_0 otherwise, power series near the origin.
double sph_bessel_jl(int l, double x);

} // namespace infodens
