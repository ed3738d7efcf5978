#pragma once

// Independent cross-checks for the tests.  The eigenvalue oracle is a plain
// second-order finite-difference discretization of the radial equation
// (no Numerov weights, no shooting, no matching) whose spectrum is found by
// Sturm/inertia bisection on the tridiagonal pivots; Richardson h->h/2
// extrapolation removes the leading h^2 error.  Nothing here shares code
// with the library solver beyond the potential formula itself.

#include "infodens/grid.hpp"
#include "infodens/mean_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oracle {

// pivots of LDL^T of (T - E I) for T = tridiag(off, diag, off); the number
// of negative pivots equals the number of eigenvalues below E
inline std::size_t count_below(const std::vector<double>& diag, double off,
                               double E) {
    std::size_t count = 0;
    double d = 0.0;
    const double tiny = 1e-300;
    bool first = true;
    for (double di : diag) {
        d = first ? di - E : (di - E) - off * off / d;
        first = false;
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

// effective potential on the interior nodes of `grid` (both ends Dirichlet)
inline std::vector<double> fd_diag(const infodens::PotentialSpec& spec,
                                   std::size_t N, int l,
                                   const infodens::RadialGrid& grid,
                                   double* off_out) {
    const double D = spec.hbar2_over_2m;
    const double h = grid.h;
    const std::size_t n = grid.n_points - 1; // r_max row removed
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.node(i);
        diag[i] = 2.0 * D / (h * h) + potential_at(spec, N, r) +
                  D * static_cast<double>(l) * (l + 1) / (r * r);
    }
    *off_out = -D / (h * h);
    return diag;
}

// k-th (0-based) eigenvalue of the FD2 Hamiltonian by bisection
inline double fd2_level(const infodens::PotentialSpec& spec, std::size_t N,
                        int l, const infodens::RadialGrid& grid,
                        std::size_t k) {
    double off = 0.0;
    const auto diag = fd_diag(spec, N, l, grid, &off);
    double lo = *std::min_element(diag.begin(), diag.end()) - 2.0 * std::abs(off);
    double hi = *std::max_element(diag.begin(), diag.end()) + 2.0 * std::abs(off);
    if (count_below(diag, off, hi) < k + 1)
        throw std::runtime_error("oracle: not enough eigenvalues");
    for (int it = 0; it < 200 && hi - lo > 1e-13 * (std::abs(lo) + 1.0);
         ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(diag, off, mid) < k + 1)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Richardson-extrapolated level: error drops from O(h^2) to O(h^4)
inline double fd_level(const infodens::PotentialSpec& spec, std::size_t N,
                       int l, const infodens::RadialGrid& grid,
                       std::size_t k) {
    const auto fine = infodens::RadialGrid::make(grid.r_max,
                                                 2 * grid.n_points, 16);
    const double Eh = fd2_level(spec, N, l, grid, k);
    const double Eh2 = fd2_level(spec, N, l, fine, k);
    return (4.0 * Eh2 - Eh) / 3.0;
}

// dumb trapezoid on a uniform sampling of [a,b] — deliberately a different
// rule from the library quadrature
template <class F>
double trapz(F f, double a, double b, std::size_t n) {
    const double h = (b - a) / static_cast<double>(n);
    double s = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i < n; ++i) s += f(a + h * static_cast<double>(i));
    return s * h;
}

} // namespace oracle
