#pragma once

#include <cstddef>
#include <vector>

namespace infodens {

/// Uniform radial grid r_i = i*h, i = 1..n_points, so r_1 = h and
/// r_{n_points} = r_max. The origin is excluded; integration routines
/// extrapolate to r = 0 where needed.
struct RadialGrid {
    double r_max = 0.0;
    std::size_t n_points = 0;
    double h = 0.0;

    /// min_points is the production floor (default 200); tests may lower it.
    static RadialGrid make(double r_max, std::size_t n_points,
                           std::size_t min_points = 200);

    double node(std::size_t i) const { return h * static_cast<double>(i + 1); }
    std::vector<double> nodes() const;

    bool operator==(const RadialGrid& other) const {
        return r_max == other.r_max && n_points == other.n_points;
    }
    bool operator!=(const RadialGrid& other) const { return !(*this == other); }
};

/// Real function sampled on a RadialGrid, values[i] = f(r_{i+1}).
struct RadialFunction {
    RadialGrid grid;
    std::vector<double> values;
};

enum class Weight { one, r_squared };

/// Composite-Simpson weights for a uniform sample y_0..y_{n_samples-1} with
/// spacing h: ∫y dx ≈ Σ w_j y_j.  Odd interval counts get a 3/8-rule tail.
/// Every quadrature in the library reduces to one dot product with these
/// weights, so integrals agree bit-for-bit across call sites.
std::vector<double> simpson_weights(std::size_t n_samples, double h);

/// Composite-Simpson approximation of ∫ f(r)·w(r) dr over [0, r_max].
/// f(0) is obtained by cubic extrapolation from the first nodes; an odd
/// interval count falls back to Simpson 3/8 on the last three intervals.
/// Exact (≤1e-12) whenever the integrand f·w is a polynomial of degree ≤ 3.
double integrate_radial(const RadialFunction& f, Weight w);

/// 4π ∫ f r² dr — the norm of a spherically symmetric density.
double radial_norm(const RadialFunction& f);

/// 4π ∫ f r⁴ dr — ⟨r²⟩ when f is a unit-normalized density.
double radial_moment2(const RadialFunction& f);

/// Checks f ≥ 0 everywhere and 4π∫f r²dr = 1 within tol; throws input_error
/// tagged [module.op] otherwise.
void require_density(const RadialFunction& f, const char* module,
                     const char* op, double tol = 1e-6);

/// Uniformly sampled 1-D function on [x0, x0 + (n-1)·dx], both endpoints
/// included.
struct Sampled1D {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;
};

/// Composite Simpson (3/8 fallback on odd interval counts) of a 1-D sample.
double integrate_1d(const Sampled1D& f);

} // namespace infodens
