#pragma once

#include "infodens/density.hpp"
#include "infodens/grid.hpp"

#include <cstddef>
#include <vector>

namespace infodens {

struct GaussianSpec {
    double mu = 0.0;
    double sigma = 1.0; // > 0
};

/// Normalized 1-D Gaussian sampled on [mu - half_width·sigma, mu + half_width·sigma].
Sampled1D sample_gaussian(const GaussianSpec& g, std::size_t n_points = 4001,
                          double half_width = 10.0);

/// Onicescu information energy E = ∫ρ²dx of a normalized 1-D density.
/// Gaussian closed form: E = 1/(2σ√π).
double onicescu_1d(const Sampled1D& rho);

/// Uniform sphere with the norm and ⟨r²⟩ of a source density:
/// R_U = √((5/3)⟨r²⟩), ρ₀ = 3/(4πR_U³).
struct EquivalentUniform {
    double R_U = 0.0;
    double rho_0 = 0.0;
};

EquivalentUniform equivalent_uniform(const RadialFunction& rho);

/// The equivalent uniform sampled on a grid: ρ₀ inside R_U, 0 outside, ρ₀/2
/// on a node within 1e-6·R_U of the edge (midpoint rule for the jump).
RadialFunction sample_uniform(const EquivalentUniform& eu, const RadialGrid& g);

/// E_r-style radial Onicescu energy 4π∫ρ²r²dr.
double onicescu_radial(const RadialFunction& rho);

/// Continuous Uffink concentration 4π∫(ρ-ρ̃)²r²dr against a sampled
/// surrogate; with ρ̃ ≡ 0 this reduces identically to onicescu_radial.
double uffink_radial(const RadialFunction& rho, const RadialFunction& surrogate);

/// Shannon entropy -4π∫ρ ln ρ r²dr; samples below 1e-30 contribute zero.
double shannon_radial(const RadialFunction& rho);

struct DiscreteDistribution {
    std::vector<double> p;    // p_i ≥ 0, Σp = 1 within 1e-12
    double norm_const = 1.0;  // the 𝒩 prefactor
};

/// 𝒩·Σ(p_i - 1/n)²; equals 𝒩(Σp_i² - 1/n) for normalized p.
double uffink_discrete(const DiscreteDistribution& d);

/// Every scalar measure of one system at one N.
struct MeasureSet {
    double E_r = 0.0, E_k = 0.0, S_E = 0.0; // Onicescu energies, S_E = 1/(E_r E_k)
    double I_r = 0.0, I_k = 0.0, S_I = 0.0; // Uffink measures,  S_I = 1/(I_r I_k)
    double S_r = 0.0, S_k = 0.0, S = 0.0;   // Shannon entropies, S = S_r + S_k
    double R_U_r = 0.0, R_U_k = 0.0;        // equivalent-uniform radii
};

/// Computes the full MeasureSet of a density pair.  Throws input_error when
/// I_r or I_k falls below 1e-14 (density indistinguishable from its uniform
/// surrogate; S_I undefined).
MeasureSet measure_set(const DensityPair& d);

} // namespace infodens
