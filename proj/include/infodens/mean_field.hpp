#pragma once

#include <cstddef>
#include <string>

namespace infodens {

enum class PotentialKind { ws_cluster, ws_nucleus, harmonic };

const char* to_string(PotentialKind k);
PotentialKind potential_kind_from_string(const std::string& s);

/// Single-particle mean field.  Woods-Saxon kinds:
///   V(r) = -V0 / (1 + exp((r - R)/a)),  R = r0·N^{1/3}.
/// Harmonic kind (ħ = 1 units): V(r) = ω²r²/(4D) with D = hbar2_over_2m,
/// i.e. ½mω²r²; oscillator length b = √(2D/ω).
struct PotentialSpec {
    PotentialKind kind = PotentialKind::harmonic;
    double V0 = 0.0;            // depth (eV clusters, MeV nuclei)
    double r0 = 0.0;            // radius parameter (a0 / fm)
    double a = 0.0;             // surface diffuseness
    double hbar2_over_2m = 0.5; // energy·length²
    double omega = 1.0;         // trap frequency (harmonic kind only)

    /// Ekardt-style sodium jellium well, energies in eV, lengths in a0.
    static PotentialSpec cluster_defaults();
    /// Nucleon well (Skyrme-free stand-in), energies in MeV, lengths in fm.
    /// V0 = 57 MeV so the well binds 126 nucleons (44 MeV tops out near 112).
    static PotentialSpec nucleus_defaults();
    /// Unit-frequency isotropic trap, ħ = m = 1.
    static PotentialSpec harmonic_defaults();
    static PotentialSpec defaults_for(PotentialKind kind);

    /// Oscillator length b = √(2D/ω); meaningful for the harmonic kind only.
    double oscillator_length() const;

    void validate() const; // throws input_error on out-of-range parameters
};

/// V(r) for N particles; R = r0·N^{1/3} for Woods-Saxon kinds.
double potential_at(const PotentialSpec& spec, std::size_t N, double r);

} // namespace infodens
