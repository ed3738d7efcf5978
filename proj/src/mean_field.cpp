#include "infodens/mean_field.hpp"
#include "infodens/errors.hpp"

#include <cmath>

namespace infodens {

const char* to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::ws_cluster: return "ws_cluster";
        case PotentialKind::ws_nucleus: return "ws_nucleus";
        case PotentialKind::harmonic: return "harmonic";
    }
    throw input_error("mean_field", "kind", "unreachable kind value");
}

PotentialKind potential_kind_from_string(const std::string& s) {
    if (s == "ws_cluster") return PotentialKind::ws_cluster;
    if (s == "ws_nucleus") return PotentialKind::ws_nucleus;
    if (s == "harmonic") return PotentialKind::harmonic;
    throw input_error("mean_field", "kind", "unknown potential kind '" + s + "'");
}

PotentialSpec PotentialSpec::cluster_defaults() {
    PotentialSpec s;
    s.kind = PotentialKind::ws_cluster;
    s.V0 = 6.0;   // eV
    s.r0 = 4.0;   // a0 (r_s for Na jellium)
    s.a = 1.0;    // a0
    s.hbar2_over_2m = 13.605693122994; // 0.5 Hartree·a0² in eV·a0²
    return s;
}

PotentialSpec PotentialSpec::nucleus_defaults() {
    PotentialSpec s;
    s.kind = PotentialKind::ws_nucleus;
    s.V0 = 57.0;  // MeV
    s.r0 = 1.27;  // fm
    s.a = 0.67;   // fm
    s.hbar2_over_2m = 20.736; // MeV·fm²
    return s;
}

PotentialSpec PotentialSpec::harmonic_defaults() {
    PotentialSpec s;
    s.kind = PotentialKind::harmonic;
    s.hbar2_over_2m = 0.5;
    s.omega = 1.0;
    return s;
}

PotentialSpec PotentialSpec::defaults_for(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::ws_cluster: return cluster_defaults();
        case PotentialKind::ws_nucleus: return nucleus_defaults();
        case PotentialKind::harmonic: return harmonic_defaults();
    }
    throw input_error("mean_field", "defaults", "unreachable kind value");
}

double PotentialSpec::oscillator_length() const {
    return std::sqrt(2.0 * hbar2_over_2m / omega);
}

void PotentialSpec::validate() const {
    if (!(hbar2_over_2m > 0.0))
        throw input_error("mean_field", "spec", "hbar2_over_2m must be positive");
    if (kind == PotentialKind::harmonic) {
        if (!(omega > 0.0))
            throw input_error("mean_field", "spec", "omega must be positive");
        return;
    }
    if (!(V0 > 0.0))
        throw input_error("mean_field", "spec", "V0 must be positive");
    if (!(r0 > 0.0))
        throw input_error("mean_field", "spec", "r0 must be positive");
    if (!(a > 0.0))
        throw input_error("mean_field", "spec", "diffuseness a must be positive");
}

double potential_at(const PotentialSpec& spec, std::size_t N, double r) {
    if (r < 0.0)
        throw input_error("mean_field", "potential_at", "r must be non-negative");
    if (N < 1)
        throw input_error("mean_field", "potential_at", "N must be at least 1");
    if (spec.kind == PotentialKind::harmonic)
        return spec.omega * spec.omega * r * r / (4.0 * spec.hbar2_over_2m);
    const double R = spec.r0 * std::cbrt(static_cast<double>(N));
    const double x = (r - R) / spec.a;
    // Large positive x: exp overflow-safe tail, V → 0⁻.
    if (x > 40.0) return -spec.V0 * std::exp(-x);
    return -spec.V0 / (1.0 + std::exp(x));
}

} // namespace infodens
