#pragma once

#include <optional>

#include "mzi/bath.hpp"
#include "mzi/matrix2.hpp"

namespace mzi {

/// Free particle traversing the interferometer, internal units (hbar = 1).
struct ParticleParams {
    double mass;
    double momentum;      // p = hbar k
    double hbar = 1.0;

    explicit ParticleParams(double mass_, double momentum_);

    double wavenumber() const { return momentum / hbar; }
    double kinetic_energy() const { return momentum * momentum / (2.0 * mass); }
};

/// Lossy in-path detector: a segment of length L over which the particle's
/// survival amplitude decays at rate decay_rate.
struct DetectorSegment {
    double length = 0.0;      // L_dec
    double decay_rate = 0.0;  // Gamma, units of omega_a

    DetectorSegment() = default;
    DetectorSegment(double length_, double decay_rate_);
};

/// True when the dissipative energy scale hbar*Gamma is no longer small
/// against the kinetic energy (> 0.1 p^2/2m), where the lossy-segment model
/// stops being controlled.
bool weak_dissipation_warning(const ParticleParams& particle, const DetectorSegment& segment);

/// Two-arm interferometer with equal arm lengths, a detector segment in arm 2
/// and, for the eraser arrangement, an optional detector in arm 1.
struct InterferometerConfig {
    double arm1_length;
    double arm2_length;
    ParticleParams particle;
    DetectorSegment detector_arm2;
    std::optional<DetectorSegment> detector_arm1;

    InterferometerConfig(double arm1_length_, double arm2_length_, ParticleParams particle_,
                         DetectorSegment detector_arm2_,
                         std::optional<DetectorSegment> detector_arm1_ = std::nullopt);
};

/// Complex amplitudes for the two paths. The beam splitter contributes a
/// factor -i/2 to each, so each modulus is at most 1/2.
struct PathAmplitudes {
    Cplx psi1;
    Cplx psi2;

    PathAmplitudes(Cplx psi1_, Cplx psi2_);
};

/// Dimensionless detector coupling alpha.
struct AlphaParams {
    double alpha;

    explicit AlphaParams(double alpha_);
};

/// Attenuation length l = p/(m Gamma). The imaginary part of the wave vector
/// is kappa = m Gamma/(2p) = 1/(2l). Throws DomainError at Gamma = 0 (the
/// length is infinite; callers treat that case as no attenuation).
double attenuation_length(const ParticleParams& particle, double decay_rate);

/// Survival amplitude exp(i p x/hbar) exp(-x/(2l)) over a distance x inside a
/// lossy region of attenuation length l; |psi|^2 = exp(-x/l). The overall
/// beam-splitter prefactor is applied by the caller.
Cplx decayed_amplitude(const ParticleParams& particle, double x, double l);

/// Path amplitudes psi_j = -(i/2) exp(i p R_j/hbar) * attenuation_j.
///
/// A detector of length L in an arm multiplies that arm's amplitude by
/// exp(-L/(4l)), i.e. the path probability carries exp(-L/(2l)) = exp(-kappa L),
/// so the two-path predictability comes out as tanh(m L Gamma/(4 hbar k)).
/// A detector with Gamma = 0 or L = 0 contributes factor 1.
PathAmplitudes path_amplitudes(const InterferometerConfig& config);

/// Normalized which-path predictability | (p1 - p2)/(p1 + p2) | with
/// p_j = |psi_j|^2. In [0, 1].
double predictability(const PathAmplitudes& amps);

/// Fringe visibility 2|psi1||psi2| / (|psi1|^2 + |psi2|^2). In [0, 1];
/// saturates predictability^2 + visibility^2 = 1 for pure two-path states.
double visibility(const PathAmplitudes& amps);

/// Temperature-dependent predictability with one detector:
///   P(theta) = tanh(alpha coth(1/(2 theta))), P(0) = tanh(alpha).
double predictability_thermal(const AlphaParams& alpha, double theta);

/// Detector coupling from SI quantities:
///   alpha = m L_dec omega_a^3 d12^2 / (24 pi eps0 hbar^2 k c^3),
/// equal to m L_dec gamma / (8 hbar k) with gamma the Einstein A rate.
AlphaParams alpha_from_physical(double mass, double l_dec, double omega_a_si, double d12,
                                double k);

/// Eraser arrangement, one detector per arm at temperatures theta1, theta2:
///   P' = |tanh(alpha (coth(1/(2 theta2)) - coth(1/(2 theta1))))|.
/// Zero exactly when the temperatures match.
double predictability_eraser(const AlphaParams& alpha, double theta1, double theta2);

/// Near-equilibrium expansion of the eraser predictability in the relative
/// temperature difference y = (T2 - T1)/T1:
///   P'' = |tanh( alpha u csch^2(x) / (1 - u coth(x)) )|,
/// with x = 1/(2 theta1) and u = y/(2 theta1). Requires theta1 > 0 and
/// |y| < 0.5; throws DomainError when the denominator is <= 0 (expansion
/// breakdown).
double predictability_near_equilibrium(const AlphaParams& alpha, double theta1, double rel_diff);

/// True when |rel_diff| > 0.1, outside the regime the expansion is meant for.
bool near_equilibrium_warning(double rel_diff);

}  // namespace mzi
