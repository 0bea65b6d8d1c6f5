#include "mzi/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "mzi/constants.hpp"

namespace mzi {

namespace {

constexpr Cplx kSplitterFactor{0.0, -0.5};  // -i/2 per beam-splitter pair

// Amplitude attenuation across a detector segment: the path probability
// falls as exp(-kappa L) with kappa = 1/(2l), so the amplitude carries
// exp(-L/(4l)). Gamma = 0 or L = 0 means no attenuation.
double arm_attenuation(const ParticleParams& particle, const DetectorSegment& segment) {
    if (segment.decay_rate <= 0.0 || segment.length <= 0.0) return 1.0;
    const double l = attenuation_length(particle, segment.decay_rate);
    return std::exp(-segment.length / (4.0 * l));
}

double coth_or_limit(double theta) {
    if (theta < 0.0) throw DomainError("temperature must be >= 0");
    return coth_half_inv_theta(theta);
}

}  // namespace

ParticleParams::ParticleParams(double mass_, double momentum_) : mass(mass_), momentum(momentum_) {
    if (!(mass > 0.0) || !std::isfinite(mass) || !(momentum > 0.0) || !std::isfinite(momentum)) {
        throw DomainError("ParticleParams: mass and momentum must be strictly positive");
    }
}

DetectorSegment::DetectorSegment(double length_, double decay_rate_)
    : length(length_), decay_rate(decay_rate_) {
    if (length < 0.0 || decay_rate < 0.0 || !std::isfinite(length) || !std::isfinite(decay_rate)) {
        throw DomainError("DetectorSegment: length and decay_rate must be >= 0");
    }
}

bool weak_dissipation_warning(const ParticleParams& particle, const DetectorSegment& segment) {
    return particle.hbar * segment.decay_rate > 0.1 * particle.kinetic_energy();
}

InterferometerConfig::InterferometerConfig(double arm1_length_, double arm2_length_,
                                           ParticleParams particle_,
                                           DetectorSegment detector_arm2_,
                                           std::optional<DetectorSegment> detector_arm1_)
    : arm1_length(arm1_length_),
      arm2_length(arm2_length_),
      particle(particle_),
      detector_arm2(detector_arm2_),
      detector_arm1(detector_arm1_) {
    if (!(arm1_length > 0.0) || !(arm2_length > 0.0)) {
        throw DomainError("InterferometerConfig: arm lengths must be strictly positive");
    }
    if (arm1_length != arm2_length) {
        throw DomainError("InterferometerConfig: arms must have equal length");
    }
}

PathAmplitudes::PathAmplitudes(Cplx psi1_, Cplx psi2_) : psi1(psi1_), psi2(psi2_) {
    if (!is_finite(psi1) || !is_finite(psi2)) {
        throw InvariantViolation("PathAmplitudes: non-finite amplitude");
    }
    if (std::norm(psi1) + std::norm(psi2) == 0.0) {
        throw DegenerateAmplitudes("PathAmplitudes: both amplitudes are zero");
    }
    if (std::abs(psi1) > 0.5 + 1e-12 || std::abs(psi2) > 0.5 + 1e-12) {
        throw InvariantViolation("PathAmplitudes: modulus exceeds the splitter bound 1/2");
    }
}

AlphaParams::AlphaParams(double alpha_) : alpha(alpha_) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw DomainError("AlphaParams: alpha must be >= 0 and finite");
    }
}

double attenuation_length(const ParticleParams& particle, double decay_rate) {
    if (decay_rate <= 0.0) {
        throw DomainError("attenuation_length: decay_rate must be > 0 (length diverges)");
    }
    return particle.momentum / (particle.mass * decay_rate);
}

Cplx decayed_amplitude(const ParticleParams& particle, double x, double l) {
    if (x < 0.0) throw DomainError("decayed_amplitude: x must be >= 0");
    if (!(l > 0.0)) throw DomainError("decayed_amplitude: l must be > 0");
    const double phase = particle.momentum * x / particle.hbar;
    return std::polar(std::exp(-x / (2.0 * l)), phase);
}

PathAmplitudes path_amplitudes(const InterferometerConfig& config) {
    const ParticleParams& p = config.particle;
    const double att1 =
        config.detector_arm1 ? arm_attenuation(p, *config.detector_arm1) : 1.0;
    const double att2 = arm_attenuation(p, config.detector_arm2);

    const Cplx psi1 = kSplitterFactor * std::polar(att1, p.momentum * config.arm1_length / p.hbar);
    const Cplx psi2 = kSplitterFactor * std::polar(att2, p.momentum * config.arm2_length / p.hbar);
    return {psi1, psi2};
}

double predictability(const PathAmplitudes& amps) {
    const double p1 = std::norm(amps.psi1);
    const double p2 = std::norm(amps.psi2);
    if (p1 + p2 == 0.0) throw DegenerateAmplitudes("predictability: zero amplitudes");
    return std::abs((p1 - p2) / (p1 + p2));
}

double visibility(const PathAmplitudes& amps) {
    const double p1 = std::norm(amps.psi1);
    const double p2 = std::norm(amps.psi2);
    if (p1 + p2 == 0.0) throw DegenerateAmplitudes("visibility: zero amplitudes");
    return 2.0 * std::abs(amps.psi1) * std::abs(amps.psi2) / (p1 + p2);
}

double predictability_thermal(const AlphaParams& alpha, double theta) {
    return std::tanh(alpha.alpha * coth_or_limit(theta));
}

AlphaParams alpha_from_physical(double mass, double l_dec, double omega_a_si, double d12,
                                double k) {
    if (!(mass > 0.0) || !(l_dec > 0.0) || !(omega_a_si > 0.0) || !(d12 > 0.0) || !(k > 0.0)) {
        throw DomainError("alpha_from_physical: all inputs must be strictly positive");
    }
    using namespace constants;
    const double w3 = omega_a_si * omega_a_si * omega_a_si;
    const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    const double alpha = mass * l_dec * w3 * d12 * d12 /
                         (24.0 * std::numbers::pi * kVacuumPermittivity * kHbar * kHbar * k * c3);
    return AlphaParams(alpha);
}

double predictability_eraser(const AlphaParams& alpha, double theta1, double theta2) {
    const double c1 = coth_or_limit(theta1);
    const double c2 = coth_or_limit(theta2);
    return std::abs(std::tanh(alpha.alpha * (c2 - c1)));
}

double predictability_near_equilibrium(const AlphaParams& alpha, double theta1, double rel_diff) {
    if (!(theta1 > 0.0)) throw DomainError("predictability_near_equilibrium: theta1 must be > 0");
    if (!std::isfinite(rel_diff) || std::abs(rel_diff) >= 0.5) {
        throw DomainError("predictability_near_equilibrium: |rel_diff| must be < 0.5");
    }
    const double u = rel_diff / (2.0 * theta1);
    const double denom = 1.0 - u * coth_half_inv_theta(theta1);
    if (denom <= 0.0) {
        throw DomainError("predictability_near_equilibrium: expansion breakdown (denominator <= 0)");
    }
    const double arg = alpha.alpha * u * csch2_half_inv_theta(theta1) / denom;
    return std::abs(std::tanh(arg));
}

bool near_equilibrium_warning(double rel_diff) { return std::abs(rel_diff) > 0.1; }

}  // namespace mzi
