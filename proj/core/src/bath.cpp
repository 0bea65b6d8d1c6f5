#include "mzi/bath.hpp"

#include <cmath>
#include <numbers>

#include "mzi/constants.hpp"

namespace mzi {

BathParams::BathParams(double theta_, double gamma_, double omega_a_)
    : theta(theta_), gamma(gamma_), omega_a(omega_a_) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) {
        throw DomainError("BathParams: theta must be >= 0 and finite");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("BathParams: gamma must be > 0 and finite");
    }
    if (!(omega_a > 0.0) || !std::isfinite(omega_a)) {
        throw DomainError("BathParams: omega_a must be > 0 and finite");
    }
    n_bar_ = planck_occupation(theta);
}

PhysicalAtomParams::PhysicalAtomParams(double omega_a_si_, double dipole_, double temperature_si_)
    : omega_a_si(omega_a_si_), dipole(dipole_), temperature_si(temperature_si_) {
    if (!(omega_a_si > 0.0) || !(dipole > 0.0) || !(temperature_si > 0.0)) {
        throw DomainError("PhysicalAtomParams: all parameters must be strictly positive");
    }
}

double planck_occupation(double theta) {
    if (theta < 0.0 || !std::isfinite(theta)) {
        throw DomainError("planck_occupation: theta must be >= 0");
    }
    if (theta == 0.0) return 0.0;
    if (theta < 1e-3) {
        const double e = std::exp(-1.0 / theta);  // underflows gracefully
        return e / (1.0 - e);
    }
    return 1.0 / std::expm1(1.0 / theta);
}

double einstein_gamma(const PhysicalAtomParams& p) {
    using namespace constants;
    const double w3 = p.omega_a_si * p.omega_a_si * p.omega_a_si;
    const double d2 = p.dipole * p.dipole;
    const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    return w3 * d2 / (3.0 * std::numbers::pi * kVacuumPermittivity * kHbar * c3);
}

double decoherence_rate(double gamma, double n_bar) {
    if (gamma < 0.0 || n_bar < 0.0) {
        throw DomainError("decoherence_rate: gamma and n_bar must be nonnegative");
    }
    return 0.5 * gamma * (2.0 * n_bar + 1.0);
}

BathParams bath_from_physical(const PhysicalAtomParams& p) {
    using namespace constants;
    const double theta = kBoltzmann * p.temperature_si / (kHbar * p.omega_a_si);
    const double gamma = einstein_gamma(p) / p.omega_a_si;
    return BathParams(theta, gamma, 1.0);
}

double coth_half_inv_theta(double theta) { return 2.0 * planck_occupation(theta) + 1.0; }

double csch2_half_inv_theta(double theta) {
    const double n = planck_occupation(theta);
    return 4.0 * n * (n + 1.0);
}

}  // namespace mzi
