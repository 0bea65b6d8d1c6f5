#pragma once

#include "mzi/errors.hpp"

namespace mzi {

/// Thermal bath and system parameters in reduced units: hbar = k_B = 1 and
/// frequencies measured against the atomic transition frequency omega_a
/// (itself 1 in internal units). theta = k_B T / (hbar omega_a) is the single
/// dimensionless temperature; gamma is the spontaneous decay rate as a
/// fraction of omega_a.
struct BathParams {
    double theta;
    double gamma;
    double omega_a;

    explicit BathParams(double theta_, double gamma_, double omega_a_ = 1.0);

    /// Planck occupation at this temperature (cached at construction).
    double n_bar() const { return n_bar_; }

    /// True when gamma is large enough (> 0.1 omega_a) that the weak-coupling
    /// master equation is questionable.
    bool weak_coupling_warning() const { return gamma > 0.1 * omega_a; }

  private:
    double n_bar_;
};

/// SI description of the two-level atom and its bath temperature.
struct PhysicalAtomParams {
    double omega_a_si;      // transition frequency, rad/s
    double dipole;          // |d12|, C m
    double temperature_si;  // K

    explicit PhysicalAtomParams(double omega_a_si_, double dipole_, double temperature_si_);
};

/// Mean thermal occupation n = 1/(exp(1/theta) - 1) of a bath mode at reduced
/// temperature theta. Returns the limit 0 at theta = 0. For theta < 1e-3 the
/// equivalent form exp(-1/theta)/(1 - exp(-1/theta)) avoids overflow of
/// exp(1/theta).
double planck_occupation(double theta);

/// Spontaneous-emission (Einstein A) rate in 1/s:
///   gamma = omega^3 d12^2 / (3 pi eps0 hbar c^3).
double einstein_gamma(const PhysicalAtomParams& p);

/// Coherence decay rate Gamma_dec = (gamma/2)(2 n_bar + 1).
double decoherence_rate(double gamma, double n_bar);

/// Reduced-unit bath corresponding to an SI atom description:
/// theta = k_B T/(hbar omega_a), gamma = einstein_gamma / omega_a, omega_a = 1.
BathParams bath_from_physical(const PhysicalAtomParams& p);

/// coth(1/(2 theta)) evaluated through the Planck occupation identity
/// coth(1/(2 theta)) = 2 n_bar + 1, which is stable for all theta >= 0 and
/// equals 1 at theta = 0.
double coth_half_inv_theta(double theta);

/// cosech^2(1/(2 theta)) = 4 n_bar (n_bar + 1); 0 at theta = 0.
double csch2_half_inv_theta(double theta);

}  // namespace mzi
