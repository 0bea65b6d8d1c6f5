#pragma once

#include <cstddef>
#include <vector>

#include "mzi/bath.hpp"
#include "mzi/density.hpp"

namespace mzi {

/// Time derivative of a density matrix: traceless and Hermitian, so it is not
/// itself a valid state. d_rho21 is the conjugate of d_rho12 by construction.
struct DensityRates {
    double d_rho11;
    double d_rho22;
    Cplx d_rho12;

    Cplx d_rho21() const { return std::conj(d_rho12); }
};

/// Right-hand side of the thermal-bath master equation
///   drho/dt = -i (omega_a/2) [sigma_z, rho]
///             + (gamma/2)(n+1) (2 s- rho s+ - s+ s- rho - rho s+ s-)
///             + (gamma/2) n    (2 s+ rho s- - s- s+ rho - rho s- s+)
/// assembled by explicit operator algebra.
DensityRates lindblad_rhs(const DensityMatrix2& rho, const BathParams& bath);

/// Sampled trajectory. Times are strictly increasing; every stored state
/// passed DensityMatrix2 validation.
struct EvolutionResult {
    std::vector<double> times;
    std::vector<DensityMatrix2> states;
};

/// max(omega_a, gamma (2 n_bar + 1)): the fastest rate in the generator.
double max_rate(const BathParams& bath);

/// Step bound 0.01 / max_rate below which the fixed-step integrator is
/// comfortably resolved.
double recommended_dt(const BathParams& bath);

/// Classical fixed-step RK4 integration of the master equation from rho0 to
/// t_final. The final step is shortened to land on t_final exactly. States
/// are stored every store_stride steps plus the endpoint, and each stored
/// state is re-validated (InvariantViolation on positivity loss beyond
/// tolerance). The trace is never renormalized; its drift is a diagnostic.
EvolutionResult integrate(const DensityMatrix2& rho0, const BathParams& bath, double t_final,
                          double dt, std::size_t store_stride = 1);

/// Closed-form solution of the master equation at time t >= 0:
///   rho22(t) = rho22_inf + (rho22(0) - rho22_inf) exp(-gamma (2n+1) t),
///   rho22_inf = n/(2n+1), rho11(t) = 1 - rho22(t),
///   rho21(t) = rho21(0) exp(-[gamma(2n+1)/2 + i omega_a] t).
DensityMatrix2 analytic_solution(const DensityMatrix2& rho0, const BathParams& bath, double t);

/// Least-squares slope of ln|rho12(t)| against t, negated: the measured
/// coherence decay rate. Uses the leading samples with |rho12| > 1e-12 and
/// requires at least 10 of them (FitError otherwise).
double fit_decoherence_rate(const EvolutionResult& result);

}  // namespace mzi
