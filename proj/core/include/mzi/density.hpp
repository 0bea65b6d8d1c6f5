#pragma once

#include <array>

#include "mzi/matrix2.hpp"

namespace mzi {

/// Validated 2x2 density matrix of the two-level system.
///
/// Populations are stored as real numbers, the coherence as a single complex
/// value; rho21 is always the conjugate of rho12, so Hermiticity holds by
/// construction. Index convention: |2> is the excited state, |1> the ground
/// state; rho22 is the excited-state population.
///
/// Construction enforces, with tolerances:
///   trace:      |rho11 + rho22 - 1| <= 1e-10
///   positivity: rho11 >= -1e-12, rho22 >= -1e-12,
///               rho11*rho22 - |rho12|^2 >= -1e-10
/// Integrator roundoff can push populations a hair negative; population reads
/// clamp such excursions to zero while the stored raw values feed the trace
/// and determinant diagnostics unmodified.
class DensityMatrix2 {
  public:
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPopTol = 1e-12;
    static constexpr double kDetTol = 1e-10;

    DensityMatrix2(double rho11, double rho22, Cplx rho12);

    /// Ground-state population, clamped at zero.
    double rho11() const { return rho11_ < 0.0 ? 0.0 : rho11_; }
    /// Excited-state population, clamped at zero.
    double rho22() const { return rho22_ < 0.0 ? 0.0 : rho22_; }
    Cplx rho12() const { return rho12_; }
    Cplx rho21() const { return std::conj(rho12_); }

    /// rho11 + rho22 as stored (diagnostic; no renormalization anywhere).
    double trace() const { return rho11_ + rho22_; }
    double trace_error() const { return std::abs(trace() - 1.0); }

    /// rho11*rho22 - |rho12|^2 as stored. Slightly negative values within
    /// tolerance are integrator roundoff, reported as-is.
    double determinant() const { return rho11_ * rho22_ - std::norm(rho12_); }

    /// Eigenvalues from trace and determinant, descending.
    std::array<double, 2> eigenvalues() const;

    /// Bloch components (bx, by, bz).
    std::array<double, 3> bloch() const {
        return {2.0 * rho12_.real(), 2.0 * rho12_.imag(), rho22_ - rho11_};
    }

    Matrix2 to_matrix() const { return {rho22_, std::conj(rho12_), rho12_, rho11_}; }

  private:
    double rho11_;
    double rho22_;
    Cplx rho12_;
};

/// rho = (I + bx*sigma_x + by*sigma_y + bz*sigma_z)/2.
/// Throws BlochNormError if bx^2+by^2+bz^2 > 1 beyond tolerance.
DensityMatrix2 density_from_bloch(double bx, double by, double bz);

}  // namespace mzi
