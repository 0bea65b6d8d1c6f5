#include "mzi/density.hpp"

#include <cmath>
#include <string>

namespace mzi {

DensityMatrix2::DensityMatrix2(double rho11, double rho22, Cplx rho12)
    : rho11_(rho11), rho22_(rho22), rho12_(rho12) {
    if (!std::isfinite(rho11) || !std::isfinite(rho22) || !is_finite(rho12)) {
        throw InvariantViolation("DensityMatrix2: non-finite entry");
    }
    if (std::abs(rho11 + rho22 - 1.0) > kTraceTol) {
        throw InvariantViolation("DensityMatrix2: trace deviates from 1 by " +
                                 std::to_string(rho11 + rho22 - 1.0));
    }
    if (rho11 < -kPopTol || rho22 < -kPopTol) {
        throw InvariantViolation("DensityMatrix2: negative population beyond tolerance");
    }
    const double det = rho11 * rho22 - std::norm(rho12);
    if (det < -kDetTol) {
        throw InvariantViolation("DensityMatrix2: determinant " + std::to_string(det) +
                                 " below positivity tolerance");
    }
}

std::array<double, 2> DensityMatrix2::eigenvalues() const {
    const double tr = trace();
    double disc = tr * tr - 4.0 * determinant();
    if (disc < 0.0) disc = 0.0;  // roundoff; eigenvalues of a Hermitian matrix are real
    const double s = std::sqrt(disc);
    return {0.5 * (tr + s), 0.5 * (tr - s)};
}

DensityMatrix2 density_from_bloch(double bx, double by, double bz) {
    const double norm2 = bx * bx + by * by + bz * bz;
    if (!std::isfinite(norm2)) throw BlochNormError("density_from_bloch: non-finite Bloch vector");
    if (norm2 > 1.0 + 1e-12) {
        throw BlochNormError("density_from_bloch: Bloch vector length " +
                             std::to_string(std::sqrt(norm2)) + " exceeds 1");
    }
    return {0.5 * (1.0 - bz), 0.5 * (1.0 + bz), 0.5 * Cplx(bx, by)};
}

}  // namespace mzi
