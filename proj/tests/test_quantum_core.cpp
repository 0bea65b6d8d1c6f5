#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mzi/density.hpp"
#include "mzi/matrix2.hpp"

using namespace mzi;

namespace {

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    double m = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    }
    return m;
}

Matrix2 random_matrix(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {Cplx(u(rng), u(rng)), Cplx(u(rng), u(rng)), Cplx(u(rng), u(rng)),
            Cplx(u(rng), u(rng))};
}

}  // namespace

TEST_CASE("matrix product: identity, ladder and Pauli algebra") {
    CHECK(max_abs_diff(mat_mul(identity2(), identity2()), identity2()) == 0.0);

    // sigma_+ sigma_- projects onto the excited state |2><2| = diag(1, 0)
    const Matrix2 proj = mat_mul(sigma_plus(), sigma_minus());
    CHECK(proj.at(0, 0) == Cplx(1.0));
    CHECK(proj.at(0, 1) == Cplx(0.0));
    CHECK(proj.at(1, 0) == Cplx(0.0));
    CHECK(proj.at(1, 1) == Cplx(0.0));

    CHECK(max_abs_diff(mat_mul(sigma_z(), sigma_z()), identity2()) == 0.0);
}

TEST_CASE("matrix product is associative on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const Matrix2 a = random_matrix(rng), b = random_matrix(rng), c = random_matrix(rng);
        CHECK(max_abs_diff((a * b) * c, a * (b * c)) < 1e-12);
    }
}

TEST_CASE("commutator identities") {
    const Matrix2 zero;
    CHECK(max_abs_diff(commutator(sigma_z(), identity2()), zero) == 0.0);
    CHECK(max_abs_diff(commutator(sigma_z(), sigma_plus()), sigma_plus() * Cplx(2.0)) == 0.0);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const Matrix2 a = random_matrix(rng);
        CHECK(max_abs_diff(commutator(a, a), zero) == 0.0);
    }
}

TEST_CASE("non-finite entries are rejected") {
    CHECK_THROWS_AS(Matrix2(Cplx(std::nan(""), 0.0), 0.0, 0.0, 0.0), InvariantViolation);
    CHECK_THROWS_AS(DensityMatrix2(0.5, 0.5, Cplx(0.0, INFINITY)), InvariantViolation);
}

TEST_CASE("density_from_bloch pins the basis convention") {
    const DensityMatrix2 excited = density_from_bloch(0.0, 0.0, 1.0);
    CHECK(excited.rho22() == 1.0);
    CHECK(excited.rho11() == 0.0);

    const DensityMatrix2 mixed = density_from_bloch(0.0, 0.0, 0.0);
    CHECK(mixed.rho11() == 0.5);
    CHECK(mixed.rho22() == 0.5);
    CHECK(mixed.rho12() == Cplx(0.0));

    const DensityMatrix2 plus = density_from_bloch(1.0, 0.0, 0.0);
    CHECK(plus.rho11() == 0.5);
    CHECK(plus.rho22() == 0.5);
    CHECK(plus.rho12() == Cplx(0.5));
}

TEST_CASE("over-long Bloch vectors are rejected") {
    CHECK_THROWS_AS(density_from_bloch(1.0, 1.0, 0.0), BlochNormError);
    CHECK_THROWS_AS(density_from_bloch(0.0, 0.0, 1.0 + 1e-6), BlochNormError);
    CHECK_NOTHROW(density_from_bloch(0.0, 0.0, 1.0));  // exactly on the sphere
}

TEST_CASE("Bloch round trip within 1e-12") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double bx = u(rng), by = u(rng), bz = u(rng);
        const double n = std::sqrt(bx * bx + by * by + bz * bz);
        if (n > 1.0) {
            bx /= n;
            by /= n;
            bz /= n;
        }
        const auto b = density_from_bloch(bx, by, bz).bloch();
        CHECK(std::abs(b[0] - bx) < 1e-12);
        CHECK(std::abs(b[1] - by) < 1e-12);
        CHECK(std::abs(b[2] - bz) < 1e-12);
    }
}

TEST_CASE("density-matrix invariants are enforced") {
    CHECK_THROWS_AS(DensityMatrix2(0.6, 0.6, Cplx(0.0)), InvariantViolation);  // trace 1.2
    CHECK_THROWS_AS(DensityMatrix2(-1e-6, 1.0 + 1e-6, Cplx(0.0)), InvariantViolation);
    CHECK_THROWS_AS(DensityMatrix2(0.5, 0.5, Cplx(0.5, 0.5)), InvariantViolation);  // det < -tol
    // within positivity tolerance: tiny negative determinant is accepted
    CHECK_NOTHROW(DensityMatrix2(0.5, 0.5, Cplx(0.5 + 1e-12, 0.0)));
}

TEST_CASE("Hermiticity holds by construction") {
    const DensityMatrix2 rho(0.3, 0.7, Cplx(0.2, -0.4) * 0.5);
    CHECK(rho.rho21() == std::conj(rho.rho12()));
}

TEST_CASE("eigenvalues of random valid states lie in [-1e-10, 1+1e-10]") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        // random Bloch vector inside the unit ball, biased toward the surface
        const double r = std::cbrt(u(rng));
        const double z = 2.0 * u(rng) - 1.0;
        const double phi = 6.283185307179586 * u(rng);
        const double s = std::sqrt(1.0 - z * z);
        const auto rho = density_from_bloch(r * s * std::cos(phi), r * s * std::sin(phi), r * z);
        const auto ev = rho.eigenvalues();
        CHECK(ev[0] >= -1e-10);
        CHECK(ev[0] <= 1.0 + 1e-10);
        CHECK(ev[1] >= -1e-10);
        CHECK(ev[1] <= 1.0 + 1e-10);
        CHECK(ev[0] >= ev[1]);
    }
}
