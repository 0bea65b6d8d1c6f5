#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "mzi/errors.hpp"

namespace mzi {

using Cplx = std::complex<double>;

inline bool is_finite(Cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense 2x2 complex matrix, row-major. Basis order is (|2>, |1>) with |2>
/// the excited state, so entry (0,0) is the excited-state population of a
/// density matrix. Entries are checked finite on construction.
class Matrix2 {
  public:
    Matrix2() : e_{} {}

    Matrix2(Cplx a00, Cplx a01, Cplx a10, Cplx a11) : e_{a00, a01, a10, a11} {
        for (const Cplx& z : e_) {
            if (!is_finite(z)) throw InvariantViolation("Matrix2: non-finite entry");
        }
    }

    Cplx at(int row, int col) const { return e_[2 * row + col]; }

    Cplx trace() const { return e_[0] + e_[3]; }

    Matrix2 adjoint() const {
        return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
    }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]};
    }

    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
        return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]};
    }

    friend Matrix2 operator*(const Matrix2& a, Cplx s) {
        return {a.e_[0] * s, a.e_[1] * s, a.e_[2] * s, a.e_[3] * s};
    }

    friend Matrix2 operator*(Cplx s, const Matrix2& a) { return a * s; }

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
                a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
    }

  private:
    std::array<Cplx, 4> e_;
};

inline Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) { return a * b; }

/// a*b - b*a
inline Matrix2 commutator(const Matrix2& a, const Matrix2& b) { return a * b - b * a; }

inline const Matrix2& identity2() {
    static const Matrix2 m{1.0, 0.0, 0.0, 1.0};
    return m;
}

inline const Matrix2& sigma_x() {
    static const Matrix2 m{0.0, 1.0, 1.0, 0.0};
    return m;
}

inline const Matrix2& sigma_y() {
    static const Matrix2 m{0.0, Cplx(0.0, -1.0), Cplx(0.0, 1.0), 0.0};
    return m;
}

inline const Matrix2& sigma_z() {
    static const Matrix2 m{1.0, 0.0, 0.0, -1.0};
    return m;
}

/// Raising operator |2><1|.
inline const Matrix2& sigma_plus() {
    static const Matrix2 m{0.0, 1.0, 0.0, 0.0};
    return m;
}

/// Lowering operator |1><2|.
inline const Matrix2& sigma_minus() {
    static const Matrix2 m{0.0, 0.0, 1.0, 0.0};
    return m;
}

}  // namespace mzi
