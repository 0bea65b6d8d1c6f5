#include "mzi/lindblad.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mzi/matrix2.hpp"

namespace mzi {

namespace {

// Master-equation generator applied to an arbitrary Hermitian matrix given by
// raw components (no state validation). Linear in the input; lindblad_rhs and
// the integrator's cached generator both route through here so the operator
// algebra is written in exactly one place.
DensityRates rhs_components(double r11, double r22, Cplx r12, const BathParams& bath) {
    const Matrix2 rho{r22, std::conj(r12), r12, r11};
    const double n = bath.n_bar();
    const double g = bath.gamma;

    const Matrix2& sp = sigma_plus();
    const Matrix2& sm = sigma_minus();
    const Matrix2 spm = sp * sm;  // |2><2|
    const Matrix2 smp = sm * sp;  // |1><1|

    const Matrix2 coherent = Cplx(0.0, -0.5 * bath.omega_a) * commutator(sigma_z(), rho);
    const Matrix2 emission =
        Cplx(0.5 * g * (n + 1.0)) * (Cplx(2.0) * (sm * rho * sp) - spm * rho - rho * spm);
    const Matrix2 absorption =
        Cplx(0.5 * g * n) * (Cplx(2.0) * (sp * rho * sm) - smp * rho - rho * smp);

    const Matrix2 d = coherent + emission + absorption;
    return {d.at(1, 1).real(), d.at(0, 0).real(), d.at(1, 0)};
}

// Real 4x4 generator acting on (rho11, rho22, Re rho12, Im rho12), built
// column-by-column from the operator-algebra right-hand side.
struct Generator {
    std::array<std::array<double, 4>, 4> g;

    explicit Generator(const BathParams& bath) {
        const std::array<std::array<double, 3>, 4> basis{{
            {1.0, 0.0, 0.0},  // rho11 direction
            {0.0, 1.0, 0.0},  // rho22 direction
            {0.0, 0.0, 1.0},  // Re rho12 direction (third slot doubles below)
            {0.0, 0.0, 0.0},  // Im rho12 direction, set explicitly
        }};
        for (int col = 0; col < 4; ++col) {
            const Cplx r12 = (col == 3) ? Cplx(0.0, 1.0) : Cplx(basis[col][2], 0.0);
            const DensityRates d = rhs_components(basis[col][0], basis[col][1], r12, bath);
            g[0][col] = d.d_rho11;
            g[1][col] = d.d_rho22;
            g[2][col] = d.d_rho12.real();
            g[3][col] = d.d_rho12.imag();
        }
    }

    std::array<double, 4> apply(const std::array<double, 4>& y) const {
        std::array<double, 4> out;
        for (int i = 0; i < 4; ++i) {
            out[i] = g[i][0] * y[0] + g[i][1] * y[1] + g[i][2] * y[2] + g[i][3] * y[3];
        }
        return out;
    }
};

std::array<double, 4> rk4_step(const Generator& gen, const std::array<double, 4>& y, double h) {
    const auto k1 = gen.apply(y);
    std::array<double, 4> tmp;
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    const auto k2 = gen.apply(tmp);
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    const auto k3 = gen.apply(tmp);
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h * k3[i];
    const auto k4 = gen.apply(tmp);
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i) {
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

DensityMatrix2 state_from_components(const std::array<double, 4>& y) {
    return {y[0], y[1], Cplx(y[2], y[3])};
}

}  // namespace

DensityRates lindblad_rhs(const DensityMatrix2& rho, const BathParams& bath) {
    return rhs_components(rho.rho11(), rho.rho22(), rho.rho12(), bath);
}

double max_rate(const BathParams& bath) {
    return std::max(bath.omega_a, bath.gamma * (2.0 * bath.n_bar() + 1.0));
}

double recommended_dt(const BathParams& bath) { return 0.01 / max_rate(bath); }

EvolutionResult integrate(const DensityMatrix2& rho0, const BathParams& bath, double t_final,
                          double dt, std::size_t store_stride) {
    if (!(dt > 0.0)) throw StepSizeError("integrate: dt must be > 0");
    if (!(t_final > 0.0) || dt > t_final) {
        throw StepSizeError("integrate: need 0 < dt <= t_final");
    }
    if (store_stride == 0) store_stride = 1;

    const Generator gen(bath);

    EvolutionResult result;
    std::array<double, 4> y{rho0.rho11(), rho0.rho22(), rho0.rho12().real(), rho0.rho12().imag()};
    double t = 0.0;
    result.times.push_back(t);
    result.states.push_back(rho0);

    const double t_end = t_final * (1.0 - 1e-14);
    std::size_t step = 0;
    while (t < t_end) {
        const double h = std::min(dt, t_final - t);
        y = rk4_step(gen, y, h);
        t += h;
        ++step;
        if (step % store_stride == 0 || t >= t_end) {
            result.times.push_back(t);
            result.states.push_back(state_from_components(y));  // re-validates invariants
        }
    }
    return result;
}

DensityMatrix2 analytic_solution(const DensityMatrix2& rho0, const BathParams& bath, double t) {
    if (t < 0.0 || !std::isfinite(t)) throw DomainError("analytic_solution: t must be >= 0");
    const double n = bath.n_bar();
    const double relax = bath.gamma * (2.0 * n + 1.0);
    const double rho22_inf = n / (2.0 * n + 1.0);

    const double rho22 = rho22_inf + (rho0.rho22() - rho22_inf) * std::exp(-relax * t);
    const Cplx decay = std::exp(-Cplx(0.5 * relax, bath.omega_a) * t);
    const Cplx rho21 = rho0.rho21() * decay;
    return {1.0 - rho22, rho22, std::conj(rho21)};
}

double fit_decoherence_rate(const EvolutionResult& result) {
    // Leading stretch of usable coherence samples.
    std::vector<double> ts, logs;
    ts.reserve(result.times.size());
    logs.reserve(result.times.size());
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        const double c = std::abs(result.states[i].rho12());
        if (c <= 1e-12) break;
        ts.push_back(result.times[i]);
        logs.push_back(std::log(c));
    }
    if (ts.size() < 10) {
        throw FitError("fit_decoherence_rate: fewer than 10 samples with |rho12| > 1e-12");
    }

    const double inv_n = 1.0 / static_cast<double>(ts.size());
    double t_mean = 0.0, l_mean = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        t_mean += ts[i];
        l_mean += logs[i];
    }
    t_mean *= inv_n;
    l_mean *= inv_n;

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        num += (ts[i] - t_mean) * (logs[i] - l_mean);
        den += (ts[i] - t_mean) * (ts[i] - t_mean);
    }
    if (den == 0.0) throw FitError("fit_decoherence_rate: degenerate time axis");
    return -num / den;
}

}  // namespace mzi
