#include "sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "mzi/bath.hpp"
#include "mzi/density.hpp"
#include "mzi/errors.hpp"
#include "mzi/interferometer.hpp"
#include "mzi/lindblad.hpp"

namespace mzi::cli {

namespace {

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> theta_grid(const SweepSpec& spec) {
    return spec.log_theta ? log_grid(spec.theta_min, spec.theta_max, spec.theta_steps)
                          : linear_grid(spec.theta_min, spec.theta_max, spec.theta_steps);
}

DensityMatrix2 initial_state(const std::string& name, const BathParams& bath) {
    if (name == "excited") return density_from_bloch(0.0, 0.0, 1.0);
    if (name == "ground") return density_from_bloch(0.0, 0.0, -1.0);
    if (name == "plus") return density_from_bloch(1.0, 0.0, 0.0);
    if (name == "steady") {
        const double n = bath.n_bar();
        return density_from_bloch(0.0, 0.0, -1.0 / (2.0 * n + 1.0));
    }
    throw ConfigError("unknown initial state '" + name + "'");
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

}  // namespace

Mode parse_mode(const std::string& name) {
    if (name == "fig1") return Mode::kFig1;
    if (name == "fig2") return Mode::kFig2;
    if (name == "evolve") return Mode::kEvolve;
    if (name == "rate-check") return Mode::kRateCheck;
    throw ConfigError("unknown mode '" + name + "' (expected fig1|fig2|evolve|rate-check)");
}

SweepSpec default_spec(Mode mode) {
    SweepSpec spec;
    spec.mode = mode;
    switch (mode) {
        case Mode::kFig1:
            spec.theta_min = 0.0;
            spec.theta_max = 10.0;
            spec.theta_steps = 200;
            break;
        case Mode::kFig2:
            spec.theta_min = 0.04;
            spec.theta_max = 2.0;
            spec.theta_steps = 50;
            spec.y_min = -0.5;
            spec.y_max = 0.5;
            spec.y_steps = 50;
            break;
        case Mode::kEvolve:
            spec.gamma = 0.01;
            spec.theta = 0.0;
            spec.dt = 1e-3;
            spec.t_final = 10.0;
            break;
        case Mode::kRateCheck:
            spec.gamma = 0.01;
            spec.theta_min = 0.0;
            spec.theta_max = 10.0;
            spec.theta_steps = 6;
            break;
    }
    return spec;
}

void validate(const SweepSpec& spec) {
    require(std::isfinite(spec.alpha) && spec.alpha >= 0.0, "alpha must be >= 0");
    switch (spec.mode) {
        case Mode::kFig1:
        case Mode::kFig2:
        case Mode::kRateCheck:
            require(std::isfinite(spec.theta_min) && std::isfinite(spec.theta_max),
                    "theta range must be finite");
            require(spec.theta_min < spec.theta_max, "need theta-min < theta-max");
            require(spec.theta_min >= 0.0, "theta-min must be >= 0");
            require(spec.theta_steps >= 2, "theta-steps must be >= 2");
            if (spec.log_theta) require(spec.theta_min > 0.0, "log-theta needs theta-min > 0");
            break;
        case Mode::kEvolve:
            break;
    }
    if (spec.mode == Mode::kFig2) {
        require(std::isfinite(spec.y_min) && std::isfinite(spec.y_max), "y range must be finite");
        require(spec.y_min < spec.y_max, "need y-min < y-max");
        require(spec.y_steps >= 2, "y-steps must be >= 2");
    }
    if (spec.mode == Mode::kEvolve || spec.mode == Mode::kRateCheck) {
        require(std::isfinite(spec.gamma) && spec.gamma > 0.0, "gamma must be > 0");
    }
    if (spec.mode == Mode::kEvolve) {
        require(std::isfinite(spec.theta) && spec.theta >= 0.0, "theta must be >= 0");
        require(std::isfinite(spec.dt) && spec.dt > 0.0, "dt must be > 0");
        require(std::isfinite(spec.t_final) && spec.t_final > 0.0, "t-final must be > 0");
        require(spec.dt <= spec.t_final, "need dt <= t-final");
        initial_state(spec.init_state, BathParams(0.0, 1.0));  // name check only
    }
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void run_fig1(const SweepSpec& spec, std::ostream& csv, std::ostream&) {
    const AlphaParams alpha(spec.alpha);
    csv << "theta,P\n";
    for (double theta : theta_grid(spec)) {
        csv << format_value(theta) << ',' << format_value(predictability_thermal(alpha, theta))
            << '\n';
    }
}

void run_fig2(const SweepSpec& spec, std::ostream& csv, std::ostream& diag) {
    const AlphaParams alpha(spec.alpha);
    const auto thetas = theta_grid(spec);
    const auto ys = linear_grid(spec.y_min, spec.y_max, spec.y_steps);

    std::size_t breakdown_rows = 0;
    csv << "theta1,y,P_full,P_approx\n";
    for (double theta1 : thetas) {
        for (double y : ys) {
            const double p_full = predictability_eraser(alpha, theta1, theta1 * (1.0 + y));
            csv << format_value(theta1) << ',' << format_value(y) << ',' << format_value(p_full)
                << ',';
            try {
                csv << format_value(predictability_near_equilibrium(alpha, theta1, y));
            } catch (const DomainError&) {
                ++breakdown_rows;  // expansion not applicable; empty sentinel
            }
            csv << '\n';
        }
    }
    if (breakdown_rows > 0) {
        diag << "note: P_approx left empty on " << breakdown_rows
             << " rows (near-equilibrium expansion not applicable)\n";
    }
}

void run_evolve(const SweepSpec& spec, std::ostream& csv, std::ostream& diag) {
    const BathParams bath(spec.theta, spec.gamma);
    if (bath.weak_coupling_warning()) {
        diag << "warning: gamma = " << spec.gamma
             << " is above 0.1*omega_a; weak-coupling master equation is marginal\n";
    }
    if (spec.dt > recommended_dt(bath)) {
        diag << "warning: dt = " << spec.dt << " exceeds recommended bound "
             << recommended_dt(bath) << "\n";
    }

    const DensityMatrix2 rho0 = initial_state(spec.init_state, bath);
    const EvolutionResult result = integrate(rho0, bath, spec.t_final, spec.dt);

    csv << "t,rho11,rho22,re_rho12,im_rho12,trace_err,det";
    if (spec.with_analytic) csv << ",rho11_analytic,rho22_analytic,re_rho12_analytic,im_rho12_analytic";
    csv << '\n';

    for (std::size_t i = 0; i < result.times.size(); ++i) {
        const DensityMatrix2& s = result.states[i];
        csv << format_value(result.times[i]) << ',' << format_value(s.rho11()) << ','
            << format_value(s.rho22()) << ',' << format_value(s.rho12().real()) << ','
            << format_value(s.rho12().imag()) << ',' << format_value(s.trace_error()) << ','
            << format_value(s.determinant());
        if (spec.with_analytic) {
            const DensityMatrix2 a = analytic_solution(rho0, bath, result.times[i]);
            csv << ',' << format_value(a.rho11()) << ',' << format_value(a.rho22()) << ','
                << format_value(a.rho12().real()) << ',' << format_value(a.rho12().imag());
        }
        csv << '\n';
    }
}

void run_rate_check(const SweepSpec& spec, std::ostream& csv, std::ostream&) {
    csv << "gamma,n_bar,gamma_dec_analytic,gamma_dec_fitted,rel_err\n";
    for (double theta : theta_grid(spec)) {
        const BathParams bath(theta, spec.gamma);
        const double n = bath.n_bar();
        const double rate_analytic = decoherence_rate(spec.gamma, n);

        // Two decay times of the coherence, resolved well below the fastest rate.
        const double t_final = 2.0 / rate_analytic;
        const double dt = 1e-3 / max_rate(bath);
        const auto steps = static_cast<std::size_t>(t_final / dt);
        const std::size_t stride = steps < 200 ? 1 : steps / 200;

        const DensityMatrix2 rho0 = density_from_bloch(1.0, 0.0, 0.0);
        const EvolutionResult trajectory = integrate(rho0, bath, t_final, dt, stride);
        const double rate_fitted = fit_decoherence_rate(trajectory);
        const double rel_err = std::abs(rate_fitted - rate_analytic) / rate_analytic;

        csv << format_value(spec.gamma) << ',' << format_value(n) << ','
            << format_value(rate_analytic) << ',' << format_value(rate_fitted) << ','
            << format_value(rel_err) << '\n';
    }
}

void run_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& diag) {
    validate(spec);
    switch (spec.mode) {
        case Mode::kFig1: run_fig1(spec, csv, diag); break;
        case Mode::kFig2: run_fig2(spec, csv, diag); break;
        case Mode::kEvolve: run_evolve(spec, csv, diag); break;
        case Mode::kRateCheck: run_rate_check(spec, csv, diag); break;
    }
}

}  // namespace mzi::cli
