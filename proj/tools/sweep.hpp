#pragma once

#include <iosfwd>
#include <string>

namespace mzi::cli {

enum class Mode { kFig1, kFig2, kEvolve, kRateCheck };

/// fig1 | fig2 | evolve | rate-check. Throws ConfigError on anything else.
Mode parse_mode(const std::string& name);

/// One sweep invocation. Fields not meaningful for a mode are ignored by it.
struct SweepSpec {
    Mode mode = Mode::kFig1;
    double alpha = 1.0;

    // temperature axis (fig1, fig2, rate-check)
    double theta_min = 0.0;
    double theta_max = 10.0;
    int theta_steps = 200;
    bool log_theta = false;

    // relative temperature-difference axis (fig2)
    double y_min = -0.5;
    double y_max = 0.5;
    int y_steps = 50;

    // master-equation parameters (evolve, rate-check)
    double gamma = 0.01;
    double theta = 0.0;

    // integration window (evolve)
    double dt = 1e-3;
    double t_final = 10.0;
    bool with_analytic = false;
    std::string init_state = "excited";  // excited|ground|plus|steady
};

/// Built-in defaults for a mode; command line and config file override these.
SweepSpec default_spec(Mode mode);

/// Throws ConfigError when the spec is not runnable.
void validate(const SweepSpec& spec);

/// Lossless decimal rendering (17 significant digits) used for every CSV cell.
std::string format_value(double v);

void run_fig1(const SweepSpec& spec, std::ostream& csv, std::ostream& diag);
void run_fig2(const SweepSpec& spec, std::ostream& csv, std::ostream& diag);
void run_evolve(const SweepSpec& spec, std::ostream& csv, std::ostream& diag);
void run_rate_check(const SweepSpec& spec, std::ostream& csv, std::ostream& diag);

/// Validates and dispatches to the mode runner.
void run_sweep(const SweepSpec& spec, std::ostream& csv, std::ostream& diag);

}  // namespace mzi::cli
