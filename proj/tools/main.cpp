#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mzi/errors.hpp"
#include "sweep.hpp"

namespace {

template <typename T>
void apply_opt(const std::optional<T>& v, T& field) {
    if (v) field = *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mzi-decohere: thermal-decoherence sweeps for a two-level system in a "
        "lossy two-arm interferometer (CSV to stdout or --out)"};
    app.get_formatter()->column_width(34);

    std::string mode_str;
    app.add_option("mode", mode_str, "fig1 | fig2 | evolve | rate-check")->required();

    std::optional<double> alpha, theta_min, theta_max, y_min, y_max, gamma, theta, dt, t_final;
    std::optional<int> theta_steps, y_steps;
    std::optional<std::string> init_state;
    bool log_theta = false, with_analytic = false;
    std::string out_path;

    app.add_option("--alpha", alpha, "detector coupling alpha (default 1)");
    app.add_option("--theta-min", theta_min, "lower end of the reduced-temperature grid");
    app.add_option("--theta-max", theta_max, "upper end of the reduced-temperature grid");
    app.add_option("--theta-steps", theta_steps, "number of temperature grid points (>= 2)");
    app.add_option("--y-min", y_min, "fig2: lower end of the (T2-T1)/T1 grid");
    app.add_option("--y-max", y_max, "fig2: upper end of the (T2-T1)/T1 grid");
    app.add_option("--y-steps", y_steps, "fig2: number of y grid points (>= 2)");
    app.add_option("--gamma", gamma, "spontaneous decay rate in units of omega_a");
    app.add_option("--theta", theta, "evolve: bath reduced temperature");
    app.add_option("--dt", dt, "evolve: integrator step (units 1/omega_a)");
    app.add_option("--t-final", t_final, "evolve: integration window (units 1/omega_a)");
    app.add_option("--init", init_state, "evolve: excited|ground|plus|steady");
    app.add_flag("--log-theta", log_theta, "log-spaced temperature grid (theta-min > 0)");
    app.add_flag("--with-analytic", with_analytic, "evolve: append closed-form solution columns");
    app.add_option("--out", out_path, "write CSV here instead of stdout");
    app.set_config("--config", "", "flat 'key = value' file; flags take precedence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    }

    try {
        const mzi::cli::Mode mode = mzi::cli::parse_mode(mode_str);
        mzi::cli::SweepSpec spec = mzi::cli::default_spec(mode);
        apply_opt(alpha, spec.alpha);
        apply_opt(theta_min, spec.theta_min);
        apply_opt(theta_max, spec.theta_max);
        apply_opt(theta_steps, spec.theta_steps);
        apply_opt(y_min, spec.y_min);
        apply_opt(y_max, spec.y_max);
        apply_opt(y_steps, spec.y_steps);
        apply_opt(gamma, spec.gamma);
        apply_opt(theta, spec.theta);
        apply_opt(dt, spec.dt);
        apply_opt(t_final, spec.t_final);
        apply_opt(init_state, spec.init_state);
        spec.log_theta = log_theta;
        spec.with_analytic = with_analytic;

        std::ofstream file;
        std::ostream* csv = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) throw mzi::ConfigError("cannot open output file '" + out_path + "'");
            csv = &file;
        }

        mzi::cli::run_sweep(spec, *csv, std::cerr);
        csv->flush();
        if (!csv->good()) throw std::runtime_error("write failure on CSV output");
        return 0;
    } catch (const mzi::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return 3;
    }
}
