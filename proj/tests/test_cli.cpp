#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mzi/errors.hpp"
#include "sweep.hpp"

using namespace mzi;
using namespace mzi::cli;

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (line.ends_with(',')) fields.emplace_back();
        if (first) {
            csv.header = fields;
            first = false;
        } else {
            csv.rows.push_back(fields);
        }
    }
    return csv;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

std::string run_to_string(const SweepSpec& spec) {
    std::ostringstream csv, diag;
    run_sweep(spec, csv, diag);
    return csv.str();
}

int run_binary(const std::string& args, const std::string& out_file) {
    const std::string cmd = std::string(MZI_CLI_BIN) + " " + args + " >" + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("mode names parse; unknown names are config errors") {
    CHECK(parse_mode("fig1") == Mode::kFig1);
    CHECK(parse_mode("fig2") == Mode::kFig2);
    CHECK(parse_mode("evolve") == Mode::kEvolve);
    CHECK(parse_mode("rate-check") == Mode::kRateCheck);
    CHECK_THROWS_AS(parse_mode("fig3"), ConfigError);
}

TEST_CASE("spec validation rejects bad grids and parameters") {
    SweepSpec spec = default_spec(Mode::kFig1);
    spec.theta_steps = 1;
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kFig1);
    spec.theta_min = 2.0;
    spec.theta_max = 1.0;
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kFig1);
    spec.log_theta = true;  // theta_min defaults to 0
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kFig2);
    spec.y_min = 0.5;
    spec.y_max = -0.5;
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kEvolve);
    spec.gamma = 0.0;
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kEvolve);
    spec.init_state = "sideways";
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kEvolve);
    spec.dt = 2.0;
    spec.t_final = 1.0;
    CHECK_THROWS_AS(validate(spec), ConfigError);

    spec = default_spec(Mode::kRateCheck);
    spec.alpha = -1.0;
    CHECK_THROWS_AS(validate(spec), ConfigError);
}

TEST_CASE("format_value round-trips doubles losslessly") {
    for (double v : {0.0, 1.0, 1.0 / 3.0, 0.76159415595576489, 3.720075976020836e-44,
                     99.500833331944448, 1e-300, -2.5e17}) {
        CHECK(std::strtod(format_value(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("fig1: header, edge rows, monotone column") {
    const Csv csv = parse_csv(run_to_string(default_spec(Mode::kFig1)));
    REQUIRE(csv.header == std::vector<std::string>{"theta", "P"});
    REQUIRE(csv.rows.size() == 200);

    CHECK(num(csv.rows.front()[0]) == 0.0);
    CHECK(num(csv.rows.front()[1]) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
    CHECK(num(csv.rows.back()[0]) == 10.0);
    CHECK(num(csv.rows.back()[1]) > 0.999);

    double prev = -1.0;
    for (const auto& row : csv.rows) {
        const double p = num(row[1]);
        CHECK(p >= prev);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        prev = p;
    }
}

TEST_CASE("fig1: theta = 1 row carries the frozen thermal value") {
    SweepSpec spec = default_spec(Mode::kFig1);
    spec.theta_min = 1.0;
    spec.theta_max = 2.0;
    spec.theta_steps = 2;
    const Csv csv = parse_csv(run_to_string(spec));
    // tanh(coth(1/2)) at 50 digits
    CHECK(num(csv.rows.front()[1]) == doctest::Approx(0.97395341172511245827).epsilon(1e-12));
}

TEST_CASE("fig1: log grid hits both endpoints") {
    SweepSpec spec = default_spec(Mode::kFig1);
    spec.theta_min = 1e-3;
    spec.theta_max = 10.0;
    spec.theta_steps = 7;
    spec.log_theta = true;
    const Csv csv = parse_csv(run_to_string(spec));
    REQUIRE(csv.rows.size() == 7);
    CHECK(num(csv.rows.front()[0]) == 1e-3);
    CHECK(num(csv.rows.back()[0]) == 10.0);
    for (std::size_t i = 1; i < csv.rows.size(); ++i) {
        CHECK(num(csv.rows[i][0]) > num(csv.rows[i - 1][0]));
    }
}

TEST_CASE("fig2: default grid shape and null line") {
    const Csv csv = parse_csv(run_to_string(default_spec(Mode::kFig2)));
    REQUIRE(csv.header == std::vector<std::string>{"theta1", "y", "P_full", "P_approx"});
    REQUIRE(csv.rows.size() == 2500);

    std::size_t empty_approx = 0;
    for (const auto& row : csv.rows) {
        REQUIRE(row.size() == 4);
        const double p_full = num(row[2]);
        CHECK(p_full >= 0.0);
        CHECK(p_full <= 1.0);
        if (row[3].empty()) ++empty_approx;
    }
    // y = +-0.5 rows always fall outside the expansion's validity, and the
    // hot-side breakdown region contributes more
    CHECK(empty_approx >= 2 * 50);
}

TEST_CASE("fig2: y = 0 rows are exactly zero in both columns") {
    SweepSpec spec = default_spec(Mode::kFig2);
    spec.y_steps = 5;  // grid {-0.5, -0.25, 0, 0.25, 0.5}
    const Csv csv = parse_csv(run_to_string(spec));
    std::size_t zero_rows = 0;
    for (const auto& row : csv.rows) {
        if (num(row[1]) == 0.0) {
            ++zero_rows;
            CHECK(num(row[2]) == 0.0);
            REQUIRE_FALSE(row[3].empty());
            CHECK(num(row[3]) == 0.0);
        }
    }
    CHECK(zero_rows == 50);
}

TEST_CASE("fig2: cold corner is suppressed, expansion agrees at small y") {
    SweepSpec spec = default_spec(Mode::kFig2);
    spec.y_min = -0.01;
    spec.y_max = 0.01;
    spec.y_steps = 5;
    const Csv csv = parse_csv(run_to_string(spec));
    for (const auto& row : csv.rows) {
        const double theta1 = num(row[0]);
        const double p_full = num(row[2]);
        if (theta1 <= 0.05) {
            CHECK(p_full < 1e-6);
            if (!row[3].empty()) CHECK(num(row[3]) < 1e-6);
        }
        REQUIRE_FALSE(row[3].empty());  // |y| <= 0.01 is deep inside validity
        CHECK(std::abs(p_full - num(row[3])) < 1e-3);
    }
}

TEST_CASE("evolve: excited state decays against the analytic columns") {
    SweepSpec spec = default_spec(Mode::kEvolve);
    spec.gamma = 0.05;
    spec.t_final = 40.0;
    spec.with_analytic = true;
    const Csv csv = parse_csv(run_to_string(spec));
    REQUIRE(csv.header.size() == 11);
    for (const auto& row : csv.rows) {
        const double t = num(row[0]);
        const double rho22 = num(row[2]);
        CHECK(std::abs(rho22 - std::exp(-spec.gamma * t)) < 1e-8);
        CHECK(std::abs(rho22 - num(row[8])) < 1e-7);  // numeric vs analytic column
        CHECK(num(row[5]) < 1e-9);                    // trace_err
        CHECK(num(row[5]) >= 0.0);
        CHECK(num(row[6]) >= -1e-10);                 // det
    }
    CHECK(num(csv.rows.back()[0]) == doctest::Approx(40.0).epsilon(1e-12));
}

TEST_CASE("evolve: steady start stays constant") {
    SweepSpec spec = default_spec(Mode::kEvolve);
    spec.theta = 1.0;
    spec.gamma = 0.05;
    spec.t_final = 50.0;
    spec.init_state = "steady";
    const Csv csv = parse_csv(run_to_string(spec));
    const double rho22_0 = num(csv.rows.front()[2]);
    for (const auto& row : csv.rows) {
        CHECK(std::abs(num(row[2]) - rho22_0) < 1e-10);
        CHECK(std::abs(num(row[3])) < 1e-15);  // no coherence appears
    }
}

TEST_CASE("rate-check: zero-temperature row and coth identity") {
    const SweepSpec spec = default_spec(Mode::kRateCheck);
    const Csv csv = parse_csv(run_to_string(spec));
    REQUIRE(csv.header ==
            std::vector<std::string>{"gamma", "n_bar", "gamma_dec_analytic", "gamma_dec_fitted",
                                     "rel_err"});
    REQUIRE(csv.rows.size() == 6);

    CHECK(num(csv.rows.front()[1]) == 0.0);
    CHECK(num(csv.rows.front()[2]) == spec.gamma / 2.0);

    // default grid is theta = 0, 2, 4, 6, 8, 10
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        const double theta = 2.0 * static_cast<double>(i);
        const double ratio = num(csv.rows[i][2]) / (spec.gamma / 2.0);
        const double coth = theta == 0.0 ? 1.0 : 1.0 / std::tanh(1.0 / (2.0 * theta));
        CHECK(std::abs(ratio - coth) < 1e-12 * coth);
        CHECK(num(csv.rows[i][4]) < 1e-3);  // rel_err column
    }
}

TEST_CASE("library-level determinism: identical specs give identical bytes") {
    for (Mode mode : {Mode::kFig1, Mode::kFig2, Mode::kRateCheck}) {
        SweepSpec spec = default_spec(mode);
        spec.theta_steps = 20;
        if (mode == Mode::kFig2) spec.y_steps = 10;
        CHECK(run_to_string(spec) == run_to_string(spec));
    }
}

TEST_CASE("binary: exit codes and machine-readable errors") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "mzi_cli_test").string();
    fs::create_directories(dir);

    CHECK(run_binary("fig1 --theta-steps 16", dir + "/a.csv") == 0);

    CHECK(run_binary("warp", dir + "/b.csv") == 2);
    CHECK(run_binary("fig1 --theta-steps 1", dir + "/c.csv") == 2);
    CHECK(run_binary("fig1 --log-theta", dir + "/d.csv") == 2);  // theta-min defaults to 0
    CHECK(run_binary("evolve --gamma -1", dir + "/e.csv") == 2);

    // a wildly oversized step destabilizes RK4 until positivity breaks:
    // numerical failure, not a config error
    CHECK(run_binary("evolve --init plus --dt 3 --t-final 30", dir + "/f.csv") == 3);

    const std::string cmd = std::string(MZI_CLI_BIN) + " fig1 --theta-steps 1 2>" + dir + "/err.txt";
    if (std::system(cmd.c_str()) == -1) FAIL("system() failed");
    const std::string err = slurp(dir + "/err.txt");
    CHECK(err.starts_with("error: config:"));
    CHECK(err.find('\n') == err.size() - 1);  // exactly one line
}

TEST_CASE("binary: config file keys apply, flags take precedence") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "mzi_cli_test").string();
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir + "/sweep.cfg");
        cfg << "# fig1 sweep settings\n";
        cfg << "alpha = 2\n";
        cfg << "theta-steps = 4\n";
        cfg << "theta-max = 1\n";
    }

    REQUIRE(run_binary("fig1 --config " + dir + "/sweep.cfg", dir + "/cfg.csv") == 0);
    const Csv from_cfg = parse_csv(slurp(dir + "/cfg.csv"));
    REQUIRE(from_cfg.rows.size() == 4);
    CHECK(num(from_cfg.rows.front()[1]) == doctest::Approx(std::tanh(2.0)).epsilon(1e-15));
    CHECK(num(from_cfg.rows.back()[0]) == 1.0);

    // command line wins over the file
    REQUIRE(run_binary("fig1 --config " + dir + "/sweep.cfg --alpha 1 --theta-steps 3",
                       dir + "/mix.csv") == 0);
    const Csv mixed = parse_csv(slurp(dir + "/mix.csv"));
    REQUIRE(mixed.rows.size() == 3);
    CHECK(num(mixed.rows.front()[1]) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
}

TEST_CASE("binary: --out writes the same bytes as stdout") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "mzi_cli_test").string();
    fs::create_directories(dir);

    REQUIRE(run_binary("fig1 --theta-steps 25", dir + "/stdout.csv") == 0);
    const std::string via_out_cmd = std::string(MZI_CLI_BIN) + " fig1 --theta-steps 25 --out " +
                                    dir + "/direct.csv >/dev/null 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(via_out_cmd.c_str())) == 0);
    CHECK(slurp(dir + "/stdout.csv") == slurp(dir + "/direct.csv"));
}
