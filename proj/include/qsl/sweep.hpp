// Sweep and validation drivers behind the CLI: figure presets, deterministic
// CSV emission, and the analytic-vs-RK4 adjudication report.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsl/engine.hpp"
#include "qsl/model.hpp"
#include "qsl/propagator.hpp"
#include "qsl/qslt.hpp"

namespace qsl {

// Shortest decimal that round-trips to the same double ("0.1", "1", ...).
std::string format_double(double v);

// Accepts decimal radians plus the literal forms used in figure captions:
// "pi", "pi/4", "-pi/2", "3pi/4", ...
double parse_angle(const std::string& token);

struct SweepConfig {
    ModelParams params;  // lambda_fb is ignored here; the sweep substitutes
                         // each value from lambda_values
    std::vector<double> lambda_values{0.0, 0.1, 0.3, 0.5};
    double tau_start = 0.0;
    double tau_end = 5.0;
    int tau_steps = 201;
    double tau_d = 1.0;
    int n_quad = 2000;
    Engine engine = Engine::analytic;
    CoeffMode coeff_mode = CoeffMode::oracle_validated;
    double oracle_dt = 1e-4;
    std::string output_path;
    std::optional<std::string> preset;  // set when built by resolve_preset

    void validate() const;  // throws DomainError
};

// fig1 -> alpha = 0, fig2 -> alpha = pi/4, fig3 -> alpha = pi/2; all with
// omega = 10, gamma = 0.1, theta = pi/4, chi = 0 and the default sweep grid
// above. Throws UnknownPreset otherwise.
SweepConfig resolve_preset(const std::string& name);

// Emits the CSV: '#'-prefixed header lines recording every config field,
// one column-name row, then one row per (lambda ascending, tau ascending)
// pair. Output is deterministic for a fixed config. Numerical failures are
// rethrown with the offending (lambda, tau) in the message.
void run_sweep(const SweepConfig& cfg, std::ostream& out);

// Same, writing to cfg.output_path; throws IoError on failure.
void run_sweep_to_file(const SweepConfig& cfg);

struct ValidateConfig {
    double omega = 10.0;
    double gamma = 0.1;
    double theta = 0.0;
    double chi = 0.0;
    std::vector<double> alphas;   // default {0, pi/4, pi/2}
    std::vector<double> lambdas{0.0, 0.1, 0.3, 0.5};
    double t_end = 5.0;
    int samples = 51;
    double dt = 1e-4;
    double tol = 1e-6;

    ValidateConfig();
    void validate() const;
};

struct ValidatePoint {
    double alpha = 0.0;
    double lambda = 0.0;
    double dev_validated = 0.0;      // max entrywise |analytic - rk4|, corrected mode
    double dev_literal = 0.0;        // same for the literal coefficients
    double pop_dev_validated = 0.0;  // diagonal entries only
    double pop_dev_literal = 0.0;
};

struct ValidateReport {
    std::vector<ValidatePoint> points;
    double max_dev_validated = 0.0;
    double max_dev_literal = 0.0;
    double tol = 1e-6;
    bool pass = false;  // true iff max_dev_validated < tol
};

// Compares both coefficient modes against the RK4 trajectory on the grid.
ValidateReport run_validate(const ValidateConfig& cfg);
void print_report(const ValidateReport& report, std::ostream& out);

// Trajectory dump used by the CLI: rho(t) at `samples` uniform times in
// [0, t_end] from the chosen engine, as CSV.
struct TrajectoryConfig {
    ModelParams params;
    double t_end = 5.0;
    int samples = 501;
    Engine engine = Engine::analytic;
    CoeffMode coeff_mode = CoeffMode::oracle_validated;
    double oracle_dt = 1e-4;
    std::string output_path;

    void validate() const;
};

void run_trajectory(const TrajectoryConfig& cfg, std::ostream& out);
void run_trajectory_to_file(const TrajectoryConfig& cfg);

}  // namespace qsl
