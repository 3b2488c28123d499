#include "qsl/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsl/sweep.hpp"

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;

// Default output location: QSLT_OUTPUT_DIR (when set) joined with a
// per-command file name; an explicit --output is used verbatim.
std::string resolve_output(const std::string& explicit_path,
                           const std::string& default_name) {
    if (!explicit_path.empty()) return explicit_path;
    if (const char* dir = std::getenv("QSLT_OUTPUT_DIR"); dir && *dir)
        return (std::filesystem::path(dir) / default_name).string();
    return default_name;
}

struct AngleFlags {
    std::string alpha, theta, chi;
};

void add_model_flags(CLI::App* cmd, ModelParams& params, AngleFlags& angles) {
    cmd->add_option("--omega", params.omega, "transition frequency (1/time)");
    cmd->add_option("--gamma", params.gamma, "dissipation coefficient (1/time)");
    cmd->add_option("--alpha", angles.alpha,
                    "feedback direction angle in [-pi, pi]; accepts 'pi/4' style tokens");
    cmd->add_option("--theta", angles.theta, "initial-state polar angle in [0, pi/2]");
    cmd->add_option("--chi", angles.chi, "initial-state phase in [0, pi]");
}

void apply_angles(const AngleFlags& angles, ModelParams& params) {
    if (!angles.alpha.empty()) params.alpha = parse_angle(angles.alpha);
    if (!angles.theta.empty()) params.theta = parse_angle(angles.theta);
    if (!angles.chi.empty()) params.chi = parse_angle(angles.chi);
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Two-level-atom homodyne-feedback dynamics and "
                 "quantum-speed-limit-time bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qslt 0.1.0");

    // --- sweep ---------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep", "tau_QSL over a (lambda, tau) grid, written as CSV");
    std::string preset;
    SweepConfig sweep_cfg;
    AngleFlags sweep_angles;
    std::string sweep_engine = "analytic", sweep_mode = "oracle-validated";
    std::string sweep_output;
    sweep->add_option("--preset", preset,
                      "fig1 (alpha=0), fig2 (alpha=pi/4) or fig3 (alpha=pi/2); "
                      "explicit flags override preset values");
    add_model_flags(sweep, sweep_cfg.params, sweep_angles);
    auto* lambda_opt = sweep->add_option("--lambda", sweep_cfg.lambda_values,
                                         "feedback coefficient (repeatable)");
    auto* tau_start_opt = sweep->add_option("--tau-start", sweep_cfg.tau_start,
                                            "first window start time");
    auto* tau_end_opt =
        sweep->add_option("--tau-end", sweep_cfg.tau_end, "last window start time");
    auto* tau_steps_opt =
        sweep->add_option("--tau-steps", sweep_cfg.tau_steps, "tau grid size (>= 2)");
    auto* tau_d_opt =
        sweep->add_option("--tau-d", sweep_cfg.tau_d, "driving time (window length)");
    auto* quad_opt = sweep->add_option("--quad-steps", sweep_cfg.n_quad,
                                       "trapezoid panels per window");
    auto* engine_opt = sweep->add_option("--engine", sweep_engine,
                                         "evolution engine: analytic | oracle");
    auto* mode_opt = sweep->add_option(
        "--coeff-mode", sweep_mode,
        "closed-form coefficients: oracle-validated | paper-literal");
    auto* oracle_dt_opt =
        sweep->add_option("--oracle-dt", sweep_cfg.oracle_dt, "RK4 step of the oracle engine");
    sweep->add_option("--output", sweep_output, "output CSV path");

    // --- point ---------------------------------------------------------
    auto* point = app.add_subcommand("point", "tau_QSL for a single window, as CSV");
    ModelParams point_params;
    AngleFlags point_angles;
    double point_tau = 0.0, point_tau_d = 1.0, point_oracle_dt = 1e-4;
    int point_quad = 2000;
    std::string point_engine = "analytic", point_mode = "oracle-validated";
    std::string point_output;
    point_params.theta = 0.25 * kPi;
    add_model_flags(point, point_params, point_angles);
    point->add_option("--lambda", point_params.lambda_fb, "feedback coefficient");
    point->add_option("--tau", point_tau, "window start time")->required();
    point->add_option("--tau-d", point_tau_d, "driving time");
    point->add_option("--quad-steps", point_quad, "trapezoid panels");
    point->add_option("--engine", point_engine, "analytic | oracle");
    point->add_option("--coeff-mode", point_mode, "oracle-validated | paper-literal");
    point->add_option("--oracle-dt", point_oracle_dt, "RK4 step of the oracle engine");
    point->add_option("--output", point_output, "output CSV path");

    // --- trajectory ----------------------------------------------------
    auto* traj = app.add_subcommand("trajectory",
                                    "density-matrix entries vs time, as CSV");
    TrajectoryConfig traj_cfg;
    AngleFlags traj_angles;
    std::string traj_engine = "analytic", traj_mode = "oracle-validated";
    std::string traj_output;
    traj_cfg.params.theta = 0.25 * kPi;
    add_model_flags(traj, traj_cfg.params, traj_angles);
    traj->add_option("--lambda", traj_cfg.params.lambda_fb, "feedback coefficient");
    traj->add_option("--t-end", traj_cfg.t_end, "final time");
    traj->add_option("--samples", traj_cfg.samples, "number of sample times");
    traj->add_option("--engine", traj_engine, "analytic | oracle");
    traj->add_option("--coeff-mode", traj_mode, "oracle-validated | paper-literal");
    traj->add_option("--oracle-dt", traj_cfg.oracle_dt, "RK4 step of the oracle engine");
    traj->add_option("--output", traj_output, "output CSV path");

    // --- validate ------------------------------------------------------
    auto* validate = app.add_subcommand(
        "validate", "compare both closed-form coefficient modes against RK4");
    ValidateConfig val_cfg;
    std::vector<std::string> val_alphas;
    std::string val_theta, val_chi;
    validate->add_option("--omega", val_cfg.omega, "transition frequency");
    validate->add_option("--gamma", val_cfg.gamma, "dissipation coefficient");
    validate->add_option("--theta", val_theta, "initial-state polar angle");
    validate->add_option("--chi", val_chi, "initial-state phase");
    validate->add_option("--alpha", val_alphas,
                         "feedback angle (repeatable; default 0, pi/4, pi/2)");
    validate->add_option("--lambda", val_cfg.lambdas,
                         "feedback coefficient (repeatable)");
    validate->add_option("--t-end", val_cfg.t_end, "comparison horizon");
    validate->add_option("--samples", val_cfg.samples, "sample times per grid point");
    validate->add_option("--oracle-dt", val_cfg.dt, "RK4 step");
    validate->add_option("--tol", val_cfg.tol,
                         "pass tolerance for the oracle-validated mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sweep->parsed()) {
        SweepConfig cfg;
        if (!preset.empty()) cfg = resolve_preset(preset);
        // explicit flags override preset values
        if (sweep->count("--omega")) cfg.params.omega = sweep_cfg.params.omega;
        if (sweep->count("--gamma")) cfg.params.gamma = sweep_cfg.params.gamma;
        if (sweep->count("--alpha")) cfg.params.alpha = parse_angle(sweep_angles.alpha);
        if (sweep->count("--theta")) cfg.params.theta = parse_angle(sweep_angles.theta);
        if (sweep->count("--chi")) cfg.params.chi = parse_angle(sweep_angles.chi);
        if (lambda_opt->count()) cfg.lambda_values = sweep_cfg.lambda_values;
        if (tau_start_opt->count()) cfg.tau_start = sweep_cfg.tau_start;
        if (tau_end_opt->count()) cfg.tau_end = sweep_cfg.tau_end;
        if (tau_steps_opt->count()) cfg.tau_steps = sweep_cfg.tau_steps;
        if (tau_d_opt->count()) cfg.tau_d = sweep_cfg.tau_d;
        if (quad_opt->count()) cfg.n_quad = sweep_cfg.n_quad;
        if (engine_opt->count()) cfg.engine = engine_from_string(sweep_engine);
        if (mode_opt->count()) cfg.coeff_mode = coeff_mode_from_string(sweep_mode);
        if (oracle_dt_opt->count()) cfg.oracle_dt = sweep_cfg.oracle_dt;
        cfg.output_path = resolve_output(
            sweep_output, (cfg.preset ? *cfg.preset : std::string("sweep")) + ".csv");
        run_sweep_to_file(cfg);
        std::cerr << "wrote " << cfg.lambda_values.size() * cfg.tau_steps
                  << " rows to " << cfg.output_path << '\n';
        return 0;
    }

    if (point->parsed()) {
        apply_angles(point_angles, point_params);
        point_params.validate();
        const Engine engine = engine_from_string(point_engine);
        const CoeffMode mode = coeff_mode_from_string(point_mode);
        const DensityMatrix rho0 = initial_state(point_params.theta, point_params.chi);
        QsltResult q;
        if (engine == Engine::oracle) {
            OracleEngine eng(point_params, rho0, point_oracle_dt);
            q = qslt_open(point_params, point_tau, point_tau_d, point_quad, eng);
        } else {
            AnalyticEngine eng(point_params, rho0, mode);
            q = qslt_open(point_params, point_tau, point_tau_d, point_quad, eng);
        }
        const std::string path = resolve_output(point_output, "point.csv");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + path + "' for writing");
        out << "alpha,lambda,tau,tau_d,rel_purity,ml_denominator,mt_denominator,"
               "bound_ml,bound_mt,tau_qsl\n";
        out << format_double(point_params.alpha) << ','
            << format_double(point_params.lambda_fb) << ',' << format_double(q.tau)
            << ',' << format_double(q.tau_d) << ',' << format_double(q.rel_purity)
            << ',' << format_double(q.ml_denominator) << ','
            << format_double(q.mt_denominator) << ',' << format_double(q.bound_ml)
            << ',' << format_double(q.bound_mt) << ',' << format_double(q.tau_qsl)
            << '\n';
        out.flush();
        if (!out) throw IoError("write to '" + path + "' failed");
        std::cerr << "wrote 1 row to " << path << '\n';
        return 0;
    }

    if (traj->parsed()) {
        apply_angles(traj_angles, traj_cfg.params);
        traj_cfg.engine = engine_from_string(traj_engine);
        traj_cfg.coeff_mode = coeff_mode_from_string(traj_mode);
        traj_cfg.output_path = resolve_output(traj_output, "trajectory.csv");
        run_trajectory_to_file(traj_cfg);
        std::cerr << "wrote " << traj_cfg.samples << " samples to "
                  << traj_cfg.output_path << '\n';
        return 0;
    }

    // validate
    if (!val_theta.empty()) val_cfg.theta = parse_angle(val_theta);
    if (!val_chi.empty()) val_cfg.chi = parse_angle(val_chi);
    if (!val_alphas.empty()) {
        val_cfg.alphas.clear();
        for (const auto& a : val_alphas) val_cfg.alphas.push_back(parse_angle(a));
    }
    const ValidateReport report = run_validate(val_cfg);
    print_report(report, std::cout);
    return report.pass ? 0 : 4;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace qsl
