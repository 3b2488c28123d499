#include "qsl/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <ostream>
#include <set>

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;

std::string join_doubles(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out;
}

std::unique_ptr<EvolutionEngine> make_engine(const ModelParams& p,
                                             const DensityMatrix& rho0, Engine engine,
                                             CoeffMode mode, double oracle_dt) {
    if (engine == Engine::oracle)
        return std::make_unique<OracleEngine>(p, rho0, oracle_dt);
    return std::make_unique<AnalyticEngine>(p, rho0, mode);
}

void write_csv_row(std::ostream& out, double alpha, double lambda, const QsltResult& q) {
    out << format_double(alpha) << ',' << format_double(lambda) << ','
        << format_double(q.tau) << ',' << format_double(q.tau_d) << ','
        << format_double(q.rel_purity) << ',' << format_double(q.ml_denominator) << ','
        << format_double(q.mt_denominator) << ',' << format_double(q.bound_ml) << ','
        << format_double(q.bound_mt) << ',' << format_double(q.tau_qsl) << '\n';
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

double parse_angle(const std::string& token) {
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty angle");

    double sign = 1.0;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1.0;
        ++pos;
    }

    const std::size_t pi_pos = s.find("pi", pos);
    if (pi_pos == std::string::npos) {
        double value = 0.0;
        const auto res = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw DomainError("cannot parse angle '" + token + "'");
        return sign * value;
    }

    // [coeff] "pi" ["/" divisor]
    double coeff = 1.0;
    if (pi_pos > pos) {
        const auto res = std::from_chars(s.data() + pos, s.data() + pi_pos, coeff);
        if (res.ec != std::errc{} || res.ptr != s.data() + pi_pos)
            throw DomainError("cannot parse angle '" + token + "'");
    }
    double divisor = 1.0;
    std::size_t rest = pi_pos + 2;
    if (rest < s.size()) {
        if (s[rest] != '/')
            throw DomainError("cannot parse angle '" + token + "'");
        ++rest;
        const auto res = std::from_chars(s.data() + rest, s.data() + s.size(), divisor);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || divisor == 0.0)
            throw DomainError("cannot parse angle '" + token + "'");
    }
    return sign * coeff * kPi / divisor;
}

void SweepConfig::validate() const {
    params.validate();
    if (!(std::isfinite(tau_start) && tau_start >= 0.0))
        throw DomainError("sweep: tau_start must be finite and >= 0");
    if (!(std::isfinite(tau_end) && tau_end > tau_start))
        throw DomainError("sweep: tau_end must exceed tau_start");
    if (tau_steps < 2) throw DomainError("sweep: tau_steps must be >= 2");
    if (!(std::isfinite(tau_d) && tau_d > 0.0))
        throw DomainError("sweep: tau_d must be > 0");
    if (n_quad < 2) throw DomainError("sweep: quad_steps must be >= 2");
    if (!(std::isfinite(oracle_dt) && oracle_dt > 0.0))
        throw DomainError("sweep: oracle_dt must be > 0");
    if (lambda_values.empty()) throw DomainError("sweep: no lambda values");
    std::set<double> seen;
    for (double l : lambda_values) {
        if (!std::isfinite(l) || l < 0.0)
            throw DomainError("sweep: lambda values must be finite and >= 0");
        if (!seen.insert(l).second)
            throw DomainError("sweep: duplicate lambda value " + format_double(l));
    }
}

SweepConfig resolve_preset(const std::string& name) {
    SweepConfig cfg;
    cfg.params = ModelParams::make(10.0, 0.1, 0.0, 0.0, 0.25 * kPi, 0.0);
    if (name == "fig1") {
        cfg.params.alpha = 0.0;
    } else if (name == "fig2") {
        cfg.params.alpha = 0.25 * kPi;
    } else if (name == "fig3") {
        cfg.params.alpha = 0.5 * kPi;
    } else {
        throw UnknownPreset("unknown preset '" + name +
                            "' (expected fig1, fig2 or fig3)");
    }
    cfg.preset = name;
    return cfg;
}

void run_sweep(const SweepConfig& cfg, std::ostream& out) {
    cfg.validate();

    std::vector<double> lambdas = cfg.lambda_values;
    std::sort(lambdas.begin(), lambdas.end());

    out << "# tool: qslt sweep\n";
    out << "# preset: " << (cfg.preset ? *cfg.preset : "none") << '\n';
    out << "# engine: " << to_string(cfg.engine) << '\n';
    out << "# coeff_mode: " << to_string(cfg.coeff_mode) << '\n';
    out << "# omega: " << format_double(cfg.params.omega) << '\n';
    out << "# gamma: " << format_double(cfg.params.gamma) << '\n';
    out << "# alpha: " << format_double(cfg.params.alpha) << '\n';
    out << "# theta: " << format_double(cfg.params.theta) << '\n';
    out << "# chi: " << format_double(cfg.params.chi) << '\n';
    out << "# lambda_values: " << join_doubles(lambdas) << '\n';
    out << "# tau_start: " << format_double(cfg.tau_start) << '\n';
    out << "# tau_end: " << format_double(cfg.tau_end) << '\n';
    out << "# tau_steps: " << cfg.tau_steps << '\n';
    out << "# tau_d: " << format_double(cfg.tau_d) << '\n';
    out << "# quad_steps: " << cfg.n_quad << '\n';
    out << "# oracle_dt: " << format_double(cfg.oracle_dt) << '\n';
    out << "alpha,lambda,tau,tau_d,rel_purity,ml_denominator,mt_denominator,"
           "bound_ml,bound_mt,tau_qsl\n";

    const DensityMatrix rho0 = initial_state(cfg.params.theta, cfg.params.chi);
    const double spacing = (cfg.tau_end - cfg.tau_start) / (cfg.tau_steps - 1);
    for (double lambda : lambdas) {
        ModelParams p = cfg.params;
        p.lambda_fb = lambda;
        const auto engine = make_engine(p, rho0, cfg.engine, cfg.coeff_mode,
                                        cfg.oracle_dt);
        for (int i = 0; i < cfg.tau_steps; ++i) {
            const double tau = (i == cfg.tau_steps - 1)
                                   ? cfg.tau_end
                                   : cfg.tau_start + spacing * i;
            try {
                const QsltResult q = qslt_open(p, tau, cfg.tau_d, cfg.n_quad, *engine);
                write_csv_row(out, p.alpha, lambda, q);
            } catch (const NumericError& e) {
                throw NumericError(std::string(e.what()) + " [lambda=" +
                                   format_double(lambda) + " tau=" +
                                   format_double(tau) + "]");
            }
        }
    }
}

void run_sweep_to_file(const SweepConfig& cfg) {
    cfg.validate();
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + cfg.output_path + "' for writing");
    run_sweep(cfg, out);
    out.flush();
    if (!out) throw IoError("write to '" + cfg.output_path + "' failed");
}

ValidateConfig::ValidateConfig() : alphas{0.0, 0.25 * kPi, 0.5 * kPi} {
    theta = 0.25 * kPi;
}

void ValidateConfig::validate() const {
    ModelParams::make(omega, gamma, 0.0, 0.0, theta, chi);
    if (alphas.empty() || lambdas.empty())
        throw DomainError("validate: empty alpha or lambda grid");
    for (double a : alphas)
        if (!std::isfinite(a) || a < -kPi || a > kPi)
            throw DomainError("validate: alpha outside [-pi, pi]");
    for (double l : lambdas)
        if (!std::isfinite(l) || l < 0.0)
            throw DomainError("validate: lambda must be >= 0");
    if (!(t_end > 0.0)) throw DomainError("validate: t_end must be > 0");
    if (samples < 2) throw DomainError("validate: samples must be >= 2");
    if (!(dt > 0.0)) throw DomainError("validate: dt must be > 0");
    if (!(tol > 0.0)) throw DomainError("validate: tol must be > 0");
}

ValidateReport run_validate(const ValidateConfig& cfg) {
    cfg.validate();
    ValidateReport report;
    report.tol = cfg.tol;

    for (double alpha : cfg.alphas) {
        for (double lambda : cfg.lambdas) {
            const ModelParams p =
                ModelParams::make(cfg.omega, cfg.gamma, lambda, alpha, cfg.theta, cfg.chi);
            const DensityMatrix rho0 = initial_state(p.theta, p.chi);

            // sample step indices (deduplicated, ascending)
            std::vector<long long> sample_steps;
            for (int k = 0; k < cfg.samples; ++k) {
                const double t = cfg.t_end * k / (cfg.samples - 1);
                const auto step = static_cast<long long>(std::llround(t / cfg.dt));
                if (sample_steps.empty() || step > sample_steps.back())
                    sample_steps.push_back(step);
            }

            ValidatePoint point;
            point.alpha = alpha;
            point.lambda = lambda;
            std::size_t next = 0;
            long long step_index = 0;
            const double total = cfg.dt * static_cast<double>(sample_steps.back());
            integrate_visit(rho0, total, cfg.dt, p,
                            [&](double /*t*/, const DensityMatrix& state) {
                if (next < sample_steps.size() && step_index == sample_steps[next]) {
                    const double t_exact = cfg.dt * static_cast<double>(step_index);
                    const Mat2 validated =
                        apply_map(coefficients(t_exact, p, CoeffMode::oracle_validated),
                                  rho0.mat());
                    const Mat2 literal =
                        apply_map(coefficients(t_exact, p, CoeffMode::paper_literal),
                                  rho0.mat());
                    const Mat2& ref = state.mat();
                    point.dev_validated =
                        std::max(point.dev_validated, max_abs_diff(validated, ref));
                    point.dev_literal =
                        std::max(point.dev_literal, max_abs_diff(literal, ref));
                    const auto pop_dev = [&](const Mat2& m) {
                        return std::max(std::abs(m.m00 - ref.m00),
                                        std::abs(m.m11 - ref.m11));
                    };
                    point.pop_dev_validated =
                        std::max(point.pop_dev_validated, pop_dev(validated));
                    point.pop_dev_literal =
                        std::max(point.pop_dev_literal, pop_dev(literal));
                    ++next;
                }
                ++step_index;
            });

            report.points.push_back(point);
            report.max_dev_validated =
                std::max(report.max_dev_validated, point.dev_validated);
            report.max_dev_literal = std::max(report.max_dev_literal, point.dev_literal);
        }
    }
    report.pass = report.max_dev_validated < cfg.tol;
    return report;
}

void print_report(const ValidateReport& report, std::ostream& out) {
    out << "# qslt validate: closed-form propagator vs RK4 reference\n";
    for (const auto& p : report.points) {
        out << "alpha=" << format_double(p.alpha) << " lambda="
            << format_double(p.lambda) << " dev_validated=" << p.dev_validated
            << " dev_literal=" << p.dev_literal
            << " pop_dev_validated=" << p.pop_dev_validated
            << " pop_dev_literal=" << p.pop_dev_literal << '\n';
    }
    out << "validated mode: max deviation " << report.max_dev_validated
        << " (tolerance " << report.tol << "): "
        << (report.pass ? "OK" : "FAIL") << '\n';
    out << "literal mode:   max deviation " << report.max_dev_literal
        << " (reported for the record)\n";
}

void TrajectoryConfig::validate() const {
    params.validate();
    if (!(std::isfinite(t_end) && t_end >= 0.0))
        throw DomainError("trajectory: t_end must be >= 0");
    if (samples < 1) throw DomainError("trajectory: samples must be >= 1");
    if (!(std::isfinite(oracle_dt) && oracle_dt > 0.0))
        throw DomainError("trajectory: oracle_dt must be > 0");
}

void run_trajectory(const TrajectoryConfig& cfg, std::ostream& out) {
    cfg.validate();
    out << "# tool: qslt trajectory\n";
    out << "# engine: " << to_string(cfg.engine) << '\n';
    out << "# coeff_mode: " << to_string(cfg.coeff_mode) << '\n';
    out << "# omega: " << format_double(cfg.params.omega) << '\n';
    out << "# gamma: " << format_double(cfg.params.gamma) << '\n';
    out << "# lambda: " << format_double(cfg.params.lambda_fb) << '\n';
    out << "# alpha: " << format_double(cfg.params.alpha) << '\n';
    out << "# theta: " << format_double(cfg.params.theta) << '\n';
    out << "# chi: " << format_double(cfg.params.chi) << '\n';
    out << "# t_end: " << format_double(cfg.t_end) << '\n';
    out << "# samples: " << cfg.samples << '\n';
    out << "# oracle_dt: " << format_double(cfg.oracle_dt) << '\n';
    out << "t,rho00_re,rho00_im,rho01_re,rho01_im,rho10_re,rho10_im,"
           "rho11_re,rho11_im\n";

    const DensityMatrix rho0 = initial_state(cfg.params.theta, cfg.params.chi);
    const auto engine = make_engine(cfg.params, rho0, cfg.engine, cfg.coeff_mode,
                                    cfg.oracle_dt);
    for (int k = 0; k < cfg.samples; ++k) {
        const double t = (cfg.samples == 1)
                             ? 0.0
                             : ((k == cfg.samples - 1)
                                    ? cfg.t_end
                                    : cfg.t_end * k / (cfg.samples - 1));
        const Mat2 m = engine->state_at(t).mat();
        out << format_double(t) << ',' << format_double(m.m00.real()) << ','
            << format_double(m.m00.imag()) << ',' << format_double(m.m01.real()) << ','
            << format_double(m.m01.imag()) << ',' << format_double(m.m10.real()) << ','
            << format_double(m.m10.imag()) << ',' << format_double(m.m11.real()) << ','
            << format_double(m.m11.imag()) << '\n';
    }
}

void run_trajectory_to_file(const TrajectoryConfig& cfg) {
    cfg.validate();
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + cfg.output_path + "' for writing");
    run_trajectory(cfg, out);
    out.flush();
    if (!out) throw IoError("write to '" + cfg.output_path + "' failed");
}

}  // namespace qsl
