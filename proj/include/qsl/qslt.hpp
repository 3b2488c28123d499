// Quantum-speed-limit-time machinery: the closed-system bound, relative
// purity, window-averaged generator spectra, and the open-system ML/MT
// bounds over an evolution window [tau, tau + tau_d].

#pragma once

#include <utility>
#include <vector>

#include "qsl/engine.hpp"
#include "qsl/mat2.hpp"
#include "qsl/model.hpp"

namespace qsl {

// Closed system: max( pi/(2 dE), pi/(2 E) ) = pi / (2 min(dE, E)), hbar = 1.
double closed_system_qslt(double delta_e, double mean_e);

// f = tr(rho_tau rho_target) / tr(rho_tau^2); both traces are real for valid
// states (checked to 1e-12).
double relative_purity(const DensityMatrix& rho_tau, const DensityMatrix& rho_target);

// Singular values of the generator output at rho_t, paired rank-by-rank
// (descending) with the spectrum of rho_tau:
//   first  = sum_i sigma_i rho_i        (ML denominator integrand)
//   second = sqrt( sum_i sigma_i^2 )    (MT denominator integrand)
std::pair<double, double> generator_spectrum_terms(const DensityMatrix& rho_t,
                                                   const DensityMatrix& rho_tau,
                                                   const ModelParams& p);

namespace detail {
// Composite trapezoid mean of the n+1 uniformly spaced node values;
// summation order is fixed (ascending) so results are reproducible.
inline double trapezoid_average(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size() - 1;
    double acc = 0.5 * (nodes.front() + nodes.back());
    for (std::size_t k = 1; k < n; ++k) acc += nodes[k];
    return acc / static_cast<double>(n);
}
}  // namespace detail

// (1/tau_d) * integral of f over [tau, tau + tau_d], composite trapezoid with
// n_steps uniform panels. Exact on linear integrands.
template <typename F>
double window_average(F&& f, double tau, double tau_d, int n_steps) {
    if (!(tau_d > 0.0)) throw DomainError("window_average: tau_d must be > 0");
    if (n_steps < 2) throw DomainError("window_average: n_steps must be >= 2");
    std::vector<double> nodes(static_cast<std::size_t>(n_steps) + 1);
    const double h = tau_d / n_steps;
    for (int k = 0; k <= n_steps; ++k) {
        const double t = (k == n_steps) ? tau + tau_d : tau + k * h;
        nodes[static_cast<std::size_t>(k)] = f(t);
    }
    return detail::trapezoid_average(nodes);
}

struct QsltResult {
    double tau = 0.0;             // window start
    double tau_d = 0.0;           // driving time (window length)
    double rel_purity = 0.0;      // f(tau + tau_d)
    double ml_denominator = 0.0;  // window average of sum_i sigma_i rho_i
    double mt_denominator = 0.0;  // window average of sqrt(sum_i sigma_i^2)
    double bound_ml = 0.0;
    double bound_mt = 0.0;
    double tau_qsl = 0.0;         // max(bound_ml, bound_mt)
};

// The combined bound over one window. rho_tau and the target come from the
// supplied engine; the generator output at each quadrature node is evaluated
// exactly through the master-equation right-hand side. A stationary window
// (f = 1 and vanishing denominators) yields tau_qsl = 0.
QsltResult qslt_open(const ModelParams& p, double tau, double tau_d, int n_steps,
                     EvolutionEngine& engine);

// Convenience: analytic engine from initial_state(p.theta, p.chi).
QsltResult qslt_open(const ModelParams& p, double tau, double tau_d,
                     int n_steps = 2000,
                     CoeffMode mode = CoeffMode::oracle_validated);

}  // namespace qsl
